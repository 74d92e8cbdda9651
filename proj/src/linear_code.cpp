#include "evalcode/linear_code.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "echelon.hpp"

namespace evalcode {

using detail::BitEchelon;
using detail::Bits;
using detail::Echelon;

LinearCode make_rref_code(FieldPtr f, std::size_t n, std::vector<Word> gen, std::vector<std::size_t> piv) {
  LinearCode c(std::move(f), n);
  c.gen_ = std::move(gen);
  c.pivots_ = std::move(piv);
  return c;
}

namespace {

void check_rows(std::size_t n, const std::vector<Word>& rows) {
  for (const auto& r : rows)
    if (r.size() != n) throw std::invalid_argument("row length does not match code length");
}

LinearCode from_bit_echelon(const FieldPtr& f, std::size_t n, const BitEchelon& e) {
  std::vector<std::size_t> piv;
  auto bits = e.rref(&piv);
  std::vector<Word> gen;
  gen.reserve(bits.size());
  for (const auto& b : bits) gen.push_back(detail::from_bits(b, n));
  return make_rref_code(f, n, std::move(gen), std::move(piv));
}

LinearCode from_echelon(const FieldPtr& f, std::size_t n, const Echelon& e) {
  std::vector<std::size_t> piv;
  auto gen = e.rref(&piv);
  return make_rref_code(f, n, std::move(gen), std::move(piv));
}

// Builds the span of rows produced one at a time by `next`, stopping early
// once the span is the whole space.
template <class Gen>
LinearCode span_of(const FieldPtr& f, std::size_t n, Gen&& next) {
  Word w;
  if (f->q() == 2) {
    BitEchelon e(n);
    while (e.rank() < n && next(w)) e.insert(detail::to_bits(w));
    return from_bit_echelon(f, n, e);
  }
  Echelon e(*f, n);
  while (e.rank() < n && next(w)) e.insert(w);
  return from_echelon(f, n, e);
}

}  // namespace

LinearCode::LinearCode(FieldPtr field, std::size_t n, const std::vector<Word>& rows)
    : field_(std::move(field)), n_(n) {
  if (!field_) throw std::invalid_argument("null field");
  check_rows(n, rows);
  for (const auto& r : rows)
    for (Elem x : r)
      if (x >= field_->q()) throw std::invalid_argument("entry outside the field");
  std::size_t i = 0;
  *this = span_of(field_, n, [&](Word& w) {
    if (i == rows.size()) return false;
    w = rows[i++];
    return true;
  });
}

LinearCode LinearCode::zero(FieldPtr field, std::size_t n) { return LinearCode(std::move(field), n, {}); }

LinearCode LinearCode::full(FieldPtr field, std::size_t n) {
  std::vector<Word> gen(n, Word(n, 0));
  std::vector<std::size_t> piv(n);
  for (std::size_t i = 0; i < n; ++i) {
    gen[i][i] = 1;
    piv[i] = i;
  }
  return make_rref_code(std::move(field), n, std::move(gen), std::move(piv));
}

bool LinearCode::contains_word(std::span<const Elem> v) const {
  if (v.size() != n_) return false;
  // With an RREF basis the only candidate combination is read off the pivots.
  Word r(v.begin(), v.end());
  const auto& f = *field_;
  for (std::size_t i = 0; i < gen_.size(); ++i) {
    Elem a = r[pivots_[i]];
    if (a == 0) continue;
    Elem na = f.neg(a);
    for (std::size_t t = 0; t < n_; ++t)
      if (gen_[i][t] != 0) r[t] = f.add(r[t], f.mul(na, gen_[i][t]));
  }
  return std::all_of(r.begin(), r.end(), [](Elem x) { return x == 0; });
}

bool LinearCode::operator==(const LinearCode& o) const {
  return n_ == o.n_ && field_->same_as(*o.field_) && pivots_ == o.pivots_ && gen_ == o.gen_;
}

std::string LinearCode::summary() const {
  std::ostringstream s;
  s << "[" << n_ << "," << dimension() << "]_" << field_->q();
  return s.str();
}

std::size_t weight(std::span<const Elem> v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Elem x) { return x != 0; }));
}

LinearCode dual(const LinearCode& c) {
  const auto& f = *c.field();
  std::size_t n = c.length(), k = c.dimension();
  const auto& g = c.generator();
  const auto& piv = c.pivots();
  std::vector<bool> is_piv(n, false);
  for (auto p : piv) is_piv[p] = true;
  // For each free column j: e_j - sum_i G[i][j] e_{piv_i}. These rows are
  // already in echelon form up to a column permutation, so rebuild the RREF.
  std::vector<Word> h;
  h.reserve(n - k);
  for (std::size_t j = 0; j < n; ++j) {
    if (is_piv[j]) continue;
    Word w(n, 0);
    w[j] = 1;
    for (std::size_t i = 0; i < k; ++i) w[piv[i]] = f.neg(g[i][j]);
    h.push_back(std::move(w));
  }
  return LinearCode(c.field(), n, h);
}

LinearCode schur(const LinearCode& c, const LinearCode& d) {
  if (c.length() != d.length() || !c.field()->same_as(*d.field()))
    throw std::invalid_argument("schur: codes over different ambient spaces");
  const auto& f = *c.field();
  std::size_t n = c.length();
  const auto& a = c.generator();
  const auto& b = d.generator();
  bool same = &c == &d || c == d;
  std::size_t i = 0, j = 0;
  return span_of(c.field(), n, [&](Word& w) {
    if (i >= a.size()) return false;
    if (j >= b.size()) return false;
    w.assign(n, 0);
    for (std::size_t t = 0; t < n; ++t) w[t] = f.mul(a[i][t], b[j][t]);
    ++j;
    if (j == b.size()) {
      ++i;
      j = same ? i : 0;
    }
    return true;
  });
}

LinearCode schur_square(const LinearCode& c) { return schur(c, c); }

bool contains(const LinearCode& outer, const LinearCode& inner) {
  if (outer.length() != inner.length() || !outer.field()->same_as(*inner.field())) return false;
  if (inner.dimension() > outer.dimension()) return false;
  for (const auto& w : inner.generator())
    if (!outer.contains_word(w)) return false;
  return true;
}

LinearCode subfield_subcode(const LinearCode& c, unsigned s) {
  const auto& big = c.field();
  unsigned r = big->r();
  if (s == 0 || r % s != 0) throw std::invalid_argument("subfield degree must divide the field degree");
  SubfieldEmbedding emb(big, s);
  std::size_t n = c.length();
  if (s == r) return LinearCode(emb.sub(), n, c.generator());
  // x is in the subcode iff Tr(lambda * <x, h>) = 0 for every dual row h and
  // every lambda in a basis of GF(q) over GF(q'); x has subfield entries, so
  // the trace moves inside the inner product.
  LinearCode h = dual(c);
  unsigned m = r / s;
  std::vector<Elem> basis(m);
  basis[0] = 1;
  for (unsigned t = 1; t < m; ++t) basis[t] = big->mul(basis[t - 1], big->primitive());
  std::vector<Word> rows;
  rows.reserve(h.dimension() * m);
  for (const auto& hr : h.generator()) {
    for (Elem lam : basis) {
      Word w(n);
      for (std::size_t i = 0; i < n; ++i) w[i] = emb.down(big->relative_trace(big->mul(lam, hr[i]), s));
      rows.push_back(std::move(w));
    }
  }
  return dual(LinearCode(emb.sub(), n, rows));
}

namespace {

std::vector<std::size_t> kept_positions(std::size_t n, const std::vector<std::size_t>& drop) {
  std::vector<bool> gone(n, false);
  for (auto p : drop) {
    if (p >= n) throw std::out_of_range("position outside the code");
    gone[p] = true;
  }
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i)
    if (!gone[i]) keep.push_back(i);
  return keep;
}

}  // namespace

LinearCode puncture(const LinearCode& c, const std::vector<std::size_t>& positions) {
  auto keep = kept_positions(c.length(), positions);
  std::vector<Word> rows;
  rows.reserve(c.dimension());
  for (const auto& g : c.generator()) {
    Word w(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) w[i] = g[keep[i]];
    rows.push_back(std::move(w));
  }
  return LinearCode(c.field(), keep.size(), rows);
}

LinearCode shorten(const LinearCode& c, const std::vector<std::size_t>& positions) {
  return dual(puncture(dual(c), positions));
}

LinearCode permute(const LinearCode& c, const std::vector<std::size_t>& perm) {
  std::size_t n = c.length();
  if (perm.size() != n) throw std::invalid_argument("permutation has the wrong length");
  std::vector<bool> seen(n, false);
  for (auto p : perm) {
    if (p >= n || seen[p]) throw std::invalid_argument("not a permutation");
    seen[p] = true;
  }
  std::vector<Word> rows;
  rows.reserve(c.dimension());
  for (const auto& g : c.generator()) {
    Word w(n);
    for (std::size_t i = 0; i < n; ++i) w[perm[i]] = g[i];
    rows.push_back(std::move(w));
  }
  return LinearCode(c.field(), n, rows);
}

SearchBudget SearchBudget::from_env() {
  SearchBudget b;
  if (const char* s = std::getenv("EVALCODE_BUDGET_STEPS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) b.max_steps = v;
  }
  return b;
}

}  // namespace evalcode
