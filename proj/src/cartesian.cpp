#include "evalcode/cartesian.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace evalcode {

namespace {

constexpr std::size_t kMaxLength = std::size_t{1} << 22;

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

}  // namespace

JAffineFamily::JAffineFamily(FieldPtr field, std::vector<std::uint64_t> N, std::vector<std::size_t> J) {
  if (!field) throw std::invalid_argument("null field");
  if (N.empty()) throw std::invalid_argument("a family needs at least one coordinate");
  auto d = std::make_shared<Data>();
  d->field = std::move(field);
  const std::uint64_t q = d->field->q();
  d->in_J.assign(N.size(), false);
  for (auto j : J) {
    if (j >= N.size()) throw std::invalid_argument("J index " + std::to_string(j + 1) + " exceeds m");
    if (d->in_J[j]) throw std::invalid_argument("J lists coordinate " + std::to_string(j + 1) + " twice");
    d->in_J[j] = true;
  }
  std::size_t n = 1;
  for (std::size_t j = 0; j < N.size(); ++j) {
    if (N[j] < 2) throw std::invalid_argument("N_j must exceed 1");
    if ((q - 1) % (N[j] - 1) != 0)
      throw std::invalid_argument("N_" + std::to_string(j + 1) + " - 1 = " + std::to_string(N[j] - 1) +
                                  " does not divide q - 1 = " + std::to_string(q - 1));
    std::uint64_t zj = d->in_J[j] ? N[j] - 1 : N[j];
    if (n > kMaxLength / zj) throw std::invalid_argument("code length too large");
    n *= zj;
  }
  d->N = std::move(N);
  d->n = n;
  const auto& f = *d->field;
  for (std::size_t j = 0; j < d->N.size(); ++j) {
    std::uint64_t Nj = d->N[j];
    Elem g = f.pow(f.primitive(), (q - 1) / (Nj - 1));
    std::vector<Elem> Z;
    if (!d->in_J[j]) Z.push_back(0);
    Elem x = 1;
    for (std::uint64_t i = 0; i + 1 < Nj; ++i) {
      Z.push_back(x);
      x = f.mul(x, g);
    }
    std::uint64_t zj = Z.size();
    std::uint64_t T = d->in_J[j] ? Nj - 2 : Nj - 1;
    std::vector<Elem> pw((T + 1) * zj);
    for (std::uint64_t i = 0; i < zj; ++i) {
      Elem v = 1;
      for (std::uint64_t e = 0; e <= T; ++e) {
        pw[e * zj + i] = v;
        v = f.mul(v, Z[i]);
      }
    }
    d->Z.push_back(std::move(Z));
    d->pow.push_back(std::move(pw));
  }
  d_ = std::move(d);
}

std::vector<std::size_t> JAffineFamily::J() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < m(); ++j)
    if (in_J(j)) out.push_back(j);
  return out;
}

bool JAffineFamily::in_E(const Exponent& e) const {
  if (e.size() != m()) return false;
  for (std::size_t j = 0; j < m(); ++j)
    if (e[j] > T(j)) return false;
  return true;
}

bool JAffineFamily::in_E_prime(const Exponent& e) const {
  if (e.size() != m()) return false;
  for (std::size_t j = 0; j < m(); ++j)
    if (e[j] > N(j) - 2) return false;
  return true;
}

std::size_t JAffineFamily::rank(const Exponent& e) const {
  std::size_t r = 0;
  for (std::size_t j = 0; j < m(); ++j) r = r * z(j) + e[j];
  return r;
}

Exponent JAffineFamily::unrank(std::size_t idx) const {
  Exponent e(m());
  for (std::size_t j = m(); j-- > 0;) {
    e[j] = idx % z(j);
    idx /= z(j);
  }
  return e;
}

bool JAffineFamily::char_divides_affine_sizes() const {
  for (std::size_t j = 0; j < m(); ++j)
    if (!in_J(j) && N(j) % field()->p() != 0) return false;
  return true;
}

bool JAffineFamily::operator==(const JAffineFamily& o) const {
  if (d_ == o.d_) return true;
  return field()->same_as(*o.field()) && d_->N == o.d_->N && d_->in_J == o.d_->in_J;
}

std::string JAffineFamily::describe() const {
  std::ostringstream s;
  s << "q=" << field()->q() << " N=(";
  for (std::size_t j = 0; j < m(); ++j) s << (j ? "," : "") << N(j);
  s << ") J={";
  bool first = true;
  for (std::size_t j = 0; j < m(); ++j)
    if (in_J(j)) {
      s << (first ? "" : ",") << j + 1;
      first = false;
    }
  s << "} n=" << length();
  return s.str();
}

DefiningSet::DefiningSet(JAffineFamily family, std::vector<Exponent> elems)
    : family_(std::move(family)), elems_(std::move(elems)) {
  for (const auto& e : elems_)
    if (!family_.in_E(e))
      throw std::invalid_argument("exponent " + format_exponent(e) + " lies outside E_J for " + family_.describe());
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

DefiningSet DefiningSet::full(const JAffineFamily& family) {
  std::vector<Exponent> all;
  all.reserve(family.length());
  for (std::size_t i = 0; i < family.length(); ++i) all.push_back(family.unrank(i));
  return {family, std::move(all)};
}

bool DefiningSet::contains(const Exponent& e) const { return std::binary_search(elems_.begin(), elems_.end(), e); }

bool DefiningSet::subset_of(const DefiningSet& o) const {
  return std::includes(o.elems_.begin(), o.elems_.end(), elems_.begin(), elems_.end());
}

DefiningSet DefiningSet::unite(const DefiningSet& o) const {
  if (!(family_ == o.family_)) throw std::invalid_argument("defining sets over different families");
  std::vector<Exponent> out;
  std::set_union(elems_.begin(), elems_.end(), o.elems_.begin(), o.elems_.end(), std::back_inserter(out));
  return {family_, std::move(out)};
}

DefiningSet DefiningSet::minus(const DefiningSet& o) const {
  std::vector<Exponent> out;
  std::set_difference(elems_.begin(), elems_.end(), o.elems_.begin(), o.elems_.end(), std::back_inserter(out));
  return {family_, std::move(out)};
}

std::string format_exponent(const Exponent& e) {
  std::ostringstream s;
  if (e.size() == 1) {
    s << e[0];
    return s.str();
  }
  s << "(";
  for (std::size_t j = 0; j < e.size(); ++j) s << (j ? "," : "") << e[j];
  s << ")";
  return s.str();
}

std::string DefiningSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) s += ",";
    s += format_exponent(elems_[i]);
  }
  return s + "}";
}

std::vector<std::vector<Elem>> point_set(const JAffineFamily& family) {
  std::size_t m = family.m(), n = family.length();
  std::vector<std::vector<Elem>> pts;
  pts.reserve(n);
  std::vector<std::size_t> idx(m, 0);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Elem> p(m);
    for (std::size_t j = 0; j < m; ++j) p[j] = family.coordinate_points(j)[idx[j]];
    pts.push_back(std::move(p));
    for (std::size_t j = m; j-- > 0;) {
      if (++idx[j] < family.z(j)) break;
      idx[j] = 0;
    }
  }
  return pts;
}

Word evaluation_row(const JAffineFamily& family, const Exponent& e) {
  if (!family.in_E(e)) throw std::invalid_argument("exponent " + format_exponent(e) + " lies outside E_J");
  const auto& f = *family.field();
  std::size_t m = family.m();
  // Build the tensor product of the per-coordinate rows, last coordinate fastest.
  Word row{1};
  for (std::size_t j = 0; j < m; ++j) {
    std::uint64_t zj = family.z(j);
    Word next(row.size() * zj);
    for (std::size_t a = 0; a < row.size(); ++a)
      for (std::uint64_t i = 0; i < zj; ++i) next[a * zj + i] = f.mul(row[a], family.power(j, i, e[j]));
    row = std::move(next);
  }
  return row;
}

LinearCode evaluate(const DefiningSet& delta) {
  const auto& fam = delta.family();
  std::vector<Word> rows;
  rows.reserve(delta.size());
  for (const auto& e : delta) rows.push_back(evaluation_row(fam, e));
  return LinearCode(fam.field(), fam.length(), rows);
}

Exponent bar_reduce(const JAffineFamily& family, const Exponent& e) {
  if (e.size() != family.m()) throw std::invalid_argument("exponent has the wrong number of coordinates");
  Exponent out(e.size());
  for (std::size_t j = 0; j < e.size(); ++j) {
    std::uint64_t M = family.N(j) - 1;
    if (family.in_J(j))
      out[j] = e[j] % M;
    else
      out[j] = e[j] == 0 ? 0 : (e[j] - 1) % M + 1;
  }
  return out;
}

DefiningSet minkowski_schur(const DefiningSet& a, const DefiningSet& b) {
  if (!(a.family() == b.family())) throw std::invalid_argument("defining sets over different families");
  const auto& fam = a.family();
  std::vector<bool> hit(fam.length(), false);
  Exponent s(fam.m());
  for (const auto& x : a)
    for (const auto& y : b) {
      for (std::size_t j = 0; j < s.size(); ++j) s[j] = x[j] + y[j];
      hit[fam.rank(bar_reduce(fam, s))] = true;
    }
  std::vector<Exponent> out;
  for (std::size_t i = 0; i < hit.size(); ++i)
    if (hit[i]) out.push_back(fam.unrank(i));
  return {fam, std::move(out)};
}

Exponent complement(const JAffineFamily& family, const Exponent& e) {
  Exponent c(e.size());
  for (std::size_t j = 0; j < e.size(); ++j) {
    std::uint64_t M = family.N(j) - 1;
    c[j] = family.in_J(j) ? (M - e[j] % M) % M : M - e[j];
  }
  return c;
}

DefiningSet delta_dual(const DefiningSet& delta) {
  const auto& fam = delta.family();
  std::vector<bool> removed(fam.length(), false);
  for (const auto& a : delta) {
    if (fam.in_E_prime(a)) {
      removed[fam.rank(complement(fam, a))] = true;
      continue;
    }
    // Coordinates equal to N_j - 1 may map to 0 or to N_j - 1; remove every
    // combination.
    Exponent base = complement(fam, a);
    std::vector<std::size_t> top;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (!fam.in_J(j) && a[j] == fam.N(j) - 1) top.push_back(j);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << top.size()); ++mask) {
      Exponent v = base;
      for (std::size_t t = 0; t < top.size(); ++t) v[top[t]] = (mask >> t) & 1 ? fam.N(top[t]) - 1 : 0;
      removed[fam.rank(v)] = true;
    }
  }
  std::vector<Exponent> out;
  for (std::size_t i = 0; i < removed.size(); ++i)
    if (!removed[i]) out.push_back(fam.unrank(i));
  return {fam, std::move(out)};
}

std::uint64_t footprint_bound(const DefiningSet& delta) {
  if (delta.empty()) throw std::invalid_argument("footprint bound of an empty defining set");
  const auto& fam = delta.family();
  std::uint64_t best = UINT64_MAX;
  for (const auto& e : delta) {
    std::uint64_t v = 1;
    for (std::size_t j = 0; j < e.size(); ++j) v *= fam.z(j) - e[j];
    best = std::min(best, v);
  }
  return best;
}

std::uint64_t equivalent_footprint_bound(const DefiningSet& delta, std::uint64_t max_work) {
  if (delta.empty()) throw std::invalid_argument("footprint bound of an empty defining set");
  const auto& fam = delta.family();
  std::size_t m = fam.m();
  // Per-coordinate exponent maps: (unit u, shift b).
  std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> maps(m);
  auto build = [&](bool units, bool shifts) {
    std::uint64_t total = 1;
    for (std::size_t j = 0; j < m; ++j) {
      std::uint64_t M = fam.N(j) - 1;
      maps[j].clear();
      for (std::uint64_t u = 1; u <= std::max<std::uint64_t>(M, 1); ++u) {
        if (M > 1 && (u >= M || gcd64(u, M) != 1)) continue;
        if (!units && u != 1) continue;
        std::uint64_t nb = fam.in_J(j) && shifts ? M : 1;
        for (std::uint64_t b = 0; b < nb; ++b) maps[j].push_back({u, b});
      }
      total = total > max_work ? total : total * maps[j].size();
    }
    return total;
  };
  std::uint64_t combos = build(true, true);
  if (combos * delta.size() > max_work) combos = build(false, true);
  if (combos * delta.size() > max_work) combos = build(false, false);

  // Per coordinate and map, the factor z_j - image(e_j) for every e_j in use.
  std::vector<std::vector<std::vector<std::uint64_t>>> factor(m);
  for (std::size_t j = 0; j < m; ++j) {
    std::uint64_t M = fam.N(j) - 1;
    for (auto [u, b] : maps[j]) {
      std::vector<std::uint64_t> fac(fam.T(j) + 1);
      for (std::uint64_t e = 0; e <= fam.T(j); ++e) {
        std::uint64_t img;
        if (fam.in_J(j))
          img = M ? (u * e + b) % M : 0;
        else
          img = e == 0 ? 0 : (u * e - 1) % M + 1;
        fac[e] = fam.z(j) - img;
      }
      factor[j].push_back(std::move(fac));
    }
  }
  std::uint64_t best = 0;
  std::vector<std::size_t> sel(m, 0);
  while (true) {
    std::uint64_t fb = UINT64_MAX;
    for (const auto& e : delta) {
      std::uint64_t v = 1;
      for (std::size_t j = 0; j < m; ++j) v *= factor[j][sel[j]][e[j]];
      if (v < fb) {
        fb = v;
        if (fb <= best) break;
      }
    }
    best = std::max(best, fb);
    std::size_t j = 0;
    for (; j < m; ++j) {
      if (++sel[j] < factor[j].size()) break;
      sel[j] = 0;
    }
    if (j == m) break;
  }
  return best;
}

DefiningSet decreasing_core(const DefiningSet& delta) {
  const auto& fam = delta.family();
  std::vector<bool> in(fam.length(), false), core(fam.length(), false);
  for (const auto& e : delta) in[fam.rank(e)] = true;
  std::vector<Exponent> out;
  // Ranks increase with each coordinate, so predecessors are settled first.
  for (const auto& e : delta) {
    bool ok = true;
    Exponent d = e;
    for (std::size_t j = 0; j < e.size() && ok; ++j) {
      if (e[j] == 0) continue;
      --d[j];
      ok = core[fam.rank(d)];
      ++d[j];
    }
    if (ok) {
      core[fam.rank(e)] = true;
      out.push_back(e);
    }
  }
  return {fam, std::move(out)};
}

bool is_decreasing(const DefiningSet& delta) { return decreasing_core(delta).size() == delta.size(); }

std::uint64_t dual_distance_bound(const DefiningSet& delta, std::uint64_t max_work) {
  const auto& fam = delta.family();
  if (!fam.char_divides_affine_sizes()) return 1;
  if (delta.size() == fam.length()) return 0;
  // Shifting J-coordinates multiplies the code by a nowhere-zero monomial and
  // its dual by the inverse one, so any shift of delta has the same dual
  // distance. Only shifts moving some element to a zero J-part give a
  // nonempty decreasing core.
  std::vector<Exponent> shifts{Exponent(fam.m(), 0)};
  for (const auto& a : delta) {
    Exponent b(fam.m(), 0);
    bool ok = true;
    for (std::size_t j = 0; j < fam.m() && ok; ++j) {
      if (fam.in_J(j))
        b[j] = (fam.N(j) - 1 - a[j]) % (fam.N(j) - 1);
      else
        ok = a[j] == 0;
    }
    if (ok) shifts.push_back(std::move(b));
  }
  std::sort(shifts.begin(), shifts.end());
  shifts.erase(std::unique(shifts.begin(), shifts.end()), shifts.end());

  std::vector<std::vector<Exponent>> gammas;
  for (const auto& b : shifts) {
    std::vector<Exponent> moved;
    moved.reserve(delta.size());
    for (const auto& a : delta) {
      Exponent v = a;
      for (std::size_t j = 0; j < fam.m(); ++j)
        if (fam.in_J(j)) v[j] = (a[j] + b[j]) % (fam.N(j) - 1);
      moved.push_back(std::move(v));
    }
    DefiningSet core = decreasing_core(DefiningSet(fam, std::move(moved)));
    if (core.empty()) continue;
    std::vector<bool> in(fam.length(), false);
    for (const auto& e : core) in[fam.rank(e)] = true;
    std::vector<Exponent> gamma;
    for (std::size_t i = 0; i < fam.length(); ++i)
      if (!in[i]) gamma.push_back(complement(fam, fam.unrank(i)));
    std::sort(gamma.begin(), gamma.end());
    gammas.push_back(std::move(gamma));
  }
  std::sort(gammas.begin(), gammas.end());
  gammas.erase(std::unique(gammas.begin(), gammas.end()), gammas.end());
  std::uint64_t best = 1;
  std::uint64_t share = std::max<std::uint64_t>(max_work / std::max<std::size_t>(gammas.size(), 1), 1);
  for (auto& g : gammas) best = std::max(best, equivalent_footprint_bound(DefiningSet(fam, std::move(g)), share));
  return best;
}

FootprintWitness footprint_witness(const DefiningSet& delta) {
  if (delta.empty()) throw std::invalid_argument("footprint witness of an empty defining set");
  if (!is_decreasing(delta)) throw std::invalid_argument("footprint witness needs a decreasing defining set");
  const auto& fam = delta.family();
  const auto& f = *fam.field();
  FootprintWitness w;
  w.weight = UINT64_MAX;
  for (const auto& e : delta) {
    std::uint64_t v = 1;
    for (std::size_t j = 0; j < e.size(); ++j) v *= fam.z(j) - e[j];
    if (v < w.weight) {
      w.weight = v;
      w.attained_at = e;
    }
  }
  // f = prod_j prod_{l < e*_j} (X_j - beta_{j,l}) with the first e*_j points of Z_j.
  std::size_t m = fam.m();
  Word row{1};
  for (std::size_t j = 0; j < m; ++j) {
    const auto& Z = fam.coordinate_points(j);
    std::vector<Elem> uni(Z.size());
    for (std::size_t i = 0; i < Z.size(); ++i) {
      Elem v = 1;
      for (std::uint64_t l = 0; l < w.attained_at[j]; ++l) v = f.mul(v, f.sub(Z[i], Z[l]));
      uni[i] = v;
    }
    Word next(row.size() * Z.size());
    for (std::size_t a = 0; a < row.size(); ++a)
      for (std::size_t i = 0; i < Z.size(); ++i) next[a * Z.size() + i] = f.mul(row[a], uni[i]);
    row = std::move(next);
  }
  w.word = std::move(row);
  return w;
}

JAffineFamily affine_space(std::uint64_t q, std::size_t m) {
  return JAffineFamily(make_field_of_order(q), std::vector<std::uint64_t>(m, q), {});
}

namespace {

template <class Pred>
DefiningSet select(const JAffineFamily& fam, Pred keep) {
  std::vector<Exponent> out;
  for (std::size_t i = 0; i < fam.length(); ++i) {
    Exponent e = fam.unrank(i);
    if (keep(e)) out.push_back(std::move(e));
  }
  return {fam, std::move(out)};
}

}  // namespace

DefiningSet delta_wrm(std::uint64_t q, std::size_t m, std::uint64_t s, const std::vector<std::uint64_t>& weights) {
  if (weights.size() != m) throw std::invalid_argument("need one weight per variable");
  if (!std::is_sorted(weights.begin(), weights.end())) throw std::invalid_argument("weights must be ascending");
  for (auto w : weights)
    if (w == 0) throw std::invalid_argument("weights must be positive");
  return select(affine_space(q, m), [&](const Exponent& e) {
    std::uint64_t t = 0;
    for (std::size_t j = 0; j < m; ++j) t += weights[j] * e[j];
    return t <= s;
  });
}

DefiningSet delta_rm(std::uint64_t q, std::size_t m, std::uint64_t s) {
  return delta_wrm(q, m, s, std::vector<std::uint64_t>(m, 1));
}

DefiningSet delta_hyperbolic(std::uint64_t q, std::size_t m, std::uint64_t s) {
  return select(affine_space(q, m), [&](const Exponent& e) {
    std::uint64_t t = 1;
    for (auto x : e) t *= q - x;
    return t >= s;
  });
}

DefiningSet delta_hyperbolic_dual(std::uint64_t q, std::size_t m, std::uint64_t s) {
  return select(affine_space(q, m), [&](const Exponent& e) {
    std::uint64_t t = 1;
    for (auto x : e) t *= x + 1;
    return t < s;
  });
}

std::uint64_t rm_distance(std::uint64_t q, std::size_t m, std::uint64_t s) {
  if (s >= m * (q - 1)) return 1;
  std::uint64_t a = s / (q - 1), b = s % (q - 1);
  std::uint64_t d = q - b;
  for (std::uint64_t i = 0; i + 1 + a < m; ++i) d *= q;
  return d;
}

std::pair<std::size_t, std::size_t> wrm_nesting(std::uint64_t s, std::size_t m,
                                                const std::vector<std::uint64_t>& weights) {
  if (weights.size() != m) throw std::invalid_argument("need one weight per variable");
  if (!std::is_sorted(weights.begin(), weights.end())) throw std::invalid_argument("weights must be ascending");
  std::size_t vmin = 0, vmax = 0;
  std::uint64_t suf = 0, pre = 0;
  for (std::size_t v = 1; v <= m; ++v) {
    suf += weights[m - v];
    pre += weights[v - 1];
    if (s >= suf) vmin = v;
    if (s >= pre) vmax = v;
  }
  return {vmin, vmax};
}

std::uint64_t multiplicative_bound(const DefiningSet& delta, const SearchBudget& budget) {
  if (delta.empty()) throw std::invalid_argument("multiplicative bound of an empty defining set");
  const auto& fam = delta.family();
  std::uint64_t prod = 1;
  for (std::size_t j = 0; j < fam.m(); ++j) {
    std::vector<std::size_t> J;
    if (fam.in_J(j)) J.push_back(0);
    JAffineFamily uni(fam.field(), {fam.N(j)}, J);
    std::vector<Exponent> proj;
    for (const auto& e : delta) proj.push_back({e[j]});
    auto d = min_distance(evaluate(DefiningSet(uni, proj)), budget);
    prod *= d.lower;
  }
  return prod;
}

}  // namespace evalcode
