#pragma once
// Independent reference implementations used by the tests. Everything here is
// deliberately naive: schoolbook polynomial arithmetic, dense Gaussian
// elimination and brute-force enumeration.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "evalcode/galois.hpp"
#include "evalcode/linear_code.hpp"

namespace oracle {

using u64 = std::uint64_t;
using Poly = std::vector<u64>;  // ascending coefficients

inline Poly digits(u64 x, u64 p, unsigned r) {
  Poly d(r);
  for (unsigned i = 0; i < r; ++i) {
    d[i] = x % p;
    x /= p;
  }
  return d;
}

inline u64 undigits(const Poly& d, u64 p) {
  u64 x = 0;
  for (std::size_t i = d.size(); i-- > 0;) x = x * p + d[i];
  return x;
}

/// a*b mod (monic) f over GF(p), with a, b given as element indices.
inline u64 mul(u64 a, u64 b, const Poly& f, u64 p) {
  unsigned r = static_cast<unsigned>(f.size() - 1);
  Poly x = digits(a, p, r), y = digits(b, p, r);
  Poly prod(2 * r, 0);
  for (unsigned i = 0; i < r; ++i)
    for (unsigned j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  for (std::size_t d = prod.size(); d-- > r;) {
    u64 c = prod[d];
    if (!c) continue;
    for (unsigned i = 0; i <= r; ++i) prod[d - r + i] = (prod[d - r + i] + (p - c) * f[i]) % p;
  }
  prod.resize(r);
  return undigits(prod, p);
}

/// Brute force: a monic polynomial of degree r has no monic factor of degree 1..r/2.
inline bool irreducible(const Poly& f, u64 p) {
  unsigned r = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; d <= r / 2; ++d) {
    u64 count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (u64 v = 0; v < count; ++v) {
      Poly g = digits(v, p, d);
      g.push_back(1);
      // long division of f by g
      Poly rem = f;
      for (std::size_t k = rem.size(); k-- > d;) {
        u64 c = rem[k];
        if (!c) continue;
        for (unsigned i = 0; i <= d; ++i) rem[k - d + i] = (rem[k - d + i] + (p - c) * g[i]) % p;
      }
      bool zero = std::all_of(rem.begin(), rem.begin() + d, [](u64 x) { return x == 0; });
      if (zero) return false;
    }
  }
  return true;
}

/// Rank over a field by dense elimination on a copy.
inline std::size_t rank(const evalcode::GaloisField& f, std::vector<evalcode::Word> m) {
  std::size_t rk = 0;
  if (m.empty()) return 0;
  std::size_t n = m[0].size();
  for (std::size_t c = 0; c < n && rk < m.size(); ++c) {
    std::size_t piv = rk;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rk]);
    auto inv = f.inv(m[rk][c]);
    for (auto& x : m[rk]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rk || m[i][c] == 0) continue;
      auto a = m[i][c];
      for (std::size_t t = 0; t < n; ++t) m[i][t] = f.sub(m[i][t], f.mul(a, m[rk][t]));
    }
    ++rk;
  }
  return rk;
}

/// Span equality of two row sets via ranks.
inline bool same_span(const evalcode::GaloisField& f, const std::vector<evalcode::Word>& a,
                      const std::vector<evalcode::Word>& b) {
  std::size_t ra = rank(f, a), rb = rank(f, b);
  if (ra != rb) return false;
  auto ab = a;
  ab.insert(ab.end(), b.begin(), b.end());
  return rank(f, ab) == ra;
}

/// All codewords (q^k of them) of the span of rows.
inline std::vector<evalcode::Word> all_codewords(const evalcode::GaloisField& f, const std::vector<evalcode::Word>& rows,
                                                 std::size_t n) {
  std::vector<evalcode::Word> out{evalcode::Word(n, 0)};
  for (const auto& r : rows) {
    std::vector<evalcode::Word> next;
    for (const auto& w : out)
      for (u64 a = 0; a < f.q(); ++a) {
        evalcode::Word v = w;
        for (std::size_t i = 0; i < n; ++i) v[i] = f.add(v[i], f.mul(a, r[i]));
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

inline std::size_t brute_distance(const evalcode::LinearCode& c) {
  std::size_t best = c.length() + 1;
  for (const auto& w : all_codewords(*c.field(), c.generator(), c.length())) {
    std::size_t wt = evalcode::weight(w);
    if (wt > 0) best = std::min(best, wt);
  }
  return best;
}

inline std::vector<evalcode::Word> random_rows(const evalcode::GaloisField& f, std::size_t k, std::size_t n,
                                               std::mt19937_64& rng) {
  std::uniform_int_distribution<u64> d(0, f.q() - 1);
  std::vector<evalcode::Word> rows(k, evalcode::Word(n));
  for (auto& r : rows)
    for (auto& x : r) x = d(rng);
  return rows;
}

inline evalcode::GaloisField::Elem dot(const evalcode::GaloisField& f, const evalcode::Word& a,
                                       const evalcode::Word& b) {
  evalcode::GaloisField::Elem s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

}  // namespace oracle
