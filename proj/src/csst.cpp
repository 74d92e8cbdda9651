#include "evalcode/csst.hpp"

#include <stdexcept>

namespace evalcode {

std::string CsstCertificate::failure() const {
  if (!c2_in_c1) return "C2 is not contained in C1";
  if (!c2_in_square_dual) return "C2 is not contained in (C1^{*2})^perp";
  return "";
}

std::string CssTParams::to_string() const {
  std::string d = (d_upper == d_lower ? "" : ">=") + std::to_string(d_lower);
  return "[[" + std::to_string(n) + "," + std::to_string(k) + "," + d + "]]";
}

CssTParams css_params(const LinearCode& c1, const LinearCode& c2, const SearchBudget& budget) {
  if (c1.length() != c2.length()) throw std::invalid_argument("codes of different lengths");
  if (!contains(c1, c2)) throw std::invalid_argument("C2 is not contained in C1");
  CssTParams p;
  p.n = c1.length();
  p.k1 = c1.dimension();
  p.k2 = c2.dimension();
  p.k = p.k1 - p.k2;
  // Both relative weights are at least the plain minimum weights. d(C1) only
  // matters if it falls below d(C2^perp), so check that first.
  auto b = min_distance(dual(c2), budget);
  p.d_lower = b.lower;
  p.d_source = "d(C2^perp): " + b.lower_source;
  if (b.lower > 1) {
    auto ss = support_search(c1, b.lower - 1, budget.max_steps);
    if (!(ss.complete && ss.min_found == 0)) {
      auto a = min_distance(c1, budget);
      if (a.lower < p.d_lower) {
        p.d_lower = a.lower;
        p.d_source = "d(C1): " + a.lower_source;
      }
    }
  }
  p.route = "CSS";
  return p;
}

CsstCertificate is_csst_pair(const LinearCode& c1, const LinearCode& c2) {
  if (!c1.binary() || !c2.binary()) throw std::invalid_argument("CSS-T pairs are defined for binary codes");
  if (c1.length() != c2.length()) throw std::invalid_argument("codes of different lengths");
  CsstCertificate c;
  c.c2_in_c1 = contains(c1, c2);
  LinearCode sq = schur_square(c1);
  c.square_dim = sq.dimension();
  LinearCode sqd = dual(sq);
  c.square_dual_dim = sqd.dimension();
  c.c2_in_square_dual = contains(sqd, c2);
  return c;
}

std::size_t wrm_square_degree(std::uint64_t s, const std::vector<std::uint64_t>& weights) {
  std::size_t a = 0;
  std::uint64_t sum = 0;
  for (auto w : weights) {
    sum += w;
    if (2 * s < sum) break;
    ++a;
  }
  return a;
}

CssTParams wrm_csst(std::size_t m, std::uint64_t s, const std::vector<std::uint64_t>& weights, std::size_t r) {
  if (m < 2) throw std::invalid_argument("m >= 2 required");
  if (weights.size() != m) throw std::invalid_argument("need one weight per variable");
  auto [vmin, vmax] = wrm_nesting(s, m, weights);
  (void)vmax;
  if (r > vmin)
    throw std::invalid_argument("r <= v_min(s) fails: r = " + std::to_string(r) + ", v_min = " + std::to_string(vmin));
  std::size_t a = wrm_square_degree(s, weights);
  if (a + r >= m)
    throw std::invalid_argument("a + r < m fails: a = " + std::to_string(a) + ", r = " + std::to_string(r) +
                                ", m = " + std::to_string(m));
  LinearCode c1 = evaluate(delta_wrm(2, m, s, weights));
  LinearCode c2 = evaluate(delta_rm(2, m, r));
  CssTParams p;
  p.certificate = is_csst_pair(c1, c2);
  if (!p.certificate->holds())
    throw std::logic_error("WRM CSS-T pair rejected at matrix level: " + p.certificate->failure());
  p.n = std::size_t{1} << m;
  p.k1 = c1.dimension();
  p.k2 = c2.dimension();
  p.k = p.k1 - p.k2;
  // C2^perp = RM(m - r - 1, m), whose minimum distance is 2^{r+1}.
  p.d_lower = p.d_upper = rm_distance(2, m, m - r - 1);
  p.d_source = "RM(m-r-1, m) distance";
  p.route = "WRM/RM nesting";
  return p;
}

namespace {

void require_binary_closed(const DefiningSet& d) {
  const auto& fam = d.family();
  if (fam.field()->p() != 2) throw std::invalid_argument("CSS-T families need characteristic 2");
  if (!is_closed(d, 2)) throw std::invalid_argument("defining set " + d.to_string() + " is not closed under doubling");
}

JCsstCheck base_check(const DefiningSet& d1, const DefiningSet& d2, const char* route) {
  if (!(d1.family() == d2.family())) throw std::invalid_argument("defining sets over different families");
  require_binary_closed(d1);
  require_binary_closed(d2);
  JCsstCheck c;
  c.params.n = d1.family().length();
  c.params.k1 = d1.size();
  c.params.k2 = d2.size();
  c.params.k = d1.size() >= d2.size() ? d1.size() - d2.size() : 0;
  c.params.d_lower = dual_distance_bound(d2);
  c.params.d_source = "dual defining set";
  c.params.route = route;
  if (!d2.subset_of(d1)) {
    c.failure = "Delta2 is not contained in Delta1";
    for (const auto& e : d2)
      if (!d1.contains(e)) {
        c.violating = e;
        break;
      }
  }
  return c;
}

}  // namespace

JCsstCheck jaffine_csst_strict(const DefiningSet& d1, const DefiningSet& d2) {
  const auto& fam = d1.family();
  for (const auto* d : {&d1, &d2})
    for (const auto& e : *d)
      if (!fam.in_E_prime(e)) throw std::invalid_argument("exponent " + format_exponent(e) + " lies outside E'");
  auto c = base_check(d1, d2, "defining sets inside E'");
  if (!c.failure.empty()) return c;
  DefiningSet dual2 = delta_dual(d2);
  for (const auto& e : minkowski_schur(d1, d1))
    if (!dual2.contains(e)) {
      c.failure = "Delta1 + Delta1 is not contained in the dual set of Delta2";
      c.violating = e;
      return c;
    }
  c.ok = true;
  return c;
}

JCsstCheck jaffine_csst(const DefiningSet& d1, const DefiningSet& d2) {
  auto c = base_check(d1, d2, "all-ones vector in the dual of the triple product");
  if (!c.failure.empty()) return c;
  const auto& fam = d1.family();
  for (const auto& a : minkowski_schur(minkowski_schur(d1, d1), d2)) {
    bool some = false;
    for (std::size_t j = 0; j < fam.m() && !some; ++j) some = fam.in_J(j) ? a[j] != 0 : a[j] != fam.N(j) - 1;
    if (!some) {
      c.failure = "bar(Delta1 + Delta1 + Delta2) contains " + format_exponent(a) +
                  ", which is 0 on J and N_j - 1 off J";
      c.violating = a;
      return c;
    }
  }
  c.ok = true;
  return c;
}

DefiningSet hyperbolic_dual_set(const JAffineFamily& family, std::uint64_t d) {
  std::vector<Exponent> out;
  for (std::size_t i = 0; i < family.length(); ++i) {
    Exponent e = family.unrank(i);
    std::uint64_t prod = 1;
    for (auto x : e) {
      prod *= x + 1;
      if (prod >= d) break;
    }
    if (prod < d) out.push_back(std::move(e));
  }
  return {family, std::move(out)};
}

ProductResult csst_product_construction(const ProductConstruction& pc) {
  auto field = make_field_of_order(pc.q);
  if (field->p() != 2) throw std::invalid_argument("q must be a power of 2");
  std::vector<std::uint64_t> N{pc.N1};
  N.insert(N.end(), pc.tail.begin(), pc.tail.end());
  if (pc.m1 < 1 || pc.m1 > N.size()) throw std::invalid_argument("1 <= m1 <= m required");
  std::vector<std::size_t> J;
  for (std::size_t j = pc.m1; j < N.size(); ++j) J.push_back(j);
  JAffineFamily fam(field, N, J);

  JAffineFamily one(field, {pc.N1}, {});
  auto lift = [&](const std::vector<std::uint64_t>& xs) {
    std::vector<Exponent> v;
    for (auto x : xs) v.push_back({x});
    return DefiningSet(one, v);
  };
  DefiningSet a1 = lift(pc.delta1), a2 = lift(pc.delta2);
  if (!is_closed(a1, 2) || !is_closed(a2, 2)) throw std::invalid_argument("one-variable sets must be closed under doubling");
  if (!a2.subset_of(a1)) throw std::invalid_argument("one-variable Delta2 is not contained in Delta1");
  if (minkowski_schur(minkowski_schur(a1, a1), a2).contains({pc.N1 - 1}))
    throw std::invalid_argument("N_1 - 1 lies in bar(Delta1 + Delta1 + Delta2)");

  // Delta_1 = delta1 x [0, T_2] x ... x [0, T_m]
  std::vector<Exponent> big;
  for (std::size_t i = 0; i < fam.length(); ++i) {
    Exponent e = fam.unrank(i);
    if (a1.contains({e[0]})) big.push_back(std::move(e));
  }
  DefiningSet d1(fam, std::move(big));
  DefiningSet d2 = closure(hyperbolic_dual_set(fam, pc.designed_distance), 2);
  auto check = jaffine_csst(d1, d2);
  check.params.route = "product construction";
  return {d1, d2, check};
}

}  // namespace evalcode
