#include "evalcode/pir.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace evalcode {

std::string to_string(Transitivity t) {
  switch (t) {
    case Transitivity::ProvedByStructure:
      return "proved-by-structure";
    case Transitivity::VerifiedByPermutations:
      return "verified-by-permutations";
    case Transitivity::Unverified:
      break;
  }
  return "unverified";
}

PirScheme pir_params(const LinearCode& c, const LinearCode& d, const SearchBudget& budget, const DistanceHints& hints,
                     Transitivity t) {
  if (c.length() != d.length()) throw std::invalid_argument("storage and retrieval codes have different lengths");
  if (!c.field()->same_as(*d.field())) throw std::invalid_argument("storage and retrieval codes over different fields");
  std::size_t n = c.length();
  LinearCode prod = schur(c, d);
  DistanceResult dd = min_distance(dual(d), budget, hints);
  std::size_t privacy = dd.lower > 0 ? dd.lower - 1 : 0;
  return PirScheme{n,  c,  d, prod, dd, privacy, Rate{n - prod.dimension(), n}, Rate{c.dimension(), n},
                   t};
}

namespace {

struct Layout {
  std::vector<std::size_t> stride;
  explicit Layout(const JAffineFamily& fam) : stride(fam.m(), 1) {
    for (std::size_t j = fam.m() - 1; j-- > 0;) stride[j] = stride[j + 1] * fam.z(j + 1);
  }
};

std::vector<std::size_t> lift(const JAffineFamily& fam, const Layout& lay, std::size_t j,
                              const std::vector<std::size_t>& local) {
  std::size_t n = fam.length();
  std::vector<std::size_t> perm(n);
  for (std::size_t pos = 0; pos < n; ++pos) {
    std::size_t digit = (pos / lay.stride[j]) % fam.z(j);
    perm[pos] = pos - digit * lay.stride[j] + local[digit] * lay.stride[j];
  }
  return perm;
}

}  // namespace

std::vector<std::vector<std::size_t>> candidate_automorphisms(const JAffineFamily& family) {
  const auto& f = *family.field();
  Layout lay(family);
  std::vector<std::vector<std::size_t>> gens;
  for (std::size_t j = 0; j < family.m(); ++j) {
    const auto& Z = family.coordinate_points(j);
    std::unordered_map<Elem, std::size_t> where;
    for (std::size_t i = 0; i < Z.size(); ++i) where[Z[i]] = i;
    std::size_t off = family.in_J(j) ? 0 : 1;  // Z[off] = 1, Z[off + 1] generates the roots of unity
    if (family.N(j) - 1 >= 2) {
      Elem g = Z[off + 1];
      std::vector<std::size_t> local(Z.size());
      for (std::size_t i = 0; i < Z.size(); ++i) local[i] = where.at(f.mul(g, Z[i]));
      gens.push_back(lift(family, lay, j, local));
    }
    if (family.in_J(j)) continue;
    bool additive = true;
    for (std::size_t a = 0; a < Z.size() && additive; ++a)
      for (std::size_t b = a; b < Z.size() && additive; ++b) additive = where.count(f.add(Z[a], Z[b])) > 0;
    if (!additive) continue;
    // Translations by an additive basis of Z_j.
    std::unordered_set<Elem> span{0};
    for (Elem z : Z) {
      if (span.count(z)) continue;
      std::vector<std::size_t> local(Z.size());
      for (std::size_t i = 0; i < Z.size(); ++i) local[i] = where.at(f.add(Z[i], z));
      gens.push_back(lift(family, lay, j, local));
      std::unordered_set<Elem> grown;
      for (Elem s : span) {
        Elem x = s;
        for (std::uint64_t c = 0; c < f.p(); ++c) {
          grown.insert(x);
          x = f.add(x, z);
        }
      }
      span = std::move(grown);
    }
  }
  return gens;
}

Transitivity verify_transitive(const LinearCode& code, const std::vector<std::vector<std::size_t>>& generators) {
  std::size_t n = code.length();
  if (n > 1024 || n == 0) return Transitivity::Unverified;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t x = stack.back();
    stack.pop_back();
    for (const auto& g : generators) {
      if (g.size() != n) return Transitivity::Unverified;
      if (!seen[g[x]]) {
        seen[g[x]] = true;
        ++reached;
        stack.push_back(g[x]);
      }
    }
  }
  if (reached != n) return Transitivity::Unverified;
  for (const auto& g : generators)
    if (!(permute(code, g) == code)) return Transitivity::Unverified;
  return Transitivity::VerifiedByPermutations;
}

Transitivity verify_transitive(const LinearCode& code, const JAffineFamily& family) {
  if (code.length() != family.length()) throw std::invalid_argument("code length differs from the family's");
  if (code.length() > 1024) return Transitivity::Unverified;
  return verify_transitive(code, candidate_automorphisms(family));
}

LinearCode defined_code(const DefiningSet& delta, std::uint64_t qprime) {
  return qprime == delta.family().field()->q() ? evaluate(delta) : subfield_code(delta, qprime);
}

Transitivity transitivity_premises(const DefiningSet& delta, std::uint64_t qprime) {
  const auto& fam = delta.family();
  const auto& f = *fam.field();
  if (is_decreasing(delta)) {
    bool additive = true;
    for (std::size_t j = 0; j < fam.m() && additive; ++j) {
      if (fam.in_J(j)) {
        additive = false;
        break;
      }
      const auto& Z = fam.coordinate_points(j);
      std::unordered_set<Elem> s(Z.begin(), Z.end());
      for (std::size_t a = 0; a < Z.size() && additive; ++a)
        for (std::size_t b = a; b < Z.size() && additive; ++b) additive = s.count(f.add(Z[a], Z[b])) > 0;
    }
    if (additive) return Transitivity::ProvedByStructure;
  }
  if (is_closed(delta, qprime)) {
    std::size_t covered = 0;
    for (const auto& c : cyclotomic_sets(fam, qprime)) {
      if (covered == delta.size()) break;
      bool in = delta.contains(c.rep);
      if (!in) break;
      covered += c.size();
    }
    if (covered == delta.size() && !delta.empty()) return Transitivity::ProvedByStructure;
  }
  return verify_transitive(defined_code(delta, qprime), fam);
}

DistanceResult dual_code_distance(const DefiningSet& delta, std::uint64_t qprime, const SearchBudget& budget,
                                  bool transitive) {
  if (qprime != delta.family().field()->q()) return subfield_dual_distance(delta, qprime, budget, transitive);
  DistanceHints hints;
  hints.lower = dual_distance_bound(delta);
  hints.lower_source = "dual defining set";
  hints.transitive = transitive;
  DefiningSet gamma = delta_dual(delta);
  if (!gamma.empty() && is_decreasing(gamma)) hints.witnesses.push_back(footprint_witness(gamma).word);
  return min_distance(dual(evaluate(delta)), budget, hints);
}

DistanceResult code_distance(const DefiningSet& delta, const SearchBudget& budget) {
  DistanceHints hints;
  if (!delta.empty()) {
    hints.lower = equivalent_footprint_bound(delta);
    hints.lower_source = "footprint";
    if (is_decreasing(delta)) hints.witnesses.push_back(footprint_witness(delta).word);
  }
  return min_distance(evaluate(delta), budget, hints);
}

namespace {

Transitivity weakest(Transitivity a, Transitivity b) {
  auto rank = [](Transitivity t) {
    return t == Transitivity::ProvedByStructure ? 2 : t == Transitivity::VerifiedByPermutations ? 1 : 0;
  };
  return rank(a) <= rank(b) ? a : b;
}

}  // namespace

PirScheme scheme_from_sets(const DefiningSet& dc, const DefiningSet& dd, std::uint64_t qprime,
                           const SearchBudget& budget) {
  if (!(dc.family() == dd.family())) throw std::invalid_argument("defining sets over different families");
  LinearCode c = defined_code(dc, qprime), d = defined_code(dd, qprime);
  DefiningSet prod = minkowski_schur(dc, dd);
  // The scheme needs transitive C and C * D; D only informs the distance search.
  Transitivity t = weakest(transitivity_premises(dc, qprime), transitivity_premises(prod, qprime));
  bool d_transitive = transitivity_premises(dd, qprime) != Transitivity::Unverified;

  std::size_t n = c.length();
  LinearCode pc = schur(c, d);
  DistanceResult dist = dual_code_distance(dd, qprime, budget, d_transitive);
  std::size_t privacy = dist.lower > 0 ? dist.lower - 1 : 0;
  return PirScheme{n, c, d, pc, dist, privacy, Rate{n - pc.dimension(), n}, Rate{c.dimension(), n}, t};
}

std::size_t te_pir_rate_floor(std::size_t n, unsigned r) {
  std::size_t used = 6 * std::size_t{r} + 5;
  return n > used ? n - used : 0;
}

PirScheme te_pir_subfield(const JAffineFamily& family, std::uint64_t qprime, std::uint64_t a1, std::uint64_t a2,
                          const SearchBudget& budget) {
  if (family.m() != 2) throw std::invalid_argument("the construction uses two variables");
  unsigned s = subfield_degree(family, qprime);
  if ((qprime - 1) % (family.N(1) - 1) != 0)
    throw std::invalid_argument("N_2 - 1 = " + std::to_string(family.N(1) - 1) + " does not divide q' - 1 = " +
                                std::to_string(qprime - 1));
  if (family.T(1) < 2) throw std::invalid_argument("the second coordinate needs exponents up to 2");
  if (a1 == a2) throw std::invalid_argument("a1 and a2 must name distinct cyclotomic sets");
  for (auto a : {a1, a2}) {
    if (a == 0) throw std::invalid_argument("a1, a2 must be nonzero representatives");
    if (orbit_of(family, qprime, {a, 0}).rep != Exponent{a, 0})
      throw std::invalid_argument(std::to_string(a) + " is not a cyclotomic representative");
  }
  DefiningSet dc(family, {{0, 0}, {0, 1}, {0, 2}});
  if (!is_closed(dc, qprime)) throw std::invalid_argument("(0,1) and (0,2) are not fixed by multiplication by q'");
  DefiningSet dd = dc.unite(union_of_orbits(family, qprime, {{a1, 0}, {a2, 0}}));
  PirScheme sch = scheme_from_sets(dc, dd, qprime, budget);
  unsigned r = family.field()->r() / s;
  if (sch.rate.num < te_pir_rate_floor(sch.n, r)) throw std::logic_error("rate below the guaranteed floor");
  if (sch.privacy_lower < 3) throw std::logic_error("privacy below 3");
  return sch;
}

OneVarScheme one_var_scheme(std::uint64_t q, std::uint64_t qprime, std::uint64_t N, OneVarVariant variant,
                            std::size_t i, const SearchBudget& budget) {
  auto field = make_field_of_order(q);
  JAffineFamily fam(field, {q}, {0});
  std::uint64_t n = q - 1;
  if (N == 0 || n % N != 0)
    throw std::invalid_argument("N = " + std::to_string(N) + " does not divide q - 1 = " + std::to_string(n));
  subfield_degree(fam, qprime);
  std::vector<Exponent> c;
  if (variant == OneVarVariant::Multiples) {
    for (std::uint64_t t = 0; t < n / N; ++t) c.push_back({t * N});
  } else {
    c = {{0}, {N % n}};
  }
  DefiningSet dc = closure(DefiningSet(fam, c), qprime);
  DefiningSet dd = consecutive_union(fam, qprime, i);
  auto reps = representatives(fam, qprime);
  std::uint64_t next = i + 1 < reps.size() ? reps[i + 1][0] : n;
  PirScheme sch = scheme_from_sets(dc, dd, qprime, budget);
  if (sch.privacy_lower < next) throw std::logic_error("privacy below the designed a_{i+1}");
  if (sch.rate.num + dc.size() * dd.size() < n) throw std::logic_error("rate below (n - #C #D)/n");
  return {dc, dd, next, sch};
}

}  // namespace evalcode
