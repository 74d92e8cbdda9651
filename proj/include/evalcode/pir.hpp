#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "evalcode/cartesian.hpp"
#include "evalcode/cyclotomic.hpp"
#include "evalcode/linear_code.hpp"

namespace evalcode {

enum class Transitivity { ProvedByStructure, VerifiedByPermutations, Unverified };
std::string to_string(Transitivity t);

/// Unreduced fraction; the denominator of a PIR rate is always n.
struct Rate {
  std::size_t num = 0, den = 1;
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
  bool operator==(const Rate& o) const { return num == o.num && den == o.den; }
};
inline bool rate_less(const Rate& a, const Rate& b) { return a.num * b.den < b.num * a.den; }

struct PirScheme {
  std::size_t n;
  LinearCode storage;    // C
  LinearCode retrieval;  // D
  LinearCode product;    // C * D
  DistanceResult dual_retrieval;  // d(D^perp)
  std::size_t privacy_lower;      // dual_retrieval.lower - 1
  Rate rate;                      // dim (C * D)^perp / n
  Rate storage_rate;              // dim C / n
  Transitivity transitivity = Transitivity::Unverified;

  bool privacy_exact() const { return dual_retrieval.exact; }
};

/// `hints` feed the distance computation for D^perp.
PirScheme pir_params(const LinearCode& c, const LinearCode& d, const SearchBudget& budget = SearchBudget::from_env(),
                     const DistanceHints& hints = {}, Transitivity t = Transitivity::Unverified);

/// Generators of the group of per-coordinate scalings by (N_j - 1)-th roots of
/// unity and, where Z_j is closed under addition, translations. Each entry is
/// a position permutation in the convention of `permute`.
std::vector<std::vector<std::size_t>> candidate_automorphisms(const JAffineFamily& family);

/// Verified iff the generated group is transitive on positions and every
/// generator maps the code onto itself. Never claims more: anything else is
/// Unverified. Codes longer than 1024 are not examined.
Transitivity verify_transitive(const LinearCode& code, const std::vector<std::vector<std::size_t>>& generators);
Transitivity verify_transitive(const LinearCode& code, const JAffineFamily& family);

/// Structural proof if delta is decreasing over a product of additive
/// subgroups, or a consecutive union of cyclotomic sets; otherwise the
/// permutation check on the (subfield) code.
Transitivity transitivity_premises(const DefiningSet& delta, std::uint64_t qprime);

/// The code a defining set describes: evaluate(delta) when q' = q, the
/// subfield code otherwise.
LinearCode defined_code(const DefiningSet& delta, std::uint64_t qprime);

/// d(evaluate(delta)^perp) or of the subfield code's dual, with the dual-set
/// lower bound, a footprint witness when the dual set is decreasing, and the
/// generic search for the rest.
DistanceResult dual_code_distance(const DefiningSet& delta, std::uint64_t qprime,
                                  const SearchBudget& budget = SearchBudget::from_env(), bool transitive = false);
/// d(evaluate(delta)) with the footprint bound over equivalent sets and a
/// footprint witness for decreasing sets.
DistanceResult code_distance(const DefiningSet& delta, const SearchBudget& budget = SearchBudget::from_env());

/// PIR scheme from storage and retrieval defining sets over one family.
PirScheme scheme_from_sets(const DefiningSet& dc, const DefiningSet& dd, std::uint64_t qprime,
                           const SearchBudget& budget = SearchBudget::from_env());

/// Two-variable construction with N_2 - 1 | q' - 1: Delta_C = {(0,0),(0,1),(0,2)}
/// and Delta_D adds the orbits of (a1,0) and (a2,0). Throws
/// std::invalid_argument on a failed hypothesis.
PirScheme te_pir_subfield(const JAffineFamily& family, std::uint64_t qprime, std::uint64_t a1, std::uint64_t a2,
                          const SearchBudget& budget = SearchBudget::from_env());
/// n - (6r + 5), with r the degree of GF(q) over GF(q').
std::size_t te_pir_rate_floor(std::size_t n, unsigned r);

enum class OneVarVariant { Multiples, TwoCosets };

struct OneVarScheme {
  DefiningSet delta_c, delta_d;
  std::uint64_t next_rep;  // a_{i+1}, the designed privacy
  PirScheme scheme;
};

/// One variable over GF(q) on the (q - 1)-th roots of unity with q' = p^s and
/// a divisor N of q - 1. Delta_C is {0, N, ..., (nu - 1) N} or I_0 u I_N;
/// Delta_D is the union of the first i + 1 cyclotomic sets.
OneVarScheme one_var_scheme(std::uint64_t q, std::uint64_t qprime, std::uint64_t N, OneVarVariant variant,
                            std::size_t i, const SearchBudget& budget = SearchBudget::from_env());

}  // namespace evalcode
