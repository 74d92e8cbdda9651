#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "evalcode/cartesian.hpp"
#include "evalcode/cyclotomic.hpp"
#include "evalcode/linear_code.hpp"

namespace evalcode {

/// Outcome of the two containments that make (C1, C2) a CSS-T pair.
struct CsstCertificate {
  bool c2_in_c1 = false;
  bool c2_in_square_dual = false;  // C2 inside (C1^{*2})^perp
  std::size_t square_dim = 0;
  std::size_t square_dual_dim = 0;
  bool holds() const { return c2_in_c1 && c2_in_square_dual; }
  /// First failed containment, or "" when both hold.
  std::string failure() const;
};

struct CssTParams {
  std::size_t n = 0;
  std::size_t k1 = 0, k2 = 0;
  std::size_t k = 0;        // k1 - k2
  std::size_t d_lower = 1;  // certified
  std::size_t d_upper = 0;  // weight of a found witness, 0 if none
  std::string d_source;
  std::string route;
  std::optional<CsstCertificate> certificate;
  /// "[[n,k,d]]" when the bounds meet, "[[n,k,>=d]]" otherwise.
  std::string to_string() const;
};

/// CSS parameters for C2 inside C1. The distance is bounded below by
/// min(d(C1), d(C2^perp)), which never exceeds the true CSS distance.
CssTParams css_params(const LinearCode& c1, const LinearCode& c2, const SearchBudget& budget = SearchBudget::from_env());

/// Matrix-level check of C2 inside C1 and inside (C1^{*2})^perp; binary only.
CsstCertificate is_csst_pair(const LinearCode& c1, const LinearCode& c2);

/// Binary WRM(s, m, S) over RM(r, m). Throws std::invalid_argument naming the
/// failed inequality (r <= v_min(s) or a + r < m). The pair is also checked
/// at matrix level; the distance is that of RM(r, m)^perp.
CssTParams wrm_csst(std::size_t m, std::uint64_t s, const std::vector<std::uint64_t>& weights, std::size_t r);
/// a = max{ j : 2s >= s_1 + ... + s_j }
std::size_t wrm_square_degree(std::uint64_t s, const std::vector<std::uint64_t>& weights);

struct JCsstCheck {
  bool ok = false;
  std::string failure;               // first violated condition
  std::optional<Exponent> violating;  // offending exponent, when there is one
  CssTParams params;                 // n, k and d_lower are always filled
};

/// Both sets inside E' and closed under doubling; binary subfield codes of a
/// characteristic-2 family. Throws if a set leaves E' or is not closed.
JCsstCheck jaffine_csst_strict(const DefiningSet& d1, const DefiningSet& d2);
/// Sufficient condition without the E' restriction: D2 inside D1 and every
/// element of bar(D1 + D1 + D2) has some j with a_j != 0 (j in J) or
/// a_j != N_j - 1 (j not in J).
JCsstCheck jaffine_csst(const DefiningSet& d1, const DefiningSet& d2);

struct ProductConstruction {
  std::uint64_t q;                     // 2^r
  std::uint64_t N1;                    // first coordinate, never in J
  std::vector<std::uint64_t> delta1;   // one-variable sets on N1, closed under doubling
  std::vector<std::uint64_t> delta2;
  std::vector<std::uint64_t> tail;     // N_2..N_m
  std::size_t m1 = 1;                  // coordinates m1+1..m (1-based) form J
  std::uint64_t designed_distance = 0;
};

struct ProductResult {
  DefiningSet delta1, delta2;
  JCsstCheck check;
};

/// Delta_1 = delta1 x full tail ranges; Delta_2 = closure of the defining set
/// of the dual hyperbolic code of the given designed distance. Throws
/// std::invalid_argument naming a failed hypothesis.
ProductResult csst_product_construction(const ProductConstruction& pc);

/// {e in E_J : prod (e_j + 1) < d}
DefiningSet hyperbolic_dual_set(const JAffineFamily& family, std::uint64_t d);

}  // namespace evalcode
