#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "evalcode/galois.hpp"
#include "evalcode/linear_code.hpp"

namespace evalcode {

using Exponent = std::vector<std::uint64_t>;

/// Ambient data of a J-affine variety code: GF(q), N_1..N_m and J. Coordinate
/// j (0-based) uses the roots of X^{N_j} - X when j is not in J and the roots
/// of X^{N_j - 1} - 1 when it is.
class JAffineFamily {
 public:
  /// `J` holds 0-based coordinate indices.
  JAffineFamily(FieldPtr field, std::vector<std::uint64_t> N, std::vector<std::size_t> J);

  const FieldPtr& field() const { return d_->field; }
  std::size_t m() const { return d_->N.size(); }
  std::uint64_t N(std::size_t j) const { return d_->N[j]; }
  const std::vector<std::uint64_t>& Ns() const { return d_->N; }
  bool in_J(std::size_t j) const { return d_->in_J[j]; }
  std::vector<std::size_t> J() const;
  /// Largest exponent allowed in coordinate j.
  std::uint64_t T(std::size_t j) const { return in_J(j) ? N(j) - 2 : N(j) - 1; }
  /// |Z_j|
  std::uint64_t z(std::size_t j) const { return in_J(j) ? N(j) - 1 : N(j); }
  /// n_J, which is also |E_J|.
  std::size_t length() const { return d_->n; }

  /// Roots making up Z_j: 0 first (if j is not in J), then powers of a
  /// generator of the (N_j - 1)-th roots of unity.
  const std::vector<Elem>& coordinate_points(std::size_t j) const { return d_->Z[j]; }
  /// Z_j[i]^e for 0 <= e <= T(j).
  Elem power(std::size_t j, std::size_t i, std::uint64_t e) const { return d_->pow[j][e * z(j) + i]; }

  bool in_E(const Exponent& e) const;
  /// E' is the box with every coordinate at most N_j - 2.
  bool in_E_prime(const Exponent& e) const;
  /// Mixed-radix rank of an element of E_J (first coordinate most significant).
  std::size_t rank(const Exponent& e) const;
  Exponent unrank(std::size_t idx) const;

  /// Every p | N_j for j not in J; the combinatorial dual is exact for
  /// decreasing sets only under this condition.
  bool char_divides_affine_sizes() const;

  bool operator==(const JAffineFamily& o) const;
  std::string describe() const;

 private:
  struct Data {
    FieldPtr field;
    std::vector<std::uint64_t> N;
    std::vector<bool> in_J;
    std::size_t n;
    std::vector<std::vector<Elem>> Z;
    std::vector<std::vector<Elem>> pow;
  };
  std::shared_ptr<const Data> d_;
};

/// A finite subset of E_J, kept sorted and deduplicated.
class DefiningSet {
 public:
  DefiningSet(JAffineFamily family, std::vector<Exponent> elems);
  static DefiningSet empty(JAffineFamily family) { return {std::move(family), {}}; }
  static DefiningSet full(const JAffineFamily& family);

  const JAffineFamily& family() const { return family_; }
  const std::vector<Exponent>& elems() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  bool contains(const Exponent& e) const;
  bool subset_of(const DefiningSet& o) const;
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  DefiningSet unite(const DefiningSet& o) const;
  DefiningSet minus(const DefiningSet& o) const;
  bool operator==(const DefiningSet& o) const { return family_ == o.family_ && elems_ == o.elems_; }

  /// "{(0,0),(1,0)}" or "{0,3}" when m = 1.
  std::string to_string() const;

 private:
  JAffineFamily family_;
  std::vector<Exponent> elems_;
};

std::string format_exponent(const Exponent& e);

std::vector<std::vector<Elem>> point_set(const JAffineFamily& family);
/// ev(X^e) over the point set; e must lie in E_J.
Word evaluation_row(const JAffineFamily& family, const Exponent& e);
LinearCode evaluate(const DefiningSet& delta);

Exponent bar_reduce(const JAffineFamily& family, const Exponent& e);
DefiningSet minkowski_schur(const DefiningSet& a, const DefiningSet& b);
/// Combinatorial dual: componentwise complements removed from E_J, with the
/// "remove both" convention for coordinates equal to N_j - 1.
DefiningSet delta_dual(const DefiningSet& delta);
/// Componentwise complement: N_j - 1 - e_j off J, (-e_j) mod (N_j - 1) on J.
Exponent complement(const JAffineFamily& family, const Exponent& e);

/// min over e in delta of prod (z_j - e_j).
std::uint64_t footprint_bound(const DefiningSet& delta);

/// Largest footprint bound over the images of delta under exponent maps that
/// preserve weights: cyclic shifts of J-coordinates (multiplying by a monomial
/// that never vanishes) and multiplication by units mod N_j - 1 (permuting
/// Z_j). `max_work` caps the number of (map, exponent) evaluations.
std::uint64_t equivalent_footprint_bound(const DefiningSet& delta, std::uint64_t max_work = 50'000'000);

/// Largest decreasing subset of delta.
DefiningSet decreasing_core(const DefiningSet& delta);

/// Certified lower bound on d(evaluate(delta)^perp), from the exact dual of the
/// decreasing core. Returns 0 when the dual is the zero code and 1 when no
/// bound applies (some p does not divide N_j off J).
std::uint64_t dual_distance_bound(const DefiningSet& delta, std::uint64_t max_work = 50'000'000);

struct FootprintWitness {
  Word word;
  std::uint64_t weight = 0;
  Exponent attained_at;
};
/// Codeword of weight footprint_bound(delta); requires a decreasing set.
FootprintWitness footprint_witness(const DefiningSet& delta);

bool is_decreasing(const DefiningSet& delta);

/// Family with N = (q, ..., q), J empty: the whole affine space GF(q)^m.
JAffineFamily affine_space(std::uint64_t q, std::size_t m);
DefiningSet delta_rm(std::uint64_t q, std::size_t m, std::uint64_t s);
/// Weights must be ascending.
DefiningSet delta_wrm(std::uint64_t q, std::size_t m, std::uint64_t s, const std::vector<std::uint64_t>& weights);
/// {e : prod (q - e_j) >= s}
DefiningSet delta_hyperbolic(std::uint64_t q, std::size_t m, std::uint64_t s);
/// {e : prod (e_j + 1) < s}, the defining set of the dual of delta_hyperbolic(q, m, s).
DefiningSet delta_hyperbolic_dual(std::uint64_t q, std::size_t m, std::uint64_t s);
/// (q - b) q^(m-1-a) with s = a(q-1) + b, 0 <= b < q-1; 1 once s >= m(q-1).
std::uint64_t rm_distance(std::uint64_t q, std::size_t m, std::uint64_t s);

/// (v_min, v_max) with RM(v_min, m) inside WRM(s, m, S) inside RM(v_max, m).
std::pair<std::size_t, std::size_t> wrm_nesting(std::uint64_t s, std::size_t m, const std::vector<std::uint64_t>& weights);

/// Lower bound prod_j d(C_j) where C_j is the one-variable code on Z_j spanned
/// by the j-th coordinates of delta.
std::uint64_t multiplicative_bound(const DefiningSet& delta, const SearchBudget& budget = SearchBudget::from_env());

}  // namespace evalcode
