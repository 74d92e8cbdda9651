#pragma once

#include <cstdint>
#include <vector>

#include "evalcode/cartesian.hpp"

namespace evalcode {

/// Orbit of an exponent under e -> bar_reduce(q' e).
struct CyclotomicSet {
  std::uint64_t multiplier = 0;  // q'
  Exponent rep;                  // lexicographically least element
  std::vector<Exponent> orbit;   // sorted
  std::size_t size() const { return orbit.size(); }
};

/// q' must be a power of the characteristic with GF(q') inside GF(q).
CyclotomicSet orbit_of(const JAffineFamily& family, std::uint64_t qprime, const Exponent& e);
/// All orbits, sorted by representative.
std::vector<CyclotomicSet> cyclotomic_sets(const JAffineFamily& family, std::uint64_t qprime);
std::vector<Exponent> representatives(const JAffineFamily& family, std::uint64_t qprime);

DefiningSet closure(const DefiningSet& delta, std::uint64_t qprime);
bool is_closed(const DefiningSet& delta, std::uint64_t qprime);
/// I_{a_0} u ... u I_{a_i} in representative order.
DefiningSet consecutive_union(const JAffineFamily& family, std::uint64_t qprime, std::size_t i);
/// Union of the orbits of the given representatives (or any orbit members).
DefiningSet union_of_orbits(const JAffineFamily& family, std::uint64_t qprime, const std::vector<Exponent>& members);

/// Subfield subcode of evaluate(delta) over GF(q'), built from trace rows;
/// delta must be closed.
LinearCode subfield_code(const DefiningSet& delta, std::uint64_t qprime);
/// Bar-reduced Minkowski sum of two closed sets.
DefiningSet schur_subfield(const DefiningSet& a, const DefiningSet& b, std::uint64_t qprime);

/// Distance of dual(subfield_code(delta)). For a closed delta this dual is the
/// subfield subcode of evaluate(delta)^perp, so dual_distance_bound is a valid
/// lower bound; the upper bound comes from a witness search.
DistanceResult subfield_dual_distance(const DefiningSet& delta, std::uint64_t qprime,
                                      const SearchBudget& budget = SearchBudget::from_env(), bool transitive = false);

/// s with q' = p^s; throws unless GF(q') is a subfield of GF(q).
unsigned subfield_degree(const JAffineFamily& family, std::uint64_t qprime);

}  // namespace evalcode
