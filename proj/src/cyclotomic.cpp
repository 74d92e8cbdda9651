#include "evalcode/cyclotomic.hpp"

#include <algorithm>
#include <stdexcept>

namespace evalcode {

unsigned subfield_degree(const JAffineFamily& family, std::uint64_t qprime) {
  const auto& f = *family.field();
  std::uint64_t x = 1;
  for (unsigned s = 0; s <= f.r(); ++s) {
    if (x == qprime) {
      if (s == 0 || f.r() % s != 0) break;
      return s;
    }
    x *= f.p();
  }
  throw std::invalid_argument("GF(" + std::to_string(qprime) + ") is not a subfield of GF(" + std::to_string(f.q()) +
                              ")");
}

namespace {

Exponent times(const JAffineFamily& fam, std::uint64_t k, const Exponent& e) {
  Exponent v(e.size());
  for (std::size_t j = 0; j < e.size(); ++j) v[j] = e[j] * k;
  return bar_reduce(fam, v);
}

}  // namespace

CyclotomicSet orbit_of(const JAffineFamily& family, std::uint64_t qprime, const Exponent& e) {
  subfield_degree(family, qprime);
  if (!family.in_E(e)) throw std::invalid_argument("exponent " + format_exponent(e) + " lies outside E_J");
  CyclotomicSet c;
  c.multiplier = qprime;
  Exponent x = e;
  do {
    c.orbit.push_back(x);
    x = times(family, qprime, x);
  } while (x != e);
  std::sort(c.orbit.begin(), c.orbit.end());
  c.rep = c.orbit.front();
  return c;
}

std::vector<CyclotomicSet> cyclotomic_sets(const JAffineFamily& family, std::uint64_t qprime) {
  subfield_degree(family, qprime);
  std::vector<bool> seen(family.length(), false);
  std::vector<CyclotomicSet> out;
  for (std::size_t i = 0; i < family.length(); ++i) {
    if (seen[i]) continue;
    auto c = orbit_of(family, qprime, family.unrank(i));
    for (const auto& e : c.orbit) seen[family.rank(e)] = true;
    out.push_back(std::move(c));
  }
  // Ranks follow lexicographic order and the first unseen rank is always the
  // least element of its orbit, so `out` is already sorted by representative.
  return out;
}

std::vector<Exponent> representatives(const JAffineFamily& family, std::uint64_t qprime) {
  std::vector<Exponent> reps;
  for (auto& c : cyclotomic_sets(family, qprime)) reps.push_back(std::move(c.rep));
  return reps;
}

DefiningSet closure(const DefiningSet& delta, std::uint64_t qprime) {
  const auto& fam = delta.family();
  std::vector<Exponent> out;
  for (const auto& e : delta) {
    auto c = orbit_of(fam, qprime, e);
    out.insert(out.end(), c.orbit.begin(), c.orbit.end());
  }
  return {fam, std::move(out)};
}

bool is_closed(const DefiningSet& delta, std::uint64_t qprime) {
  for (const auto& e : delta)
    if (!delta.contains(times(delta.family(), qprime, e))) return false;
  return true;
}

DefiningSet consecutive_union(const JAffineFamily& family, std::uint64_t qprime, std::size_t i) {
  auto sets = cyclotomic_sets(family, qprime);
  if (i >= sets.size())
    throw std::out_of_range("only " + std::to_string(sets.size()) + " cyclotomic sets exist");
  std::vector<Exponent> out;
  for (std::size_t t = 0; t <= i; ++t) out.insert(out.end(), sets[t].orbit.begin(), sets[t].orbit.end());
  return {family, std::move(out)};
}

DefiningSet union_of_orbits(const JAffineFamily& family, std::uint64_t qprime, const std::vector<Exponent>& members) {
  return closure(DefiningSet(family, members), qprime);
}

LinearCode subfield_code(const DefiningSet& delta, std::uint64_t qprime) {
  const auto& fam = delta.family();
  const auto& f = *fam.field();
  unsigned s = subfield_degree(fam, qprime);
  if (!is_closed(delta, qprime)) throw std::invalid_argument("defining set is not closed under multiplication by q'");
  SubfieldEmbedding emb(fam.field(), s);
  std::size_t n = fam.length();
  std::vector<Word> rows;
  std::vector<bool> done(n, false);
  for (const auto& a : delta) {
    if (done[fam.rank(a)]) continue;
    auto orb = orbit_of(fam, qprime, a);
    for (const auto& e : orb.orbit) done[fam.rank(e)] = true;
    std::size_t ia = orb.size();
    // xi generates GF(q'^ia) inside GF(q); its first ia powers are a basis over GF(q').
    std::uint64_t sub_order = 1;
    for (std::size_t t = 0; t < ia; ++t) sub_order *= qprime;
    Elem xi = f.pow(f.primitive(), (f.q() - 1) / (sub_order - 1));
    Word mono = evaluation_row(fam, orb.rep);
    Elem xs = 1;
    for (std::size_t k = 0; k < ia; ++k) {
      Word row(n);
      for (std::size_t i = 0; i < n; ++i) {
        // sum_{t < ia} (xi^k P^a)^{q'^t}
        Elem x = f.mul(xs, mono[i]);
        Elem acc = 0;
        for (std::size_t t = 0; t < ia; ++t) {
          acc = f.add(acc, x);
          x = f.frobenius(x, s);
        }
        row[i] = emb.down(acc);
      }
      rows.push_back(std::move(row));
      xs = f.mul(xs, xi);
    }
  }
  return LinearCode(emb.sub(), n, rows);
}

DefiningSet schur_subfield(const DefiningSet& a, const DefiningSet& b, std::uint64_t qprime) {
  if (!is_closed(a, qprime) || !is_closed(b, qprime))
    throw std::invalid_argument("defining set is not closed under multiplication by q'");
  return minkowski_schur(a, b);
}

DistanceResult subfield_dual_distance(const DefiningSet& delta, std::uint64_t qprime, const SearchBudget& budget,
                                      bool transitive) {
  LinearCode d = dual(subfield_code(delta, qprime));
  DistanceHints hints;
  hints.lower = dual_distance_bound(delta);
  hints.lower_source = "dual defining set";
  hints.transitive = transitive;
  return min_distance(d, budget, hints);
}

}  // namespace evalcode
