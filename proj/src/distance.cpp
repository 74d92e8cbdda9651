// Minimum-distance certification: exhaustive enumeration, support search on
// the parity-check matrix, information-set search for witnesses and a
// disjoint-information-set lower bound.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "echelon.hpp"
#include "evalcode/linear_code.hpp"

namespace evalcode {

using detail::Bits;

namespace {

// q^k, saturating at cap + 1.
std::uint64_t capped_size(std::uint64_t q, std::size_t k, std::uint64_t cap) {
  std::uint64_t s = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (s > cap / q) return cap + 1;
    s *= q;
  }
  return s;
}

double log_binom(std::size_t n, std::size_t k) {
  if (k > n) return -INFINITY;
  return std::lgamma(double(n) + 1) - std::lgamma(double(k) + 1) - std::lgamma(double(n - k) + 1);
}

DistanceResult zero_code_result() {
  DistanceResult r;
  r.lower = r.upper = 0;
  r.exact = true;
  r.lower_source = r.upper_source = "zero code";
  return r;
}

}  // namespace

std::optional<DistanceResult> exhaustive_distance(const LinearCode& c, std::uint64_t cap, std::size_t stop_at) {
  const auto& f = *c.field();
  std::size_t n = c.length(), k = c.dimension();
  if (k == 0) return zero_code_result();
  if (capped_size(f.q(), k, cap) > cap) return std::nullopt;

  DistanceResult res;
  res.upper = n + 1;
  res.exact = true;
  res.lower_source = res.upper_source = "exhaustive";

  if (f.q() == 2) {
    std::vector<Bits> g;
    for (const auto& w : c.generator()) g.push_back(detail::to_bits(w));
    Bits cur(detail::words_for(n), 0), best;
    // Gray code: step i flips generator ctz(i).
    std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t i = 1; i < total; ++i) {
      const Bits& b = g[std::countr_zero(i)];
      std::size_t wt = 0;
      for (std::size_t t = 0; t < cur.size(); ++t) {
        cur[t] ^= b[t];
        wt += std::popcount(cur[t]);
      }
      if (wt < res.upper) {
        res.upper = wt;
        best = cur;
        if (wt <= stop_at) break;
      }
    }
    res.witness = detail::from_bits(best, n);
    res.lower = res.upper;
    return res;
  }

  // GF(p)-basis of the code: x^t * g_i, where x^t has index p^t.
  std::vector<Word> basis;
  for (unsigned t = 0; t < f.r(); ++t) {
    Elem xt = 1;
    for (unsigned u = 0; u < t; ++u) xt *= f.p();
    for (const auto& row : c.generator()) {
      Word w(n);
      for (std::size_t i = 0; i < n; ++i) w[i] = f.mul(xt, row[i]);
      basis.push_back(std::move(w));
    }
  }
  std::vector<std::vector<std::size_t>> supp(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (basis[j][i]) supp[j].push_back(i);

  std::vector<std::uint64_t> digit(basis.size(), 0);
  Word cur(n, 0);
  std::size_t wt = 0;
  while (true) {
    // Odometer step in base p; every digit touched adds its basis vector once.
    std::size_t j = 0;
    for (; j < digit.size(); ++j) {
      for (auto i : supp[j]) {
        bool was = cur[i] != 0;
        cur[i] = f.add(cur[i], basis[j][i]);
        bool now = cur[i] != 0;
        wt += now;
        wt -= was;
      }
      if (++digit[j] < f.p()) break;
      digit[j] = 0;
    }
    if (j == digit.size()) break;
    if (wt > 0 && wt < res.upper) {
      res.upper = wt;
      res.witness = cur;
      if (wt <= stop_at) break;
    }
  }
  res.lower = res.upper;
  return res;
}

namespace {

// Column-echelon state for support search. Each level holds one column of the
// parity-check matrix reduced against the earlier levels, together with the
// combination of chosen columns that produced it.
class SupportSearch {
 public:
  SupportSearch(const LinearCode& code, std::size_t w_limit, std::uint64_t max_steps, std::size_t stop_at)
      : f_(*code.field()), n_(code.length()), w_(w_limit), steps_left_(max_steps), stop_at_(stop_at) {
    LinearCode h = dual(code);
    m_ = h.dimension();
    cols_.assign(n_, Word(m_, 0));
    for (std::size_t r = 0; r < m_; ++r)
      for (std::size_t i = 0; i < n_; ++i) cols_[i][r] = h.generator()[r][i];
    best_ = n_ + 1;
  }

  SupportSearchResult run(bool fix_first) {
    SupportSearchResult out;
    aborted_ = false;
    if (m_ == 0) {
      // Every single position is a codeword.
      out.complete = true;
      out.min_found = 1;
      out.witness.assign(n_, 0);
      out.witness[0] = 1;
      return out;
    }
    if (fix_first) {
      if (w_ >= 1) descend_from(0);
    } else {
      for (std::size_t j = 0; j < n_ && !done(); ++j) descend_from(j);
    }
    out.complete = !aborted_;
    if (best_ <= n_) {
      out.min_found = best_;
      out.witness = witness_;
    }
    return out;
  }

 private:
  struct Level {
    Word vec;   // reduced column, scaled so vec[pivot] = 1
    std::size_t pivot;
    Word comb;  // coefficients on chosen_[0..level]
  };

  bool done() const { return aborted_ || (best_ <= n_ && best_ <= stop_at_); }

  // Limit on support size still worth exploring.
  std::size_t limit() const { return std::min(w_, best_ - 1); }

  void descend_from(std::size_t j) {
    if (limit() < 1) return;
    // Add column j as level 0 (a zero column is a weight-1 codeword).
    if (!push(j)) return;
    dfs(j + 1);
    pop();
  }

  void dfs(std::size_t from) {
    if (done()) return;
    // chosen_ has size s; adding one more column gives support size s + 1.
    if (chosen_.size() + 1 > limit()) return;
    for (std::size_t j = from; j < n_; ++j) {
      if (done()) return;
      if (chosen_.size() + 1 > limit()) return;
      if (steps_left_ == 0) {
        aborted_ = true;
        return;
      }
      --steps_left_;
      if (push(j)) {
        if (chosen_.size() + 1 <= limit()) dfs(j + 1);
        pop();
      }
    }
  }

  // Tries to add column j. Returns false if it was dependent (a codeword was
  // recorded instead).
  bool push(std::size_t j) {
    Word v = cols_[j];
    std::size_t s = chosen_.size();
    Word comb(s + 1, 0);
    comb[s] = 1;
    for (const auto& L : levels_) {
      Elem a = v[L.pivot];
      if (a == 0) continue;
      Elem na = f_.neg(a);
      for (std::size_t t = 0; t < m_; ++t)
        if (L.vec[t]) v[t] = f_.add(v[t], f_.mul(na, L.vec[t]));
      for (std::size_t t = 0; t < L.comb.size(); ++t)
        if (L.comb[t]) comb[t] = f_.add(comb[t], f_.mul(na, L.comb[t]));
    }
    std::size_t piv = 0;
    while (piv < m_ && v[piv] == 0) ++piv;
    if (piv == m_) {
      record(j, comb);
      return false;
    }
    Elem inv = f_.inv(v[piv]);
    if (inv != 1) {
      for (auto& x : v) x = f_.mul(x, inv);
      for (auto& x : comb) x = f_.mul(x, inv);
    }
    chosen_.push_back(j);
    levels_.push_back({std::move(v), piv, std::move(comb)});
    return true;
  }

  void pop() {
    chosen_.pop_back();
    levels_.pop_back();
  }

  void record(std::size_t j, const Word& comb) {
    Word x(n_, 0);
    for (std::size_t t = 0; t < chosen_.size(); ++t) x[chosen_[t]] = comb[t];
    x[j] = comb[chosen_.size()];
    std::size_t wt = weight(x);
    if (wt > 0 && wt < best_) {
      best_ = wt;
      witness_ = std::move(x);
    }
  }

  const GaloisField& f_;
  std::size_t n_, m_ = 0, w_;
  std::uint64_t steps_left_;
  std::size_t stop_at_;
  std::vector<Word> cols_;
  std::vector<std::size_t> chosen_;
  std::vector<Level> levels_;
  std::size_t best_;
  Word witness_;
  bool aborted_ = false;
};

}  // namespace

SupportSearchResult support_search(const LinearCode& c, std::size_t w_limit, std::uint64_t max_steps, bool fix_first,
                                   std::size_t stop_at) {
  if (c.dimension() == 0) return {true, 0, {}};
  SupportSearch s(c, w_limit, max_steps, stop_at);
  return s.run(fix_first);
}

namespace {

// Systematic generator of the code restricted to a column order: returns the
// RREF rows of the permuted code mapped back to original coordinates.
std::vector<Word> systematic_rows(const LinearCode& c, const std::vector<std::size_t>& order,
                                  std::vector<std::size_t>* info_set = nullptr) {
  std::size_t n = c.length();
  std::vector<Word> rows;
  for (const auto& g : c.generator()) {
    Word w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = g[order[i]];
    rows.push_back(std::move(w));
  }
  LinearCode pc(c.field(), n, rows);
  std::vector<Word> out;
  for (const auto& g : pc.generator()) {
    Word w(n);
    for (std::size_t i = 0; i < n; ++i) w[order[i]] = g[i];
    out.push_back(std::move(w));
  }
  if (info_set) {
    info_set->clear();
    for (auto p : pc.pivots()) info_set->push_back(order[p]);
  }
  return out;
}

}  // namespace

std::optional<Word> isd_search(const LinearCode& c, std::size_t target, std::uint64_t iterations, std::uint64_t seed) {
  const auto& f = *c.field();
  std::size_t n = c.length(), k = c.dimension();
  if (k == 0) return std::nullopt;
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (std::uint64_t it = 0; it < iterations; ++it) {
    std::shuffle(order.begin(), order.end(), rng);
    auto rows = systematic_rows(c, order);
    for (const auto& r : rows)
      if (weight(r) <= target) return r;
    // Pairs a*g_i + g_j (Lee-Brickell with two rows).
    Word w(n);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        for (Elem a = 1; a < f.q(); ++a) {
          std::size_t wt = 0;
          for (std::size_t t = 0; t < n && wt <= target; ++t) {
            w[t] = f.add(f.mul(a, rows[i][t]), rows[j][t]);
            wt += w[t] != 0;
          }
          if (wt <= target) {
            for (std::size_t t = 0; t < n; ++t) w[t] = f.add(f.mul(a, rows[i][t]), rows[j][t]);
            return w;
          }
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

bool shift_invariant(const LinearCode& c) {
  std::size_t n = c.length();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = (i + 1) % n;
  return permute(c, perm) == c;
}

}  // namespace

InfoSetBound info_set_bound(const LinearCode& c, std::size_t stop_at, std::uint64_t max_steps) {
  const auto& f = *c.field();
  std::size_t n = c.length(), k = c.dimension();
  InfoSetBound out;
  if (k == 0) {
    out.lower = 0;
    out.finished = true;
    return out;
  }
  out.upper = n + 1;

  struct Sys {
    std::vector<Word> rows;  // empty when the set is a cyclic shift of set 0
    std::size_t rank;        // size of the part of the information set disjoint from earlier ones
  };
  std::vector<Sys> sets;

  // A cyclic code has the blocks [0,k), [k,2k), ... and [n-k,n) as shifts of
  // one information set, so enumerating the first covers all of them.
  bool cyclic = false;
  if (k < n && shift_invariant(c)) {
    std::vector<std::size_t> order(n), info;
    std::iota(order.begin(), order.end(), 0);
    auto rows = systematic_rows(c, order, &info);
    if (info.size() == k && info.back() == k - 1) {
      cyclic = true;
      sets.push_back({std::move(rows), k});
      for (std::size_t start = k; start < n; start += k) sets.push_back({{}, std::min(k, n - start)});
    }
  }
  if (!cyclic) {
    // Greedy disjoint information sets; each later set prefers unused columns.
    std::vector<bool> used(n, false);
    while (true) {
      std::vector<std::size_t> order;
      for (std::size_t i = 0; i < n; ++i)
        if (!used[i]) order.push_back(i);
      if (order.empty()) break;
      std::size_t fresh = order.size();
      for (std::size_t i = 0; i < n; ++i)
        if (used[i]) order.push_back(i);
      std::vector<std::size_t> info;
      auto rows = systematic_rows(c, order, &info);
      std::size_t rank = 0;
      for (auto p : info)
        if (!used[p]) {
          ++rank;
          used[p] = true;
        }
      if (rank == 0) break;
      sets.push_back({std::move(rows), rank});
      if (fresh < k) break;
    }
  }

  for (const auto& s : sets)
    for (const auto& r : s.rows) {
      std::size_t wt = weight(r);
      if (wt < out.upper) {
        out.upper = wt;
        out.witness = r;
      }
    }

  // done[i] = t once every message of weight <= t has been tried on set i. A
  // codeword not yet seen then has weight >= t+1 on a full information set and
  // >= t+1-(k-rank) on a partial one.
  std::vector<std::size_t> done(sets.size(), 1);
  auto bound = [&]() {
    std::size_t b = 0;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      std::size_t deficit = k - sets[i].rank;
      if (done[i] + 1 > deficit) b += done[i] + 1 - deficit;
    }
    return b;
  };
  out.lower = std::max<std::size_t>(1, bound());

  std::size_t q = f.q();
  std::uint64_t steps = 0;
  bool aborted = false;
  for (std::size_t t = 2; t <= k && !aborted; ++t) {
    for (std::size_t si = 0; si < sets.size() && !aborted; ++si) {
      if (out.lower >= out.upper || out.upper <= stop_at) break;
      if (cyclic && si > 0) {
        done[si] = t;
        out.lower = std::max(out.lower, bound());
        continue;
      }
      const auto& rows = sets[si].rows;
      // mult[i * (q-1) + a - 1] = a * rows[i]
      std::vector<Word> mult;
      if (k * (q - 1) * n > (std::size_t{1} << 26)) {
        aborted = true;
        break;
      }
      mult.reserve(k * (q - 1));
      for (const auto& r : rows)
        for (Elem a = 1; a < q; ++a) {
          Word w(n);
          for (std::size_t p = 0; p < n; ++p) w[p] = f.mul(a, r[p]);
          mult.push_back(std::move(w));
        }
      // Messages of weight exactly t with leading coefficient 1, built from
      // partial sums level by level.
      std::vector<Word> partial(t + 1, Word(n, 0));
      auto dfs = [&](auto&& self, std::size_t u, std::size_t start) -> void {
        for (std::size_t i = start; i + (t - u) <= k && !aborted; ++i) {
          for (Elem a = 1; a < (u == 0 ? 2 : q); ++a) {
            if (++steps > max_steps) {
              aborted = true;
              return;
            }
            const Word& add = mult[i * (q - 1) + a - 1];
            const Word& from = partial[u];
            Word& to = partial[u + 1];
            if (u + 1 < t) {
              for (std::size_t p = 0; p < n; ++p) to[p] = f.add(from[p], add[p]);
              self(self, u + 1, i + 1);
              if (aborted) return;
            } else {
              std::size_t wt = 0;
              for (std::size_t p = 0; p < n; ++p) {
                to[p] = f.add(from[p], add[p]);
                wt += to[p] != 0;
              }
              if (wt > 0 && wt < out.upper) {
                out.upper = wt;
                out.witness = to;
              }
            }
          }
        }
      };
      dfs(dfs, 0, 0);
      if (aborted) break;
      done[si] = t;
      out.lower = std::max(out.lower, bound());
    }
    if (out.lower >= out.upper || out.upper <= stop_at) break;
  }
  out.lower = std::min(out.lower, out.upper);
  out.finished = out.lower >= out.upper;
  return out;
}

DistanceResult min_distance(const LinearCode& c, const SearchBudget& budget, const DistanceHints& hints) {
  std::size_t n = c.length(), k = c.dimension();
  if (k == 0) return zero_code_result();
  const auto& f = *c.field();

  DistanceResult res;
  res.upper = n + 1;
  for (const auto& g : c.generator()) {
    std::size_t wt = weight(g);
    if (wt < res.upper) {
      res.upper = wt;
      res.witness = g;
      res.upper_source = "generator row";
    }
  }
  for (const auto& w : hints.witnesses) {
    std::size_t wt = weight(w);
    if (wt > 0 && wt < res.upper && c.contains_word(w)) {
      res.upper = wt;
      res.witness = w;
      res.upper_source = "supplied witness";
    }
  }
  res.lower = 1;
  res.lower_source = "trivial";
  if (hints.lower > res.lower) {
    res.lower = hints.lower;
    res.lower_source = hints.lower_source.empty() ? "supplied bound" : hints.lower_source;
  }
  auto finish = [&]() {
    if (res.lower > res.upper) res.lower = res.upper;  // a verified witness wins over a bad hint
    res.exact = res.lower == res.upper;
    return res;
  };
  if (res.lower >= res.upper || hints.hints_only) return finish();

  if (auto ex = exhaustive_distance(c, budget.enumeration_cap, res.lower)) {
    if (ex->upper < res.upper) {
      res.upper = ex->upper;
      res.witness = ex->witness;
      res.upper_source = "exhaustive";
    }
    // Stopping at the known lower bound still proves the minimum.
    res.lower = res.upper;
    res.lower_source = res.lower_source == "trivial" ? "exhaustive" : res.lower_source;
    return finish();
  }

  std::uint64_t steps = budget.max_steps;

  // Support search up to the largest weight the budget plausibly covers.
  {
    std::size_t nn = hints.transitive ? n - 1 : n;
    std::size_t w = std::min<std::size_t>(budget.w_max, res.upper - 1);
    while (w > 1 && log_binom(nn, w - 1) > std::log(double(steps) / 2)) --w;
    if (w >= res.lower && w >= 1) {
      auto ss = support_search(c, w, steps / 2, hints.transitive, res.lower);
      if (ss.min_found && ss.min_found < res.upper) {
        res.upper = ss.min_found;
        res.witness = ss.witness;
        res.upper_source = "support search";
      }
      if (ss.complete && ss.min_found == 0 && w + 1 > res.lower) {
        res.lower = w + 1;
        res.lower_source = "support search";
      }
      if (ss.complete && ss.min_found) {
        res.lower = ss.min_found;
        res.lower_source = "support search";
      }
      if (ss.min_found && ss.min_found <= res.lower) res.lower = std::max(res.lower, ss.min_found);
    }
    if (res.lower >= res.upper) return finish();
  }

  // Witness search.
  {
    std::uint64_t per_iter = std::max<std::uint64_t>(1, std::uint64_t(k) * k * f.q());
    std::uint64_t iters = std::min<std::uint64_t>(200, steps / 8 / per_iter + 1);
    std::uint64_t seed = budget.seed;
    while (res.upper > res.lower) {
      auto w = isd_search(c, res.upper - 1, iters, seed++);
      if (!w) break;
      res.upper = weight(*w);
      res.witness = *w;
      res.upper_source = "information-set search";
    }
    if (res.lower >= res.upper) return finish();
  }

  {
    auto ib = info_set_bound(c, res.lower, steps / 2);
    if (ib.upper < res.upper) {
      res.upper = ib.upper;
      res.witness = ib.witness;
      res.upper_source = "information-set enumeration";
    }
    if (ib.lower > res.lower) {
      res.lower = ib.lower;
      res.lower_source = "information-set enumeration";
    }
  }
  return finish();
}

}  // namespace evalcode
