#include <cmath>
#include <random>

#include "doctest.h"
#include "evalcode/linear_code.hpp"
#include "oracle.hpp"

using namespace evalcode;

namespace {

// Generator of the binary [7,4,3] Hamming code.
LinearCode hamming7() {
  return LinearCode(make_field(2, 1), 7,
                    {{1, 0, 0, 0, 0, 1, 1}, {0, 1, 0, 0, 1, 0, 1}, {0, 0, 1, 0, 1, 1, 0}, {0, 0, 0, 1, 1, 1, 1}});
}

}  // namespace

TEST_CASE("rref canonical form") {
  auto c = hamming7();
  CHECK(c.dimension() == 4);
  CHECK(c.pivots() == std::vector<std::size_t>{0, 1, 2, 3});
  // Dependent and shuffled rows give the same code.
  auto g = c.generator();
  std::vector<Word> rows = {g[3], g[1], g[0], g[2]};
  Word sum(7);
  for (int i = 0; i < 7; ++i) sum[i] = g[0][i] ^ g[1][i];
  rows.push_back(sum);
  CHECK(LinearCode(make_field(2, 1), 7, rows) == c);
  CHECK_THROWS(LinearCode(make_field(2, 1), 7, {{1, 0, 0}}));
  CHECK_THROWS(LinearCode(make_field(2, 1), 3, {{2, 0, 0}}));
}

TEST_CASE("dual codes on random instances") {
  std::mt19937_64 rng(11);
  for (auto [p, r] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {7, 2}, {2, 4}}) {
    auto f = make_field(p, r);
    for (int it = 0; it < 20; ++it) {
      std::size_t n = 3 + rng() % 20, k = rng() % (n + 1);
      LinearCode c(f, n, oracle::random_rows(*f, k, n, rng));
      LinearCode d = dual(c);
      REQUIRE(c.dimension() + d.dimension() == n);
      for (const auto& a : c.generator())
        for (const auto& b : d.generator()) REQUIRE(oracle::dot(*f, a, b) == 0);
      REQUIRE(dual(d) == c);
    }
  }
  CHECK(dual(hamming7()).dimension() == 3);
  CHECK(dual(LinearCode::zero(make_field(2, 1), 5)) == LinearCode::full(make_field(2, 1), 5));
}

TEST_CASE("membership and containment") {
  std::mt19937_64 rng(12);
  auto f = make_field(7, 2);
  auto rows = oracle::random_rows(*f, 4, 12, rng);
  LinearCode c(f, 12, rows);
  LinearCode sub(f, 12, {rows[0], rows[2]});
  CHECK(contains(c, sub));
  CHECK(!contains(sub, c));
  for (const auto& w : rows) CHECK(c.contains_word(w));
  Word w = rows[0];
  auto other = oracle::random_rows(*f, 1, 12, rng)[0];
  CHECK(c.contains_word(w));
  bool in = oracle::rank(*f, {rows[0], rows[1], rows[2], rows[3], other}) == 4;
  CHECK(c.contains_word(other) == in);
}

TEST_CASE("schur product matches the span of all pairwise products") {
  std::mt19937_64 rng(13);
  for (auto [p, r] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {3, 1}, {2, 3}, {7, 2}}) {
    auto f = make_field(p, r);
    for (int it = 0; it < 10; ++it) {
      std::size_t n = 5 + rng() % 25;
      auto a = oracle::random_rows(*f, 1 + rng() % 4, n, rng);
      auto b = oracle::random_rows(*f, 1 + rng() % 4, n, rng);
      std::vector<Word> prods;
      for (const auto& x : a)
        for (const auto& y : b) {
          Word z(n);
          for (std::size_t i = 0; i < n; ++i) z[i] = f->mul(x[i], y[i]);
          prods.push_back(z);
        }
      LinearCode s = schur(LinearCode(f, n, a), LinearCode(f, n, b));
      REQUIRE(oracle::same_span(*f, s.generator(), prods));
    }
  }
  // The Hamming code squares to the full space.
  CHECK(schur_square(hamming7()).dimension() == 7);
}

TEST_CASE("subfield subcode matches brute force") {
  std::mt19937_64 rng(14);
  for (auto [p, r, s] : std::vector<std::tuple<std::uint64_t, unsigned, unsigned>>{{2, 2, 1}, {2, 3, 1}, {3, 2, 1}, {2, 4, 2}}) {
    auto f = make_field(p, r);
    SubfieldEmbedding e(f, s);
    for (int it = 0; it < 8; ++it) {
      std::size_t n = 4 + rng() % 4, k = 1 + rng() % (n - 1);
      LinearCode c(f, n, oracle::random_rows(*f, k, n, rng));
      std::vector<Word> inside;
      for (const auto& w : oracle::all_codewords(*f, c.generator(), n)) {
        bool ok = true;
        Word v(n);
        for (std::size_t i = 0; i < n && ok; ++i) {
          ok = f->in_subfield(w[i], s);
          if (ok) v[i] = e.down(w[i]);
        }
        if (ok) inside.push_back(v);
      }
      LinearCode sc = subfield_subcode(c, s);
      REQUIRE(sc.field()->q() == e.sub()->q());
      REQUIRE(oracle::same_span(*e.sub(), sc.generator(), inside));
      for (const auto& v : inside) REQUIRE(sc.contains_word(v));
    }
  }
}

TEST_CASE("puncture, shorten and permute") {
  auto c = hamming7();
  auto p = puncture(c, {6});
  CHECK(p.length() == 6);
  CHECK(p.dimension() == 4);
  auto s = shorten(c, {6});
  CHECK(s.length() == 6);
  CHECK(s.dimension() == 3);
  // Shortened words are exactly the codewords vanishing at the position.
  for (const auto& w : oracle::all_codewords(*c.field(), c.generator(), 7))
    if (w[6] == 0) CHECK(s.contains_word(Word(w.begin(), w.begin() + 6)));
  std::vector<std::size_t> perm = {1, 2, 3, 4, 5, 6, 0};
  auto q = permute(c, perm);
  for (const auto& g : c.generator()) {
    Word w(7);
    for (int i = 0; i < 7; ++i) w[perm[i]] = g[i];
    CHECK(q.contains_word(w));
  }
  CHECK_THROWS(permute(c, {0, 0, 1, 2, 3, 4, 5}));
  CHECK_THROWS(puncture(c, {7}));
}

TEST_CASE("distance routes agree with brute force") {
  std::mt19937_64 rng(15);
  for (auto [p, r] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    auto f = make_field(p, r);
    for (int it = 0; it < 12; ++it) {
      std::size_t n = 6 + rng() % 10, k = 1 + rng() % 5;
      LinearCode c(f, n, oracle::random_rows(*f, k, n, rng));
      std::size_t d = oracle::brute_distance(c);
      CAPTURE(c.summary());
      auto ex = exhaustive_distance(c, 1u << 20);
      REQUIRE(ex);
      CHECK(ex->upper == d);
      CHECK(weight(ex->witness) == d);
      CHECK(c.contains_word(ex->witness));

      auto ss = support_search(c, n, 100'000'000);
      CHECK(ss.complete);
      CHECK(ss.min_found == d);
      CHECK(c.contains_word(ss.witness));
      auto low = support_search(c, d - 1, 100'000'000);
      CHECK(low.complete);
      CHECK(low.min_found == 0);

      auto ib = info_set_bound(c, 0, 100'000'000);
      CHECK(ib.finished);
      CHECK(ib.lower == d);
      CHECK(ib.upper == d);

      SearchBudget tiny;
      tiny.enumeration_cap = 1;  // force the non-exhaustive routes
      auto md = min_distance(c, tiny);
      CHECK(md.exact);
      CHECK(md.upper == d);
      CHECK(md.lower == d);
      CHECK(weight(md.witness) == d);
      CHECK(c.contains_word(md.witness));
    }
  }
}

TEST_CASE("information-set bound on cyclic codes") {
  // The span of all shifts of a word is cyclic; only one block gets enumerated.
  std::mt19937_64 rng(16);
  int checked = 0;
  for (auto [p, r] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {3, 1}, {2, 2}}) {
    auto f = make_field(p, r);
    for (int it = 0; it < 40; ++it) {
      std::size_t n = 7 + rng() % 9;
      Word w = oracle::random_rows(*f, 1, n, rng)[0];
      std::vector<Word> shifts;
      for (std::size_t s = 0; s < n; ++s) {
        Word v(n);
        for (std::size_t i = 0; i < n; ++i) v[(i + s) % n] = w[i];
        shifts.push_back(std::move(v));
      }
      LinearCode c(f, n, shifts);
      if (c.dimension() == 0 || c.dimension() == n || std::pow(double(f->q()), double(c.dimension())) > 1e6) continue;
      CAPTURE(c.summary());
      std::size_t d = oracle::brute_distance(c);
      auto ib = info_set_bound(c, 0, 100'000'000);
      CHECK(ib.finished);
      CHECK(ib.lower == d);
      CHECK(weight(ib.witness) == d);
      CHECK(c.contains_word(ib.witness));
      ++checked;
    }
  }
  CHECK(checked > 30);
}

TEST_CASE("min_distance hints") {
  auto c = hamming7();
  DistanceHints h;
  h.lower = 3;
  h.lower_source = "given";
  h.hints_only = true;
  auto r = min_distance(c, SearchBudget{}, h);
  CHECK(r.exact);
  CHECK(r.upper == 3);
  CHECK(r.lower_source == "given");
  // A witness that is not a codeword is ignored.
  h.witnesses = {{1, 1, 0, 0, 0, 0, 0}};
  h.lower = 1;
  r = min_distance(c, SearchBudget{}, h);
  CHECK(r.upper == 3);
  CHECK(!r.exact);
  auto z = min_distance(LinearCode::zero(make_field(2, 1), 4));
  CHECK(z.exact);
  CHECK(z.upper == 0);
}

TEST_CASE("isd finds low weight words") {
  auto c = hamming7();
  auto w = isd_search(c, 3, 50, 1);
  REQUIRE(w);
  CHECK(weight(*w) == 3);
  CHECK(c.contains_word(*w));
  CHECK(!isd_search(c, 2, 50, 1));
}

TEST_CASE("budget from environment") {
  setenv("EVALCODE_BUDGET_STEPS", "1234", 1);
  CHECK(SearchBudget::from_env().max_steps == 1234);
  setenv("EVALCODE_BUDGET_STEPS", "bogus", 1);
  CHECK(SearchBudget::from_env().max_steps == SearchBudget{}.max_steps);
  unsetenv("EVALCODE_BUDGET_STEPS");
}
