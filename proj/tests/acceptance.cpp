// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <regex>
#include <sstream>

#include "evalcode/csst.hpp"
#include "evalcode/cyclotomic.hpp"
#include "evalcode/pir.hpp"
#include "evalcode/tables.hpp"
#include "random_sets.hpp"

using namespace evalcode;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f s", s);
  return buf;
}

// Printed code cell with its distance dropped: "[n,k,d]_q" -> "[n,k]_q".
std::string without_distance(const std::string& printed) {
  static const std::regex code(R"(^\[(\d+),(\d+),[^\]]*\](.*)$)");
  return std::regex_replace(printed, code, "[$1,$2]$3");
}

// Dimensions, privacy and rates of a table against the print; distances ignored.
std::vector<std::string> dimension_failures(const Table& t) {
  std::vector<std::string> bad;
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    for (std::size_t j = 0; j < t.columns.size(); ++j) {
      const auto& c = t.rows[i].cells[j];
      if (c.printed.empty() || c.status == CellStatus::Literal) continue;
      std::string printed = c.value.kind == CellValue::Kind::Code ? without_distance(c.printed) : c.printed;
      if (compare_cell(c.value, printed) != CellStatus::Match)
        bad.push_back(t.kind + " row " + std::to_string(i + 1) + " " + t.columns[j] + ": printed " + c.printed +
                      ", computed " + c.value.render(t.suffix));
    }
  return bad;
}

std::string summarize(const std::vector<std::string>& items, std::size_t limit = 4) {
  std::string s;
  for (std::size_t i = 0; i < items.size() && i < limit; ++i) s += (i ? "; " : "") + items[i];
  if (items.size() > limit) s += "; ... (" + std::to_string(items.size()) + " in total)";
  return s;
}

Outcome schur_oracle() {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(101);
  int bad = 0;
  for (int it = 0; it < 200; ++it) {
    auto fam = testsets::random_family(rng, 343, false, {4, 8, 16, 49, 64});
    auto a = testsets::random_set(fam, rng), b = testsets::random_set(fam, rng);
    if (!(evaluate(minkowski_schur(a, b)) == schur(evaluate(a), evaluate(b)))) ++bad;
  }
  double s = seconds_since(t0);
  return {bad == 0 && s < 60, "200 instances, " + std::to_string(bad) + " disagreements, " + fmt_seconds(s)};
}

Outcome dual_oracle() {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(102);
  int bad = 0, outside = 0, bad_outside = 0;
  for (int it = 0; it < 200; ++it) {
    auto fam = testsets::random_family(rng, 343, true);
    auto d = testsets::random_set(fam, rng, true);
    if (!(dual(evaluate(d)) == evaluate(delta_dual(d)))) ++bad;
  }
  while (outside < 100) {
    auto fam = testsets::random_family(rng, 343, true);
    auto d = testsets::random_set(fam, rng);
    if (std::all_of(d.begin(), d.end(), [&](const Exponent& e) { return fam.in_E_prime(e); })) continue;
    ++outside;
    if (!contains(dual(evaluate(d)), evaluate(delta_dual(d)))) ++bad_outside;
  }
  double s = seconds_since(t0);
  return {bad == 0 && bad_outside == 0 && s < 60,
          "200 sets inside E' (" + std::to_string(bad) + " unequal), 100 outside (" + std::to_string(bad_outside) +
              " without containment), " + fmt_seconds(s)};
}

Outcome subfield_oracle() {
  std::mt19937_64 rng(103);
  int bad = 0, count = 0;
  while (count < 100) {
    auto fam = testsets::random_family(rng, 255, false, {4, 8, 16, 9, 49, 64});
    const auto& f = *fam.field();
    std::uint64_t qp = f.p();
    if (f.r() % 2 == 0 && rng() % 2) qp = f.p() * f.p();
    if (qp == f.q()) qp = f.p();
    auto d = closure(testsets::random_set(fam, rng), qp);
    auto sc = subfield_code(d, qp);
    ++count;
    if (sc.dimension() != d.size() || !(sc == subfield_subcode(evaluate(d), subfield_degree(fam, qp)))) ++bad;
  }
  return {bad == 0, "100 closed instances, " + std::to_string(bad) + " disagreements"};
}

Outcome subfield_dual_negative() {
  JAffineFamily fam(make_field(2, 4), {16}, {0});
  auto ones = [&](std::initializer_list<std::uint64_t> v) {
    std::vector<Exponent> out;
    for (auto a : v) out.push_back({a});
    return DefiningSet(fam, out);
  };
  DefiningSet d1 = ones({1, 2, 4, 8}), d2 = ones({0});
  bool duals = delta_dual(d1) == ones({0, 1, 2, 3, 4, 5, 6, 8, 9, 10, 12}) &&
               delta_dual(d2) == ones({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14});
  auto lhs = dual(subfield_code(schur_subfield(d1, d2, 2), 2));
  auto rhs = schur(dual(subfield_code(d1, 2)), dual(subfield_code(d2, 2)));
  bool differ = !(lhs == rhs);
  return {duals && differ, std::string("dual sets ") + (duals ? "as printed" : "differ from the print") +
                               "; dual of the product has dimension " + std::to_string(lhs.dimension()) +
                               ", product of the duals " + std::to_string(rhs.dimension())};
}

Outcome table_vii() {
  auto t0 = std::chrono::steady_clock::now();
  Table t = make_table("VII");
  CheckReport rep = check_table(t);
  double s = seconds_since(t0);
  std::vector<std::string> issues;
  std::istringstream in(rep.diff);
  for (std::string line; std::getline(in, line);) issues.push_back(line.substr(0, line.find(" expected")));
  bool ok = rep.exit_code() == 0 && s < 600;
  return {ok, std::to_string(rep.matched) + "/" + std::to_string(rep.cells) + " printed cells match, " + fmt_seconds(s) +
                  (issues.empty() ? "" : "; " + summarize(issues))};
}

Outcome jcsst() {
  Table t = make_table("jcss-t");
  std::size_t col = t.columns.size() - 1;
  std::vector<std::string> bad;
  for (std::size_t i : {0u, 1u}) {
    const auto& v = t.rows[i].cells[col].value;
    if (!(v.lower == std::optional<std::size_t>(4) && v.upper == std::optional<std::size_t>(4)))
      bad.push_back(t.rows[i].label + " distance not certified as 4 (" + v.render() + ")");
  }
  std::vector<std::string> gaps;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& c = t.rows[i].cells[col];
    std::string printed = std::regex_replace(c.printed, std::regex(R"(,(>=)?\d+\]\]$)"), "]]");
    std::string computed = "[[" + std::to_string(c.value.n) + "," + std::to_string(c.value.k) + "]]";
    if (printed != computed) bad.push_back(t.rows[i].label + ": printed " + c.printed + ", |Delta1|-|Delta2| gives " + computed);
    if (c.status == CellStatus::Gap) gaps.push_back(t.rows[i].label);
    if (!t.rows[i].note.empty()) gaps.push_back(t.rows[i].label + " uses a repaired coset list");
  }
  std::string detail = bad.empty() ? "all dimensions match, [[128,32,4]] and [[192,57,4]] certified" : summarize(bad);
  if (!gaps.empty()) detail += "; notes: " + summarize(gaps);
  return {bad.empty(), detail};
}

Outcome pir_tables() {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::string> bad;
  for (const char* kind : {"I", "II", "cyclic48", "IV", "berman49"}) {
    auto f = dimension_failures(make_table(kind));
    bad.insert(bad.end(), f.begin(), f.end());
  }
  // Privacy 23: the bold rate is the lower one.
  Table cyc = make_table("cyclic48");
  std::size_t rate_col = cyc.columns.size() - 1, priv_col = rate_col - 1;
  const CellValue *shaded = nullptr, *bold = nullptr;
  for (const auto& r : cyc.rows) {
    const auto& p = r.cells[priv_col].value;
    if (p.lower == std::optional<std::size_t>(23)) (r.style == "shaded" ? shaded : bold) = &r.cells[rate_col].value;
  }
  if (!shaded || !bold || !rate_less(bold->rate, shaded->rate)) bad.push_back("privacy-23 exception not reproduced");
  Table ber = make_table("berman49");
  std::size_t rc = ber.columns.size() - 1;
  if (ber.rows[0].cells[rc].value.rate.str() != "42/49" || ber.rows[1].cells[rc].value.rate.str() != "39/49")
    bad.push_back("Berman comparison rates differ from 42/49 and 39/49");
  double s = seconds_since(t0);
  if (s >= 900) bad.push_back("runtime " + fmt_seconds(s));
  return {bad.empty(), (bad.empty() ? std::string("all dimensions, privacies and rates match") : summarize(bad)) + ", " +
                           fmt_seconds(s)};
}

Outcome te_pir() {
  JAffineFamily fam(make_field(7, 2), {49, 7}, {});
  PirScheme s = te_pir_subfield(fam, 7, 1, 2);
  std::size_t floor_stated = 343 - 11;
  bool ok = s.rate.num >= floor_stated && s.privacy_lower == 3 && s.privacy_exact();
  return {ok, "rate " + s.rate.str() + " against the floor " + std::to_string(floor_stated) + "/343 (the r = 2 floor is " +
                  std::to_string(te_pir_rate_floor(343, 2)) + "/343), privacy " + std::to_string(s.privacy_lower) +
                  (s.privacy_exact() ? " exact" : " lower bound")};
}

Outcome rm_comparison() {
  Table t = make_table("rm_comparison");
  auto bad = dimension_failures(t);
  for (unsigned r = 6; r <= 12; ++r) {
    std::size_t rm = 1 + (r + 1) + (r + 1) * r / 2;
    if (!(rm > 4 * r + 2)) bad.push_back("binomial inequality fails at r = " + std::to_string(r));
  }
  std::size_t rc = t.columns.size() - 1;
  for (std::size_t i = 0; i + 1 < t.rows.size(); i += 2)
    if (!rate_less(t.rows[i].cells[rc].value.rate, t.rows[i + 1].cells[rc].value.rate))
      bad.push_back("r = " + t.rows[i].label + ": J-affine rate does not exceed the RM rate");
  return {bad.empty(), bad.empty() ? "both tables match; inequality holds for 6 <= r <= 12" : summarize(bad)};
}

Outcome properties() {
  std::vector<std::string> bad;
  SearchBudget budget;
  // Footprint bound against exhaustive distances.
  std::vector<DefiningSet> fixtures{delta_rm(7, 2, 1), delta_rm(2, 5, 2), delta_rm(3, 3, 2), delta_hyperbolic(7, 2, 4),
                                    delta_hyperbolic(7, 2, 14), delta_wrm(2, 5, 3, {1, 2, 2, 2, 2}),
                                    delta_hyperbolic_dual(7, 2, 5), delta_rm(4, 2, 3)};
  std::mt19937_64 rng(110);
  for (int i = 0; i < 40; ++i) {
    auto fam = testsets::random_family(rng, 64);
    fixtures.push_back(testsets::random_set(fam, rng));
  }
  std::size_t exhaustive = 0, decreasing = 0;
  for (const auto& d : fixtures) {
    auto c = evaluate(d);
    auto ex = exhaustive_distance(c, budget.enumeration_cap);
    if (ex) {
      ++exhaustive;
      if (footprint_bound(d) > ex->upper) bad.push_back("footprint above the distance for " + d.to_string());
    }
    if (is_decreasing(d)) {
      ++decreasing;
      auto w = footprint_witness(d);
      if (weight(w.word) != footprint_bound(d) || !c.contains_word(w.word))
        bad.push_back("witness weight differs from the footprint for " + d.to_string());
    }
  }
  // Transitivity of the Table I and II codes and of consecutive-coset codes.
  std::size_t confirmed = 0;
  for (std::size_t m : {2u, 3u}) {
    auto fam = affine_space(7, m);
    std::vector<DefiningSet> sets{delta_rm(7, m, 1)};
    for (std::uint64_t s : {3u, 4u, 5u}) sets.push_back(delta_rm(7, m, s));
    for (std::uint64_t s : {5u, 6u, 7u, 14u}) sets.push_back(delta_hyperbolic_dual(7, m, s));
    for (const auto& d : sets) {
      if (verify_transitive(evaluate(d), fam) == Transitivity::Unverified) bad.push_back("not transitive: " + fam.describe());
      ++confirmed;
    }
  }
  std::vector<std::pair<JAffineFamily, std::size_t>> cyc{{JAffineFamily(make_field(2, 8), {256}, {0}), 9},
                                                         {JAffineFamily(make_field(2, 6), {64, 4}, {1}), 3},
                                                         {JAffineFamily(make_field(2, 4), {16}, {0}), 3}};
  for (const auto& [fam, top] : cyc)
    for (std::size_t i = 1; i <= top; ++i) {
      auto c = subfield_code(consecutive_union(fam, 2, i), 2);
      if (verify_transitive(c, fam) == Transitivity::Unverified)
        bad.push_back("consecutive union " + std::to_string(i) + " not transitive on " + fam.describe());
      ++confirmed;
    }
  // Corrupted generators.
  std::vector<std::pair<LinearCode, JAffineFamily>> cases;
  JAffineFamily f16(make_field(2, 4), {16}, {0});
  JAffineFamily mixed(make_field(2, 6), {64, 4}, {1});
  JAffineFamily f49(make_field(7, 1), {7, 7}, {});
  cases.emplace_back(evaluate(DefiningSet(f16, {{1}, {3}})), f16);
  cases.emplace_back(evaluate(delta_rm(2, 5, 2)), affine_space(2, 5));
  cases.emplace_back(subfield_code(consecutive_union(mixed, 2, 3), 2), mixed);
  cases.emplace_back(evaluate(delta_hyperbolic(7, 2, 6)), f49);
  cases.emplace_back(evaluate(delta_rm(7, 2, 3)), f49);
  std::mt19937_64 crng(52);
  int adversarial = 0, wrongly = 0;
  for (int round = 0; round < 2; ++round)
    for (auto& [code, fam] : cases) {
      auto rows = code.generator();
      std::size_t n = code.length();
      Word w(n, 0);
      w[crng() % n] = 1;
      if (round == 1) w[crng() % n] = 1;
      rows[crng() % rows.size()] = w;
      if (verify_transitive(LinearCode(code.field(), n, rows), fam) != Transitivity::Unverified) ++wrongly;
      ++adversarial;
    }
  if (wrongly) bad.push_back(std::to_string(wrongly) + " corrupted generators reported transitive");
  std::string detail = std::to_string(exhaustive) + " exhaustive fixtures, " + std::to_string(decreasing) +
                       " decreasing, " + std::to_string(confirmed) + " transitive codes confirmed, " +
                       std::to_string(adversarial) + " corrupted generators rejected";
  if (!bad.empty()) detail += "; " + summarize(bad);
  return {bad.empty(), detail};
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Schur product through Minkowski sums", schur_oracle},
      {"dual defining sets", dual_oracle},
      {"subfield subcodes from cyclotomic sets", subfield_oracle},
      {"dual of a subfield product, negative example", subfield_dual_negative},
      {"weighted Reed-Muller CSS-T table", table_vii},
      {"J-affine CSS-T examples and table", jcsst},
      {"PIR tables", pir_tables},
      {"two-variable subfield PIR rate floor", te_pir},
      {"J-affine versus Reed-Muller retrieval", rm_comparison},
      {"property suites", properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria pass\n", criteria.size() - failed, criteria.size());
  return failed ? 1 : 0;
}
