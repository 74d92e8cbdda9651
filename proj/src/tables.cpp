#include "evalcode/tables.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "evalcode/cartesian.hpp"
#include "evalcode/csst.hpp"
#include "evalcode/cyclotomic.hpp"
#include "fixtures.hpp"

namespace evalcode {

CellValue CellValue::code(const LinearCode& c, const std::optional<DistanceResult>& d) {
  return code(c.length(), c.dimension(), d);
}

CellValue CellValue::code(std::size_t n, std::size_t k, const std::optional<DistanceResult>& d) {
  CellValue v;
  v.kind = Kind::Code;
  v.n = n;
  v.k = k;
  if (d && k > 0) {
    v.lower = d->lower;
    if (d->upper > 0) v.upper = d->upper;
  }
  return v;
}

CellValue CellValue::quantum(std::size_t n, std::size_t k, std::size_t d_lower, std::size_t d_upper) {
  CellValue v;
  v.kind = Kind::Quantum;
  v.n = n;
  v.k = k;
  v.lower = d_lower;
  if (d_upper > 0) v.upper = d_upper;
  return v;
}

CellValue CellValue::of_rate(Rate r) {
  CellValue v;
  v.kind = Kind::Rate;
  v.rate = r;
  return v;
}

CellValue CellValue::count(std::size_t lower, std::size_t upper) {
  CellValue v;
  v.kind = Kind::Count;
  v.lower = lower;
  v.upper = upper;
  return v;
}

CellValue CellValue::of_text(std::string t) {
  CellValue v;
  v.kind = Kind::Text;
  v.text = std::move(t);
  return v;
}

namespace {

std::string bounds(const std::optional<std::size_t>& lo, const std::optional<std::size_t>& hi, bool ge_style) {
  if (!lo) return "";
  if (hi && *hi == *lo) return std::to_string(*lo);
  if (ge_style || !hi) return ">=" + std::to_string(*lo);
  return std::to_string(*lo) + ".." + std::to_string(*hi);
}

}  // namespace

std::string CellValue::render(const std::string& suffix) const {
  switch (kind) {
    case Kind::Empty:
      return "";
    case Kind::Code: {
      std::string d = bounds(lower, upper, false);
      return "[" + std::to_string(n) + "," + std::to_string(k) + (d.empty() ? "" : "," + d) + "]" + suffix;
    }
    case Kind::Quantum:
      return "[[" + std::to_string(n) + "," + std::to_string(k) + "," + bounds(lower, upper, true) + "]]";
    case Kind::Rate:
      return rate.str();
    case Kind::Count:
      return bounds(lower, upper, false);
    case Kind::Text:
      return text;
  }
  return "";
}

std::string to_string(CellStatus s) {
  switch (s) {
    case CellStatus::Unprinted:
      return "unprinted";
    case CellStatus::Match:
      return "match";
    case CellStatus::Literal:
      return "literal";
    case CellStatus::Misprint:
      return "misprint";
    case CellStatus::Gap:
      return "gap";
    case CellStatus::Unresolved:
      return "unresolved";
    case CellStatus::Mismatch:
      break;
  }
  return "mismatch";
}

namespace {

// Printed distance d against certified bounds.
CellStatus compare_distance(const CellValue& v, std::size_t d, bool lower_bound_only) {
  if (!v.lower) return CellStatus::Unresolved;
  std::size_t lo = *v.lower;
  bool below_upper = !v.upper || d <= *v.upper;
  if (lower_bound_only) {
    if (lo == d && below_upper) return CellStatus::Match;
    if (lo < d && below_upper) return CellStatus::Gap;
    return CellStatus::Mismatch;
  }
  if (v.upper && lo == d && *v.upper == d) return CellStatus::Match;
  if (lo <= d && below_upper) return CellStatus::Unresolved;
  return CellStatus::Mismatch;
}

}  // namespace

CellStatus compare_cell(const CellValue& v, const std::string& printed, bool lower_bound_only) {
  if (printed.empty()) return CellStatus::Unprinted;
  static const std::regex quantum(R"(^\[\[(\d+),(\d+),(>=)?(\d+)\]\]$)");
  static const std::regex code(R"(^\[(\d+),(\d+)(?:,(\d+))?\](?:_\d+)?$)");
  static const std::regex rate(R"(^(\d+)/(\d+)$)");
  static const std::regex integer(R"(^\d+$)");
  std::smatch m;
  auto num = [&](int i) { return static_cast<std::size_t>(std::stoull(m[i].str())); };
  if (std::regex_match(printed, m, quantum)) {
    if (v.kind != CellValue::Kind::Quantum || v.n != num(1) || v.k != num(2)) return CellStatus::Mismatch;
    return compare_distance(v, num(4), lower_bound_only || m[3].matched);
  }
  if (std::regex_match(printed, m, code)) {
    if (v.kind != CellValue::Kind::Code || v.n != num(1) || v.k != num(2)) return CellStatus::Mismatch;
    if (!m[3].matched) return CellStatus::Match;
    return compare_distance(v, num(3), lower_bound_only);
  }
  if (std::regex_match(printed, m, rate)) {
    if (v.kind != CellValue::Kind::Rate) return CellStatus::Mismatch;
    return v.rate.num == num(1) && v.rate.den == num(2) ? CellStatus::Match : CellStatus::Mismatch;
  }
  if (std::regex_match(printed, m, integer) && v.kind == CellValue::Kind::Count) {
    std::size_t p = num(0);
    if (v.lower && v.upper && *v.lower == p && *v.upper == p) return CellStatus::Match;
    if (v.lower && *v.lower <= p && (!v.upper || p <= *v.upper)) return CellStatus::Unresolved;
    return CellStatus::Mismatch;
  }
  return v.render() == printed ? CellStatus::Match : CellStatus::Mismatch;
}

namespace {

using Cells = std::vector<CellValue>;

struct Computed {
  std::string label;
  Cells cells;
  std::string note;
  bool literal = false;
};

CellValue privacy_of(const DistanceResult& d) {
  std::size_t lo = d.lower > 0 ? d.lower - 1 : 0;
  std::size_t hi = d.upper > 0 ? d.upper - 1 : lo;
  return CellValue::count(lo, std::max(lo, hi));
}

// Distance of a subfield code, bounded below by the footprint of its parent.
DistanceResult subfield_distance(const DefiningSet& delta, const LinearCode& code, const SearchBudget& budget) {
  DistanceHints hints;
  if (!delta.empty()) {
    hints.lower = equivalent_footprint_bound(delta);
    hints.lower_source = "footprint of the parent code";
  }
  return min_distance(code, budget, hints);
}

std::string transitivity_note(const PirScheme& s) { return "transitivity: " + to_string(s.transitivity); }

// Tables I and II: C = RM_7(1,m); D = RM_7(s,m) (shaded) or the dual of
// Hyp_7(s,m) (bold).
Computed affine_pir_row(std::size_t m, const std::string& style, std::uint64_t s, bool product_distances,
                        const SearchBudget& budget) {
  DefiningSet dc = delta_rm(7, m, 1);
  DefiningSet dd = style == "shaded" ? delta_rm(7, m, s) : delta_hyperbolic_dual(7, m, s);
  PirScheme sch = scheme_from_sets(dc, dd, 7, budget);
  DefiningSet prod = minkowski_schur(dc, dd);
  std::size_t n = sch.n;
  Cells c;
  c.push_back(CellValue::code(sch.storage, code_distance(dc, budget)));
  c.push_back(CellValue::code(sch.retrieval, code_distance(dd, budget)));
  c.push_back(CellValue::code(n, n - sch.retrieval.dimension(), sch.dual_retrieval));
  std::optional<DistanceResult> pd, pdd;
  if (product_distances && evaluate(prod) == sch.product) {
    pd = code_distance(prod, budget);
    pdd = dual_code_distance(prod, 7, budget);
  }
  c.push_back(CellValue::code(sch.product, pd));
  c.push_back(CellValue::code(n, n - sch.product.dimension(), pdd));
  c.push_back(privacy_of(sch.dual_retrieval));
  c.push_back(CellValue::of_rate(sch.rate));
  return {std::to_string(s), c, transitivity_note(sch)};
}

std::vector<Computed> table_affine(std::size_t m, const SearchBudget& budget) {
  const auto& fx = fixtures::get(m == 2 ? "I" : "II");
  std::vector<Computed> out;
  for (const auto& r : fx.rows)
    out.push_back(affine_pir_row(m, r.style, std::stoull(r.label), m == 2, budget));
  return out;
}

// Word of weight d in Hyp_7(s,2) vanishing at the origin, shortened there.
Word shortened_hyperbolic_witness(const JAffineFamily& fam, const DefiningSet& hyp) {
  Word w = footprint_witness(hyp).word;
  auto pts = point_set(fam);
  std::map<std::vector<Elem>, std::size_t> where;
  for (std::size_t i = 0; i < pts.size(); ++i) where[pts[i]] = i;
  std::size_t z = 0;
  while (z < w.size() && w[z] != 0) ++z;
  if (z == w.size()) return {};
  // Translations x -> x + P_z preserve the code.
  const auto& f = *fam.field();
  Word out;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<Elem> p = pts[i];
    for (std::size_t j = 0; j < p.size(); ++j) p[j] = f.add(p[j], pts[z][j]);
    out.push_back(w[where.at(p)]);
  }
  return out;
}

std::vector<std::vector<std::uint64_t>> cyclic48_retrieval_reps() {
  std::vector<std::uint64_t> base{25, 32, 33, 34, 40, 5, 18, 12, 19, 26, 41, 11};
  std::vector<std::uint64_t> tail{24, 25, 32, 33, 34, 40, 5, 18, 12, 19, 26, 41, 11, 4, 27, 6, 17, 10, 13, 20, 0, 3, 1, 16};
  auto first = [](const std::vector<std::uint64_t>& v, std::size_t k) {
    return std::vector<std::uint64_t>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k));
  };
  return {{24, 25, 32},     {25, 32, 33, 34}, {24, 25, 32, 33, 34, 40}, {24, 25, 32, 33, 34, 40, 5, 18},
          first(base, 9),   first(base, 10),  first(base, 11),          first(base, 12),
          first(tail, 15),  first(tail, 16),  first(tail, 17),          first(tail, 18),
          first(tail, 19),  first(tail, 22),  first(tail, 23),          first(tail, 24)};
}

std::vector<Computed> table_cyclic48(const SearchBudget& budget) {
  const auto& fx = fixtures::get("cyclic48");
  std::vector<Computed> out;
  // Shaded rows: RM_7(1,2) and the dual of Hyp_7(s,2), punctured at the origin.
  JAffineFamily plane = affine_space(7, 2);
  LinearCode c_shaded = puncture(evaluate(delta_rm(7, 2, 1)), {0});
  // Bold rows: subfield subcodes over GF(7) on the 48th roots of unity.
  JAffineFamily cyc(make_field(7, 2), {49}, {0});
  DefiningSet dc = union_of_orbits(cyc, 7, {{24}, {25}});
  SearchBudget wide = budget;
  wide.w_max = std::max(wide.w_max, 7u);
  auto reps = cyclic48_retrieval_reps();
  std::size_t bold = 0;
  for (const auto& r : fx.rows) {
    Cells c;
    std::size_t n = 48;
    if (r.style == "shaded") {
      std::uint64_t s = std::stoull(r.label);
      DefiningSet dd = delta_hyperbolic_dual(7, 2, s);
      LinearCode d = puncture(evaluate(dd), {0});
      LinearCode p = schur(c_shaded, d);
      DistanceHints h;
      h.lower = dual_distance_bound(dd);
      h.lower_source = "distance of the unshortened code";
      Word w = shortened_hyperbolic_witness(plane, delta_dual(dd));
      if (!w.empty()) h.witnesses.push_back(w);
      DistanceResult dist = min_distance(dual(d), budget, h);
      c = {CellValue::code(c_shaded),
           CellValue::code(d),
           CellValue::code(n, n - d.dimension(), dist),
           CellValue::code(p),
           CellValue::code(n, n - p.dimension()),
           privacy_of(dist),
           CellValue::of_rate({n - p.dimension(), n})};
      out.push_back({r.label, c, "transitivity: unverified (punctured)"});
      continue;
    }
    std::vector<Exponent> members;
    for (auto a : reps.at(bold++)) members.push_back({a});
    DefiningSet dd = union_of_orbits(cyc, 7, members);
    PirScheme sch = scheme_from_sets(dc, dd, 7, wide);
    c = {CellValue::code(sch.storage),
         CellValue::code(sch.retrieval),
         CellValue::code(n, n - sch.retrieval.dimension(), sch.dual_retrieval),
         CellValue::code(sch.product),
         CellValue::code(n, n - sch.product.dimension()),
         privacy_of(sch.dual_retrieval),
         CellValue::of_rate(sch.rate)};
    out.push_back({r.label, c, transitivity_note(sch)});
  }
  return out;
}

std::vector<Computed> table_IV(const SearchBudget& budget) {
  std::vector<Computed> out;
  for (const auto& r : fixtures::get("IV").rows) {
    auto ov = one_var_scheme(256, 2, 85, OneVarVariant::Multiples, std::stoull(r.label), budget);
    const PirScheme& s = ov.scheme;
    std::size_t n = s.n;
    Cells c{CellValue::code(s.storage, subfield_distance(ov.delta_c, s.storage, budget)),
            CellValue::code(s.retrieval),
            CellValue::code(n, n - s.retrieval.dimension(), s.dual_retrieval),
            CellValue::code(s.product),
            CellValue::code(n, n - s.product.dimension()),
            privacy_of(s.dual_retrieval),
            CellValue::of_rate(s.rate)};
    out.push_back({r.label, c, transitivity_note(s)});
  }
  return out;
}

std::vector<Computed> table_berman49(const SearchBudget& budget) {
  JAffineFamily fam(make_field(2, 3), {8, 8}, {0, 1});
  DefiningSet dc(fam, {{0, 0}});
  std::vector<std::vector<Exponent>> sets{{{0, 0}, {1, 0}, {2, 0}, {0, 1}, {0, 2}, {4, 0}, {0, 4}},
                                          {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {0, 2}, {4, 0}, {0, 4}, {1, 1}, {2, 2}, {4, 4}}};
  std::vector<Computed> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    DefiningSet dd(fam, sets[i]);
    if (!is_closed(dd, 2)) throw std::logic_error("retrieval set is not closed under doubling");
    PirScheme s = scheme_from_sets(dc, dd, 2, budget);
    std::size_t n = s.n;
    Cells c{CellValue::code(s.storage),
            CellValue::code(s.retrieval, subfield_distance(dd, s.retrieval, budget)),
            CellValue::code(n, n - s.retrieval.dimension(), s.dual_retrieval),
            CellValue::code(s.product),
            CellValue::code(n, n - s.product.dimension()),
            CellValue::of_rate(s.storage_rate),
            privacy_of(s.dual_retrieval),
            CellValue::of_rate(s.rate)};
    out.push_back({std::to_string(i + 1), c, transitivity_note(s)});
  }
  // The Berman-code row is data, not a construction.
  const auto& lit = fixtures::get("berman49").rows.back();
  Computed row{lit.label, {}, "printed parameters of the Berman-code scheme", true};
  for (const auto& s : lit.cells) row.cells.push_back(CellValue::of_text(s));
  out.push_back(row);
  return out;
}

std::vector<Computed> table_rm_comparison(const SearchBudget& budget) {
  std::vector<Computed> out;
  for (unsigned r : {7u, 8u}) {
    for (bool rm : {true, false}) {
      PirScheme s = [&] {
        if (rm) return scheme_from_sets(delta_rm(2, r + 1, 0), delta_rm(2, r + 1, 2), 2, budget);
        JAffineFamily fam(make_field(2, r), {std::uint64_t{1} << r, 2}, {});
        DefiningSet dc(fam, {{0, 0}});
        DefiningSet dd = union_of_orbits(fam, 2, {{0, 0}, {0, 1}, {1, 1}, {1, 0}, {3, 0}, {5, 0}});
        return scheme_from_sets(dc, dd, 2, budget);
      }();
      std::size_t n = s.n;
      Cells c{CellValue::code(s.storage), CellValue::code(s.retrieval),
              CellValue::code(n, n - s.retrieval.dimension(), s.dual_retrieval),
              CellValue::code(n, n - s.product.dimension()), CellValue::of_rate(s.rate)};
      out.push_back({std::to_string(r), c, transitivity_note(s)});
    }
  }
  return out;
}

std::vector<Computed> table_VII(const SearchBudget& budget) {
  std::vector<Computed> out;
  for (auto [m, s, r] : std::vector<std::tuple<std::size_t, std::uint64_t, std::size_t>>{
           {7, 5, 1}, {8, 5, 2}, {9, 7, 1}, {10, 7, 2}}) {
    std::vector<std::uint64_t> w(m, 2);
    w[0] = 1;
    DefiningSet d1 = delta_wrm(2, m, s, w), d2 = delta_rm(2, m, r);
    LinearCode c1 = evaluate(d1), c2 = evaluate(d2);
    LinearCode sq = schur_square(c1);
    DefiningSet sqset = minkowski_schur(d1, d1);
    std::optional<DistanceResult> sqd, sqdd;
    if (evaluate(sqset) == sq) {
      sqd = code_distance(sqset, budget);
      sqdd = dual_code_distance(sqset, 2, budget);
    } else {
      sqd = min_distance(sq, budget);
      sqdd = min_distance(dual(sq), budget);
    }
    std::size_t n = c1.length();
    CssTParams p = wrm_csst(m, s, w, r);
    Cells c{CellValue::code(c2, code_distance(d2, budget)),
            CellValue::code(c1, code_distance(d1, budget)),
            CellValue::code(sq, sqd),
            CellValue::code(n, n - sq.dimension(), sqdd),
            CellValue::code(n, n - c2.dimension(), dual_code_distance(d2, 2, budget)),
            CellValue::quantum(p.n, p.k, p.d_lower, p.d_upper)};
    out.push_back({"(" + std::to_string(m) + "," + std::to_string(s) + "," + std::to_string(r) + ")", c,
                   "route: " + p.route});
  }
  return out;
}

struct JRow {
  std::uint64_t q;
  std::vector<std::uint64_t> N;
  std::vector<std::size_t> J;
  std::vector<std::uint64_t> first;  // one-variable part of Delta1
  std::vector<Exponent> reps;        // orbits forming Delta2
  std::string note;
};

std::vector<JRow> jcsst_rows() {
  std::vector<std::uint64_t> s22{0, 1, 2, 4, 8, 16, 32, 3, 6, 12, 24, 48, 33, 5, 10, 20, 40, 17, 34, 9, 18, 36};
  std::vector<std::uint64_t> s29{0,  1,  2,  4,  8,  16, 32, 64, 3,  6,  12, 24, 48, 96, 65,
                                 5,  10, 20, 40, 80, 33, 66, 9,  18, 36, 72, 17, 34, 68};
  std::vector<std::uint64_t> s130{
      0,   1,   2,   4,   8,   16,  32,  64,  128, 256, 3,   6,   12,  24,  48,  96,  192, 384, 257, 5,   10,  20,
      40,  80,  160, 320, 129, 258, 7,   14,  28,  56,  112, 224, 448, 385, 259, 9,   18,  36,  72,  144, 288, 65,
      130, 260, 11,  22,  44,  88,  176, 352, 193, 386, 261, 13,  26,  52,  104, 208, 416, 321, 131, 262, 17,  34,
      68,  136, 272, 33,  66,  132, 264, 19,  38,  76,  152, 304, 97,  194, 388, 265, 21,  42,  84,  168, 336, 161,
      322, 133, 266, 25,  50,  100, 200, 400, 289, 67,  134, 268, 35,  70,  140, 280, 49,  98,  196, 392, 273, 37,
      74,  148, 296, 81,  162, 324, 137, 274, 41,  82,  164, 328, 145, 290, 69,  138, 276, 73,  146, 292};
  return {
      {16, {16, 4, 2}, {}, {0, 1, 2, 4, 8}, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, ""},
      {64, {64, 4}, {1}, s22, {{0, 0}, {1, 0}, {0, 1}}, ""},
      {128, {128, 2}, {}, s29, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {3, 0}, {5, 0}},
       "the printed list repeats I(0,1); I(1,0) is used in its place"},
      {64, {64, 8}, {1}, s22, {{0, 0}, {1, 0}, {0, 1}}, ""},
      {64, {64, 2, 2, 2}, {}, s22, {{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}, ""},
      {64, {64, 10}, {1}, s22, {{0, 0}, {1, 0}, {0, 1}}, ""},
      {512, {512, 2}, {}, s130, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {3, 0}}, ""},
      {512, {512, 2}, {}, s130, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {3, 0}, {5, 0}}, ""},
  };
}

std::string orbit_list(const std::vector<Exponent>& reps) {
  std::string s;
  for (const auto& e : reps) s += (s.empty() ? "" : " u ") + std::string("I") + format_exponent(e);
  return s;
}

std::vector<Computed> table_jcsst(const SearchBudget& budget) {
  std::vector<Computed> out;
  for (const auto& jr : jcsst_rows()) {
    JAffineFamily fam(make_field_of_order(jr.q), jr.N, jr.J);
    std::vector<Exponent> big;
    for (std::size_t i = 0; i < fam.length(); ++i) {
      Exponent e = fam.unrank(i);
      if (std::find(jr.first.begin(), jr.first.end(), e[0]) != jr.first.end()) big.push_back(std::move(e));
    }
    DefiningSet d1(fam, std::move(big));
    DefiningSet d2 = union_of_orbits(fam, 2, jr.reps);
    if (!is_closed(d1, 2)) throw std::logic_error("Delta1 is not closed under doubling");
    JCsstCheck check = jaffine_csst(d1, d2);
    LinearCode c1 = subfield_code(d1, 2), c2 = subfield_code(d2, 2);
    CsstCertificate cert = is_csst_pair(c1, c2);
    DistanceResult dist = subfield_dual_distance(d2, 2, budget);
    // d >= min(d(C1), d(C2^perp)); a witness in C2^perp outside C1^perp caps it.
    std::size_t lower = std::min<std::size_t>(dist.lower, equivalent_footprint_bound(d1));
    std::size_t upper = 0;
    if (dist.upper > 0 && !dist.witness.empty() && !dual(c1).contains_word(dist.witness)) upper = dist.upper;
    std::size_t n = fam.length();
    std::size_t k = c1.dimension() >= c2.dimension() ? c1.dimension() - c2.dimension() : 0;
    Cells c{CellValue::of_text(orbit_list(jr.reps)),
            CellValue::count(d1.size(), d1.size()),
            CellValue::count(d2.size(), d2.size()),
            CellValue::of_text(check.ok ? "hold" : check.failure),
            CellValue::of_text(cert.holds() ? "holds" : cert.failure()),
            CellValue::code(n, n - c2.dimension(), dist),
            CellValue::quantum(n, k, lower, upper)};
    out.push_back({std::to_string(n), c, jr.note});
  }
  return out;
}

}  // namespace

const std::vector<std::string>& table_kinds() {
  static const std::vector<std::string> kinds{"I", "II", "cyclic48", "IV", "berman49", "rm_comparison", "VII",
                                              "jcss-t"};
  return kinds;
}

Table make_table(const std::string& kind, const SearchBudget& budget) {
  const auto& fx = fixtures::get(kind);
  std::vector<Computed> rows;
  if (kind == "I") rows = table_affine(2, budget);
  else if (kind == "II") rows = table_affine(3, budget);
  else if (kind == "cyclic48") rows = table_cyclic48(budget);
  else if (kind == "IV") rows = table_IV(budget);
  else if (kind == "berman49") rows = table_berman49(budget);
  else if (kind == "rm_comparison") rows = table_rm_comparison(budget);
  else if (kind == "VII") rows = table_VII(budget);
  else rows = table_jcsst(budget);

  Table t;
  t.kind = kind;
  t.suffix = kind == "I" || kind == "II" || kind == "cyclic48" ? "_7" : kind == "IV" || kind == "berman49" ? "_2" : "";
  t.label_column = fx.label_column;
  t.columns = fx.columns;
  if (rows.size() != fx.rows.size()) throw std::logic_error("row count differs from the fixture for " + kind);
  bool lower_only = kind == "jcss-t";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& pr = fx.rows[i];
    TableRow row{pr.label, pr.style, {}, rows[i].note};
    for (std::size_t j = 0; j < t.columns.size(); ++j) {
      TableCell cell;
      cell.value = rows[i].cells.at(j);
      cell.printed = pr.cells.at(j);
      if (rows[i].literal) {
        cell.status = CellStatus::Literal;
      } else {
        cell.status = compare_cell(cell.value, cell.printed, lower_only);
      }
      for (const auto& a : fx.annotations)
        if (a.row == i && a.column == j) {
          cell.corrected = a.corrected;
          cell.note = a.note;
          if ((cell.status == CellStatus::Mismatch || cell.status == CellStatus::Unresolved) &&
              compare_cell(cell.value, a.corrected, lower_only) == CellStatus::Match)
            cell.status = CellStatus::Misprint;
        }
      row.cells.push_back(std::move(cell));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

std::string row_check(const TableRow& r, const Table& t) {
  std::vector<std::string> bad;
  bool misprint = false, gap = false, literal = false;
  for (std::size_t j = 0; j < r.cells.size(); ++j) {
    switch (r.cells[j].status) {
      case CellStatus::Mismatch:
      case CellStatus::Unresolved:
        bad.push_back(t.columns[j]);
        break;
      case CellStatus::Misprint:
        misprint = true;
        break;
      case CellStatus::Gap:
        gap = true;
        break;
      case CellStatus::Literal:
        literal = true;
        break;
      default:
        break;
    }
  }
  if (!bad.empty()) {
    std::string s = "mismatch:";
    for (const auto& b : bad) s += " " + b;
    return s;
  }
  if (misprint) return "misprint";
  if (gap) return "gap";
  return literal ? "literal" : "match";
}

std::vector<std::string> header(const Table& t) {
  std::vector<std::string> h{t.label_column, "style"};
  h.insert(h.end(), t.columns.begin(), t.columns.end());
  h.push_back("check");
  h.push_back("note");
  return h;
}

std::vector<std::string> fields(const TableRow& r, const Table& t) {
  std::vector<std::string> f{r.label, r.style};
  for (const auto& c : r.cells) f.push_back(c.value.render(t.suffix));
  f.push_back(row_check(r, t));
  f.push_back(r.note);
  return f;
}

}  // namespace

std::string to_csv(const Table& t) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& f) {
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << csv_field(f[i]);
    os << "\r\n";
  };
  line(header(t));
  for (const auto& r : t.rows) line(fields(r, t));
  return os.str();
}

std::string to_markdown(const Table& t) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& f) {
    os << "|";
    for (const auto& s : f) {
      std::string e;
      for (char ch : s) e += ch == '|' ? std::string("\\|") : std::string(1, ch);
      os << " " << e << " |";
    }
    os << "\n";
  };
  auto h = header(t);
  line(h);
  os << "|";
  for (std::size_t i = 0; i < h.size(); ++i) os << "---|";
  os << "\n";
  for (const auto& r : t.rows) line(fields(r, t));
  return os.str();
}

int CheckReport::exit_code() const {
  if (mismatched > 0 || unresolved > 0) return 1;
  if (misprints > 0 || gaps > 0) return 2;
  return 0;
}

CheckReport check_table(const Table& t) {
  CheckReport rep;
  std::ostringstream diff;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& r = t.rows[i];
    for (std::size_t j = 0; j < r.cells.size(); ++j) {
      const auto& c = r.cells[j];
      if (c.status == CellStatus::Unprinted) continue;
      ++rep.cells;
      switch (c.status) {
        case CellStatus::Match:
          ++rep.matched;
          continue;
        case CellStatus::Literal:
          ++rep.literal;
          continue;
        case CellStatus::Misprint:
          ++rep.misprints;
          break;
        case CellStatus::Gap:
          ++rep.gaps;
          break;
        case CellStatus::Unresolved:
          ++rep.unresolved;
          break;
        default:
          ++rep.mismatched;
          break;
      }
      diff << t.kind << " row " << i + 1 << " (" << t.label_column << "=" << r.label
           << (r.style.empty() ? "" : ", " + r.style) << ") " << t.columns[j] << ": printed " << c.printed
           << ", computed " << c.value.render(t.suffix) << " [" << to_string(c.status) << "]";
      if (!c.corrected.empty()) diff << " expected " << c.corrected << " (" << c.note << ")";
      diff << "\n";
    }
  }
  rep.diff = diff.str();
  return rep;
}

}  // namespace evalcode
