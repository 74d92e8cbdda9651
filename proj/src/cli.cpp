#include <ostream>
#include <set>

#include "CLI11.hpp"
#include "evalcode/cli.hpp"
#include "evalcode/csst.hpp"
#include "evalcode/cyclotomic.hpp"
#include "evalcode/pir.hpp"
#include "evalcode/tables.hpp"
#include "json.hpp"

namespace evalcode {

namespace {

using nlohmann::json;

constexpr int kInputError = 3;

std::string join_exponents(const DefiningSet& d) {
  std::string s;
  for (const auto& e : d) s += (s.empty() ? "" : " ") + format_exponent(e);
  return s;
}

std::string field_name(std::uint64_t q) { return "GF(" + std::to_string(q) + ")"; }

DistanceResult distance_of(const DefiningSet& delta, std::uint64_t qprime, const LinearCode& code,
                           const SearchBudget& budget) {
  if (qprime == delta.family().field()->q()) return code_distance(delta, budget);
  // The subfield subcode sits inside the parent code.
  DistanceHints h;
  h.lower = equivalent_footprint_bound(delta);
  h.lower_source = "footprint of the parent code";
  return min_distance(code, budget, h);
}

std::string code_line(const LinearCode& c, const std::optional<DistanceResult>& d) {
  std::string s = "[" + std::to_string(c.length()) + "," + std::to_string(c.dimension());
  if (d) {
    s += ",d>=" + std::to_string(d->lower);
    if (d->exact) s += " (exact)";
    else if (d->upper > 0) s += " (<=" + std::to_string(d->upper) + ")";
  }
  return s + "]";
}

void print_code(std::ostream& out, const CodeSpec& spec, std::uint64_t qprime, const SearchBudget& budget) {
  LinearCode c = defined_code(spec.delta, qprime);
  std::optional<DistanceResult> d;
  if (c.dimension() > 0) d = distance_of(spec.delta, qprime, c, budget);
  out << "family: " << spec.family.describe() << "\n";
  out << "field: " << field_name(spec.family.field()->q()) << ", code over " << field_name(qprime) << "\n";
  out << "|Delta|: " << spec.delta.size() << "\n";
  out << "code: " << code_line(c, d) << "\n";
  if (d) {
    out << "distance lower: " << d->lower << " (" << d->lower_source << ")\n";
    if (d->upper > 0) out << "distance upper: " << d->upper << " (" << d->upper_source << ")\n";
    else out << "distance upper: none found\n";
  }
  out << "decreasing: " << (is_decreasing(spec.delta) ? "yes" : "no") << "\n";
  std::uint64_t p = spec.family.field()->p();
  out << "closed under x" << p << ": " << (is_closed(spec.delta, p) ? "yes" : "no") << "\n";
  if (qprime != p) out << "closed under x" << qprime << ": " << (is_closed(spec.delta, qprime) ? "yes" : "no") << "\n";
}

int cmd_build(const std::string& path, std::ostream& out) {
  CodeSpec spec = load_code_spec(path);
  print_code(out, spec, spec.qprime, SearchBudget::from_env());
  return 0;
}

int cmd_table(const std::string& kind, const std::string& format, bool check, std::ostream& out, std::ostream& err) {
  Table t = make_table(kind, SearchBudget::from_env());
  out << (format == "csv" ? to_csv(t) : to_markdown(t));
  if (!check) return 0;
  CheckReport rep = check_table(t);
  err << rep.diff;
  err << kind << ": " << rep.cells << " printed cells, " << rep.matched << " match, " << rep.literal << " literal, "
      << rep.misprints << " misprint, " << rep.gaps << " gap, " << rep.unresolved << " unresolved, " << rep.mismatched
      << " mismatch\n";
  return rep.exit_code();
}

void require_same_setting(const CodeSpec& a, const CodeSpec& b) {
  if (!(a.family == b.family)) throw std::invalid_argument("the two specs use different families");
  if (a.qprime != b.qprime) throw std::invalid_argument("the two specs use different subfields");
}

bool binary_affine(const CodeSpec& s) {
  if (s.family.field()->q() != 2) return false;
  for (std::size_t j = 0; j < s.family.m(); ++j)
    if (s.family.N(j) != 2 || s.family.in_J(j)) return false;
  return true;
}

int cmd_verify_csst(const std::string& p1, const std::string& p2, std::ostream& out) {
  CodeSpec s1 = load_code_spec(p1), s2 = load_code_spec(p2);
  require_same_setting(s1, s2);
  if (s1.qprime != 2) throw std::invalid_argument("CSS-T pairs need binary codes (subfield degree 1 over characteristic 2)");
  LinearCode c1 = defined_code(s1.delta, 2), c2 = defined_code(s2.delta, 2);
  CsstCertificate cert = is_csst_pair(c1, c2);
  json j;
  j["c2_in_c1"] = cert.c2_in_c1;
  j["c2_in_square_dual"] = cert.c2_in_square_dual;
  j["square_dim"] = cert.square_dim;
  j["square_dual_dim"] = cert.square_dual_dim;
  std::string route = "matrix check";
  std::optional<CssTParams> params;
  if (s1.generator == "wrm" && s2.generator == "rm" && binary_affine(s1)) {
    try {
      params = wrm_csst(s1.family.m(), s1.s, s1.weights, static_cast<std::size_t>(s2.s));
      route = params->route;
    } catch (const std::exception& e) {
      j["wrm_nesting"] = std::string("not applicable: ") + e.what();
    }
  }
  try {
    JCsstCheck jc = jaffine_csst(s1.delta, s2.delta);
    j["set_conditions"] = {{"held", jc.ok}, {"failure", jc.failure}};
    if (jc.ok && route == "matrix check") route = "J-affine set conditions";
  } catch (const std::exception& e) {
    j["set_conditions"] = {{"held", false}, {"failure", std::string("not applicable: ") + e.what()}};
  }
  bool ok = cert.holds();
  if (ok && !params) params = css_params(c1, c2, SearchBudget::from_env());
  j["route"] = ok ? route : "none";
  j["verified"] = ok;
  j["failure"] = cert.failure();
  if (ok) j["parameters"] = params->to_string();
  out << j.dump(2) << "\n";
  return ok ? 0 : 1;
}

int cmd_verify_transitive(const std::string& path, std::ostream& out) {
  CodeSpec s = load_code_spec(path);
  Transitivity t = transitivity_premises(s.delta, s.qprime);
  json j;
  j["transitivity"] = to_string(t);
  j["verified"] = t != Transitivity::Unverified;
  j["code"] = code_line(defined_code(s.delta, s.qprime), std::nullopt);
  out << j.dump(2) << "\n";
  return t != Transitivity::Unverified ? 0 : 1;
}

int cmd_schur(const std::string& p1, const std::string& p2, std::ostream& out) {
  CodeSpec s1 = load_code_spec(p1), s2 = load_code_spec(p2);
  require_same_setting(s1, s2);
  bool sub = s1.qprime != s1.family.field()->q();
  DefiningSet sum = sub ? schur_subfield(s1.delta, s2.delta, s1.qprime) : minkowski_schur(s1.delta, s2.delta);
  LinearCode from_set = defined_code(sum, s1.qprime);
  LinearCode direct = schur(defined_code(s1.delta, s1.qprime), defined_code(s2.delta, s2.qprime));
  out << "family: " << s1.family.describe() << "\n";
  out << "reduced Minkowski sum (" << sum.size() << "): " << join_exponents(sum) << "\n";
  out << "code of the sum: " << code_line(from_set, std::nullopt) << "\n";
  out << "Schur product of the codes: " << code_line(direct, std::nullopt) << "\n";
  out << "equal: " << (from_set == direct ? "yes" : "no") << "\n";
  return 0;
}

int cmd_subfield(const std::string& path, unsigned degree, std::ostream& out) {
  CodeSpec s = load_code_spec(path);
  std::uint64_t p = s.family.field()->p();
  unsigned r = s.family.field()->r();
  if (degree < 1 || r % degree != 0)
    throw std::invalid_argument("degree " + std::to_string(degree) + " does not divide r = " + std::to_string(r));
  std::uint64_t qprime = 1;
  for (unsigned i = 0; i < degree; ++i) qprime *= p;
  if (!is_closed(s.delta, qprime)) {
    DefiningSet cl = closure(s.delta, qprime);
    throw std::invalid_argument("Delta is not closed under x" + std::to_string(qprime) + "; its closure has " +
                                std::to_string(cl.size()) + " elements");
  }
  std::set<Exponent> reps;
  for (const auto& e : s.delta) reps.insert(orbit_of(s.family, qprime, e).rep);
  out << "orbits (" << reps.size() << "):";
  for (const auto& e : reps) out << " I" << format_exponent(e) << "[" << orbit_of(s.family, qprime, e).size() << "]";
  out << "\n";
  print_code(out, s, qprime, SearchBudget::from_env());
  auto dd = subfield_dual_distance(s.delta, qprime, SearchBudget::from_env());
  out << "dual distance: " << dd.lower;
  if (dd.exact) out << " (exact)";
  else if (dd.upper > 0) out << ".." << dd.upper;
  out << "\n";
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evaluation codes: Schur products, subfield subcodes, CSS-T pairs and PIR parameters"};
  app.require_subcommand(1);

  std::string spec1, spec2, kind, format = "markdown";
  bool check = false;
  unsigned degree = 1;

  auto* build = app.add_subcommand("build", "Summarize the code of a spec file");
  build->add_option("spec", spec1)->required();

  auto* table = app.add_subcommand("table", "Compute a parameter table and compare it with the printed one");
  table->add_option("kind", kind)->required()->check(CLI::IsMember(table_kinds()));
  table->add_option("--format", format)->check(CLI::IsMember({"csv", "markdown"}));
  table->add_flag("--check", check, "Exit nonzero and print a per-cell diff on differences");

  auto* verify = app.add_subcommand("verify", "Check a CSS-T pair or the transitivity of a code");
  verify->require_subcommand(1);
  auto* csst = verify->add_subcommand("csst", "C2 inside C1 and inside the dual of the square of C1");
  csst->add_option("c1", spec1)->required();
  csst->add_option("c2", spec2)->required();
  auto* trans = verify->add_subcommand("pir-transitive", "Transitivity of the code's automorphism group");
  trans->add_option("spec", spec1)->required();

  auto* schur_cmd = app.add_subcommand("schur", "Schur product through the Minkowski sum of defining sets");
  schur_cmd->add_option("c1", spec1)->required();
  schur_cmd->add_option("c2", spec2)->required();

  auto* sub = app.add_subcommand("subfield", "Subfield subcode over GF(p^s)");
  sub->add_option("spec", spec1)->required();
  sub->add_option("--degree", degree, "s")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*build) return cmd_build(spec1, out);
    if (*table) return cmd_table(kind, format, check, out, err);
    if (*csst) return cmd_verify_csst(spec1, spec2, out);
    if (*trans) return cmd_verify_transitive(spec1, out);
    if (*schur_cmd) return cmd_schur(spec1, spec2, out);
    if (*sub) return cmd_subfield(spec1, degree, out);
  } catch (const SpecError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return 0;
}

}  // namespace evalcode
