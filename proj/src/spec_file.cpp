#include <fstream>
#include <set>
#include <sstream>

#include "evalcode/cli.hpp"
#include "evalcode/cyclotomic.hpp"
#include "json.hpp"

namespace evalcode {

using nlohmann::json;

SpecError::SpecError(const std::string& source, std::size_t line, const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

namespace {

class Reader {
 public:
  Reader(const std::string& text, std::string source) : text_(text), source_(std::move(source)) {}

  // Line of the first occurrence of "key", or 1.
  std::size_t line_of(const std::string& key) const {
    auto pos = text_.find("\"" + key + "\"");
    if (pos == std::string::npos) return 1;
    return 1 + static_cast<std::size_t>(std::count(text_.begin(), text_.begin() + static_cast<std::ptrdiff_t>(pos), '\n'));
  }

  std::size_t line_at_byte(std::size_t byte) const {
    byte = std::min(byte, text_.size());
    return 1 + static_cast<std::size_t>(std::count(text_.begin(), text_.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
  }

  [[noreturn]] void fail(const std::string& key, const std::string& what) const {
    throw SpecError(source_, line_of(key), key + ": " + what);
  }

  void only(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) const {
    if (!obj.is_object()) fail(where, "expected an object");
    for (const auto& [k, v] : obj.items()) {
      bool ok = false;
      for (const char* a : allowed) ok = ok || k == a;
      if (!ok) fail(k, "unknown key in " + where);
    }
  }

  const json& need(const json& obj, const std::string& key, const std::string& where) const {
    if (!obj.contains(key)) fail(where, "missing \"" + key + "\"");
    return obj.at(key);
  }

  std::uint64_t uint(const json& v, const std::string& key) const {
    if (!v.is_number_unsigned()) fail(key, "expected a non-negative integer");
    return v.get<std::uint64_t>();
  }

  std::vector<std::uint64_t> uints(const json& v, const std::string& key) const {
    if (!v.is_array()) fail(key, "expected an array of non-negative integers");
    std::vector<std::uint64_t> out;
    for (const auto& x : v) out.push_back(uint(x, key));
    return out;
  }

  std::vector<Exponent> exponents(const json& v, const std::string& key, std::size_t m) const {
    if (!v.is_array()) fail(key, "expected a list of exponent vectors");
    std::vector<Exponent> out;
    for (const auto& e : v) {
      auto u = uints(e, key);
      if (u.size() != m) fail(key, "exponent vector of length " + std::to_string(u.size()) + ", expected m = " + std::to_string(m));
      out.emplace_back(u.begin(), u.end());
    }
    return out;
  }

 private:
  const std::string& text_;
  std::string source_;
};

std::vector<Exponent> filtered(const JAffineFamily& fam, auto keep) {
  std::vector<Exponent> out;
  for (std::size_t i = 0; i < fam.length(); ++i) {
    Exponent e = fam.unrank(i);
    if (keep(e)) out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

CodeSpec parse_code_spec(const std::string& text, const std::string& source) {
  Reader rd(text, source);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError(source, rd.line_at_byte(e.byte > 0 ? e.byte - 1 : 0), "malformed JSON");
  }
  rd.only(doc, "spec", {"ambient", "subfield_degree", "family", "delta"});

  const json& amb = rd.need(doc, "ambient", "spec");
  rd.only(amb, "ambient", {"p", "r"});
  std::uint64_t p = rd.uint(rd.need(amb, "p", "ambient"), "p");
  std::uint64_t r = rd.uint(rd.need(amb, "r", "ambient"), "r");
  if (!is_prime(p)) rd.fail("p", std::to_string(p) + " is not prime");
  if (r < 1) rd.fail("r", "must be at least 1");
  FieldPtr field;
  try {
    field = make_field(p, static_cast<unsigned>(r));
  } catch (const std::exception& e) {
    rd.fail("ambient", e.what());
  }

  std::uint64_t s = r;
  if (doc.contains("subfield_degree")) {
    s = rd.uint(doc.at("subfield_degree"), "subfield_degree");
    if (s < 1 || r % s != 0) rd.fail("subfield_degree", std::to_string(s) + " does not divide r = " + std::to_string(r));
  }
  std::uint64_t qprime = 1;
  for (std::uint64_t i = 0; i < s; ++i) qprime *= p;

  const json& fj = rd.need(doc, "family", "spec");
  rd.only(fj, "family", {"m", "N", "J"});
  std::uint64_t m = rd.uint(rd.need(fj, "m", "family"), "m");
  auto N = rd.uints(rd.need(fj, "N", "family"), "N");
  if (N.size() != m) rd.fail("N", "has " + std::to_string(N.size()) + " entries, expected m = " + std::to_string(m));
  std::vector<std::size_t> J;
  if (fj.contains("J"))
    for (auto j : rd.uints(fj.at("J"), "J")) {
      if (j < 1 || j > m) rd.fail("J", "index " + std::to_string(j) + " is outside 1..m");
      J.push_back(static_cast<std::size_t>(j - 1));
    }
  std::optional<JAffineFamily> fam;
  try {
    fam.emplace(field, N, J);
  } catch (const std::invalid_argument& e) {
    rd.fail("family", e.what());
  }

  CodeSpec spec{*fam, DefiningSet(*fam, {}), qprime, "list", 0, {}};
  const json& dj = rd.need(doc, "delta", "spec");
  try {
    if (dj.is_array()) {
      spec.delta = DefiningSet(*fam, rd.exponents(dj, "delta", m));
    } else {
      if (!dj.is_object() || !dj.contains("generator") || !dj.at("generator").is_string())
        rd.fail("delta", "expected a list of exponents or an object with a \"generator\"");
      spec.generator = dj.at("generator").get<std::string>();
      const auto& g = spec.generator;
      auto z = [&](std::size_t j) { return fam->z(j); };
      if (g == "rm" || g == "hyperbolic" || g == "hyperbolic_dual" || g == "consecutive") {
        rd.only(dj, "delta", {"generator", "s"});
        spec.s = rd.uint(rd.need(dj, "s", "delta"), "s");
      } else if (g == "wrm") {
        rd.only(dj, "delta", {"generator", "s", "weights"});
        spec.s = rd.uint(rd.need(dj, "s", "delta"), "s");
        spec.weights = rd.uints(rd.need(dj, "weights", "delta"), "weights");
        if (spec.weights.size() != m) rd.fail("weights", "need one weight per variable");
      } else if (g == "cosets") {
        rd.only(dj, "delta", {"generator", "members"});
      } else {
        rd.fail("generator", "unknown generator \"" + g + "\"");
      }
      if (g == "rm") {
        spec.delta = DefiningSet(*fam, filtered(*fam, [&](const Exponent& e) {
                                   std::uint64_t t = 0;
                                   for (auto a : e) t += a;
                                   return t <= spec.s;
                                 }));
      } else if (g == "wrm") {
        spec.delta = DefiningSet(*fam, filtered(*fam, [&](const Exponent& e) {
                                   std::uint64_t t = 0;
                                   for (std::size_t j = 0; j < m; ++j) t += spec.weights[j] * e[j];
                                   return t <= spec.s;
                                 }));
      } else if (g == "hyperbolic" || g == "hyperbolic_dual") {
        DefiningSet hyp(*fam, filtered(*fam, [&](const Exponent& e) {
                          std::uint64_t t = 1;
                          for (std::size_t j = 0; j < m; ++j) t *= z(j) - e[j];
                          return t >= spec.s;
                        }));
        spec.delta = g == "hyperbolic" ? hyp : delta_dual(hyp);
      } else if (g == "consecutive") {
        spec.delta = consecutive_union(*fam, qprime, static_cast<std::size_t>(spec.s));
      } else {
        spec.delta = union_of_orbits(*fam, qprime, rd.exponents(rd.need(dj, "members", "delta"), "members", m));
      }
    }
  } catch (const SpecError&) {
    throw;
  } catch (const std::exception& e) {
    rd.fail("delta", e.what());
  }
  if (qprime != field->q() && !is_closed(spec.delta, qprime))
    rd.fail("delta", "not closed under multiplication by " + std::to_string(qprime) +
                         ", so it does not define a subfield subcode");
  return spec;
}

CodeSpec load_code_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError(path, 0, "cannot read file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_code_spec(ss.str(), path);
}

}  // namespace evalcode
