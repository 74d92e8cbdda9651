#include "fixtures.hpp"

#include <map>
#include <stdexcept>

namespace evalcode::fixtures {

namespace {

const std::vector<std::string> kPirColumns{"C", "D", "D^perp", "C*D", "(C*D)^perp", "Privacy", "R_PIR"};

Fixture table_I() {
  Fixture f{"s", kPirColumns, {}, {}};
  auto row = [&](const char* s, const char* style, const char* d, const char* dp, const char* cd, const char* cdp,
                 const char* t, const char* rate) {
    f.rows.push_back({s, style, {"[49,3,42]_7", d, dp, cd, cdp, t, rate}});
  };
  row("3", "shaded", "[49,10,28]_7", "[49,39,5]_7", "[49,15,21]_7", "[49,34,6]_7", "4", "34/49");
  row("5", "bold", "[49,8,28]_7", "[49,41,5]_7", "[49,14,21]_7", "[49,35,6]_7", "4", "35/49");
  row("4", "shaded", "[49,15,21]_7", "[49,34,6]_7", "[49,21,14]_7", "[49,28,7]_7", "5", "28/49");
  row("6", "bold", "[49,10,21]_7", "[49,39,6]_7", "[49,18,14]_7", "[49,31,7]_7", "5", "31/49");
  row("5", "shaded", "[49,21,14]_7", "[49,28,7]_7", "[49,28,7]_7", "[49,21,14]_7", "6", "21/49");
  row("7", "bold", "[49,14,14]_7", "[49,35,7]_7", "[49,23,7]_7", "[49,26,12]_7", "6", "26/49");
  row("6", "shaded", "[49,28,7]_7", "[49,21,14]_7", "[49,34,6]_7", "[49,15,21]_7", "13", "15/49");
  row("14", "bold", "[49,25,7]_7", "[49,24,14]_7", "[49,32,6]_7", "[49,17,20]_7", "13", "17/49");
  row("7", "shaded", "[49,34,6]_7", "[49,15,21]_7", "[49,39,5]_7", "[49,10,28]_7", "20", "10/49");
  row("21", "bold", "[49,34,6]_7", "[49,15,21]_7", "[49,39,5]_7", "[49,10,28]_7", "20", "10/49");
  return f;
}

Fixture table_II() {
  Fixture f{"s", kPirColumns, {}, {}};
  auto row = [&](const char* s, const char* style, const char* d, const char* dp, const char* cd, const char* cdp,
                 const char* t, const char* rate) {
    f.rows.push_back({s, style, {"[343,4,294]_7", d, dp, cd, cdp, t, rate}});
  };
  row("2", "shaded", "[343,10,245]_7", "[343,333,4]_7", "[343,20]_7", "[343,323]_7", "3", "323/343");
  row("4", "bold", "[343,7,245]_7", "[343,336,4]_7", "[343,19]_7", "[343,324]_7", "3", "324/343");
  row("3", "shaded", "[343,20,196]_7", "[343,323,5]_7", "[343,35]_7", "[343,308]_7", "4", "308/343");
  row("5", "bold", "[343,13,21]_7", "[343,330,5]_7", "[343,29]_7", "[343,314]_7", "4", "314/343");
  row("4", "shaded", "[343,35,147]_7", "[343,308,6]_7", "[343,56]_7", "[343,287]_7", "5", "287/343");
  row("6", "bold", "[343,16,147]_7", "[343,327,6]_7", "[343,38]_7", "[343,305]_7", "5", "305/343");
  row("5", "shaded", "[343,56,98]_7", "[343,287,7]_7", "[343,84]_7", "[343,259]_7", "6", "259/343");
  row("7", "bold", "[343,25,98]_7", "[343,318,7]_7", "[343,53]_7", "[343,290]_7", "6", "290/343");
  row("6", "shaded", "[343,84,49]_7", "[343,259,14]_7", "[343,117]_7", "[343,226]_7", "13", "226/343");
  row("14", "bold", "[343,59,49]_7", "[343,284,14]_7", "[343,98]_7", "[343,245]_7", "13", "245/343");
  row("7", "shaded", "[343,117,42]_7", "[343,226,21]_7", "[343,153]_7", "[343,190]_7", "20", "190/343");
  row("21", "bold", "[343,95,42]_7", "[343,248,21]_7", "[343,144]_7", "[343,199]_7", "20", "199/343");
  row("8", "shaded", "[343,153,35]_7", "[343,190,28]_7", "[343,190]_7", "[343,153]_7", "27", "153/343");
  row("28", "bold", "[343,120,35]_7", "[343,223,28]_7", "[343,154]_7", "[343,169]_7", "27", "169/343");
  row("9", "shaded", "[343,190,28]_7", "[343,153,35]_7", "[343,226]_7", "[343,117]_7", "34", "117/343");
  row("35", "bold", "[343,144,28]_7", "[343,199,35]_7", "[343,201]_7", "[343,142]_7", "34", "142/343");
  row("10", "shaded", "[343,226,21]_7", "[343,117,42]_7", "[343,259]_7", "[343,84]_7", "41", "84/343");
  row("42", "bold", "[343,168,21]_7", "[343,175,42]_7", "[343,225]_7", "[343,118]_7", "41", "118/343");
  row("11", "shaded", "[343,259,14]_7", "[343,84,49]_7", "[343,287]_7", "[343,56]_7", "48", "56/343");
  row("49", "bold", "[343,192,14]_7", "[343,151,49]_7", "[343,244]_7", "[343,99]_7", "48", "99/343");
  row("12", "shaded", "[343,287,7]_7", "[343,56,98]_7", "[343,308]_7", "[343,35]_7", "97", "35/343");
  row("98", "bold", "[343,265,7]_7", "[343,78,98]_7", "[343,295]_7", "[343,48]_7", "97", "48/343");
  f.annotations.push_back({13, 3, "[343,174]_7", "343 - 169, matching the printed (C*D)^perp and rate"});
  f.annotations.push_back({3, 1, "[343,13,196]_7",
                           "footprint of (3,0,0) is 4*7*7 = 196, and 196 is also the footprint bound of the set"});
  return f;
}

Fixture table_cyclic48() {
  Fixture f{"s", kPirColumns, {}, {}};
  auto row = [&](const char* s, const char* style, const char* d, const char* dp, const char* cd, const char* cdp,
                 const char* t, const char* rate) {
    f.rows.push_back({s, style, {"[48,3]_7", d, dp, cd, cdp, t, rate}});
  };
  row("4", "shaded", "[48,5]_7", "[48,43,4]_7", "[48,10]_7", "[48,38]_7", "3", "38/48");
  row("", "bold", "[48,4]_7", "[48,44,4]_7", "[48,8]_7", "[48,40]_7", "3", "40/48");
  row("5", "shaded", "[48,8]_7", "[48,40,5]_7", "[48,14]_7", "[48,34]_7", "4", "34/48");
  row("", "bold", "[48,7]_7", "[48,41,5]_7", "[48,14]_7", "[48,34]_7", "4", "34/48");
  row("6", "shaded", "[48,10]_7", "[48,38,6]_7", "[48,18]_7", "[48,30]_7", "5", "30/48");
  row("", "bold", "[48,9]_7", "[48,39,6]_7", "[48,15]_7", "[48,33]_7", "5", "33/48");
  row("8", "shaded", "[48,16]_7", "[48,32,8]_7", "[48,25]_7", "[48,23]_7", "7", "23/48");
  row("", "bold", "[48,13]_7", "[48,35,8]_7", "[48,23]_7", "[48,25]_7", "7", "25/48");
  row("9", "shaded", "[48,18]_7", "[48,30,9]_7", "[48,27]_7", "[48,21]_7", "8", "21/48");
  row("", "bold", "[48,16]_7", "[48,32,9]_7", "[48,26]_7", "[48,22]_7", "8", "21/48");
  row("12", "shaded", "[48,21]_7", "[48,27,12]_7", "[48,29]_7", "[48,19]_7", "11", "19/48");
  row("", "bold", "[48,18]_7", "[48,30,12]_7", "[48,28]_7", "[48,19]_7", "11", "19/48");
  row("", "bold", "[48,20]_7", "[48,28,13]_7", "[48,29]_7", "[48,18]_7", "12", "18/48");
  row("14", "shaded", "[48,25]_7", "[48,23,14]_7", "[48,32]_7", "[48,16]_7", "13", "16/48");
  row("", "bold", "[48,22]_7", "[48,26,14]_7", "[48,31]_7", "[48,17]_7", "13", "17/48");
  row("", "bold", "[48,27]_7", "[48,21,19]_7", "[48,34]_7", "[48,14]_7", "18", "14/48");
  row("20", "shaded", "[48,32]_7", "[48,16,20]_7", "[48,38]_7", "[48,10]_7", "19", "10/48");
  row("", "bold", "[48,29]_7", "[48,19,20]_7", "[48,36]_7", "[48,12]_7", "19", "12/48");
  row("21", "shaded", "[48,34]_7", "[48,14,21]_7", "[48,39]_7", "[48,9]_7", "20", "9/48");
  row("", "bold", "[48,31]_7", "[48,17,21]_7", "[48,38]_7", "[48,10]_7", "20", "10/48");
  row("", "bold", "[48,33]_7", "[48,15,22]_7", "[48,40]_7", "[48,8]_7", "21", "8/48");
  row("24", "shaded", "[48,36]_7", "[48,12,24]_7", "[48,41]_7", "[48,7]_7", "23", "7/48");
  row("", "bold", "[48,35]_7", "[48,13,24]_7", "[48,42]_7", "[48,6]_7", "23", "6/48");
  row("", "bold", "[48,40]_7", "[48,8,33]_7", "[48,44]_7", "[48,4]_7", "32", "4/48");
  row("", "bold", "[48,42]_7", "[48,6,34]_7", "[48,45]_7", "[48,3]_7", "33", "3/48");
  row("35", "shaded", "[48,43]_7", "[48,5,35]_7", "[48,46]_7", "[48,2]_7", "34", "2/48");
  row("", "bold", "[48,43]_7", "[48,5,35]_7", "[48,46]_7", "[48,2]_7", "34", "2/48");
  f.annotations.push_back({9, 6, "22/48", "the row's own (C*D)^perp is [48,22], so the rate is 22/48"});
  f.annotations.push_back({11, 4, "[48,20]_7", "48 - dim(C*D) = 48 - 28"});
  f.annotations.push_back({11, 6, "20/48", "48 - dim(C*D) = 48 - 28"});
  f.annotations.push_back({12, 4, "[48,19]_7", "48 - dim(C*D) = 48 - 29"});
  f.annotations.push_back({12, 6, "19/48", "48 - dim(C*D) = 48 - 29"});
  return f;
}

Fixture table_IV() {
  Fixture f{"i", kPirColumns, {}, {}};
  auto row = [&](const char* i, const char* d, const char* dp, const char* cd, const char* cdp, const char* t,
                 const char* rate) { f.rows.push_back({i, "", {"[255,3,85]_2", d, dp, cd, cdp, t, rate}}); };
  row("1", "[255,9]_2", "[255,246,4]_2", "[255,27]_2", "[255,228]_2", "3", "228/255");
  row("2", "[255,17]_2", "[255,238,6]_2", "[255,51]_2", "[255,204]_2", "5", "204/255");
  row("3", "[255,25]_2", "[255,230,8]_2", "[255,75]_2", "[255,180]_2", "7", "180/255");
  row("4", "[255,33]_2", "[255,222,10]_2", "[255,99]_2", "[255,156]_2", "9", "156/255");
  row("6", "[255,49]_2", "[255,206,14]_2", "[255,123]_2", "[255,132]_2", "13", "132/255");
  row("7", "[255,57]_2", "[255,198,16]_2", "[255,147]_2", "[255,108]_2", "15", "108/255");
  row("8", "[255,65]_2", "[255,190,18]_2", "[255,171]_2", "[255,84]_2", "17", "84/255");
  row("9", "[255,69]_2", "[255,186,20]_2", "[255,183]_2", "[255,72]_2", "19", "72/255");
  return f;
}

Fixture table_berman49() {
  Fixture f{"row", {"C", "D", "D^perp", "C*D", "(C*D)^perp", "R_S", "Privacy", "R_PIR"}, {}, {}};
  f.rows.push_back({"1", "bold",
                    {"[49,1]_2", "[49,7,21]_2", "[49,42,4]_2", "[49,7]_2", "[49,42]_2", "1/49", "3", "42/49"}});
  f.rows.push_back({"2", "bold",
                    {"[49,1]_2", "[49,10,20]_2", "[49,39,4]_2", "[49,10]_2", "[49,39]_2", "1/49", "3", "39/49"}});
  f.rows.push_back({"Berman", "shaded",
                    {"[49,1]_2", "[49,13,16]_2", "[49,36,4]_2", "[49,13]_2", "[49,36]_2", "1/49", "3", "36/49"}});
  return f;
}

Fixture table_rm_comparison() {
  Fixture f{"r", {"C", "D", "D^perp", "(C*D)^perp", "R_PIR"}, {}, {}};
  f.rows.push_back({"7", "shaded", {"[256,1]", "[256,37]", "[256,219,8]", "[256,219]", "219/256"}});
  f.rows.push_back({"7", "bold", {"[256,1]", "[256,30]", "[256,228,8]", "[256,228]", "228/256"}});
  f.rows.push_back({"8", "shaded", {"[512,1]", "[512,46]", "[512,466,8]", "[512,466]", "466/512"}});
  f.rows.push_back({"8", "bold", {"[512,1]", "[512,34]", "[512,478,8]", "[512,478]", "478/512"}});
  const char* why = "|Delta_D| = 1 + 1 + 4 * 7 = 30, so D^perp has dimension 256 - 30";
  f.annotations.push_back({1, 2, "[256,226,8]", why});
  f.annotations.push_back({1, 3, "[256,226]", why});
  f.annotations.push_back({1, 4, "226/256", why});
  return f;
}

Fixture table_VII() {
  Fixture f{"(m,s,r)", {"C2", "C1", "C1^*2", "(C1^*2)^perp", "C2^perp", "CSS-T"}, {}, {}};
  f.rows.push_back({"(7,5,1)", "bold",
                    {"[128,8,64]", "[128,44,16]", "[128,117,4]", "[128,11,32]", "[128,120,4]", "[[128,36,4]]"}});
  f.rows.push_back({"(8,5,2)", "bold",
                    {"[256,37,64]", "[256,58,32]", "[256,198,8]", "[256,58]", "[256,219,8]", "[[256,21,8]]"}});
  f.rows.push_back({"(9,7,1)", "bold",
                    {"[512,10,128]", "[512,186]", "[512,494]", "[512,18]", "[512,502,4]", "[[512,176,4]]"}});
  f.rows.push_back({"(10,7,2)", "bold",
                    {"[1024,56,128]", "[1024,260]", "[1024,932]", "[1024,92]", "[1024,968,8]", "[[1024,204,8]]"}});
  const char* why =
      "the square is spanned by x1^a x^B with a <= 1, |B| <= 4 over six variables: 2 * (1+6+15+20+15) = 114";
  f.annotations.push_back({0, 2, "[128,114,4]", why});
  f.annotations.push_back({0, 3, "[128,14,32]", why});
  f.annotations.push_back({2, 0, "[512,10,256]", "RM(1,9) has minimum distance 2^8"});
  f.annotations.push_back({3, 0, "[1024,56,256]", "RM(2,10) has minimum distance 2^8"});
  return f;
}

Fixture table_jcsst() {
  Fixture f{"n", {"Delta2", "|Delta1|", "|Delta2|", "conditions", "matrix check", "d(C2^perp)", "CSS-T"}, {}, {}};
  for (auto [n, q] : std::vector<std::pair<const char*, const char*>>{{"128", "[[128,32,4]]"},
                                                                       {"192", "[[192,57,4]]"},
                                                                       {"256", "[[256,28,8]]"},
                                                                       {"448", "[[448,141,4]]"},
                                                                       {"512", "[[512,166,4]]"},
                                                                       {"576", "[[576,183,4]]"},
                                                                       {"1024", "[[1024,231,6]]"},
                                                                       {"1024", "[[1024,222,8]]"}})
    f.rows.push_back({n, "bold", {"", "", "", "", "", "", q}});
  f.annotations.push_back({3, 6, "[[448,144,4]]",
                           "the listed sets give |Delta1| = 22 * 7 = 154 and |Delta2| = 1 + 6 + 3 = 10"});
  f.annotations.push_back({5, 6, "[[576,185,4]]",
                           "the listed sets give |Delta1| = 22 * 9 = 198 and |Delta2| = 1 + 6 + 6 = 13"});
  return f;
}

}  // namespace

const Fixture& get(const std::string& kind) {
  static const std::map<std::string, Fixture> all{
      {"I", table_I()},          {"II", table_II()},           {"cyclic48", table_cyclic48()},
      {"IV", table_IV()},        {"berman49", table_berman49()}, {"rm_comparison", table_rm_comparison()},
      {"VII", table_VII()},      {"jcss-t", table_jcsst()}};
  auto it = all.find(kind);
  if (it == all.end()) throw std::invalid_argument("unknown table kind: " + kind);
  return it->second;
}

}  // namespace evalcode::fixtures
