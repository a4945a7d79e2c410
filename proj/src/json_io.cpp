#include "ck/json_io.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ck/error.hpp"

namespace ck {

namespace {

[[noreturn]] void bad(const std::string& msg) { fail("ParseError", msg); }

const Json& need(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where + " must be an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where + " misses \"" + key + "\"");
  return *it;
}

long as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where + " must be an integer");
  return j.get<long>();
}

int as_sign(const Json& j, const std::string& where) {
  long s = as_int(j, where);
  if (s != 1 && s != -1) bad(where + " must be +1 or -1");
  return static_cast<int>(s);
}

std::string as_str(const Json& j, const std::string& where) {
  if (!j.is_string()) bad(where + " must be a string");
  return j.get<std::string>();
}

const Json& as_array(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where + " must be an array");
  return j;
}

const Json& as_object(const Json& j, const std::string& where) {
  if (!j.is_object()) bad(where + " must be an object");
  return j;
}

// "format" may be absent; any value other than 1 is rejected
void check_format(const Json& j, const std::string& where) {
  as_object(j, where);
  auto it = j.find("format");
  if (it != j.end() && !(it->is_number_integer() && it->get<long>() == 1))
    bad(where + " has an unsupported format version");
}

std::string idx(const std::string& where, size_t i) {
  return where + "[" + std::to_string(i) + "]";
}

Scalar scalar_from_json(const Field& f, const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Scalar::from_int(f, j.get<long>());
  if (j.is_string()) {
    try {
      return Scalar::parse(f, j.get<std::string>());
    } catch (const CkError& e) {
      bad(where + ": " + e.what());
    }
  }
  bad(where + " must be an integer or a scalar string");
}

Json vec_to_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(s.str());
  return a;
}

Vec vec_from_json(const Field& f, const Json& j, const std::string& where) {
  as_array(j, where);
  Vec v;
  v.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i)
    v.push_back(scalar_from_json(f, j[i], idx(where, i)));
  return v;
}

Vec vec_sized_from_json(const Field& f, const Json& j, int len,
                        const std::string& where) {
  Vec v = vec_from_json(f, j, where);
  if (static_cast<int>(v.size()) != len)
    bad(where + " must have length " + std::to_string(len));
  return v;
}

Json mat_to_json(const Mat& m) {
  Json a = Json::array();
  for (const auto& row : m) a.push_back(vec_to_json(row));
  return a;
}

// any rectangular matrix; dimension fit is the axiom checker's concern
Mat mat_from_json(const Field& f, const Json& j, const std::string& where) {
  as_array(j, where);
  Mat m;
  m.reserve(j.size());
  for (size_t r = 0; r < j.size(); ++r) {
    m.push_back(vec_from_json(f, j[r], idx(where, r)));
    if (m.back().size() != m.front().size())
      bad(where + " rows have unequal length");
  }
  return m;
}

std::pair<int, int> split_pair_key(const std::string& key, const std::string& where) {
  auto comma = key.find(',');
  size_t used = 0;
  try {
    if (comma == std::string::npos) throw std::invalid_argument("no comma");
    int x = std::stoi(key.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument("junk");
    std::string rest = key.substr(comma + 1);
    int y = std::stoi(rest, &used);
    if (used != rest.size() || rest.empty()) throw std::invalid_argument("junk");
    return {x, y};
  } catch (const std::exception&) {
    bad(where + " key \"" + key + "\" is not of the form \"x,y\"");
  }
}

int single_key(const std::string& key, const std::string& where) {
  size_t used = 0;
  try {
    int x = std::stoi(key, &used);
    if (used != key.size() || key.empty()) throw std::invalid_argument("junk");
    return x;
  } catch (const std::exception&) {
    bad(where + " key \"" + key + "\" is not an index");
  }
}

Json group_core(const FiniteGroup& g) {
  Json j = Json::object();
  j["order"] = g.order();
  j["table"] = g.table();
  Json names = Json::array();
  for (int a = 0; a < g.order(); ++a) names.push_back(g.name(a));
  j["names"] = names;
  return j;
}

FiniteGroup group_core_from(const Json& j, const std::string& where) {
  as_object(j, where);
  long order = as_int(need(j, "order", where), where + ".order");
  const Json& tj = as_array(need(j, "table", where), where + ".table");
  if (static_cast<long>(tj.size()) != order)
    bad(where + ".order disagrees with the table");
  std::vector<std::vector<int>> table;
  table.reserve(tj.size());
  for (size_t r = 0; r < tj.size(); ++r) {
    const Json& rj = as_array(tj[r], idx(where + ".table", r));
    std::vector<int> row;
    row.reserve(rj.size());
    for (size_t c = 0; c < rj.size(); ++c)
      row.push_back(static_cast<int>(as_int(rj[c], idx(idx(where + ".table", r), c))));
    table.push_back(std::move(row));
  }
  std::vector<std::string> names;
  if (auto it = j.find("names"); it != j.end()) {
    const Json& nj = as_array(*it, where + ".names");
    names.reserve(nj.size());
    for (size_t i = 0; i < nj.size(); ++i)
      names.push_back(as_str(nj[i], idx(where + ".names", i)));
  }
  FiniteGroup g;
  try {
    g = FiniteGroup::from_table(std::move(table), std::move(names));
  } catch (const CkError& e) {
    bad(where + ": " + e.what());
  }
  // parsed groups feed index arithmetic everywhere, so reject non-groups here
  auto axioms = g.check();
  if (!axioms.empty()) bad(where + ": not a group: " + axioms.front());
  return g;
}

Json xmod_core(const CrossedModule& cm) {
  Json j = Json::object();
  j["E"] = group_core(cm.E);
  j["H"] = group_core(cm.H);
  j["chi"] = cm.chi;
  j["action"] = cm.action;
  return j;
}

CrossedModule xmod_core_from(const Json& j, const std::string& where) {
  CrossedModule cm;
  cm.E = group_core_from(need(j, "E", where), where + ".E");
  cm.H = group_core_from(need(j, "H", where), where + ".H");
  const int ne = cm.E.order(), nh = cm.H.order();
  const Json& cj = as_array(need(j, "chi", where), where + ".chi");
  if (static_cast<int>(cj.size()) != ne) bad(where + ".chi must have length |E|");
  for (size_t e = 0; e < cj.size(); ++e) {
    long v = as_int(cj[e], idx(where + ".chi", e));
    if (v < 0 || v >= nh) bad(idx(where + ".chi", e) + " is not an H index");
    cm.chi.push_back(static_cast<int>(v));
  }
  const Json& aj = as_array(need(j, "action", where), where + ".action");
  if (static_cast<int>(aj.size()) != nh) bad(where + ".action must have |H| rows");
  for (size_t x = 0; x < aj.size(); ++x) {
    const Json& rj = as_array(aj[x], idx(where + ".action", x));
    if (static_cast<int>(rj.size()) != ne)
      bad(idx(where + ".action", x) + " must have length |E|");
    std::vector<int> row;
    for (size_t e = 0; e < rj.size(); ++e) {
      long v = as_int(rj[e], idx(idx(where + ".action", x), e));
      if (v < 0 || v >= ne) bad(idx(idx(where + ".action", x), e) + " is not an E index");
      row.push_back(static_cast<int>(v));
    }
    cm.action.push_back(std::move(row));
  }
  return cm;
}

Json diagram_core(const HeegaardDiagram& d) {
  Json j = Json::object();
  j["genus"] = d.genus;
  j["components"] = d.components;
  Json uppers = Json::array();
  for (const auto& u : d.uppers) {
    Json uj = Json::object();
    uj["id"] = u.id;
    uj["cminus"] = u.cminus;
    uj["cplus"] = u.cplus;
    Json pts = Json::array();
    for (const auto& p : u.points) {
      Json pj = Json::object();
      pj["id"] = p.id;
      pj["lower"] = p.lower;
      pj["sign"] = p.sign;
      pts.push_back(std::move(pj));
    }
    uj["points"] = std::move(pts);
    uppers.push_back(std::move(uj));
  }
  j["uppers"] = std::move(uppers);
  Json lowers = Json::array();
  for (const auto& l : d.lowers) {
    Json lj = Json::object();
    lj["id"] = l.id;
    lj["base_component"] = l.base_component;
    lj["points"] = l.points;
    lowers.push_back(std::move(lj));
  }
  j["lowers"] = std::move(lowers);
  Json tauts = Json::array();
  for (const auto& t : d.tauts) {
    Json tj = Json::object();
    tj["region"] = t.region;
    tj["base_component"] = t.base_component;
    Json factors = Json::array();
    for (const auto& fct : t.factors) {
      Json fj = Json::object();
      fj["r"] = word_to_json(fct.r);
      fj["lower"] = fct.lower;
      fj["eps"] = fct.eps;
      factors.push_back(std::move(fj));
    }
    tj["factors"] = std::move(factors);
    tauts.push_back(std::move(tj));
  }
  j["tauts"] = std::move(tauts);
  return j;
}

HeegaardDiagram diagram_core_from(const Json& j, const std::string& where) {
  HeegaardDiagram d;
  d.genus = static_cast<int>(as_int(need(j, "genus", where), where + ".genus"));
  const Json& comps = as_array(need(j, "components", where), where + ".components");
  for (size_t i = 0; i < comps.size(); ++i)
    d.components.push_back(as_str(comps[i], idx(where + ".components", i)));
  const Json& uppers = as_array(need(j, "uppers", where), where + ".uppers");
  for (size_t i = 0; i < uppers.size(); ++i) {
    const std::string uw = idx(where + ".uppers", i);
    const Json& uj = as_object(uppers[i], uw);
    UpperCircle u;
    u.id = as_str(need(uj, "id", uw), uw + ".id");
    u.cminus = as_str(need(uj, "cminus", uw), uw + ".cminus");
    u.cplus = as_str(need(uj, "cplus", uw), uw + ".cplus");
    const Json& pts = as_array(need(uj, "points", uw), uw + ".points");
    for (size_t k = 0; k < pts.size(); ++k) {
      const std::string pw = idx(uw + ".points", k);
      const Json& pj = as_object(pts[k], pw);
      UpperPoint p;
      p.id = static_cast<int>(as_int(need(pj, "id", pw), pw + ".id"));
      p.lower = as_str(need(pj, "lower", pw), pw + ".lower");
      p.sign = as_sign(need(pj, "sign", pw), pw + ".sign");
      u.points.push_back(std::move(p));
    }
    d.uppers.push_back(std::move(u));
  }
  const Json& lowers = as_array(need(j, "lowers", where), where + ".lowers");
  for (size_t i = 0; i < lowers.size(); ++i) {
    const std::string lw = idx(where + ".lowers", i);
    const Json& lj = as_object(lowers[i], lw);
    LowerCircle l;
    l.id = as_str(need(lj, "id", lw), lw + ".id");
    l.base_component = as_str(need(lj, "base_component", lw), lw + ".base_component");
    const Json& pts = as_array(need(lj, "points", lw), lw + ".points");
    for (size_t k = 0; k < pts.size(); ++k)
      l.points.push_back(static_cast<int>(as_int(pts[k], idx(lw + ".points", k))));
    d.lowers.push_back(std::move(l));
  }
  const Json& tauts = as_array(need(j, "tauts", where), where + ".tauts");
  for (size_t i = 0; i < tauts.size(); ++i) {
    const std::string tw = idx(where + ".tauts", i);
    const Json& tj = as_object(tauts[i], tw);
    TautIdentity t;
    t.region = as_str(need(tj, "region", tw), tw + ".region");
    t.base_component = as_str(need(tj, "base_component", tw), tw + ".base_component");
    const Json& factors = as_array(need(tj, "factors", tw), tw + ".factors");
    for (size_t k = 0; k < factors.size(); ++k) {
      const std::string fw = idx(tw + ".factors", k);
      const Json& fj = as_object(factors[k], fw);
      TautFactor fct;
      fct.r = word_from_json(need(fj, "r", fw));
      fct.lower = as_str(need(fj, "lower", fw), fw + ".lower");
      fct.eps = as_sign(need(fj, "eps", fw), fw + ".eps");
      t.factors.push_back(std::move(fct));
    }
    d.tauts.push_back(std::move(t));
  }
  return d;
}

Json labeling_core(const ChiLabeling& lab) {
  Json j = Json::object();
  j["alpha"] = Json::object();
  for (const auto& [u, x] : lab.alpha) j["alpha"][u] = x;
  j["beta"] = Json::object();
  for (const auto& [l, e] : lab.beta) j["beta"][l] = e;
  return j;
}

ChiLabeling labeling_core_from(const Json& j, const std::string& where) {
  ChiLabeling lab;
  const Json& aj = as_object(need(j, "alpha", where), where + ".alpha");
  for (auto it = aj.begin(); it != aj.end(); ++it)
    lab.alpha[it.key()] =
        static_cast<int>(as_int(it.value(), where + ".alpha." + it.key()));
  const Json& bj = as_object(need(j, "beta", where), where + ".beta");
  for (auto it = bj.begin(); it != bj.end(); ++it)
    lab.beta[it.key()] =
        static_cast<int>(as_int(it.value(), where + ".beta." + it.key()));
  return lab;
}

std::string pair_key(int x, int y) {
  return std::to_string(x) + "," + std::to_string(y);
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    bad(e.what());
  }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json field_to_json(const Field& f) {
  if (f.is_rationals()) return Json("Q");
  Json j = Json::object();
  j["Fp"] = f.characteristic();
  return j;
}

Field field_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "Q") return Field::rationals();
    bad("field must be \"Q\" or {\"Fp\": p}");
  }
  if (j.is_object() && j.size() == 1 && j.contains("Fp")) {
    long p = as_int(j["Fp"], "field.Fp");
    if (p < 2) bad("field.Fp must be a prime");
    try {
      return Field::prime(static_cast<unsigned long>(p));
    } catch (const CkError& e) {
      bad(std::string("field: ") + e.what());
    }
  }
  bad("field must be \"Q\" or {\"Fp\": p}");
}

Json group_to_json(const FiniteGroup& g) {
  Json j = group_core(g);
  j["format"] = 1;
  return j;
}

FiniteGroup group_from_json(const Json& j) {
  check_format(j, "group");
  return group_core_from(j, "group");
}

Json xmod_to_json(const CrossedModule& cm) {
  Json j = xmod_core(cm);
  j["format"] = 1;
  return j;
}

CrossedModule xmod_from_json(const Json& j) {
  check_format(j, "crossed module");
  return xmod_core_from(j, "crossed module");
}

Json diagram_to_json(const HeegaardDiagram& d) {
  Json j = diagram_core(d);
  j["format"] = 1;
  return j;
}

HeegaardDiagram diagram_from_json(const Json& j) {
  check_format(j, "diagram");
  return diagram_core_from(j, "diagram");
}

Json labeling_to_json(const ChiLabeling& lab) {
  Json j = labeling_core(lab);
  j["format"] = 1;
  return j;
}

ChiLabeling labeling_from_json(const Json& j) {
  check_format(j, "labeling");
  return labeling_core_from(j, "labeling");
}

Json hopf_to_json(const HopfChiCoalgebra& A) {
  Json j = Json::object();
  j["format"] = 1;
  j["field"] = field_to_json(A.field);
  j["xmod"] = xmod_core(A.cm);
  Json comps = Json::array();
  for (size_t x = 0; x < A.comps.size(); ++x) {
    const GradedComponent& c = A.comps[x];
    Json cj = Json::object();
    cj["grading"] = x;
    cj["dim"] = c.dim;
    Json mu = Json::array();
    for (const auto& row : c.mu) {
      Json rj = Json::array();
      for (const auto& v : row) rj.push_back(vec_to_json(v));
      mu.push_back(std::move(rj));
    }
    cj["mu"] = std::move(mu);
    cj["unit"] = vec_to_json(c.unit);
    comps.push_back(std::move(cj));
  }
  j["components"] = std::move(comps);
  Json cop = Json::object();
  for (size_t x = 0; x < A.coproduct.size(); ++x)
    for (size_t y = 0; y < A.coproduct[x].size(); ++y)
      cop[pair_key(static_cast<int>(x), static_cast<int>(y))] =
          mat_to_json(A.coproduct[x][y]);
  j["coproduct"] = std::move(cop);
  j["counit"] = vec_to_json(A.counit);
  Json ant = Json::object();
  for (size_t x = 0; x < A.antipode.size(); ++x)
    ant[std::to_string(x)] = mat_to_json(A.antipode[x]);
  j["antipode"] = std::move(ant);
  Json act = Json::object();
  for (size_t x = 0; x < A.action.size(); ++x)
    for (size_t e = 0; e < A.action[x].size(); ++e)
      act[pair_key(static_cast<int>(x), static_cast<int>(e))] =
          mat_to_json(A.action[x][e]);
  j["action"] = std::move(act);
  return j;
}

HopfChiCoalgebra hopf_from_json(const Json& j) {
  check_format(j, "hopf");
  HopfChiCoalgebra A;
  A.field = field_from_json(need(j, "field", "hopf"));
  A.cm = xmod_core_from(need(j, "xmod", "hopf"), "hopf.xmod");
  const Field& f = A.field;
  const int nh = A.cm.H.order();
  const int ne = A.cm.E.order();
  A.comps.assign(static_cast<size_t>(nh), GradedComponent{});
  std::vector<bool> seen(static_cast<size_t>(nh), false);
  const Json& comps = as_array(need(j, "components", "hopf"), "hopf.components");
  for (size_t i = 0; i < comps.size(); ++i) {
    const std::string cw = idx("hopf.components", i);
    const Json& cj = as_object(comps[i], cw);
    long g = as_int(need(cj, "grading", cw), cw + ".grading");
    if (g < 0 || g >= nh) bad(cw + ".grading is not an H index");
    if (seen[static_cast<size_t>(g)]) bad(cw + " repeats grading " + std::to_string(g));
    seen[static_cast<size_t>(g)] = true;
    GradedComponent& c = A.comps[static_cast<size_t>(g)];
    long dim = as_int(need(cj, "dim", cw), cw + ".dim");
    if (dim < 0) bad(cw + ".dim must be nonnegative");
    c.dim = static_cast<int>(dim);
    const Json& mu = as_array(need(cj, "mu", cw), cw + ".mu");
    if (static_cast<long>(mu.size()) != dim) bad(cw + ".mu must have dim rows");
    for (size_t a = 0; a < mu.size(); ++a) {
      const Json& rj = as_array(mu[a], idx(cw + ".mu", a));
      if (static_cast<long>(rj.size()) != dim)
        bad(idx(cw + ".mu", a) + " must have dim entries");
      std::vector<Vec> row;
      for (size_t b = 0; b < rj.size(); ++b)
        row.push_back(vec_sized_from_json(f, rj[b], c.dim,
                                          idx(idx(cw + ".mu", a), b)));
      c.mu.push_back(std::move(row));
    }
    c.unit = vec_sized_from_json(f, need(cj, "unit", cw), c.dim, cw + ".unit");
  }
  A.coproduct.assign(static_cast<size_t>(nh),
                     std::vector<Mat>(static_cast<size_t>(nh)));
  const Json& cop = as_object(need(j, "coproduct", "hopf"), "hopf.coproduct");
  for (auto it = cop.begin(); it != cop.end(); ++it) {
    auto [x, y] = split_pair_key(it.key(), "hopf.coproduct");
    if (x < 0 || x >= nh || y < 0 || y >= nh)
      bad("hopf.coproduct key \"" + it.key() + "\" is out of range");
    A.coproduct[static_cast<size_t>(x)][static_cast<size_t>(y)] =
        mat_from_json(f, it.value(), "hopf.coproduct[" + it.key() + "]");
  }
  A.counit = vec_from_json(f, need(j, "counit", "hopf"), "hopf.counit");
  A.antipode.assign(static_cast<size_t>(nh), Mat{});
  const Json& ant = as_object(need(j, "antipode", "hopf"), "hopf.antipode");
  for (auto it = ant.begin(); it != ant.end(); ++it) {
    int x = single_key(it.key(), "hopf.antipode");
    if (x < 0 || x >= nh) bad("hopf.antipode key \"" + it.key() + "\" is out of range");
    A.antipode[static_cast<size_t>(x)] =
        mat_from_json(f, it.value(), "hopf.antipode[" + it.key() + "]");
  }
  A.action.assign(static_cast<size_t>(nh),
                  std::vector<Mat>(static_cast<size_t>(ne)));
  const Json& act = as_object(need(j, "action", "hopf"), "hopf.action");
  for (auto it = act.begin(); it != act.end(); ++it) {
    auto [x, e] = split_pair_key(it.key(), "hopf.action");
    if (x < 0 || x >= nh || e < 0 || e >= ne)
      bad("hopf.action key \"" + it.key() + "\" is out of range");
    A.action[static_cast<size_t>(x)][static_cast<size_t>(e)] =
        mat_from_json(f, it.value(), "hopf.action[" + it.key() + "]");
  }
  return A;
}

Json word_to_json(const Word& w) {
  Json a = Json::array();
  for (const auto& letter : w) a.push_back(Json::array({letter.upper, letter.sign}));
  return a;
}

Word word_from_json(const Json& j) {
  as_array(j, "word");
  Word w;
  for (size_t i = 0; i < j.size(); ++i) {
    const Json& lj = as_array(j[i], idx("word", i));
    if (lj.size() != 2) bad(idx("word", i) + " must be [upper, sign]");
    Letter letter;
    letter.upper = as_str(lj[0], idx("word", i) + ".upper");
    letter.sign = as_sign(lj[1], idx("word", i) + ".sign");
    w.push_back(std::move(letter));
  }
  return w;
}

Json move_to_json(const MoveDescriptor& mv) {
  Json j = Json::object();
  j["move"] = move_name(mv);
  std::visit(
      [&j](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, MvRename>) {
          j["what"] = m.what;
          j["from"] = m.from;
          j["to"] = m.to;
        } else if constexpr (std::is_same_v<T, MvRenamePoint>) {
          j["from"] = m.from;
          j["to"] = m.to;
        } else if constexpr (std::is_same_v<T, MvRotateUpper>) {
          j["upper"] = m.upper;
          j["steps"] = m.steps;
        } else if constexpr (std::is_same_v<T, MvRotateTaut>) {
          j["region"] = m.region;
          j["steps"] = m.steps;
        } else if constexpr (std::is_same_v<T, MvRebaseTaut>) {
          j["region"] = m.region;
          j["new_base"] = m.new_base;
          j["w"] = word_to_json(m.w);
        } else if constexpr (std::is_same_v<T, MvBasepoint>) {
          j["lower"] = m.lower;
          j["steps"] = m.steps;
        } else if constexpr (std::is_same_v<T, MvReverseUpper>) {
          j["upper"] = m.upper;
        } else if constexpr (std::is_same_v<T, MvReverseLower>) {
          j["lower"] = m.lower;
        } else if constexpr (std::is_same_v<T, MvTwoPoint>) {
          j["upper"] = m.upper;
          j["lower"] = m.lower;
          j["pos_l"] = m.pos_l;
          j["pos_u"] = m.pos_u;
          j["first_sign"] = m.first_sign;
          j["id_first"] = m.id_first;
          j["id_second"] = m.id_second;
        } else if constexpr (std::is_same_v<T, MvStabilize>) {
          j["region"] = m.region;
          j["insert_pos"] = m.insert_pos;
          j["r"] = word_to_json(m.r);
          j["e"] = m.e;
          j["new_upper"] = m.new_upper;
          j["new_lower"] = m.new_lower;
          j["new_point"] = m.new_point;
        } else if constexpr (std::is_same_v<T, MvDestabilize>) {
          j["upper"] = m.upper;
          j["lower"] = m.lower;
        } else if constexpr (std::is_same_v<T, MvSlideUpper>) {
          j["u1"] = m.u1;
          j["u2"] = m.u2;
          j["band_pos"] = m.band_pos;
          j["new_points"] = m.new_points;
        } else if constexpr (std::is_same_v<T, MvSlideLower>) {
          j["l1"] = m.l1;
          j["l2"] = m.l2;
          j["new_points"] = m.new_points;
        } else if constexpr (std::is_same_v<T, MvTrivialUpper>) {
          j["host"] = m.host;
          j["host_is_cminus"] = m.host_is_cminus;
          j["x"] = m.x;
          j["new_upper"] = m.new_upper;
          j["new_component"] = m.new_component;
        } else if constexpr (std::is_same_v<T, MvRemoveTrivialUpper>) {
          j["upper"] = m.upper;
        } else if constexpr (std::is_same_v<T, MvTrivialLower>) {
          j["host_region"] = m.host_region;
          j["insert_pos"] = m.insert_pos;
          j["r"] = word_to_json(m.r);
          j["eps"] = m.eps;
          j["new_lower"] = m.new_lower;
          j["new_region"] = m.new_region;
        } else {
          static_assert(std::is_same_v<T, MvRemoveTrivialLower>);
          j["lower"] = m.lower;
        }
      },
      mv);
  return j;
}

MoveDescriptor move_from_json(const Json& j) {
  as_object(j, "move");
  const std::string kind = as_str(need(j, "move", "move"), "move.move");
  const std::string w = "move " + kind;
  auto str = [&](const char* key) { return as_str(need(j, key, w), w + "." + key); };
  auto num = [&](const char* key) {
    return static_cast<int>(as_int(need(j, key, w), w + "." + key));
  };
  auto sign = [&](const char* key) { return as_sign(need(j, key, w), w + "." + key); };
  auto word = [&](const char* key) { return word_from_json(need(j, key, w)); };
  auto points = [&](const char* key) {
    const Json& pj = as_array(need(j, key, w), w + "." + key);
    std::vector<PointId> out;
    for (size_t i = 0; i < pj.size(); ++i)
      out.push_back(static_cast<int>(as_int(pj[i], idx(w + "." + key, i))));
    return out;
  };
  if (kind == "rename") return MvRename{str("what"), str("from"), str("to")};
  if (kind == "rename_point") return MvRenamePoint{num("from"), num("to")};
  if (kind == "rotate_upper") return MvRotateUpper{str("upper"), num("steps")};
  if (kind == "rotate_taut") return MvRotateTaut{str("region"), num("steps")};
  if (kind == "rebase_taut") return MvRebaseTaut{str("region"), str("new_base"), word("w")};
  if (kind == "basepoint") return MvBasepoint{str("lower"), num("steps")};
  if (kind == "reverse_upper") return MvReverseUpper{str("upper")};
  if (kind == "reverse_lower") return MvReverseLower{str("lower")};
  if (kind == "two_point")
    return MvTwoPoint{str("upper"), str("lower"),    num("pos_l"),
                      num("pos_u"), sign("first_sign"), num("id_first"),
                      num("id_second")};
  if (kind == "stabilize")
    return MvStabilize{str("region"),    num("insert_pos"), word("r"),
                       num("e"),         str("new_upper"),  str("new_lower"),
                       num("new_point")};
  if (kind == "destabilize") return MvDestabilize{str("upper"), str("lower")};
  if (kind == "slide_upper")
    return MvSlideUpper{str("u1"), str("u2"), num("band_pos"), points("new_points")};
  if (kind == "slide_lower")
    return MvSlideLower{str("l1"), str("l2"), points("new_points")};
  if (kind == "trivial_upper") {
    const Json& flag = need(j, "host_is_cminus", w);
    if (!flag.is_boolean()) bad(w + ".host_is_cminus must be a boolean");
    return MvTrivialUpper{str("host"), flag.get<bool>(), num("x"), str("new_upper"),
                          str("new_component")};
  }
  if (kind == "remove_trivial_upper") return MvRemoveTrivialUpper{str("upper")};
  if (kind == "trivial_lower")
    return MvTrivialLower{str("host_region"), num("insert_pos"), word("r"),
                          sign("eps"),        str("new_lower"),  str("new_region")};
  if (kind == "remove_trivial_lower") return MvRemoveTrivialLower{str("lower")};
  bad("unknown move kind \"" + kind + "\"");
}

Json moves_to_json(const std::vector<MoveDescriptor>& script) {
  Json j = Json::object();
  j["format"] = 1;
  Json list = Json::array();
  for (const auto& mv : script) list.push_back(move_to_json(mv));
  j["moves"] = std::move(list);
  return j;
}

std::vector<MoveDescriptor> moves_from_json(const Json& j) {
  const Json* list = &j;
  if (j.is_object()) {
    check_format(j, "move script");
    list = &need(j, "moves", "move script");
  }
  as_array(*list, "move script");
  std::vector<MoveDescriptor> out;
  for (const auto& mj : *list) out.push_back(move_from_json(mj));
  return out;
}

}  // namespace ck
