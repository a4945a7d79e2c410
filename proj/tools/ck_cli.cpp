#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ck/diagram.hpp"
#include "ck/error.hpp"
#include "ck/hopfxc.hpp"
#include "ck/invariant.hpp"
#include "ck/json_io.hpp"
#include "ck/labeling.hpp"
#include "ck/moves.hpp"
#include "ck/scalar.hpp"
#include "ck/xmod.hpp"

namespace {

using namespace ck;

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("ParseError", "cannot read " + path);
  ss << in.rdbuf();
  return ss.str();
}

Json load_json(const std::string& path) { return parse_json(read_input(path)); }

// inline JSON when the argument looks like an object, file path otherwise
Json load_json_or_inline(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return parse_json(arg);
  return load_json(arg);
}

void emit(const Json& j) { std::cout << dump_json(j); }

Json strip_format(Json j) {
  j.erase("format");
  return j;
}

int report(const std::string& what, const std::vector<std::string>& violations) {
  Json j = Json::object();
  j["format"] = 1;
  j["checked"] = what;
  j["ok"] = violations.empty();
  j["violations"] = violations;
  emit(j);
  return violations.empty() ? 0 : 1;
}

// display names are free; the algebraic content must agree
bool same_xmod(const CrossedModule& a, const CrossedModule& b) {
  return a.E.table() == b.E.table() && a.H.table() == b.H.table() &&
         a.chi == b.chi && a.action == b.action;
}

int parse_int(const std::string& s) {
  size_t used = 0;
  try {
    int v = std::stoi(s, &used);
    if (used != s.size() || s.empty()) throw std::invalid_argument("junk");
    return v;
  } catch (const std::exception&) {
    fail("ParseError", "\"" + s + "\" is not an integer");
  }
}

FiniteGroup group_by_name(const std::string& name) {
  try {
    if (name == "trivial" || name == "z1") return FiniteGroup::trivial();
    if (name == "q8") return FiniteGroup::quaternion8();
    if (name.size() >= 2) {
      int n = parse_int(name.substr(1));
      switch (name[0]) {
        case 'z': return FiniteGroup::cyclic(n);
        case 's': return FiniteGroup::symmetric(n);
        case 'a': return FiniteGroup::alternating(n);
        case 'd': return FiniteGroup::dihedral(n);
        default: break;
      }
    }
  } catch (const CkError& e) {
    fail("ParseError", "group \"" + name + "\": " + e.what());
  }
  fail("ParseError",
       "unknown group \"" + name + "\" (expected zN, sN, aN, dN, q8 or trivial)");
}

Field field_by_name(const std::string& name) {
  if (name == "Q") return Field::rationals();
  try {
    return Field::prime(static_cast<unsigned long>(parse_int(name)));
  } catch (const CkError& e) {
    fail("ParseError", "field \"" + name + "\": " + e.what());
  }
}

ChiLabeling zero_labeling(const HeegaardDiagram& d) {
  ChiLabeling lab;
  for (const auto& u : d.uppers) lab.alpha[u.id] = 0;
  for (const auto& l : d.lowers) lab.beta[l.id] = 0;
  return lab;
}

long normalization_exponent(const HeegaardDiagram& d) {
  return static_cast<long>(d.genus) - static_cast<long>(d.uppers.size()) -
         static_cast<long>(d.lowers.size());
}

int run_validate(const std::string& file, const std::string& xmod_file,
                 const std::string& lab_arg) {
  HeegaardDiagram d = diagram_from_json(load_json(file));
  std::vector<std::string> violations = validate(d);
  const bool diagram_ok = violations.empty();
  if (!xmod_file.empty()) {
    CrossedModule cm = xmod_from_json(load_json(xmod_file));
    auto xrep = check_crossed_module(cm);
    for (const auto& r : xrep) violations.push_back("crossed module: " + r);
    if (!lab_arg.empty() && diagram_ok && xrep.empty()) {
      ChiLabeling lab = labeling_from_json(load_json_or_inline(lab_arg));
      for (const auto& r : check_labeling(d, cm, lab))
        violations.push_back("labeling: " + r);
    }
  } else if (!lab_arg.empty()) {
    fail("ParseError", "--labeling requires --xmod");
  }
  return report("diagram", violations);
}

int run_check_xmod(const std::string& file) {
  CrossedModule cm = xmod_from_json(load_json(file));
  return report("crossed_module", check_crossed_module(cm));
}

int run_check_hopf(const std::string& file) {
  HopfChiCoalgebra A = hopf_from_json(load_json(file));
  return report("hopf", check_axioms(A));
}

int run_integrals(const std::string& file) {
  HopfChiCoalgebra A = hopf_from_json(load_json(file));
  Integrals I = compute_integrals(A);
  Json out = Json::object();
  out["format"] = 1;
  out["field"] = field_to_json(A.field);
  Json lambda_cap = Json::array();
  for (const auto& s : I.Lambda) lambda_cap.push_back(s.str());
  out["Lambda"] = std::move(lambda_cap);
  Json lam = Json::object();
  for (size_t x = 0; x < I.lambda.size(); ++x) {
    Json row = Json::array();
    for (const auto& s : I.lambda[x]) row.push_back(s.str());
    lam[std::to_string(x)] = std::move(row);
  }
  out["lambda"] = std::move(lam);
  emit(out);
  return 0;
}

int run_labelings(const std::string& dia_file, const std::string& xmod_file,
                  bool orbits) {
  HeegaardDiagram d = diagram_from_json(load_json(dia_file));
  CrossedModule cm = xmod_from_json(load_json(xmod_file));
  std::vector<ChiLabeling> labs = enumerate_labelings(d, cm);
  Json out = Json::object();
  out["format"] = 1;
  out["count"] = labs.size();
  if (orbits) {
    OrbitClasses oc = orbit_classes(labs, d, cm);
    std::vector<int> sizes(oc.representatives.size(), 0);
    for (int c : oc.class_of) ++sizes[static_cast<size_t>(c)];
    Json classes = Json::array();
    for (size_t c = 0; c < oc.representatives.size(); ++c) {
      Json cj = Json::object();
      cj["size"] = sizes[c];
      cj["representative"] =
          strip_format(labeling_to_json(labs[static_cast<size_t>(oc.representatives[c])]));
      classes.push_back(std::move(cj));
    }
    out["class_count"] = oc.representatives.size();
    out["classes"] = std::move(classes);
  } else {
    Json arr = Json::array();
    for (const auto& lab : labs) arr.push_back(strip_format(labeling_to_json(lab)));
    out["labelings"] = std::move(arr);
  }
  emit(out);
  return 0;
}

int run_invariant(const std::string& dia_file, const std::string& xmod_file,
                  const std::string& hopf_file, const std::string& lab_arg,
                  bool all) {
  HeegaardDiagram d = diagram_from_json(load_json(dia_file));
  HopfChiCoalgebra A = hopf_from_json(load_json(hopf_file));
  if (!xmod_file.empty()) {
    CrossedModule cm = xmod_from_json(load_json(xmod_file));
    if (!same_xmod(cm, A.cm))
      fail("InvalidInput", "--xmod disagrees with the Hopf input's crossed module");
  }
  if (all == !lab_arg.empty())
    fail("ParseError", "provide exactly one of --labeling and --all");
  Json out = Json::object();
  out["format"] = 1;
  out["field"] = field_to_json(A.field);
  out["normalization_exponent"] = normalization_exponent(d);
  if (!lab_arg.empty()) {
    ChiLabeling lab = labeling_from_json(load_json_or_inline(lab_arg));
    Scalar v = compute_invariant(d, lab, A);
    out["value"] = v.str();
    out["labeling"] = strip_format(labeling_to_json(lab));
    emit(out);
    return 0;
  }
  Integrals I = compute_integrals(A);
  std::vector<ChiLabeling> labs = enumerate_labelings(d, A.cm);
  Json results = Json::array();
  for (const auto& lab : labs) {
    Json rj = Json::object();
    rj["value"] = compute_invariant(d, lab, A, I).str();
    rj["labeling"] = strip_format(labeling_to_json(lab));
    results.push_back(std::move(rj));
  }
  out["count"] = labs.size();
  out["results"] = std::move(results);
  emit(out);
  return 0;
}

int run_kuperberg(const std::string& dia_file, const std::string& hopf_file) {
  HeegaardDiagram d = diagram_from_json(load_json(dia_file));
  HopfChiCoalgebra A = hopf_from_json(load_json(hopf_file));
  Json out = Json::object();
  out["format"] = 1;
  out["field"] = field_to_json(A.field);
  out["normalization_exponent"] = normalization_exponent(d);
  out["value"] = kuperberg(d, A).str();
  emit(out);
  return 0;
}

int run_moves(const std::string& dia_file, const std::string& script_file,
              const std::string& xmod_file, const std::string& lab_arg,
              const std::string& hopf_file) {
  HeegaardDiagram d = diagram_from_json(load_json(dia_file));
  std::vector<MoveDescriptor> script = moves_from_json(load_json(script_file));
  HopfChiCoalgebra A;
  bool with_hopf = !hopf_file.empty();
  if (with_hopf) A = hopf_from_json(load_json(hopf_file));
  CrossedModule cm = !xmod_file.empty() ? xmod_from_json(load_json(xmod_file))
                     : with_hopf        ? A.cm
                                        : xmod_trivial();
  if (with_hopf && !xmod_file.empty() && !same_xmod(cm, A.cm))
    fail("InvalidInput", "--xmod disagrees with the Hopf input's crossed module");
  ChiLabeling lab = !lab_arg.empty() ? labeling_from_json(load_json_or_inline(lab_arg))
                                     : zero_labeling(d);
  std::vector<std::string> violations = validate(d);
  if (violations.empty())
    for (const auto& r : check_labeling(d, cm, lab))
      violations.push_back("labeling: " + r);
  if (!violations.empty()) return report("moves input", violations);

  Json out = Json::object();
  out["format"] = 1;
  Integrals I;
  if (with_hopf) {
    I = compute_integrals(A);
    out["field"] = field_to_json(A.field);
    out["value_before"] = compute_invariant(d, lab, A, I).str();
  }
  for (size_t i = 0; i < script.size(); ++i) {
    try {
      auto next = apply_move(d, lab, cm, script[i]);
      d = std::move(next.first);
      lab = std::move(next.second);
    } catch (const CkError& e) {
      Json err = Json::object();
      err["format"] = 1;
      err["error"] = Json{{"kind", e.kind()}, {"message", e.what()}};
      err["failed_at"] = i;
      err["move"] = move_name(script[i]);
      emit(err);
      return 1;
    }
  }
  out["moves_applied"] = script.size();
  out["diagram"] = strip_format(diagram_to_json(d));
  out["labeling"] = strip_format(labeling_to_json(lab));
  if (with_hopf) {
    Scalar after = compute_invariant(d, lab, A, I);
    out["value_after"] = after.str();
    out["invariant_unchanged"] =
        out["value_before"].get<std::string>() == after.str();
  }
  emit(out);
  return 0;
}

int run_builtin(const std::string& name, const std::vector<std::string>& args,
                const std::string& field_name) {
  Field f = field_by_name(field_name);
  auto want = [&](size_t n) {
    if (args.size() != n)
      fail("ParseError", "builtin " + name + " takes " + std::to_string(n) +
                             " argument" + (n == 1 ? "" : "s"));
  };
  try {
    if (name == "lens") {
      want(2);
      emit(diagram_to_json(build_lens(parse_int(args[0]), parse_int(args[1]))));
    } else if (name == "poincare") {
      want(0);
      emit(diagram_to_json(build_poincare()));
    } else if (name == "s3") {
      want(0);
      emit(diagram_to_json(build_s3()));
    } else if (name == "z4z2") {
      want(0);
      emit(xmod_to_json(xmod_z4_z2()));
    } else if (name == "to1") {
      want(1);
      emit(xmod_to_json(xmod_to_1(group_by_name(args[0]))));
    } else if (name == "one-to") {
      want(1);
      emit(xmod_to_json(xmod_one_to(group_by_name(args[0]))));
    } else if (name == "kp4") {
      want(0);
      emit(hopf_to_json(builtin_kp4(f)));
    } else if (name == "group-algebra") {
      want(1);
      emit(hopf_to_json(builtin_group_algebra(f, group_by_name(args[0]))));
    } else {
      fail("ParseError",
           "unknown builtin \"" + name +
               "\" (lens, poincare, s3, z4z2, to1, one-to, kp4, group-algebra)");
    }
  } catch (const CkError& e) {
    if (e.kind() == "ParseError") throw;
    fail("ParseError", "builtin " + name + ": " + e.what());
  }
  return 0;
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const CkError& e) {
    std::string msg = e.what();
    const std::string prefix = e.kind() + ": ";
    if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
    Json out = Json::object();
    out["format"] = 1;
    out["error"] = Json{{"kind", e.kind()}, {"message", msg}};
    emit(out);
    return (e.kind() == "ParseError" || e.kind() == "DimensionMismatch") ? 2 : 1;
  } catch (const std::exception& e) {
    Json out = Json::object();
    out["format"] = 1;
    out["error"] = Json{{"kind", "InternalError"}, {"message", e.what()}};
    emit(out);
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of chi-colored Heegaard diagrams"};
  app.require_subcommand(1);

  std::string file, xmod_file, hopf_file, lab_arg, dia_file, script_file, field_name = "Q";
  std::string builtin_name;
  std::vector<std::string> builtin_args;
  bool orbits = false, all = false;

  auto* v = app.add_subcommand("validate", "check a diagram file, optionally with a labeling");
  v->add_option("file", file, "diagram file or -")->required();
  v->add_option("--xmod", xmod_file, "crossed module file");
  v->add_option("--labeling", lab_arg, "labeling file or inline JSON");

  auto* cx = app.add_subcommand("check-xmod", "check the crossed module axioms");
  cx->add_option("file", file, "crossed module file or -")->required();

  auto* ch = app.add_subcommand("check-hopf", "check the Hopf chi-coalgebra axioms");
  ch->add_option("file", file, "Hopf file or -")->required();

  auto* in = app.add_subcommand("integrals", "compute the two-sided integral and the lambda system");
  in->add_option("file", file, "Hopf file or -")->required();

  auto* lb = app.add_subcommand("labelings", "enumerate the valid labelings");
  lb->add_option("--diagram", dia_file, "diagram file or -")->required();
  lb->add_option("--xmod", xmod_file, "crossed module file")->required();
  lb->add_flag("--orbits", orbits, "group them into gauge orbits");

  auto* iv = app.add_subcommand("invariant", "evaluate the invariant");
  iv->add_option("--diagram", dia_file, "diagram file or -")->required();
  iv->add_option("--xmod", xmod_file, "crossed module file (checked against the Hopf input)");
  iv->add_option("--hopf", hopf_file, "Hopf file")->required();
  iv->add_option("--labeling", lab_arg, "labeling file or inline JSON");
  iv->add_flag("--all", all, "evaluate every valid labeling");

  auto* ku = app.add_subcommand("kuperberg", "evaluate with the constant labeling over the trivial crossed module");
  ku->add_option("--diagram", dia_file, "diagram file or -")->required();
  ku->add_option("--hopf", hopf_file, "Hopf file")->required();

  auto* mv = app.add_subcommand("moves", "apply a move script");
  mv->add_option("--diagram", dia_file, "diagram file or -")->required();
  mv->add_option("--script", script_file, "move script file")->required();
  mv->add_option("--xmod", xmod_file, "crossed module file");
  mv->add_option("--labeling", lab_arg, "labeling file or inline JSON");
  mv->add_option("--hopf", hopf_file, "Hopf file; adds before/after invariant values");

  auto* bi = app.add_subcommand("builtin", "emit a built-in object as JSON");
  bi->add_option("name", builtin_name, "lens, poincare, s3, z4z2, to1, one-to, kp4, group-algebra")
      ->required();
  bi->add_option("args", builtin_args, "builtin arguments");
  bi->add_option("--field", field_name, "Q or a prime p");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  if (v->parsed())
    return guarded([&] { return run_validate(file, xmod_file, lab_arg); });
  if (cx->parsed()) return guarded([&] { return run_check_xmod(file); });
  if (ch->parsed()) return guarded([&] { return run_check_hopf(file); });
  if (in->parsed()) return guarded([&] { return run_integrals(file); });
  if (lb->parsed())
    return guarded([&] { return run_labelings(dia_file, xmod_file, orbits); });
  if (iv->parsed())
    return guarded(
        [&] { return run_invariant(dia_file, xmod_file, hopf_file, lab_arg, all); });
  if (ku->parsed()) return guarded([&] { return run_kuperberg(dia_file, hopf_file); });
  if (mv->parsed())
    return guarded([&] {
      return run_moves(dia_file, script_file, xmod_file, lab_arg, hopf_file);
    });
  if (bi->parsed())
    return guarded([&] { return run_builtin(builtin_name, builtin_args, field_name); });
  std::cerr << "no verb\n";
  return 2;
}
