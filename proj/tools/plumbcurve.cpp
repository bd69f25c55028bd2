// plumbcurve: command-line front end.
// stdout carries a JSON envelope {"ok": ..., "result"|"error": ...};
// exit codes: 0 ok, 1 domain error, 2 input error, 3 identity violation.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "plumbcurve/errors.hpp"
#include "plumbcurve/geometry.hpp"
#include "plumbcurve/gradings.hpp"
#include "plumbcurve/harness.hpp"
#include "plumbcurve/loopcalc.hpp"
#include "plumbcurve/svg.hpp"
#include "plumbcurve/wu.hpp"

using json = nlohmann::ordered_json;
using namespace pc;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::bad_argument, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

RootedTree load_tree(const std::string& path) { return parse_tree(read_file(path)); }

json ids_json(const std::vector<std::string>& ids) {
  json a = json::array();
  for (const auto& i : ids) a.push_back(i);
  return a;
}

void text_lines(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      text_lines(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) text_lines(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else if (j.is_string()) {
    out << prefix << ": " << j.get<std::string>() << "\n";
  } else {
    out << prefix << ": " << j.dump() << "\n";
  }
}

void emit(const std::string& format, const json& env) {
  if (format == "text") {
    std::ostringstream s;
    text_lines(env, "", s);
    std::cout << s.str();
  } else {
    std::cout << env.dump(2) << "\n";
  }
}

json ok(json result) {
  json e;
  e["ok"] = true;
  e["result"] = std::move(result);
  return e;
}

json fail(const std::string& code, const std::string& msg) {
  json e;
  e["ok"] = false;
  e["error"] = {{"code", code}, {"message", msg}};
  return e;
}

json cmd_invariant(const RootedTree& t) {
  PlanPtr plan = decompose(t);
  MultiCurve mc = evaluate_words(plan);
  json r;
  r["plan"] = plan_to_string(plan);
  json comps = json::array();
  for (const auto& w : mc) {
    CurveClass c = curve_class(w);
    comps.push_back({{"word", to_string(w)},
                     {"loop", to_string(loop_encode(w))},
                     {"b", c.b},
                     {"a", c.a},
                     {"type", hst_name(c.type)},
                     {"symmetric", symmetry_offset(w).has_value()}});
  }
  r["components"] = comps;
  CurveClass c = curve_class(mc);
  r["class"] = {{"b", c.b}, {"a", c.a}, {"type", hst_name(c.type)}};
  return r;
}

json cmd_rank(const RootedTree& t) {
  MultiCurve mc = invariant(t);
  DetSig d = det_and_signature(intersection_form(t));
  auto gens = pairing_generators(mc);
  json r;
  r["det"] = to_string(d.det);
  r["signature"] = d.signature;
  r["generators"] = gens.size();
  BigInt absdet = d.det < 0 ? BigInt(-d.det) : d.det;
  r["lspace"] = d.det != 0 && BigInt(gens.size()) == absdet;
  json sp = json::array();
  for (const auto& c : spinc_ranks(mc)) sp.push_back({{"class", c.label()}, {"rank", c.rank}});
  r["spinc"] = sp;
  return r;
}

json cmd_delta_sym(const RootedTree& t) {
  MultiCurve mc = invariant(t);
  const CyclicWord& w = mc[distinguished_component(mc)];
  DeltaSymDetail d = delta_sym_detail(w);
  json r;
  r["value"] = to_string(d.value);
  r["word"] = to_string(w);
  r["type"] = hst_name(d.sym.type);
  r["x0"] = torus_point_string(d.sym.x0);
  r["x1"] = torus_point_string(d.sym.x1);
  return r;
}

json set_json(const RootedTree& t, const RelWuSet& s) {
  return {{"ids", ids_json(s.ids(t))}, {"type", s.type}, {"balanced", s.balanced}};
}

json cmd_delta_mubar(const RootedTree& t) {
  DeltaMubar d = delta_mubar_detail(t);
  json r;
  r["value"] = d.value;
  r["wu_type"] = to_string(d.type);
  r["S0"] = set_json(t, d.s0);
  r["S1"] = set_json(t, d.s1);
  r["mubar_S0"] = d.mubar0 ? json(*d.mubar0) : json(nullptr);
  r["mubar_S1"] = d.mubar1 ? json(*d.mubar1) : json(nullptr);
  return r;
}

json cmd_wu(const RootedTree& t) {
  auto sets = enumerate_relative_wu(t);
  json r;
  json a = json::array();
  for (const auto& s : sets) a.push_back(set_json(t, s));
  r["sets"] = a;
  WuType w = wu_type(sets);
  r["wu_type"] = to_string(w);
  r["hst_type"] = hst_name(hst_of_wu(w));
  return r;
}

json cmd_gradings(const RootedTree& t) {
  MultiCurve mc = invariant(t);
  std::size_t comp = 0;
  std::optional<long long> t0;
  try {
    comp = distinguished_component(mc);
    t0 = fixed_points(mc[comp]).t0;
  } catch (const Error&) {
    t0.reset();
  }
  const CyclicWord& w = mc[comp];
  auto gens = pairing_generators(w, comp);
  if (gens.empty()) throw Error(Errc::degenerate_alpha, "component has no generators");
  Generator base = gens.front();
  if (t0)
    if (auto g = generator_at(gens, *t0, 2 * static_cast<long long>(w.size()))) base = *g;
  json r;
  r["component"] = comp;
  r["word"] = to_string(w);
  r["base"] = base.index;
  json table = json::array();
  for (const auto& y : gens) {
    table.push_back({{"component", comp},
                     {"index", y.index},
                     {"class", std::to_string(comp) + ":" + std::to_string(y.height_class)},
                     {"grading", to_string(grading_diff_general(w, base, y))}});
  }
  r["table"] = table;
  try {
    DeltaD d = delta_d(t);
    r["delta_d"] = {{"value", to_string(d.value)},
                    {"lspace", d.lspace},
                    {"embedded_lift", d.embedded},
                    {"delta_sym", to_string(d.delta_sym)}};
  } catch (const Error& e) {
    r["delta_d"] = {{"error", errc_name(e.code())}, {"message", e.what()}};
  }
  return r;
}

json cmd_reduce(const RootedTree& t) {
  ReduceResult rr = reduce_tree(t);
  json r;
  r["tree"] = json::parse(tree_to_json(rr.tree));
  r["reduced"] = rr.reduced;
  r["blocking"] = ids_json(rr.blocking);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Immersed-curve invariants of rooted plumbing trees"};
  app.set_help_all_flag("--help-all");
  std::string format = "json";
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.require_subcommand(1);

  std::string tree_path;
  auto add_tree_cmd = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("tree", tree_path, "tree JSON file")->required();
    c->fallthrough();
    return c;
  };
  auto* c_inv = add_tree_cmd("invariant", "cyclic words of the tree");
  auto* c_rank = add_tree_cmd("rank", "generator count, determinant and spin-c ranks");
  auto* c_dsym = add_tree_cmd("delta-sym", "symmetry invariant of the distinguished curve");
  auto* c_dmu = add_tree_cmd("delta-mubar", "weight difference of the two relative Wu sets");
  auto* c_wu = add_tree_cmd("wu", "relative Wu sets and Wu type");
  auto* c_gr = add_tree_cmd("gradings", "grading table of the distinguished curve");
  auto* c_red = add_tree_cmd("reduce", "apply blow-downs and 0-chain collapses");

  auto* c_ver = app.add_subcommand("verify", "randomized identity check");
  std::uint64_t seed = 1;
  long long count = 500, max_vertices = 10;
  c_ver->add_option("--seed", seed);
  c_ver->add_option("--count", count);
  c_ver->add_option("--max-vertices", max_vertices);
  c_ver->fallthrough();

  auto* c_svg = app.add_subcommand("svg", "draw lifts of the curves");
  std::string out_path, word_text;
  SvgOptions so;
  bool no_shade = false, no_markers = false;
  c_svg->add_option("tree", tree_path, "tree JSON file");
  c_svg->add_option("--word", word_text, "draw this cyclic word instead of a tree");
  c_svg->add_option("-o,--output", out_path, "output file")->required();
  c_svg->add_option("--periods", so.periods);
  c_svg->add_flag("--no-shade", no_shade);
  c_svg->add_flag("--no-markers", no_markers);
  c_svg->add_flag("--mark-generators", so.mark_generators);
  c_svg->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    emit(format, fail("bad_argument", e.what()));
    return 2;
  }

  try {
    json result;
    if (c_ver->parsed()) {
      VerifyReport rep = run_verify_batch(seed, count, max_vertices);
      json report = json::parse(report_json(rep));
      if (rep.violations > 0) {
        json e = fail("identity_violation", "delta_sym != -1/4 delta_mubar on a gated instance");
        e["error"]["report"] = report;
        emit(format, e);
        return 3;
      }
      emit(format, ok(report));
      return 0;
    }
    if (c_svg->parsed()) {
      so.shade = !no_shade;
      so.markers = !no_markers;
      std::string doc;
      if (!word_text.empty()) {
        doc = render_svg(MultiCurve{canonicalize(parse_word(word_text))}, so);
      } else if (!tree_path.empty()) {
        doc = render_svg(load_tree(tree_path), so);
      } else {
        throw Error(Errc::bad_argument, "svg needs a tree file or --word");
      }
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw Error(Errc::bad_argument, "cannot write " + out_path);
      out << doc;
      result = {{"path", out_path}, {"bytes", doc.size()}};
      emit(format, ok(result));
      return 0;
    }
    RootedTree t = load_tree(tree_path);
    if (c_inv->parsed()) result = cmd_invariant(t);
    else if (c_rank->parsed()) result = cmd_rank(t);
    else if (c_dsym->parsed()) result = cmd_delta_sym(t);
    else if (c_dmu->parsed()) result = cmd_delta_mubar(t);
    else if (c_wu->parsed()) result = cmd_wu(t);
    else if (c_gr->parsed()) result = cmd_gradings(t);
    else if (c_red->parsed()) result = cmd_reduce(t);
    emit(format, ok(result));
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    emit(format, fail(errc_name(e.code()), e.what()));
    return is_input_error(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    emit(format, fail("internal", e.what()));
    return 1;
  }
}
