#include "plumbcurve/harness.hpp"

#include <cstdio>

#include "json.hpp"
#include "plumbcurve/errors.hpp"
#include "plumbcurve/geometry.hpp"
#include "plumbcurve/loopcalc.hpp"
#include "plumbcurve/wu.hpp"

namespace pc {

bool is_lspace(const RootedTree& t) {
  DetSig d = det_and_signature(intersection_form(t));
  if (d.det == 0) throw Error(Errc::det_zero, "determinant is zero");
  BigInt absdet = d.det < 0 ? BigInt(-d.det) : d.det;
  return BigInt(pairing_generators(invariant(t)).size()) == absdet;
}

namespace fixtures {

RootedTree T0() { return {{{"v", 0}}, {}, "v"}; }

RootedTree T1() { return {{{"a", -1}, {"b", -3}}, {{"a", "b"}}, "a"}; }

RootedTree TA() {
  return {{{"r", -2}, {"p", -2}, {"q", -6}, {"s", -1}, {"f", -2}, {"g", -3}},
          {{"r", "p"}, {"p", "q"}, {"q", "s"}, {"s", "f"}, {"s", "g"}},
          "r"};
}

RootedTree TB() {
  return {{{"v", -2}, {"t", -3}, {"a", -2}, {"u", -1}, {"d", -2}, {"e", -3}},
          {{"v", "t"}, {"a", "t"}, {"t", "u"}, {"u", "d"}, {"u", "e"}},
          "v"};
}

}  // namespace fixtures

RootedTree random_tree(std::mt19937_64& rng, const RandomTreeOptions& o) {
  auto uni = [&](long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng); };
  const long long n = uni(o.min_vertices, o.max_vertices);
  RootedTree t;
  std::vector<long long> deg(static_cast<std::size_t>(n), 0);
  for (long long i = 0; i < n; ++i) t.vertices.push_back({"v" + std::to_string(i), uni(o.weight_lo, o.weight_hi)});
  for (long long i = 1; i < n; ++i) {
    long long p = uni(0, i - 1);
    t.edges.emplace_back("v" + std::to_string(p), "v" + std::to_string(i));
    ++deg[static_cast<std::size_t>(p)];
    ++deg[static_cast<std::size_t>(i)];
  }
  std::vector<long long> cand;
  for (long long i = 0; i < n; ++i)
    if (!o.root_at_leaf || deg[static_cast<std::size_t>(i)] <= 1) cand.push_back(i);
  long long r = cand[static_cast<std::size_t>(uni(0, static_cast<long long>(cand.size()) - 1))];
  t.root = t.vertices[static_cast<std::size_t>(r)].id;
  t.vertices[static_cast<std::size_t>(r)].weight = uni(o.root_lo, o.root_hi);
  return t;
}

std::string digest(const RootedTree& t) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : canonical_code(t)) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

const char* gate_name(Gate g) {
  switch (g) {
    case Gate::reduced: return "reduced";
    case Gate::two_wu: return "two_rel_wu";
    case Gate::merge: return "merge_preconditions";
    case Gate::det_nonzero: return "det_nonzero";
    case Gate::lspace: return "lspace";
    case Gate::rstar: return "rstar_not_integral";
  }
  return "?";
}

Instance evaluate_instance(const RootedTree& t, std::string label, bool force_identity) {
  Instance in;
  in.label = std::move(label);
  in.tree = t;
  std::optional<MultiCurve> mc;
  std::optional<DetSig> ds;
  auto gate = [&](Gate g) -> bool {
    switch (g) {
      case Gate::reduced: return is_reduced(t);
      case Gate::two_wu: return enumerate_relative_wu(t).size() == 2;
      case Gate::merge:
        try {
          mc = invariant(t);
          return true;
        } catch (const Error& e) {
          if (e.code() != Errc::merge_precondition) throw;
          return false;
        }
      case Gate::det_nonzero:
        ds = det_and_signature(intersection_form(t));
        return ds->det != 0;
      case Gate::lspace: {
        BigInt absdet = ds->det < 0 ? BigInt(-ds->det) : ds->det;
        return BigInt(pairing_generators(*mc).size()) == absdet;
      }
      case Gate::rstar: {
        Slope s = r_star(t);
        return !s.infinite && !is_integer(s.value);
      }
    }
    return false;
  };
  in.passed = true;
  try {
    for (Gate g : kGateOrder) {
      bool ok = gate(g);
      in.gates.emplace_back(g, ok);
      if (!ok) {
        in.passed = false;
        break;
      }
    }
  } catch (const Error& e) {
    in.passed = false;
    in.error = e.what();
  }
  if (in.passed || force_identity) {
    try {
      in.delta_sym = delta_sym_tree(t);
      in.delta_mubar = delta_mubar(t);
      in.identity = *in.delta_sym == Rational(-*in.delta_mubar) / 4;
    } catch (const Error& e) {
      in.identity = false;
      in.error = e.what();
    }
  }
  return in;
}

VerifyReport run_verify_batch(std::uint64_t seed, long long count, long long max_vertices) {
  if (count < 1) throw Error(Errc::bad_argument, "count must be at least 1");
  if (max_vertices < 2) throw Error(Errc::bad_argument, "max-vertices must be at least 2");
  VerifyReport r;
  r.seed = seed;
  r.count = count;
  r.max_vertices = max_vertices;
  for (Gate g : kGateOrder) r.filtered.emplace_back(g, 0);

  auto record = [&](Instance in) {
    in.index = r.instances.size();
    const bool random = in.label == "random";
    if (random && in.passed) ++r.passed;
    else if (random && !in.gates.empty() && !in.gates.back().second) {
      for (auto& [g, c] : r.filtered)
        if (g == in.gates.back().first) ++c;
    }
    bool bad = in.identity.has_value() && !*in.identity;
    r.instances.push_back(std::move(in));
    if (bad) {
      ++r.violations;
      r.aborted = true;
    }
  };

  const std::pair<const char*, RootedTree> fx[] = {
      {"T1", fixtures::T1()}, {"TA", fixtures::TA()}, {"TB", fixtures::TB()}};
  for (const auto& [name, tree] : fx) {
    record(evaluate_instance(tree, name, true));
    if (r.aborted) return r;
  }

  std::mt19937_64 rng(seed);
  RandomTreeOptions opt;
  opt.max_vertices = max_vertices;
  const long long cap = 10 * count;
  long long attempts = 0;
  while (r.generated < count && attempts < cap) {
    ++attempts;
    RootedTree t = random_tree(rng, opt);
    if (!is_reduced(t)) {
      ++r.rejected;
      continue;
    }
    ++r.generated;
    record(evaluate_instance(t, "random", false));
    if (r.aborted) break;
  }
  return r;
}

std::string report_json(const VerifyReport& r) {
  using ojson = nlohmann::ordered_json;
  ojson doc;
  doc["seed"] = r.seed;
  doc["count"] = r.count;
  doc["max_vertices"] = r.max_vertices;
  ojson inst = ojson::array();
  for (const auto& in : r.instances) {
    ojson j;
    j["index"] = in.index;
    j["label"] = in.label;
    j["digest"] = digest(in.tree);
    ojson gates = ojson::object();
    for (const auto& [g, ok] : in.gates) gates[gate_name(g)] = ok;
    j["gates"] = gates;
    j["passed"] = in.passed;
    if (in.delta_sym) j["delta_sym"] = to_string(*in.delta_sym);
    if (in.delta_mubar) j["delta_mubar"] = *in.delta_mubar;
    if (in.identity) j["identity"] = *in.identity;
    if (!in.error.empty()) j["error"] = in.error;
    if (in.identity && !*in.identity) j["reproducer"] = ojson::parse(tree_to_json(in.tree));
    inst.push_back(j);
  }
  doc["instances"] = inst;
  ojson s;
  s["fixtures"] = 3;
  s["generated"] = r.generated;
  s["rejected"] = r.rejected;
  s["passed_all_gates"] = r.passed;
  ojson f = ojson::object();
  for (const auto& [g, c] : r.filtered) f[gate_name(g)] = c;
  s["filtered_by"] = f;
  s["violations"] = r.violations;
  s["aborted"] = r.aborted;
  doc["summary"] = s;
  return doc.dump(2);
}

}  // namespace pc
