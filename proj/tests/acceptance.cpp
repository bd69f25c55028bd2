// Acceptance checks. One PASS/FAIL line per criterion; exit status 1 on any FAIL.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "kit.hpp"
#include "plumbcurve/gradings.hpp"
#include "plumbcurve/loopcalc.hpp"
#include "plumbcurve/svg.hpp"

using namespace pc;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

CyclicWord loop_word(const std::string& s) { return loop_decode(parse_loop(s)); }

std::string suite_note(const kit::SuiteResult& r) {
  std::ostringstream s;
  s << r.instances << " inst, " << r.failures << " fail";
  if (!r.first_failure.empty()) s << " [" << r.first_failure.substr(0, 200) << "]";
  return s.str();
}

Outcome golden_words() {
  const MultiCurve a = invariant(fixtures::TA()), b = invariant(fixtures::TB());
  const bool ok = a == MultiCurve{canonicalize(parse_word("babaBAABaba"))} &&
                  b == MultiCurve{canonicalize(parse_word("baabaaababaaabaaababaaa"))};
  return {ok, "TA " + to_string(a) + ", TB " + to_string(b)};
}

Outcome merge_fixtures() {
  const CyclicWord r = loop_word("c[0] c[-1]");
  const CyclicWord c1 = loop_word("c[0] c[0] c[-1]"), c2 = loop_word("a[-1] b[-1] c[-4]");
  const MultiCurve e1{loop_word("c[0] c[-1] c[-1] c[-1] c[0] c[-2]")};
  const MultiCurve e2{loop_word("a[-1] b[-1] c[-4] a[-1] b[-1] c[-5]")};
  const bool ok = merge_op(r, c1) == e1 && vertical_sum_merge(r, c1) == e1 && merge_op(r, c2) == e2 &&
                  vertical_sum_merge(r, c2) == e2;
  return {ok, to_string(loop_encode(merge_op(r, c1).front())) + " | " + to_string(loop_encode(merge_op(r, c2).front()))};
}

Outcome delta_sym_fixtures() {
  const Rational a = delta_sym_tree(fixtures::TA()), b = delta_sym_tree(fixtures::TB()),
                 c = delta_sym_tree(fixtures::T1());
  return {a == q(5, 2) && b == 0 && c == q(-1, 2), to_string(a) + ", " + to_string(b) + ", " + to_string(c)};
}

Outcome delta_mubar_fixtures() {
  const std::pair<RootedTree, long long> cases[] = {
      {fixtures::TA(), -10}, {fixtures::TB(), 0}, {fixtures::T1(), 2}};
  bool ok = true;
  std::string note;
  for (const auto& [t, want] : cases) {
    const long long brute = kit::delta_mubar_brute(t);
    const long long solved = delta_mubar(t);
    ok = ok && brute == want && solved == want && delta_sym_tree(t) == Rational(-want) / 4;
    note += std::to_string(brute) + "/" + std::to_string(solved) + " ";
  }
  return {ok, "brute/solver " + note};
}

Outcome rank_fixtures() {
  const MultiCurve b = invariant(fixtures::TB());
  const DetSig d = det_and_signature(intersection_form(fixtures::TB()));
  const auto rb = spinc_ranks(b);
  bool ok = pairing_generators(b).size() == 16 && abs(d.det) == 16 && rb.size() == 16 &&
            std::all_of(rb.begin(), rb.end(), [](const SpincClass& c) { return c.rank == 1; });
  std::vector<long long> ra;
  for (const auto& c : spinc_ranks(invariant(fixtures::TA()))) ra.push_back(c.rank);
  std::sort(ra.begin(), ra.end());
  ok = ok && ra == std::vector<long long>{1, 3};
  return {ok, "TB 16 classes, |det| " + to_string(BigInt(abs(d.det))) + "; TA ranks " + (ra.size() == 2 ? std::to_string(ra[0]) + "," + std::to_string(ra[1]) : "?")};
}

Outcome grading_fixtures() {
  const CyclicWord w{parse_word("babaBAABaba")};
  const auto gens = pairing_generators(w);
  const SymPoints sp = fixed_points(w);
  const auto x = generator_at(gens, sp.t0, 2 * static_cast<long long>(w.size()));
  if (!x || gens.size() != 4) return {false, "generators not found"};
  std::vector<Generator> ys;
  for (std::size_t i = 1; i < gens.size(); ++i) ys.push_back(gens[(x->index + i) % gens.size()]);
  std::vector<Rational> area, gr;
  Rational rot2;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    GradingTerms g = grading_diff_general_detail(w, *x, ys[i]);
    area.push_back(g.area);
    gr.push_back(g.value);
    if (i == 1) rot2 = g.rot_rho;
  }
  const DeltaD dd = delta_d(fixtures::TA());
  const bool ok = rot2 == 1 && area == std::vector<Rational>{1, q(5, 2), 0} &&
                  gr == std::vector<Rational>{q(1, 2), q(3, 2), q(1, 2)} && dd.value == q(1, 2) && !dd.lspace &&
                  dd.delta_sym == q(5, 2);
  std::string note = "areas";
  for (const auto& a : area) note += " " + to_string(a);
  note += "; gr";
  for (const auto& g : gr) note += " " + to_string(g);
  note += "; delta_d " + to_string(dd.value);
  return {ok, note};
}

Outcome wu_moves() {
  const kit::SuiteResult r = kit::wu_move_suite(20260101, 1000, 8);
  return {r.ok(1000), suite_note(r)};
}

Outcome sym_mu_moves() {
  const kit::MoveSuites s = kit::move_suites(20260102, 500, 8);
  const kit::SuiteResult* all[] = {&s.sym_extend, &s.sym_twist, &s.sym_merge,
                                   &s.mu_extend,  &s.mu_twist,  &s.mu_merge};
  bool ok = true;
  std::string note;
  for (const auto* r : all) {
    ok = ok && r->ok(500);
    note += suite_note(*r) + "; ";
  }
  return {ok, note};
}

Outcome main_identity() {
  const VerifyReport r = run_verify_batch(1, 500, 10);
  return {r.violations == 0 && !r.aborted && r.passed >= 100,
          std::to_string(r.passed) + " passed all gates, " + std::to_string(r.violations) + " violations"};
}

Outcome structural() {
  const kit::WordSuites s = kit::word_suites(20260103, 1000);
  const kit::SuiteResult* all[] = {&s.canonical,       &s.loop_roundtrip, &s.extend_twice,
                                   &s.twist_inverse,   &s.twist_agree,    &s.merge_parity,
                                   &s.merge_components, &s.fixed_rotation};
  bool ok = true;
  long long fails = 0;
  std::string first;
  for (const auto* r : all) {
    ok = ok && r->ok(1000);
    fails += r->failures;
    if (first.empty()) first = r->first_failure;
  }
  return {ok, "8 suites x 1000, " + std::to_string(fails) + " fail" + (first.empty() ? "" : " [" + first + "]")};
}

Outcome determinism() {
  const std::string a = report_json(run_verify_batch(7, 40, 8)), b = report_json(run_verify_batch(7, 40, 8));
  SvgOptions o;
  o.mark_generators = true;
  bool svg_ok = true;
  for (const auto& t : {fixtures::T1(), fixtures::TA(), fixtures::TB()})
    svg_ok = svg_ok && render_svg(t, o) == render_svg(t, o);
  std::ifstream in(PLUMBCURVE_TEST_DATA "/t1.svg", std::ios::binary);
  std::stringstream golden;
  golden << in.rdbuf();
  const bool golden_ok = golden.str() == render_svg(fixtures::T1());
  return {a == b && svg_ok && golden_ok, std::string("reports ") + (a == b ? "equal" : "differ") + ", svg " +
                                             (svg_ok ? "stable" : "unstable") + ", golden " +
                                             (golden_ok ? "match" : "mismatch")};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget;
    std::function<Outcome()> run;
  };
  const Criterion list[] = {
      {1, "pipeline golden words", 1, golden_words},
      {2, "merge fixtures", 1, merge_fixtures},
      {3, "delta_sym fixtures", 1, delta_sym_fixtures},
      {4, "delta_mubar fixtures", 1, delta_mubar_fixtures},
      {5, "rank fixtures", 1, rank_fixtures},
      {6, "grading fixtures", 1, grading_fixtures},
      {7, "Wu move rules", 30, wu_moves},
      {8, "delta_sym and delta_mubar move rules", 60, sym_mu_moves},
      {9, "main identity over verify seed 1", 120, main_identity},
      {10, "structural properties", 60, structural},
      {11, "determinism", 10, determinism},
  };
  int failed = 0;
  for (const auto& c : list) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = o.ok && secs < c.budget;
    if (!pass) ++failed;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (pass ? "PASS" : "FAIL") << " " << c.id << " " << c.name << " (" << secs << "s of " << c.budget
         << "s) " << o.detail;
    std::cout << line.str() << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
