#include "plumbcurve/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "plumbcurve/errors.hpp"

namespace pc {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long long pos_mod(long long a, long long b) { return a - b * floor_div(a, b); }

}  // namespace

P2 step_of(Letter x) {
  switch (x) {
    case Letter::a: return {0, 1};
    case Letter::A: return {0, -1};
    case Letter::b: return {1, 0};
    case Letter::B: return {-1, 0};
  }
  return {0, 0};
}

std::vector<P2> LatticePath::corners() const {
  if (corner_cache.size() == steps.size() + 1) return corner_cache;
  std::vector<P2> c{start};
  for (Letter x : steps) c.push_back(c.back() + 2 * step_of(x));
  return c;
}

P2 LatticePath::at(long long t) const {
  const long long n2 = half_len();
  long long q = floor_div(t, n2), r = t - q * n2;
  P2 p;
  if (corner_cache.size() == steps.size() + 1) {
    p = corner_cache[static_cast<std::size_t>(r / 2)];
  } else {
    p = start;
    for (long long i = 0; i < r / 2; ++i) p = p + 2 * step_of(steps[static_cast<std::size_t>(i)]);
  }
  if (r % 2) p = p + step_of(steps[static_cast<std::size_t>(r / 2)]);
  return p + q * P2{2 * b, 2 * a};
}

std::vector<P2> LatticePath::points(long long t0, long long t1) const {
  std::vector<P2> out{at(t0)};
  if (t1 > t0) {
    for (long long t = t0 + 1; t < t1; ++t)
      if (pos_mod(t, 2) == 0) out.push_back(at(t));
  } else {
    for (long long t = t0 - 1; t > t1; --t)
      if (pos_mod(t, 2) == 0) out.push_back(at(t));
  }
  if (t1 != t0) out.push_back(at(t1));
  return out;
}

P2 LatticePath::direction_after(long long t) const {
  long long i = pos_mod(floor_div(t, 2), static_cast<long long>(steps.size()));
  return step_of(steps[static_cast<std::size_t>(i)]);
}

LatticePath realize_lift(const CyclicWord& w) {
  if (w.letters.empty()) throw Error(Errc::empty_word, "empty word");
  LatticePath p;
  p.steps = w.letters;
  switch (w.letters.front()) {
    case Letter::b: p.start = {-1, 1}; break;
    case Letter::B: p.start = {1, 1}; break;
    case Letter::a: p.start = {1, -1}; break;
    case Letter::A: p.start = {1, 1}; break;
  }
  for (Letter x : w.letters) {
    if (is_beta(x)) p.b += sign(x);
    else p.a += sign(x);
  }
  p.corner_cache = p.corners();
  return p;
}

BigInt shoelace8(const std::vector<P2>& pts) {
  BigInt s = 0;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const P2& p = pts[i];
    const P2& r = pts[(i + 1) % n];
    s += BigInt(p.x) * r.y - BigInt(r.x) * p.y;
  }
  return s;
}

Rational polygon_area(const std::vector<P2>& pts) { return frac(shoelace8(pts), 8); }

std::string torus_point_string(P2 p) {
  auto c = [](long long v) { return pos_mod(v, 2) ? std::string("1/2") : std::string("0"); };
  return "(" + c(p.x) + "," + c(p.y) + ")";
}

SymPoints fixed_points(const CyclicWord& w) {
  auto off = symmetry_offset(w);
  if (!off) throw Error(Errc::not_symmetric, "curve is not fixed by the elliptic involution: " + to_string(w));
  CurveClass cc = curve_class(w);
  if (cc.type == HstType::none)
    throw Error(Errc::parity_undefined, "alpha and beta counts both even; labeling undefined: " + to_string(w));
  const auto L = static_cast<long long>(w.size());
  const LatticePath lift = realize_lift(w);
  long long ta = pos_mod(static_cast<long long>(*off) + 1, 2 * L);
  long long tb = pos_mod(ta + L, 2 * L);
  for (long long t : {ta, tb}) {
    P2 c = lift.at(t);
    for (long long u = 0; u <= 2 * L; ++u)
      if (lift.at(t + u) + lift.at(t - u) != 2 * c)
        throw Error(Errc::internal, "fixed point postcondition failed for " + to_string(w));
  }
  auto qualifies = [&](long long t) {
    P2 p = lift.at(t);
    bool int_x = pos_mod(p.x, 2) == 0, half_y = pos_mod(p.y, 2) == 1;
    switch (cc.type) {
      case HstType::alpha: return int_x;
      case HstType::beta: return half_y;
      case HstType::alphabeta: return int_x && half_y;
      case HstType::none: break;
    }
    return false;
  };
  bool qa = qualifies(ta), qb = qualifies(tb);
  if (qa == qb) throw Error(Errc::internal, "fixed points cannot be labeled: " + to_string(w));
  SymPoints sp;
  sp.type = cc.type;
  sp.t0 = qa ? ta : tb;
  sp.t1 = qa ? tb : ta;
  if (sp.t1 < sp.t0) sp.t1 += 2 * L;
  auto reduce = [](P2 p) { return P2{pos_mod(p.x, 2), pos_mod(p.y, 2)}; };
  sp.x0 = reduce(lift.at(sp.t0));
  sp.x1 = reduce(lift.at(sp.t1));
  return sp;
}

DeltaSymDetail delta_sym_detail(const CyclicWord& w) {
  DeltaSymDetail d;
  d.sym = fixed_points(w);
  const LatticePath lift = realize_lift(w);
  const long long L2 = lift.half_len();
  d.polygon = lift.points(d.sym.t0, d.sym.t1);
  BigInt fwd = shoelace8(d.polygon);
  BigInt back = shoelace8(lift.points(d.sym.t0, d.sym.t1 - L2));
  if (fwd != back) throw Error(Errc::internal, "half paths disagree for " + to_string(w));
  d.value = frac(fwd, 4);
  return d;
}

std::size_t distinguished_component(const MultiCurve& mc) {
  // equal words pair off under the involution; the fixed one has odd multiplicity
  std::optional<std::size_t> hit;
  for (std::size_t i = 0; i < mc.size(); ++i) {
    if (i > 0 && mc[i] == mc[i - 1]) continue;
    std::size_t mult = 1;
    while (i + mult < mc.size() && mc[i + mult] == mc[i]) ++mult;
    if (mult % 2 == 0) continue;
    CurveClass c = curve_class(mc[i]);
    if (c.a == 0 && c.b == 0) continue;
    if (!symmetry_offset(mc[i])) continue;
    if (hit) throw Error(Errc::not_unique, "distinguished curve not unique");
    hit = i;
  }
  if (!hit) throw Error(Errc::no_distinguished, "no homologically nontrivial symmetric component");
  return *hit;
}

Rational delta_sym_tree(const RootedTree& t) {
  MultiCurve mc = invariant(t);
  return delta_sym(mc[distinguished_component(mc)]);
}

std::vector<Generator> pairing_generators(const CyclicWord& w, std::size_t component) {
  const std::size_t L = w.size();
  std::vector<std::size_t> al;
  for (std::size_t i = 0; i < L; ++i)
    if (is_alpha(w.letters[i])) al.push_back(i);
  if (!al.empty() && al.size() == L)
    throw Error(Errc::degenerate_alpha, "component is a pure alpha power: " + to_string(w));
  const LatticePath lift = realize_lift(w);
  const long long am = lift.a < 0 ? -lift.a : lift.a;
  std::vector<Generator> gens;
  for (std::size_t g = 0; g < al.size(); ++g) {
    std::size_t i = al[g];
    std::size_t j = g + 1 < al.size() ? al[g + 1] : al[0] + L;
    if (w.letters[i] != w.letters[j % L]) continue;
    Generator x;
    x.component = component;
    x.alpha_in = i;
    x.alpha_out = j % L;
    long long k = static_cast<long long>(j - i - 1);
    x.t = pos_mod(2 * static_cast<long long>(i + 1) + k, lift.half_len());
    x.pos = lift.at(x.t);
    x.dir = sign(w.letters[i]);
    x.height_class = am == 0 ? 0 : pos_mod((x.pos.y - 1) / 2, am);
    gens.push_back(x);
  }
  std::sort(gens.begin(), gens.end(), [](const Generator& p, const Generator& q) { return p.t < q.t; });
  for (std::size_t i = 0; i < gens.size(); ++i) gens[i].index = i;
  return gens;
}

std::vector<Generator> pairing_generators(const MultiCurve& mc) {
  std::vector<Generator> all;
  for (std::size_t c = 0; c < mc.size(); ++c) {
    auto g = pairing_generators(mc[c], c);
    all.insert(all.end(), g.begin(), g.end());
  }
  return all;
}

std::vector<SpincClass> spinc_ranks(const MultiCurve& mc) {
  std::vector<SpincClass> out;
  for (std::size_t c = 0; c < mc.size(); ++c) {
    CurveClass cc = curve_class(mc[c]);
    auto gens = pairing_generators(mc[c], c);
    if (cc.a == 0 && cc.b != 0)
      throw Error(Errc::zero_alpha, "signed alpha count is 0; filling is not a rational homology sphere");
    long long m = cc.a < 0 ? -cc.a : cc.a;
    if (m == 0) m = 1;
    std::vector<long long> ranks(static_cast<std::size_t>(m), 0);
    for (const auto& g : gens) ++ranks[static_cast<std::size_t>(g.height_class)];
    for (long long r = 0; r < m; ++r) out.push_back({c, r, ranks[static_cast<std::size_t>(r)]});
  }
  return out;
}

MultiCurve vertical_sum_merge(const CyclicWord& w1, const CyclicWord& w2) {
  MergeInputs in = orient_merge_inputs(w1, w2);
  const auto n1 = static_cast<long long>(in.rows.size());
  std::vector<long long> pre(in.rows.size() + 1, 0);
  for (std::size_t j = 0; j < in.rows.size(); ++j) pre[j + 1] = pre[j] + in.rows[j].k;
  const long long M1 = pre.back();
  auto delta = [&](long long j) {
    return pre[static_cast<std::size_t>(pos_mod(j, n1))] + floor_div(j, n1) * M1;
  };

  Word W = loop_expand(in.cols);
  long long n2 = 0;
  for (Letter x : W)
    if (is_beta(x)) n2 += sign(x);
  MultiCurve out;
  auto first_beta = std::find_if(W.begin(), W.end(), is_beta);
  if (first_beta == W.end()) {
    for (long long i = 0; i < n1; ++i) out.push_back(canonicalize(W));
    return out;
  }
  std::rotate(W.begin(), first_beta, W.end());
  const long long g = std::gcd(n1, n2);
  const long long laps = n2 == 0 ? 1 : std::lcm(n1, n2) / n2;

  for (long long shift = 0; shift < g; ++shift) {
    struct H {
      Letter x;
      long long col;
      long long run;  // alpha exponent after this letter
    };
    std::vector<H> hs;
    long long xc2 = 2 * shift - 1;  // doubled corner x
    for (long long lap = 0; lap < laps; ++lap) {
      for (Letter x : W) {
        if (is_beta(x)) {
          long long col = x == Letter::b ? (xc2 + 1) / 2 : (xc2 - 1) / 2;
          hs.push_back({x, col, 0});
          xc2 += 2 * sign(x);
        } else {
          hs.back().run += sign(x);
        }
      }
    }
    const long long wrap_col = hs.front().col + laps * n2;
    Word res;
    for (std::size_t h = 0; h < hs.size(); ++h) {
      res.push_back(hs[h].x);
      long long next = h + 1 < hs.size() ? hs[h + 1].col : wrap_col;
      long long e = hs[h].run + delta(next) - delta(hs[h].col);
      for (long long k = 0; k < (e < 0 ? -e : e); ++k) res.push_back(e > 0 ? Letter::a : Letter::A);
    }
    out.push_back(canonicalize(res));
  }
  sort_components(out);
  return out;
}

bool lift_embedded(const CyclicWord& w) {
  const LatticePath lift = realize_lift(w);
  const long long laps = 8;
  std::set<P2> seen;
  for (long long t = 0; t < laps * lift.half_len(); t += 2)
    if (!seen.insert(lift.at(t)).second) return false;
  return true;
}

}  // namespace pc
