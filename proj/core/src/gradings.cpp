#include "plumbcurve/gradings.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "plumbcurve/errors.hpp"

namespace pc {

namespace {

P2 unit(P2 d) {
  if (d.x != 0 && d.y != 0) throw Error(Errc::bad_argument, "path is not rectilinear");
  return {(d.x > 0) - (d.x < 0), (d.y > 0) - (d.y < 0)};
}

long long cross(P2 p, P2 q) { return p.x * q.y - p.y * q.x; }
long long dot(P2 p, P2 q) { return p.x * q.x + p.y * q.y; }

}  // namespace

Rational rotation_number(const CurveSegmentPath& p) {
  std::vector<P2> dirs;
  if (p.start) dirs.push_back(unit(*p.start));
  for (std::size_t i = 0; i + 1 < p.pts.size(); ++i) {
    P2 d = p.pts[i + 1] - p.pts[i];
    if (d.x == 0 && d.y == 0) continue;
    dirs.push_back(unit(d));
  }
  if (p.end) dirs.push_back(unit(*p.end));
  long long halves = 0;
  for (std::size_t i = 0; i + 1 < dirs.size(); ++i) {
    long long c = cross(dirs[i], dirs[i + 1]);
    if (c > 0) ++halves;
    else if (c < 0) --halves;
    else if (dot(dirs[i], dirs[i + 1]) < 0) throw Error(Errc::interior_reversal, "path reverses direction");
  }
  return q(halves, 2);
}

Rational enclosed_area(const std::vector<P2>& closed) {
  if (closed.size() < 2 || closed.front() != closed.back()) throw Error(Errc::not_closed, "path is not closed");
  return polygon_area(std::vector<P2>(closed.begin(), closed.end() - 1));
}

CurveSegmentPath rho_path(const LatticePath& lift, const Generator& x, const Generator& y) {
  long long ty = y.t;
  while (ty <= x.t) ty += lift.half_len();
  CurveSegmentPath p;
  p.pts = lift.points(x.t, ty);
  p.start = P2{0, x.dir};
  p.end = P2{0, y.dir};
  return p;
}

Rational grading_diff_same_spinc(const CyclicWord& w, const Generator& x, const Generator& y) {
  const LatticePath lift = realize_lift(w);
  const long long L2 = lift.half_len();
  const long long dh = x.pos.y - y.pos.y;
  long long laps = 0;
  if (lift.a == 0) {
    if (dh != 0) throw Error(Errc::different_spinc, "generators lie in different spin-c classes");
  } else {
    if (dh % (2 * lift.a) != 0) throw Error(Errc::different_spinc, "generators lie in different spin-c classes");
    laps = dh / (2 * lift.a);
  }
  const long long ty = y.t + laps * L2;
  if (ty == x.t) return 0;
  const int s = ty > x.t ? 1 : -1;
  CurveSegmentPath p;
  p.pts = lift.points(x.t, ty);
  p.start = P2{0, s * x.dir};
  p.end = P2{0, s * y.dir};
  return 2 * polygon_area(p.pts) - rotation_number(p);
}

GradingTerms grading_diff_general_detail(const CyclicWord& w, const Generator& x, const Generator& y) {
  const LatticePath lift = realize_lift(w);
  if (lift.a == 0) throw Error(Errc::zero_alpha, "signed alpha count is 0");
  const long long L2 = lift.half_len();
  GradingTerms g;
  CurveSegmentPath rho = rho_path(lift, x, y);
  const P2 p0 = rho.pts.front();
  const P2 disp = rho.pts.back() - p0;
  const long long axy = disp.y / 2;
  g.a_xy = axy;
  g.b_xy = q(disp.x, 2);
  if (axy != 0) {
    long long ag = lift.a < 0 ? -lift.a : lift.a;
    g.n = ag / std::gcd(axy < 0 ? -axy : axy, ag);
    g.ell = g.n * axy / lift.a;
  }
  const long long k2 = g.n * disp.x - g.ell * 2 * lift.b;
  g.k = q(k2, 2);

  for (long long j = 0; j < g.n; ++j)
    for (std::size_t i = (j == 0 ? 0 : 1); i < rho.pts.size(); ++i) g.polygon.push_back(rho.pts[i] + j * disp);
  // horizontal run to the lap endpoint, then laps of the curve back to p0
  auto back = lift.points(x.t + g.ell * L2, x.t);
  g.polygon.insert(g.polygon.end(), back.begin(), back.end());
  g.polygon.pop_back();

  CurveSegmentPath lap;
  lap.pts = lift.points(x.t, x.t + L2);
  lap.start = P2{0, x.dir};
  lap.end = P2{0, x.dir};
  g.rot_rho = rotation_number(rho);
  g.rot_gamma = rotation_number(lap);
  g.rot = g.n * g.rot_rho - g.ell * g.rot_gamma;
  g.area = polygon_area(g.polygon);
  g.value = (2 * g.area - g.rot - (g.n - 1) * g.k * g.a_xy) / g.n;
  return g;
}

std::optional<Generator> generator_at(const std::vector<Generator>& gens, long long t, long long half_len) {
  long long r = ((t % half_len) + half_len) % half_len;
  for (const auto& g : gens)
    if (g.t == r) return g;
  return std::nullopt;
}

FixedGrading grading_diff_fixed_detail(const CyclicWord& w) {
  const SymPoints sp = fixed_points(w);
  const LatticePath lift = realize_lift(w);
  const long long L2 = lift.half_len();
  auto gens = pairing_generators(w);
  auto g0 = generator_at(gens, sp.t0, L2);
  auto g1 = generator_at(gens, sp.t1, L2);
  if (!g0 || !g1) throw Error(Errc::not_type_alpha, "fixed points are not both generators (not type alpha)");
  CurveSegmentPath rho;
  rho.pts = lift.points(sp.t0, sp.t1);
  rho.start = P2{0, g0->dir};
  rho.end = P2{0, g1->dir};
  auto comp = lift.points(sp.t1, sp.t0 + L2);
  std::reverse(comp.begin(), comp.end());
  const P2 shift = lift.at(sp.t1) - lift.at(sp.t0 + L2);
  std::vector<P2> poly = rho.pts;
  for (std::size_t i = 1; i < comp.size(); ++i) poly.push_back(comp[i] + shift);
  FixedGrading f;
  f.area = enclosed_area(poly);
  f.rot = rotation_number(rho);
  f.value = f.area - f.rot;
  return f;
}

std::optional<Rational> unpaired_grading(std::vector<Rational> gs) {
  std::sort(gs.begin(), gs.end());
  std::vector<Rational> cand = gs;
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  for (const auto& d : cand) {
    std::map<Rational, long long> cnt;
    for (const auto& v : gs) ++cnt[v];
    if (--cnt[d] == 0) cnt.erase(d);
    bool ok = true;
    while (ok && !cnt.empty()) {
      auto it = cnt.begin();
      Rational v = it->first;
      if (--it->second == 0) cnt.erase(it);
      auto nx = cnt.find(v + 1);
      if (nx == cnt.end()) ok = false;
      else if (--nx->second == 0) cnt.erase(nx);
    }
    if (ok) return d;
  }
  return std::nullopt;
}

DeltaD delta_d(const RootedTree& t) {
  MultiCurve mc = invariant(t);
  const CyclicWord& w = mc[distinguished_component(mc)];
  if (curve_class(w).type != HstType::alpha)
    throw Error(Errc::not_type_alpha, "distinguished curve is not of type alpha");
  DetSig ds = det_and_signature(intersection_form(t));
  if (ds.det == 0) throw Error(Errc::det_zero, "determinant is zero");
  DeltaD out;
  out.delta_sym = delta_sym(w);
  out.embedded = lift_embedded(w);
  BigInt absdet = ds.det < 0 ? BigInt(-ds.det) : ds.det;
  out.lspace = BigInt(pairing_generators(mc).size()) == absdet;
  if (out.lspace) {
    out.value = out.delta_sym;
    return out;
  }
  const SymPoints sp = fixed_points(w);
  const long long L2 = 2 * static_cast<long long>(w.size());
  auto gens = pairing_generators(w);
  auto g0 = generator_at(gens, sp.t0, L2);
  auto g1 = generator_at(gens, sp.t1, L2);
  if (!g0 || !g1) throw Error(Errc::not_type_alpha, "fixed points are not both generators");
  auto class_d = [&](long long cls) {
    std::vector<Rational> gr;
    for (const auto& y : gens)
      if (y.height_class == cls) gr.push_back(grading_diff_general(w, *g0, y));
    auto d = unpaired_grading(gr);
    if (!d) throw Error(Errc::internal, "gradings of a self-conjugate class do not pair up");
    return *d;
  };
  out.d0 = class_d(g0->height_class);
  out.d1 = class_d(g1->height_class);
  out.value = *out.d1 - *out.d0;
  return out;
}

}  // namespace pc
