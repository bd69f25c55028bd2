#include "plumbcurve/svg.hpp"

#include <algorithm>
#include <sstream>

#include "plumbcurve/errors.hpp"
#include "plumbcurve/geometry.hpp"
#include "plumbcurve/loopcalc.hpp"

namespace pc {

namespace {

constexpr long long kScale = 20;  // px per doubled unit
constexpr long long kPad = 3;     // doubled units
const char* kPalette[] = {"#1f4e79", "#7a3b69", "#2e7d32", "#b35c00", "#455a64", "#8d6e63"};

long long is_left(std::pair<long long, long long> a, std::pair<long long, long long> b, long long px, long long py) {
  return (b.first - a.first) * (py - a.second) - (px - a.first) * (b.second - a.second);
}

}  // namespace

long long cell_winding(const std::vector<std::pair<long long, long long>>& poly, long long x, long long y) {
  // quadrupled coordinates keep the cell centre integral
  const long long px = 2 * x + 1, py = 2 * y + 1;
  long long wn = 0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    auto a = poly[i], b = poly[(i + 1) % n];
    a = {2 * a.first, 2 * a.second};
    b = {2 * b.first, 2 * b.second};
    if (a.second <= py) {
      if (b.second > py && is_left(a, b, px, py) > 0) ++wn;
    } else if (b.second <= py && is_left(a, b, px, py) < 0) {
      --wn;
    }
  }
  return wn;
}

std::string render_svg(const MultiCurve& mc, const SvgOptions& o) {
  if (o.periods < 1) throw Error(Errc::bad_argument, "periods must be at least 1");
  std::vector<std::vector<P2>> curves;
  std::vector<LatticePath> lifts;
  for (const auto& w : mc) {
    lifts.push_back(realize_lift(w));
    curves.push_back(lifts.back().points(0, o.periods * lifts.back().half_len()));
  }
  std::optional<std::size_t> dist;
  std::optional<DeltaSymDetail> ds;
  if (o.shade || o.markers) {
    try {
      dist = distinguished_component(mc);
      ds = delta_sym_detail(mc[*dist]);
    } catch (const Error&) {
      ds.reset();
    }
  }

  long long x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  bool first = true;
  auto grow = [&](P2 p) {
    if (first) {
      x0 = x1 = p.x;
      y0 = y1 = p.y;
      first = false;
    }
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  };
  for (const auto& c : curves)
    for (P2 p : c) grow(p);
  if (ds)
    for (P2 p : ds->polygon) grow(p);
  x0 -= kPad;
  y0 -= kPad;
  x1 += kPad;
  y1 += kPad;
  const long long W = (x1 - x0) * kScale, H = (y1 - y0) * kScale;
  auto X = [&](long long x) { return (x - x0) * kScale; };
  auto Y = [&](long long y) { return (y1 - y) * kScale; };

  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W
    << " " << H << "\">\n";
  s << "<rect x=\"0\" y=\"0\" width=\"" << W << "\" height=\"" << H << "\" fill=\"#ffffff\"/>\n";
  s << "<g id=\"grid\" stroke=\"#e0e0e0\" stroke-width=\"1\">\n";
  for (long long x = x0; x <= x1; ++x)
    if (x % 2 != 0) s << "<line x1=\"" << X(x) << "\" y1=\"0\" x2=\"" << X(x) << "\" y2=\"" << H << "\"/>\n";
  for (long long y = y0; y <= y1; ++y)
    if (y % 2 != 0) s << "<line x1=\"0\" y1=\"" << Y(y) << "\" x2=\"" << W << "\" y2=\"" << Y(y) << "\"/>\n";
  s << "</g>\n";

  if (o.shade && ds) {
    std::vector<std::pair<long long, long long>> poly;
    for (P2 p : ds->polygon) poly.emplace_back(p.x, p.y);
    s << "<g id=\"delta-sym\" stroke=\"none\" data-value=\"" << to_string(ds->value) << "\">\n";
    for (long long y = y0; y < y1; ++y)
      for (long long x = x0; x < x1; ++x) {
        long long wn = cell_winding(poly, x, y);
        if (wn == 0) continue;
        const char* col = wn > 0 ? "#4a90d9" : "#d9534f";
        long long mag = wn < 0 ? -wn : wn;
        s << "<rect x=\"" << X(x) << "\" y=\"" << Y(y + 1) << "\" width=\"" << kScale << "\" height=\"" << kScale
          << "\" fill=\"" << col << "\" fill-opacity=\"" << (mag > 1 ? "0.6" : "0.35") << "\"/>\n";
      }
    s << "</g>\n";
  }

  s << "<g id=\"punctures\" fill=\"#000000\">\n";
  for (long long y = y0; y <= y1; ++y)
    for (long long x = x0; x <= x1; ++x)
      if (x % 2 == 0 && y % 2 == 0) s << "<circle cx=\"" << X(x) << "\" cy=\"" << Y(y) << "\" r=\"3\"/>\n";
  s << "</g>\n";

  for (std::size_t c = 0; c < curves.size(); ++c) {
    s << "<polyline id=\"curve-" << c << "\" fill=\"none\" stroke=\"" << kPalette[c % 6]
      << "\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < curves[c].size(); ++i) {
      if (i) s << " ";
      s << X(curves[c][i].x) << "," << Y(curves[c][i].y);
    }
    s << "\"/>\n";
  }

  if (o.mark_generators) {
    s << "<g id=\"generators\" fill=\"#000000\">\n";
    for (std::size_t c = 0; c < mc.size(); ++c) {
      std::vector<Generator> gens;
      try {
        gens = pairing_generators(mc[c], c);
      } catch (const Error&) {
        continue;
      }
      for (const auto& g : gens)
        s << "<rect x=\"" << X(g.pos.x) - 4 << "\" y=\"" << Y(g.pos.y) - 4 << "\" width=\"8\" height=\"8\"/>\n";
    }
    s << "</g>\n";
  }

  if (o.markers && ds) {
    const LatticePath& lift = lifts[*dist];
    P2 a = lift.at(ds->sym.t0), b = lift.at(ds->sym.t1);
    s << "<circle id=\"x0\" cx=\"" << X(a.x) << "\" cy=\"" << Y(a.y) << "\" r=\"6\" fill=\"#000000\"/>\n";
    s << "<circle id=\"x1\" cx=\"" << X(b.x) << "\" cy=\"" << Y(b.y)
      << "\" r=\"6\" fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
  }
  s << "</svg>\n";
  return s.str();
}

std::string render_svg(const RootedTree& t, const SvgOptions& o) { return render_svg(invariant(t), o); }

}  // namespace pc
