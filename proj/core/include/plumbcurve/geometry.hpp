#pragma once
// Lattice lifts of cyclic words. All coordinates are doubled: a puncture sits
// at (even, even), a path corner at (odd, odd). Path parameters count
// half-steps, so letter i spans [2i, 2i+2].

#include <optional>
#include <string>
#include <vector>

#include "plumbcurve/loopcalc.hpp"
#include "plumbcurve/rational.hpp"
#include "plumbcurve/words.hpp"

namespace pc {

struct P2 {
  long long x = 0, y = 0;
  friend bool operator==(const P2&, const P2&) = default;
  friend auto operator<=>(const P2&, const P2&) = default;
};
inline P2 operator+(P2 p, P2 q) { return {p.x + q.x, p.y + q.y}; }
inline P2 operator-(P2 p, P2 q) { return {p.x - q.x, p.y - q.y}; }
inline P2 operator*(long long k, P2 p) { return {k * p.x, k * p.y}; }

P2 step_of(Letter x);  // unit direction, not doubled

struct LatticePath {
  P2 start;        // doubled
  Word steps;
  long long b = 0;  // period (b, a), undoubled
  long long a = 0;
  std::vector<P2> corner_cache;  // filled by realize_lift

  long long half_len() const { return 2 * static_cast<long long>(steps.size()); }
  // point at half-step parameter t (any integer)
  P2 at(long long t) const;
  std::vector<P2> corners() const;  // size + 1 points, one period
  // P(t0), every corner strictly between, P(t1); t1 may be below t0
  std::vector<P2> points(long long t0, long long t1) const;
  // travel direction at letter containing half-step (t, t+1)
  P2 direction_after(long long t) const;
};

LatticePath realize_lift(const CyclicWord& w);

// signed sum of cross products over the closed polygon, doubled coordinates
// (8 * signed area)
BigInt shoelace8(const std::vector<P2>& closed);
// exact area of a polygon given by doubled coordinates; closes implicitly
Rational polygon_area(const std::vector<P2>& pts);

struct SymPoints {
  P2 x0, x1;              // doubled, reduced into [0,2)^2
  long long t0 = 0, t1 = 0;  // parameters, 0 <= t0 < 2L, t0 < t1 < t0 + 2L
  HstType type = HstType::none;
};

SymPoints fixed_points(const CyclicWord& w);
std::string torus_point_string(P2 p);  // "(0,1/2)" style

struct DeltaSymDetail {
  Rational value;
  SymPoints sym;
  std::vector<P2> polygon;  // lifted half path x0 -> x1, chord implicit
};
DeltaSymDetail delta_sym_detail(const CyclicWord& w);
inline Rational delta_sym(const CyclicWord& w) { return delta_sym_detail(w).value; }

// index of the unique homologically nontrivial symmetric component
std::size_t distinguished_component(const MultiCurve& mc);
Rational delta_sym_tree(const RootedTree& t);

struct Generator {
  std::size_t component = 0;
  std::size_t index = 0;       // order along the component
  std::size_t alpha_in = 0;    // letter index of the flanking alpha before
  std::size_t alpha_out = 0;   // letter index of the flanking alpha after (mod L)
  long long t = 0;             // parameter of the segment midpoint, in [0, 2L)
  P2 pos;                      // doubled
  int dir = 1;                 // +1 flanked by alpha, -1 by alpha^-1
  long long height_class = 0;  // (height - 1/2) mod |a|; 0 when a == 0
};

std::vector<Generator> pairing_generators(const CyclicWord& w, std::size_t component = 0);
std::vector<Generator> pairing_generators(const MultiCurve& mc);

struct SpincClass {
  std::size_t component = 0;
  long long residue = 0;
  long long rank = 0;
  std::string label() const { return std::to_string(component) + ":" + std::to_string(residue); }
};
std::vector<SpincClass> spinc_ranks(const MultiCurve& mc);

MultiCurve vertical_sum_merge(const CyclicWord& w1, const CyclicWord& w2);

// no two corners of the lifted path coincide (checked over several periods)
bool lift_embedded(const CyclicWord& w);

}  // namespace pc
