#pragma once
// Rotation numbers, winding areas and relative gradings of pairing generators.

#include <optional>
#include <vector>

#include "plumbcurve/geometry.hpp"

namespace pc {

struct CurveSegmentPath {
  std::vector<P2> pts;      // doubled coordinates, axis-parallel steps
  std::optional<P2> start;  // tangent entering the first point
  std::optional<P2> end;    // tangent leaving the last point
};

// sum of +-1/2 per quarter turn (left positive); throws interior_reversal
Rational rotation_number(const CurveSegmentPath& p);
// front() == back() required; throws not_closed
Rational enclosed_area(const std::vector<P2>& closed);

// the arc of the lift from x forward to the next lift of y, with vertical tangents
CurveSegmentPath rho_path(const LatticePath& lift, const Generator& x, const Generator& y);

Rational grading_diff_same_spinc(const CyclicWord& w, const Generator& x, const Generator& y);

struct GradingTerms {
  long long n = 1, ell = 0;
  Rational a_xy, b_xy, k;
  Rational area, rot, rot_rho, rot_gamma;
  Rational value;
  std::vector<P2> polygon;
};
GradingTerms grading_diff_general_detail(const CyclicWord& w, const Generator& x, const Generator& y);
inline Rational grading_diff_general(const CyclicWord& w, const Generator& x, const Generator& y) {
  return grading_diff_general_detail(w, x, y).value;
}

struct FixedGrading {
  Rational area, rot, value;
};
FixedGrading grading_diff_fixed_detail(const CyclicWord& w);
inline Rational grading_diff_fixed(const CyclicWord& w) { return grading_diff_fixed_detail(w).value; }

// generator sitting at the fixed point with parameter t (mod 2L); nullopt if none
std::optional<Generator> generator_at(const std::vector<Generator>& gens, long long t, long long half_len);

// value d left over when the rest pairs up as (g, g+1); smallest such d
std::optional<Rational> unpaired_grading(std::vector<Rational> gradings);

struct DeltaD {
  Rational value;
  bool lspace = false;
  bool embedded = false;
  Rational delta_sym;
  std::optional<Rational> d0, d1;  // per self-conjugate class, outside the L-space case
};
DeltaD delta_d(const RootedTree& t);

}  // namespace pc
