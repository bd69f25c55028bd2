#pragma once
#include <string>
#include <utility>
#include <vector>

#include "plumbcurve/plumbing.hpp"
#include "plumbcurve/words.hpp"

namespace pc {

struct SvgOptions {
  int periods = 1;
  bool shade = true;            // delta_sym region of the distinguished curve
  bool markers = true;          // x0 solid, x1 hollow
  bool mark_generators = false;
};

std::string render_svg(const MultiCurve& mc, const SvgOptions& o = {});
std::string render_svg(const RootedTree& t, const SvgOptions& o = {});

// winding number of a closed polygon (doubled coordinates) around the centre
// of the doubled unit cell with lower-left corner (x, y)
long long cell_winding(const std::vector<std::pair<long long, long long>>& poly, long long x, long long y);

}  // namespace pc
