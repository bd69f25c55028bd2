#pragma once
// Relative Wu sets over F2, Wu types, delta mu-bar.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "plumbcurve/plumbing.hpp"
#include "plumbcurve/words.hpp"

namespace pc {

struct RelWuSet {
  std::vector<bool> member;  // by vertex index
  int type = 0;              // 1 iff root in set
  bool balanced = false;

  std::vector<std::string> ids(const RootedTree& t) const;  // sorted
  long long weight_sum(const RootedTree& t) const;
};

std::vector<RelWuSet> enumerate_relative_wu(const RootedTree& t);
// 2^|V| subset scan; test oracle
std::vector<RelWuSet> brute_force_relative_wu(const RootedTree& t);

// solutions of Q(S, w) = n_w mod 2 for every vertex w (root ignored)
std::vector<std::vector<bool>> wu_sets(const RootedTree& t);

// (#balanced type 0, #balanced type 1, #unbalanced type 0, #unbalanced type 1)
using WuType = std::array<long long, 4>;
WuType wu_type(const std::vector<RelWuSet>& sets);
inline WuType wu_type(const RootedTree& t) { return wu_type(enumerate_relative_wu(t)); }
std::string to_string(const WuType& w);
HstType hst_of_wu(const WuType& w);  // none when not one of the three shapes with k = 1

struct DeltaMubar {
  long long value = 0;
  WuType type{};
  RelWuSet s0, s1;
  std::optional<long long> mubar0, mubar1;  // when the set is balanced
};

DeltaMubar delta_mubar_detail(const RootedTree& t);
inline long long delta_mubar(const RootedTree& t) { return delta_mubar_detail(t).value; }

// sigma(Q) - Q(S,S); throws bad_argument when S is not a Wu set
long long mubar_closed(const RootedTree& t, const std::vector<bool>& s);

std::string choose_type_alpha_root(const RootedTree& t);

}  // namespace pc
