#pragma once
// L-space check, random rooted trees and the batch identity check.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "plumbcurve/plumbing.hpp"

namespace pc {

bool is_lspace(const RootedTree& t);  // throws det_zero

namespace fixtures {
RootedTree T0();
RootedTree T1();
RootedTree TA();
RootedTree TB();
}  // namespace fixtures

struct RandomTreeOptions {
  long long min_vertices = 2;
  long long max_vertices = 10;
  long long weight_lo = -6, weight_hi = -2;       // non-root
  long long root_lo = -5, root_hi = 5;
  bool root_at_leaf = true;
};
RootedTree random_tree(std::mt19937_64& rng, const RandomTreeOptions& o);

std::string digest(const RootedTree& t);  // 16 hex digits of the canonical code

enum class Gate { reduced, two_wu, merge, det_nonzero, lspace, rstar };
const char* gate_name(Gate g);
inline constexpr Gate kGateOrder[] = {Gate::reduced, Gate::two_wu, Gate::merge,
                                      Gate::det_nonzero, Gate::lspace, Gate::rstar};

struct Instance {
  std::size_t index = 0;
  std::string label;  // "T1", "TA", "TB", or "random"
  RootedTree tree;
  std::vector<std::pair<Gate, bool>> gates;  // evaluated prefix, in order
  bool passed = false;                       // all gates
  std::optional<Rational> delta_sym;
  std::optional<long long> delta_mubar;
  std::optional<bool> identity;  // present when checked
  std::string error;
};

Instance evaluate_instance(const RootedTree& t, std::string label, bool force_identity);

struct VerifyReport {
  std::uint64_t seed = 0;
  long long count = 0, max_vertices = 0;
  std::vector<Instance> instances;
  long long generated = 0, rejected = 0, passed = 0, violations = 0;
  bool aborted = false;
  std::vector<std::pair<Gate, long long>> filtered;
};

VerifyReport run_verify_batch(std::uint64_t seed, long long count, long long max_vertices);
std::string report_json(const VerifyReport& r);

}  // namespace pc
