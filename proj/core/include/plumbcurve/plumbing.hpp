#pragma once
// Rooted plumbing trees, elementary moves, reduction, decomposition into
// build plans, intersection form and slope r_*.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plumbcurve/rational.hpp"

namespace pc {

struct Vertex {
  std::string id;
  long long weight = 0;
};

struct RootedTree {
  std::vector<Vertex> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::string root;

  std::size_t size() const { return vertices.size(); }
  // index of id in vertices; -1 when absent
  int index_of(const std::string& id) const;
  int root_index() const { return index_of(root); }
  long long weight_of(const std::string& id) const;
  // adjacency lists by vertex index
  std::vector<std::vector<int>> adjacency() const;
};

// throws pc::Error (input codes) on violation
void validate(const RootedTree& t);

RootedTree parse_tree(const std::string& text);
std::string tree_to_json(const RootedTree& t);

RootedTree twist(const RootedTree& t, long long m);
RootedTree extend(const RootedTree& t);
RootedTree merge(const RootedTree& a, const RootedTree& b);

struct ReduceResult {
  RootedTree tree;
  bool reduced = true;
  std::vector<std::string> blocking;  // vertices violating reducedness that no rule removes
};

bool is_reduced(const RootedTree& t);
ReduceResult reduce_tree(const RootedTree& t);

struct Plan;
using PlanPtr = std::shared_ptr<const Plan>;

struct Plan {
  enum class Kind { Base, Twist, Extend, Merge };
  Kind kind = Kind::Base;
  long long m = 0;
  PlanPtr left;   // child for Twist/Extend, first input for Merge
  PlanPtr right;  // second input for Merge
};

PlanPtr make_base();
PlanPtr make_twist(long long m, PlanPtr child);
PlanPtr make_extend(PlanPtr child);
PlanPtr make_merge(PlanPtr a, PlanPtr b);

PlanPtr decompose(const RootedTree& t);
RootedTree evaluate(const PlanPtr& p);
std::string plan_to_string(const PlanPtr& p);

// canonical code of the rooted weighted tree; equal codes iff isomorphic
std::string canonical_code(const RootedTree& t);
bool isomorphic(const RootedTree& a, const RootedTree& b);

struct IntForm {
  std::vector<std::string> ids;
  std::vector<std::vector<long long>> q;
};

IntForm intersection_form(const RootedTree& t);

struct DetSig {
  BigInt det;
  int signature = 0;
  int positive = 0;
  int negative = 0;
  int nullity = 0;
};

DetSig det_and_signature(const std::vector<std::vector<long long>>& q);
inline DetSig det_and_signature(const IntForm& f) { return det_and_signature(f.q); }

// Q u {inf}
struct Slope {
  bool infinite = false;
  Rational value;
};

std::string to_string(const Slope& s);

struct RStar {
  Slope slope;
  std::vector<long long> stripped;  // a_n first (the root), then toward v_*
  long long a0 = 0;
  std::string v_star;
};

RStar r_star_detail(const RootedTree& t);
inline Slope r_star(const RootedTree& t) { return r_star_detail(t).slope; }

}  // namespace pc
