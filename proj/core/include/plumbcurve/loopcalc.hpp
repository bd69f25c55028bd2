#pragma once
// Word operations matching the tree moves, and the tree -> multicurve builder.

#include "plumbcurve/plumbing.hpp"
#include "plumbcurve/words.hpp"

namespace pc {

// letterwise: b -> b a^-m, B -> a^m B
CyclicWord twist_letters(const CyclicWord& w, long long m);
// loopwise: c_k -> c_{k-m}, cc_k -> cc_{k-m}
CyclicWord twist_loop(const CyclicWord& w, long long m);
CyclicWord extend_word(const CyclicWord& w);

MultiCurve twist_op(const MultiCurve& mc, long long m);
MultiCurve extend_op(const MultiCurve& mc);

// grid merge of two single curves; throws Errc::merge_precondition
MultiCurve merge_op(const CyclicWord& w1, const CyclicWord& w2);
// one side must be a single all-c curve
MultiCurve merge_op(const MultiCurve& x, const MultiCurve& y);

// orients inputs as merge_op does: rows is all-c, other has signed c-count >= 0
struct MergeInputs {
  LoopWord rows;
  LoopWord cols;
};
MergeInputs orient_merge_inputs(const CyclicWord& w1, const CyclicWord& w2);

MultiCurve evaluate_words(const PlanPtr& p);
MultiCurve invariant(const RootedTree& t);

inline MultiCurve single(const CyclicWord& w) { return MultiCurve{w}; }

}  // namespace pc
