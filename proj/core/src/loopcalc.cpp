#include "plumbcurve/loopcalc.hpp"

#include <map>
#include <numeric>

#include "plumbcurve/errors.hpp"

namespace pc {

using K = LoopLetter::Kind;

CyclicWord twist_letters(const CyclicWord& w, long long m) {
  Word out;
  auto alpha = [&](long long k) {
    for (long long i = 0; i < (k < 0 ? -k : k); ++i) out.push_back(k > 0 ? Letter::a : Letter::A);
  };
  for (Letter x : w.letters) {
    if (x == Letter::b) {
      out.push_back(x);
      alpha(-m);
    } else if (x == Letter::B) {
      alpha(m);
      out.push_back(x);
    } else {
      out.push_back(x);
    }
  }
  return canonicalize(out);
}

CyclicWord twist_loop(const CyclicWord& w, long long m) {
  LoopWord lw = loop_encode(w);
  for (auto& x : lw)
    if (x.kind == K::c || x.kind == K::cc) x.k -= m;
  return loop_decode(lw);
}

CyclicWord extend_word(const CyclicWord& w) {
  Word out;
  for (Letter x : w.letters) {
    switch (x) {
      case Letter::b: out.push_back(Letter::a); break;
      case Letter::a: out.push_back(Letter::B); break;
      case Letter::B: out.push_back(Letter::A); break;
      case Letter::A: out.push_back(Letter::b); break;
    }
  }
  return canonicalize(out);
}

MultiCurve twist_op(const MultiCurve& mc, long long m) {
  MultiCurve r;
  for (const auto& w : mc) r.push_back(twist_letters(w, m));
  sort_components(r);
  return r;
}

MultiCurve extend_op(const MultiCurve& mc) {
  MultiCurve r;
  for (const auto& w : mc) r.push_back(extend_word(w));
  sort_components(r);
  return r;
}

namespace {

long long signed_c(const LoopWord& lw) {
  long long n = 0;
  for (const auto& x : lw) {
    if (x.kind == K::c) ++n;
    if (x.kind == K::cc) --n;
  }
  return n;
}

// expansion of an encoding is cyclically reduced, so no canonicalization here
LoopWord inverted(const LoopWord& lw) { return loop_encode(CyclicWord{inverse(loop_expand(lw))}); }

// all-c after optional inversion
std::optional<LoopWord> as_rows(const LoopWord& lw) {
  if (all_c(lw)) return lw;
  if (all_cc(lw)) return inverted(lw);
  return std::nullopt;
}

}  // namespace

MergeInputs orient_merge_inputs(const CyclicWord& w1, const CyclicWord& w2) {
  LoopWord l1 = loop_encode(w1), l2 = loop_encode(w2);
  MergeInputs in;
  if (auto r = as_rows(l1)) {
    in.rows = *r;
    in.cols = l2;
  } else if (auto r2 = as_rows(l2)) {
    in.rows = *r2;
    in.cols = l1;
  } else {
    throw Error(Errc::merge_precondition,
                "merge requires one all-c input: " + to_string(w1) + " + " +
                    to_string(w2));
  }
  if (signed_c(in.cols) < 0) in.cols = inverted(in.cols);
  return in;
}

MultiCurve merge_op(const CyclicWord& w1, const CyclicWord& w2) {
  MergeInputs in = orient_merge_inputs(w1, w2);
  const auto n1 = static_cast<long long>(in.rows.size());
  const auto n2 = static_cast<long long>(in.cols.size());
  std::vector<long long> m(in.rows.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = in.rows[i].k;

  // state (column j, line i) -> visited
  std::vector<char> seen(static_cast<std::size_t>(n1 * n2), 0);
  MultiCurve out;
  for (long long j0 = 0; j0 < n2; ++j0) {
    for (long long i0 = 0; i0 < n1; ++i0) {
      if (seen[static_cast<std::size_t>(j0 * n1 + i0)]) continue;
      LoopWord lw;
      long long j = j0, i = i0;
      while (!seen[static_cast<std::size_t>(j * n1 + i)]) {
        seen[static_cast<std::size_t>(j * n1 + i)] = 1;
        const LoopLetter& x = in.cols[static_cast<std::size_t>(j)];
        switch (x.kind) {
          case K::a:
          case K::b: lw.push_back(x); break;
          case K::c:
            lw.push_back({K::c, x.k + m[static_cast<std::size_t>(i)]});
            i = (i + 1) % n1;
            break;
          case K::cc:
            i = (i + n1 - 1) % n1;
            lw.push_back({K::cc, x.k + m[static_cast<std::size_t>(i)]});
            break;
        }
        j = (j + 1) % n2;
      }
      if (j != j0 || i != i0) throw Error(Errc::internal, "grid transition is not a permutation");
      out.push_back(loop_decode(lw));
    }
  }
  sort_components(out);
  return out;
}

MultiCurve merge_op(const MultiCurve& x, const MultiCurve& y) {
  auto graph = [](const MultiCurve& mc) {
    return mc.size() == 1 && as_rows(loop_encode(mc[0])).has_value();
  };
  const MultiCurve* rows = nullptr;
  const MultiCurve* rest = nullptr;
  if (graph(x)) {
    rows = &x;
    rest = &y;
  } else if (graph(y)) {
    rows = &y;
    rest = &x;
  } else {
    throw Error(Errc::merge_precondition,
                "merge requires one all-c input: " + to_string(x) + " + " +
                    to_string(y));
  }
  MultiCurve out;
  for (const auto& w : *rest) {
    auto part = merge_op((*rows)[0], w);
    out.insert(out.end(), part.begin(), part.end());
  }
  sort_components(out);
  return out;
}

MultiCurve evaluate_words(const PlanPtr& p) {
  switch (p->kind) {
    case Plan::Kind::Base: return single(canonicalize({Letter::b}));
    case Plan::Kind::Twist: return twist_op(evaluate_words(p->left), p->m);
    case Plan::Kind::Extend: return extend_op(evaluate_words(p->left));
    case Plan::Kind::Merge: {
      auto a = evaluate_words(p->left);
      auto b = evaluate_words(p->right);
      try {
        return merge_op(a, b);
      } catch (const Error& e) {
        if (e.code() != Errc::merge_precondition) throw;
        throw Error(e.code(), std::string(e.what()) + " at node " + plan_to_string(p));
      }
    }
  }
  throw Error(Errc::internal, "bad plan node");
}

MultiCurve invariant(const RootedTree& t) { return evaluate_words(decompose(t)); }

}  // namespace pc
