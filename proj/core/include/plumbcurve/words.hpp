#pragma once
// Cyclic words in alpha^{+-1}, beta^{+-1}; loop letters; type D arrows.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pc {

// order a < b < A < B ; A = a^-1, B = b^-1
enum class Letter : std::uint8_t { a = 0, b = 1, A = 2, B = 3 };

using Word = std::vector<Letter>;

inline Letter inv(Letter x) { return static_cast<Letter>((static_cast<int>(x) + 2) % 4); }
inline bool is_alpha(Letter x) { return x == Letter::a || x == Letter::A; }
inline bool is_beta(Letter x) { return x == Letter::b || x == Letter::B; }
inline int sign(Letter x) { return static_cast<int>(x) < 2 ? 1 : -1; }

char letter_char(Letter x);
Word parse_word(const std::string& s);  // "(babaBAABaba)" or "babaBAABaba"
std::string to_string(const Word& w);   // parenthesised

Word inverse(const Word& w);
Word rotate(const Word& w, std::size_t k);
// cyclic free reduction; may return empty
Word reduce_cyclic(const Word& w);
// start index of the lexicographically least rotation (Booth)
std::size_t least_rotation(const Word& w);

struct CyclicWord {
  Word letters;
  std::size_t size() const { return letters.size(); }
  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend auto operator<=>(const CyclicWord& x, const CyclicWord& y) { return x.letters <=> y.letters; }
};

// throws Errc::empty_word
CyclicWord canonicalize(const Word& w);
inline std::string to_string(const CyclicWord& w) { return to_string(w.letters); }

using MultiCurve = std::vector<CyclicWord>;  // sorted
void sort_components(MultiCurve& mc);
std::string to_string(const MultiCurve& mc);

struct LoopLetter {
  enum class Kind : std::uint8_t { a, b, c, cc };
  Kind kind = Kind::c;
  long long k = 0;
  friend bool operator==(const LoopLetter&, const LoopLetter&) = default;
};
using LoopWord = std::vector<LoopLetter>;

LoopWord loop_encode(const CyclicWord& w);
Word loop_expand(const LoopWord& lw);
CyclicWord loop_decode(const LoopWord& lw);
std::string to_string(const LoopWord& lw);  // "c[1] a[1] cc[2] b[1] c[1]"
LoopWord parse_loop(const std::string& s);

inline bool all_c(const LoopWord& lw) {
  for (const auto& x : lw)
    if (x.kind != LoopLetter::Kind::c) return false;
  return true;
}
inline bool all_cc(const LoopWord& lw) {
  for (const auto& x : lw)
    if (x.kind != LoopLetter::Kind::cc) return false;
  return true;
}

enum class HstType { alpha, beta, alphabeta, none };
const char* hst_name(HstType t);

struct CurveClass {
  long long b = 0, a = 0;    // signed counts
  long long nb = 0, na = 0;  // unsigned counts
  HstType type = HstType::none;
};

CurveClass curve_class(const CyclicWord& w);
CurveClass curve_class(const MultiCurve& mc);  // summed; type from summed parities

// s with w[i] == w[(s - i) mod L] for all i, i.e. the curve is fixed by the
// elliptic involution
std::optional<std::size_t> symmetry_offset(const CyclicWord& w);

enum class Rho : std::uint8_t { r1, r2, r3, r12, r23, r123 };
const char* rho_name(Rho r);

struct Arrow {
  std::size_t from = 0, to = 0;
  Rho label = Rho::r1;
  bool forward = true;  // from == pair index i, to == i + 1
};

struct TypeD {
  std::vector<int> idempotent;  // 0 for beta letters, 1 for alpha letters
  std::vector<Arrow> arrows;    // arrows[i] belongs to letters i, i+1
};

TypeD to_typeD(const CyclicWord& w);

}  // namespace pc
