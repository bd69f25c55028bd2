#include "plumbcurve/words.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "plumbcurve/errors.hpp"

namespace pc {

char letter_char(Letter x) {
  static const char tbl[] = {'a', 'b', 'A', 'B'};
  return tbl[static_cast<int>(x)];
}

Word parse_word(const std::string& s) {
  Word w;
  std::size_t i = 0;
  while (i < s.size()) {
    char ch = s[i++];
    if (ch == '(' || ch == ')' || std::isspace(static_cast<unsigned char>(ch))) continue;
    Letter x;
    switch (ch) {
      case 'a': x = Letter::a; break;
      case 'b': x = Letter::b; break;
      case 'A': x = Letter::A; break;
      case 'B': x = Letter::B; break;
      default: throw Error(Errc::malformed, std::string("bad letter '") + ch + "' in word");
    }
    w.push_back(x);
  }
  return w;
}

std::string to_string(const Word& w) {
  std::string s = "(";
  for (Letter x : w) s += letter_char(x);
  return s + ")";
}

Word inverse(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (auto& x : r) x = inv(x);
  return r;
}

Word rotate(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  Word r(w);
  std::rotate(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(k % w.size()), r.end());
  return r;
}

Word reduce_cyclic(const Word& w) {
  Word st;
  for (Letter x : w) {
    if (!st.empty() && st.back() == inv(x)) st.pop_back();
    else st.push_back(x);
  }
  std::size_t lo = 0, hi = st.size();
  while (hi - lo >= 2 && st[lo] == inv(st[hi - 1])) {
    ++lo;
    --hi;
  }
  return Word(st.begin() + static_cast<std::ptrdiff_t>(lo), st.begin() + static_cast<std::ptrdiff_t>(hi));
}

std::size_t least_rotation(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) return 0;
  std::vector<long long> f(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    Letter sj = w[j % n];
    long long i = f[j - k - 1];
    while (i != -1 && sj != w[(k + static_cast<std::size_t>(i) + 1) % n]) {
      if (sj < w[(k + static_cast<std::size_t>(i) + 1) % n]) k = j - static_cast<std::size_t>(i) - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (i == -1 && sj != w[(k + static_cast<std::size_t>(i) + 1) % n]) {
      if (sj < w[(k + static_cast<std::size_t>(i) + 1) % n]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k % n;
}

CyclicWord canonicalize(const Word& w) {
  Word r = reduce_cyclic(w);
  if (r.empty()) throw Error(Errc::empty_word, "word reduces to the empty word");
  Word x = rotate(r, least_rotation(r));
  Word ri = inverse(r);
  Word y = rotate(ri, least_rotation(ri));
  return CyclicWord{std::min(x, y)};
}

void sort_components(MultiCurve& mc) { std::sort(mc.begin(), mc.end()); }

std::string to_string(const MultiCurve& mc) {
  std::string s;
  for (std::size_t i = 0; i < mc.size(); ++i) {
    if (i) s += " ";
    s += to_string(mc[i]);
  }
  return s;
}

LoopWord loop_encode(const CyclicWord& cw) {
  const Word& w = cw.letters;
  const std::size_t n = w.size();
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i)
    if (is_beta(w[i])) pos.push_back(i);
  using K = LoopLetter::Kind;
  if (pos.empty()) {
    long long k = 0;
    for (Letter x : w) k += sign(x);
    return {LoopLetter{K::b, k}};
  }
  LoopWord out;
  const std::size_t m = pos.size();
  for (std::size_t g = 0; g < m; ++g) {
    std::size_t p = pos[g], q = pos[(g + 1) % m];
    std::size_t len = (q + n - p - 1) % n;  // alpha letters between
    if (m == 1) len = n - 1;
    long long r = 0;
    for (std::size_t t = 1; t <= len; ++t) r += sign(w[(p + t) % n]);
    Letter lp = w[p], lq = w[q];
    if (lp == Letter::b && lq == Letter::b) out.push_back({K::c, r});
    else if (lp == Letter::b && lq == Letter::B) out.push_back({K::a, r});
    else if (lp == Letter::B && lq == Letter::B) out.push_back({K::cc, -r});
    else if (r != 0) out.push_back({K::b, r});
  }
  return out;
}

Word loop_expand(const LoopWord& lw) {
  using K = LoopLetter::Kind;
  Word w;
  auto alpha = [&](long long k) {
    for (long long i = 0; i < (k < 0 ? -k : k); ++i) w.push_back(k > 0 ? Letter::a : Letter::A);
  };
  for (const auto& x : lw) {
    switch (x.kind) {
      case K::a: w.push_back(Letter::b); alpha(x.k); w.push_back(Letter::B); break;
      case K::b: alpha(x.k); break;
      case K::c: w.push_back(Letter::b); alpha(x.k); break;
      case K::cc: alpha(-x.k); w.push_back(Letter::B); break;
    }
  }
  return w;
}

CyclicWord loop_decode(const LoopWord& lw) { return canonicalize(loop_expand(lw)); }

std::string to_string(const LoopWord& lw) {
  static const char* names[] = {"a", "b", "c", "cc"};
  std::string s;
  for (std::size_t i = 0; i < lw.size(); ++i) {
    if (i) s += " ";
    s += names[static_cast<int>(lw[i].kind)];
    s += "[" + std::to_string(lw[i].k) + "]";
  }
  return s;
}

LoopWord parse_loop(const std::string& s) {
  using K = LoopLetter::Kind;
  LoopWord out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    auto lb = tok.find('[');
    if (lb == std::string::npos || tok.back() != ']') throw Error(Errc::malformed, "bad loop letter: " + tok);
    std::string name = tok.substr(0, lb);
    LoopLetter x;
    if (name == "a") x.kind = K::a;
    else if (name == "b") x.kind = K::b;
    else if (name == "c") x.kind = K::c;
    else if (name == "cc") x.kind = K::cc;
    else throw Error(Errc::malformed, "bad loop letter: " + tok);
    try {
      x.k = std::stoll(tok.substr(lb + 1, tok.size() - lb - 2));
    } catch (const std::exception&) {
      throw Error(Errc::malformed, "bad loop subscript: " + tok);
    }
    out.push_back(x);
  }
  return out;
}

const char* hst_name(HstType t) {
  switch (t) {
    case HstType::alpha: return "alpha";
    case HstType::beta: return "beta";
    case HstType::alphabeta: return "alphabeta";
    case HstType::none: return "none";
  }
  return "none";
}

namespace {

HstType type_of(long long nb, long long na) {
  bool ob = nb % 2 != 0, oa = na % 2 != 0;
  if (ob && !oa) return HstType::alpha;
  if (oa && !ob) return HstType::beta;
  if (oa && ob) return HstType::alphabeta;
  return HstType::none;
}

}  // namespace

CurveClass curve_class(const CyclicWord& w) {
  CurveClass c;
  for (Letter x : w.letters) {
    if (is_beta(x)) {
      c.b += sign(x);
      ++c.nb;
    } else {
      c.a += sign(x);
      ++c.na;
    }
  }
  c.type = type_of(c.nb, c.na);
  return c;
}

CurveClass curve_class(const MultiCurve& mc) {
  CurveClass c;
  for (const auto& w : mc) {
    auto k = curve_class(w);
    c.b += k.b;
    c.a += k.a;
    c.nb += k.nb;
    c.na += k.na;
  }
  c.type = type_of(c.nb, c.na);
  return c;
}

std::optional<std::size_t> symmetry_offset(const CyclicWord& cw) {
  const Word& w = cw.letters;
  const std::size_t n = w.size();
  if (n == 0) return std::nullopt;
  Word rr(w.rbegin(), w.rend());
  rr.insert(rr.end(), w.rbegin(), w.rend());
  std::boyer_moore_horspool_searcher srch(w.begin(), w.end());
  auto it = std::search(rr.begin(), rr.end(), srch);
  if (it == rr.end()) return std::nullopt;
  std::size_t t = static_cast<std::size_t>(it - rr.begin());
  // w[i] = rr[t + i] = w[n - 1 - t - i]
  return (2 * n - 1 - t) % n;
}

const char* rho_name(Rho r) {
  static const char* names[] = {"rho1", "rho2", "rho3", "rho12", "rho23", "rho123"};
  return names[static_cast<int>(r)];
}

TypeD to_typeD(const CyclicWord& cw) {
  using L = Letter;
  struct Row {
    L x, y;
    Rho r;
    bool fwd;
  };
  static const Row table[] = {
      {L::B, L::A, Rho::r1, true},    {L::B, L::B, Rho::r12, true},  {L::B, L::a, Rho::r123, true},
      {L::a, L::B, Rho::r2, true},    {L::a, L::a, Rho::r23, true},  {L::b, L::a, Rho::r3, true},
      {L::a, L::b, Rho::r1, false},   {L::b, L::b, Rho::r12, false}, {L::A, L::b, Rho::r123, false},
      {L::b, L::A, Rho::r2, false},   {L::A, L::A, Rho::r23, false}, {L::A, L::B, Rho::r3, false},
  };
  const Word& w = cw.letters;
  const std::size_t n = w.size();
  TypeD d;
  for (Letter x : w) d.idempotent.push_back(is_beta(x) ? 0 : 1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = (i + 1) % n;
    const Row* hit = nullptr;
    for (const auto& row : table)
      if (row.x == w[i] && row.y == w[j]) hit = &row;
    if (!hit) throw Error(Errc::internal, "word is not reduced");
    d.arrows.push_back(hit->fwd ? Arrow{i, j, hit->r, true} : Arrow{j, i, hit->r, false});
  }
  return d;
}

}  // namespace pc
