#include "plumbcurve/wu.hpp"

#include <algorithm>

#include "plumbcurve/errors.hpp"

namespace pc {

std::vector<std::string> RelWuSet::ids(const RootedTree& t) const {
  std::vector<std::string> r;
  for (std::size_t i = 0; i < member.size(); ++i)
    if (member[i]) r.push_back(t.vertices[i].id);
  std::sort(r.begin(), r.end());
  return r;
}

long long RelWuSet::weight_sum(const RootedTree& t) const {
  long long s = 0;
  for (std::size_t i = 0; i < member.size(); ++i)
    if (member[i]) s += t.vertices[i].weight;
  return s;
}

namespace {

bool odd(long long v) { return v % 2 != 0; }

// Q(S, w) mod 2
bool pairing(const std::vector<std::vector<int>>& adj, const RootedTree& t, const std::vector<bool>& s,
             std::size_t w) {
  bool v = s[w] && odd(t.vertices[w].weight);
  for (int u : adj[w])
    if (s[static_cast<std::size_t>(u)]) v = !v;
  return v;
}

bool holds_at(const std::vector<std::vector<int>>& adj, const RootedTree& t, const std::vector<bool>& s,
              std::size_t w) {
  return pairing(adj, t, s, w) == odd(t.vertices[w].weight);
}

// all solutions of the F2 system given by rows (coefficients + rhs); Gray-code order
std::vector<std::vector<bool>> solve_f2(std::vector<std::vector<char>> rows, std::size_t n) {
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && !rows[p][c]) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i][c])
        for (std::size_t k = 0; k <= n; ++k) rows[i][k] ^= rows[r][k];
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  for (std::size_t i = r; i < rows.size(); ++i)
    if (rows[i][n]) return {};
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  if (free_cols.size() > 30) throw Error(Errc::bad_argument, "too many relative Wu sets to enumerate");

  std::vector<bool> x(n, false);
  for (std::size_t i = 0; i < r; ++i) x[static_cast<std::size_t>(pivot_col[i])] = rows[i][n];
  // null space vector for each free column
  std::vector<std::vector<bool>> basis;
  for (std::size_t f : free_cols) {
    std::vector<bool> v(n, false);
    v[f] = true;
    for (std::size_t i = 0; i < r; ++i)
      if (rows[i][f]) v[static_cast<std::size_t>(pivot_col[i])] = true;
    basis.push_back(v);
  }
  std::vector<std::vector<bool>> out{x};
  const std::size_t total = std::size_t{1} << free_cols.size();
  for (std::size_t g = 1; g < total; ++g) {
    std::size_t bit = static_cast<std::size_t>(__builtin_ctzll(g));
    for (std::size_t k = 0; k < n; ++k)
      if (basis[bit][k]) x[k] = !x[k];
    out.push_back(x);
  }
  return out;
}

std::vector<std::vector<char>> equations(const RootedTree& t, bool include_root) {
  const std::size_t n = t.size();
  auto adj = t.adjacency();
  const std::size_t root = static_cast<std::size_t>(t.root_index());
  std::vector<std::vector<char>> rows;
  for (std::size_t w = 0; w < n; ++w) {
    if (w == root && !include_root) continue;
    std::vector<char> row(n + 1, 0);
    row[w] = odd(t.vertices[w].weight);
    for (int u : adj[w]) row[static_cast<std::size_t>(u)] ^= 1;
    row[n] = odd(t.vertices[w].weight);
    rows.push_back(row);
  }
  return rows;
}

RelWuSet classify(const RootedTree& t, const std::vector<std::vector<int>>& adj, std::vector<bool> s) {
  RelWuSet r;
  const std::size_t root = static_cast<std::size_t>(t.root_index());
  r.type = s[root] ? 1 : 0;
  r.balanced = holds_at(adj, t, s, root);
  r.member = std::move(s);
  return r;
}

}  // namespace

std::vector<RelWuSet> enumerate_relative_wu(const RootedTree& t) {
  auto adj = t.adjacency();
  std::vector<RelWuSet> out;
  for (auto& s : solve_f2(equations(t, false), t.size())) out.push_back(classify(t, adj, std::move(s)));
  return out;
}

std::vector<RelWuSet> brute_force_relative_wu(const RootedTree& t) {
  const std::size_t n = t.size();
  if (n > 24) throw Error(Errc::bad_argument, "brute force limited to 24 vertices");
  auto adj = t.adjacency();
  const std::size_t root = static_cast<std::size_t>(t.root_index());
  std::vector<RelWuSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<bool> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = (mask >> i) & 1;
    bool ok = true;
    for (std::size_t w = 0; w < n && ok; ++w)
      if (w != root) {
        long long q = 0;
        for (std::size_t u = 0; u < n; ++u) {
          if (!s[u]) continue;
          if (u == w) q += t.vertices[w].weight;
          else if (std::find(adj[w].begin(), adj[w].end(), static_cast<int>(u)) != adj[w].end()) q += 1;
        }
        ok = odd(q) == odd(t.vertices[w].weight);
      }
    if (ok) out.push_back(classify(t, adj, std::move(s)));
  }
  return out;
}

std::vector<std::vector<bool>> wu_sets(const RootedTree& t) { return solve_f2(equations(t, true), t.size()); }

WuType wu_type(const std::vector<RelWuSet>& sets) {
  WuType w{0, 0, 0, 0};
  for (const auto& s : sets) ++w[static_cast<std::size_t>((s.balanced ? 0 : 2) + s.type)];
  return w;
}

std::string to_string(const WuType& w) {
  return "(" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," + std::to_string(w[2]) + "," +
         std::to_string(w[3]) + ")";
}

HstType hst_of_wu(const WuType& w) {
  if (w == WuType{1, 1, 0, 0}) return HstType::alpha;
  if (w == WuType{1, 0, 1, 0}) return HstType::beta;
  if (w == WuType{0, 1, 1, 0}) return HstType::alphabeta;
  return HstType::none;
}

long long mubar_closed(const RootedTree& t, const std::vector<bool>& s) {
  auto adj = t.adjacency();
  for (std::size_t w = 0; w < t.size(); ++w)
    if (!holds_at(adj, t, s, w)) throw Error(Errc::bad_argument, "set is not a Wu set");
  IntForm f = intersection_form(t);
  long long qss = 0;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j)
      if (s[i] && s[j]) qss += f.q[i][j];
  return det_and_signature(f).signature - qss;
}

DeltaMubar delta_mubar_detail(const RootedTree& t) {
  auto sets = enumerate_relative_wu(t);
  if (sets.size() != 2)
    throw Error(Errc::wu_count, "not a Z2-homology solid torus (" + std::to_string(sets.size()) +
                                    " relative Wu sets)");
  DeltaMubar d;
  d.type = wu_type(sets);
  HstType h = hst_of_wu(d.type);
  int s1_type = 0;
  switch (h) {
    case HstType::alpha:
    case HstType::alphabeta: s1_type = 1; break;
    case HstType::beta: s1_type = 0; break;
    case HstType::none: throw Error(Errc::internal, "unexpected Wu type " + to_string(d.type));
  }
  auto is_s1 = [&](const RelWuSet& s) { return s.balanced && s.type == s1_type; };
  if (is_s1(sets[0]) == is_s1(sets[1])) throw Error(Errc::internal, "cannot single out S1");
  d.s1 = is_s1(sets[0]) ? sets[0] : sets[1];
  d.s0 = is_s1(sets[0]) ? sets[1] : sets[0];
  d.value = d.s1.weight_sum(t) - d.s0.weight_sum(t);
  if (d.s0.balanced) d.mubar0 = mubar_closed(t, d.s0.member);
  if (d.s1.balanced) d.mubar1 = mubar_closed(t, d.s1.member);
  return d;
}

std::string choose_type_alpha_root(const RootedTree& t) {
  auto sets = wu_sets(t);
  if (sets.size() != 2)
    throw Error(Errc::wu_count, "need exactly two Wu sets, found " + std::to_string(sets.size()));
  auto adj = t.adjacency();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (adj[i].size() > 1) continue;
    if (sets[0][i] != sets[1][i]) return t.vertices[i].id;
  }
  throw Error(Errc::internal, "no leaf separates the two Wu sets");
}

}  // namespace pc
