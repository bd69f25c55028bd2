#include "plumbcurve/plumbing.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "json.hpp"
#include "plumbcurve/errors.hpp"

namespace pc {

using ojson = nlohmann::ordered_json;

int RootedTree::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].id == id) return static_cast<int>(i);
  return -1;
}

long long RootedTree::weight_of(const std::string& id) const {
  int i = index_of(id);
  if (i < 0) throw Error(Errc::unknown_endpoint, "no vertex " + id);
  return vertices[i].weight;
}

std::vector<std::vector<int>> RootedTree::adjacency() const {
  std::map<std::string, int> ix;
  for (std::size_t i = 0; i < vertices.size(); ++i) ix[vertices[i].id] = static_cast<int>(i);
  std::vector<std::vector<int>> adj(vertices.size());
  for (const auto& [u, v] : edges) {
    int a = ix.at(u), b = ix.at(v);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

void validate(const RootedTree& t) {
  if (t.vertices.empty()) throw Error(Errc::malformed, "tree has no vertices");
  std::map<std::string, int> ix;
  for (std::size_t i = 0; i < t.vertices.size(); ++i) {
    if (!ix.emplace(t.vertices[i].id, static_cast<int>(i)).second)
      throw Error(Errc::duplicate_id, "duplicate vertex id: " + t.vertices[i].id);
  }
  for (const auto& [u, v] : t.edges) {
    if (!ix.count(u)) throw Error(Errc::unknown_endpoint, "edge endpoint not a vertex: " + u);
    if (!ix.count(v)) throw Error(Errc::unknown_endpoint, "edge endpoint not a vertex: " + v);
  }
  if (!ix.count(t.root)) throw Error(Errc::unknown_root, "root not a vertex: " + t.root);

  std::vector<int> parent(t.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::size_t comps = t.vertices.size();
  for (const auto& [u, v] : t.edges) {
    int a = find(ix[u]), b = find(ix[v]);
    if (a == b) throw Error(Errc::cycle, "cycle through edge " + u + "-" + v);
    parent[a] = b;
    --comps;
  }
  if (comps != 1) throw Error(Errc::disconnected, "tree is disconnected");
}

RootedTree parse_tree(const std::string& text) {
  ojson doc;
  try {
    doc = ojson::parse(text);
  } catch (const std::exception& e) {
    throw Error(Errc::malformed, std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(Errc::malformed, "document must be an object");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const auto& k = it.key();
    if (k != "vertices" && k != "edges" && k != "root")
      throw Error(Errc::malformed, "unexpected key: " + k);
  }
  if (!doc.contains("vertices") || !doc.contains("edges") || !doc.contains("root"))
    throw Error(Errc::malformed, "missing key (need vertices, edges, root)");
  if (!doc["vertices"].is_array() || !doc["edges"].is_array() || !doc["root"].is_string())
    throw Error(Errc::malformed, "wrong value type for a top-level key");

  RootedTree t;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_object() || v.size() != 2 || !v.contains("id") || !v.contains("weight"))
      throw Error(Errc::malformed, "vertex must be {\"id\", \"weight\"}");
    if (!v["id"].is_string()) throw Error(Errc::malformed, "vertex id must be a string");
    if (!v["weight"].is_number_integer()) throw Error(Errc::malformed, "vertex weight must be an integer");
    t.vertices.push_back({v["id"].get<std::string>(), v["weight"].get<long long>()});
  }
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw Error(Errc::malformed, "edge must be a pair of ids");
    t.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  t.root = doc["root"].get<std::string>();
  validate(t);
  return t;
}

std::string tree_to_json(const RootedTree& t) {
  ojson doc;
  doc["vertices"] = ojson::array();
  for (const auto& v : t.vertices) doc["vertices"].push_back({{"id", v.id}, {"weight", v.weight}});
  doc["edges"] = ojson::array();
  for (const auto& [u, v] : t.edges) doc["edges"].push_back({u, v});
  doc["root"] = t.root;
  return doc.dump();
}

namespace {

std::string fresh_id(const std::set<std::string>& used, const std::string& base) {
  if (!used.count(base)) return base;
  for (long long k = 1;; ++k) {
    std::string c = base + "_" + std::to_string(k);
    if (!used.count(c)) return c;
  }
}

std::set<std::string> id_set(const RootedTree& t) {
  std::set<std::string> s;
  for (const auto& v : t.vertices) s.insert(v.id);
  return s;
}

}  // namespace

RootedTree twist(const RootedTree& t, long long m) {
  RootedTree r = t;
  r.vertices[r.root_index()].weight += m;
  return r;
}

RootedTree extend(const RootedTree& t) {
  RootedTree r = t;
  std::string id = fresh_id(id_set(t), "e");
  r.vertices.push_back({id, 0});
  r.edges.emplace_back(id, t.root);
  r.root = id;
  return r;
}

RootedTree merge(const RootedTree& a, const RootedTree& b) {
  RootedTree r = a;
  std::set<std::string> used = id_set(a);
  std::map<std::string, std::string> rename;
  rename[b.root] = a.root;
  r.vertices[r.root_index()].weight += b.weight_of(b.root);
  for (const auto& v : b.vertices) {
    if (v.id == b.root) continue;
    std::string id = fresh_id(used, v.id);
    used.insert(id);
    rename[v.id] = id;
    r.vertices.push_back({id, v.weight});
  }
  for (const auto& [u, v] : b.edges) r.edges.emplace_back(rename.at(u), rename.at(v));
  return r;
}

namespace {

bool blocking_vertex(const RootedTree& t, const std::vector<std::vector<int>>& adj, int i) {
  if (t.vertices[i].id == t.root) return false;
  auto deg = adj[i].size();
  long long w = t.vertices[i].weight;
  return (deg == 1 || deg == 2) && (w == 0 || w == 1 || w == -1);
}

// remove vertex i (ids and edges)
RootedTree drop_vertex(const RootedTree& t, int i) {
  RootedTree r;
  r.root = t.root;
  const std::string& id = t.vertices[i].id;
  for (int k = 0; k < static_cast<int>(t.vertices.size()); ++k)
    if (k != i) r.vertices.push_back(t.vertices[k]);
  for (const auto& e : t.edges)
    if (e.first != id && e.second != id) r.edges.push_back(e);
  return r;
}

}  // namespace

bool is_reduced(const RootedTree& t) {
  auto adj = t.adjacency();
  for (int i = 0; i < static_cast<int>(t.size()); ++i)
    if (blocking_vertex(t, adj, i)) return false;
  return true;
}

ReduceResult reduce_tree(const RootedTree& input) {
  RootedTree t = input;
  for (;;) {
    auto adj = t.adjacency();
    bool changed = false;
    for (int i = 0; i < static_cast<int>(t.size()) && !changed; ++i) {
      if (t.vertices[i].id == t.root) continue;
      long long w = t.vertices[i].weight;
      if (adj[i].size() == 1 && (w == 1 || w == -1)) {
        // blow down: neighbour weight n - w
        int nb = adj[i][0];
        std::string nid = t.vertices[nb].id;
        t = drop_vertex(t, i);
        t.vertices[t.index_of(nid)].weight -= w;
        changed = true;
      } else if (adj[i].size() == 2 && w == 0) {
        int p = adj[i][0], s = adj[i][1];
        if (p > s) std::swap(p, s);
        std::string keep = t.vertices[p].id, gone = t.vertices[s].id;
        if (gone == t.root) std::swap(keep, gone);
        long long wsum = t.vertices[p].weight + t.vertices[s].weight;
        t = drop_vertex(t, i);
        RootedTree r;
        r.root = t.root;
        for (const auto& v : t.vertices)
          if (v.id != gone) r.vertices.push_back(v);
        r.vertices[r.index_of(keep)].weight = wsum;
        for (auto e : t.edges) {
          if (e.first == gone) e.first = keep;
          if (e.second == gone) e.second = keep;
          r.edges.push_back(e);
        }
        t = std::move(r);
        changed = true;
      }
    }
    if (!changed) break;
  }
  ReduceResult out;
  auto adj = t.adjacency();
  for (int i = 0; i < static_cast<int>(t.size()); ++i)
    if (blocking_vertex(t, adj, i)) out.blocking.push_back(t.vertices[i].id);
  out.reduced = out.blocking.empty();
  out.tree = std::move(t);
  return out;
}

PlanPtr make_base() { return std::make_shared<Plan>(); }

PlanPtr make_twist(long long m, PlanPtr child) {
  auto p = std::make_shared<Plan>();
  p->kind = Plan::Kind::Twist;
  p->m = m;
  p->left = std::move(child);
  return p;
}

PlanPtr make_extend(PlanPtr child) {
  auto p = std::make_shared<Plan>();
  p->kind = Plan::Kind::Extend;
  p->left = std::move(child);
  return p;
}

PlanPtr make_merge(PlanPtr a, PlanPtr b) {
  auto p = std::make_shared<Plan>();
  p->kind = Plan::Kind::Merge;
  p->left = std::move(a);
  p->right = std::move(b);
  return p;
}

namespace {

struct Walker {
  const RootedTree& t;
  std::vector<std::vector<int>> adj;

  explicit Walker(const RootedTree& tree) : t(tree), adj(tree.adjacency()) {}

  std::vector<int> children(int v, int parent) const {
    std::vector<int> c;
    for (int u : adj[v])
      if (u != parent) c.push_back(u);
    return c;
  }

  std::string code(int v, int parent) const {
    std::vector<std::string> cs;
    for (int u : children(v, parent)) cs.push_back(code(u, v));
    std::sort(cs.begin(), cs.end());
    std::string s = "(" + std::to_string(t.vertices[v].weight);
    for (const auto& c : cs) s += c;
    return s + ")";
  }

  void collect(int v, int parent, std::vector<long long>& ws) const {
    ws.push_back(t.vertices[v].weight);
    for (int u : children(v, parent)) collect(u, v, ws);
  }

  using Key = std::tuple<std::size_t, std::vector<long long>, std::string>;

  Key key(int v, int parent) const {
    std::vector<long long> ws;
    collect(v, parent, ws);
    std::sort(ws.begin(), ws.end());
    return {ws.size(), ws, code(v, parent)};
  }

  PlanPtr at(int v, int parent) const {
    PlanPtr inner = zero(v, parent, children(v, parent));
    long long w = t.vertices[v].weight;
    return w == 0 ? inner : make_twist(w, inner);
  }

  PlanPtr zero(int v, int parent, std::vector<int> kids) const {
    if (kids.empty()) return make_base();
    if (kids.size() == 1) return make_extend(at(kids[0], v));
    std::vector<std::pair<Key, int>> keyed;
    for (int u : kids) keyed.emplace_back(key(u, v), u);
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<int> rest;
    for (std::size_t i = 1; i < keyed.size(); ++i) rest.push_back(keyed[i].second);
    return make_merge(make_extend(at(keyed[0].second, v)), zero(v, parent, rest));
  }
};

}  // namespace

PlanPtr decompose(const RootedTree& t) {
  Walker w(t);
  return w.at(t.root_index(), -1);
}

RootedTree evaluate(const PlanPtr& p) {
  switch (p->kind) {
    case Plan::Kind::Base: {
      RootedTree t;
      t.vertices.push_back({"v", 0});
      t.root = "v";
      return t;
    }
    case Plan::Kind::Twist: return twist(evaluate(p->left), p->m);
    case Plan::Kind::Extend: return extend(evaluate(p->left));
    case Plan::Kind::Merge: return merge(evaluate(p->left), evaluate(p->right));
  }
  throw Error(Errc::internal, "bad plan node");
}

std::string plan_to_string(const PlanPtr& p) {
  switch (p->kind) {
    case Plan::Kind::Base: return "Base";
    case Plan::Kind::Twist: return "Twist(" + std::to_string(p->m) + ")(" + plan_to_string(p->left) + ")";
    case Plan::Kind::Extend: return "Extend(" + plan_to_string(p->left) + ")";
    case Plan::Kind::Merge:
      return "Merge(" + plan_to_string(p->left) + ", " + plan_to_string(p->right) + ")";
  }
  return "?";
}

std::string canonical_code(const RootedTree& t) {
  Walker w(t);
  return w.code(t.root_index(), -1);
}

bool isomorphic(const RootedTree& a, const RootedTree& b) {
  return a.size() == b.size() && canonical_code(a) == canonical_code(b);
}

IntForm intersection_form(const RootedTree& t) {
  IntForm f;
  std::size_t n = t.size();
  f.q.assign(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    f.ids.push_back(t.vertices[i].id);
    f.q[i][i] = t.vertices[i].weight;
  }
  auto adj = t.adjacency();
  for (std::size_t i = 0; i < n; ++i)
    for (int j : adj[i]) f.q[i][j] = 1;
  return f;
}

DetSig det_and_signature(const std::vector<std::vector<long long>>& q) {
  const std::size_t n = q.size();
  DetSig out;
  if (n == 0) {
    out.det = 1;
    return out;
  }

  // Bareiss
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = q[i][j];
  BigInt prev = 1;
  int sign = 1;
  bool singular = false;
  for (std::size_t k = 0; k + 1 < n && !singular; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) {
        singular = true;
        break;
      }
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    }
    prev = m[k][k];
  }
  out.det = singular ? BigInt(0) : BigInt(sign * m[n - 1][n - 1]);

  // congruence diagonalisation over Q
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = q[i][j];
  std::vector<std::size_t> live(n);
  std::iota(live.begin(), live.end(), 0);
  auto erase = [&](std::size_t v) { live.erase(std::find(live.begin(), live.end(), v)); };
  while (!live.empty()) {
    std::size_t piv = n;
    for (auto k : live)
      if (a[k][k] != 0) {
        piv = k;
        break;
      }
    if (piv != n) {
      if (a[piv][piv] > 0) ++out.positive; else ++out.negative;
      erase(piv);
      for (auto i : live)
        for (auto j : live) a[i][j] -= a[i][piv] * a[piv][j] / a[piv][piv];
      continue;
    }
    std::size_t bi = n, bj = n;
    for (std::size_t x = 0; x < live.size() && bi == n; ++x)
      for (std::size_t y = x + 1; y < live.size(); ++y)
        if (a[live[x]][live[y]] != 0) {
          bi = live[x];
          bj = live[y];
          break;
        }
    if (bi == n) break;  // remaining block is zero
    // 2x2 block [[0,b],[b,0]]: one positive, one negative
    ++out.positive;
    ++out.negative;
    Rational b = a[bi][bj];
    erase(bi);
    erase(bj);
    for (auto r : live)
      for (auto s : live) a[r][s] -= (a[r][bi] * a[bj][s] + a[r][bj] * a[bi][s]) / b;
  }
  out.nullity = static_cast<int>(n) - out.positive - out.negative;
  out.signature = out.positive - out.negative;
  return out;
}

std::string to_string(const Slope& s) { return s.infinite ? std::string("inf") : to_string(s.value); }

RStar r_star_detail(const RootedTree& t) {
  auto adj = t.adjacency();
  std::vector<bool> gone(t.size(), false);
  auto valence = [&](int v) {
    int d = 0;
    for (int u : adj[v])
      if (!gone[u]) ++d;
    return d;
  };
  RStar out;
  int cur = t.root_index();
  while (valence(cur) == 1) {
    out.stripped.push_back(t.vertices[cur].weight);
    gone[cur] = true;
    for (int u : adj[cur])
      if (!gone[u]) {
        cur = u;
        break;
      }
  }
  out.a0 = t.vertices[cur].weight;
  out.v_star = t.vertices[cur].id;
  if (out.stripped.empty()) {
    out.slope.value = out.a0;
    return out;
  }
  // projective evaluation of a0 - 1/(a1 - 1/(... - 1/an)), val = num/den
  BigInt num = out.stripped.front(), den = 1;
  for (std::size_t i = 1; i < out.stripped.size(); ++i) {
    BigInt nn = BigInt(out.stripped[i]) * num - den;
    den = num;
    num = nn;
  }
  BigInt nn = BigInt(out.a0) * num - den;
  den = num;
  num = nn;
  if (den == 0) {
    out.slope.infinite = true;
  } else {
    out.slope.value = frac(num, den);
  }
  return out;
}

}  // namespace pc
