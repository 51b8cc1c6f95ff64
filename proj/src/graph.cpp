#include "sparsecc/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

#include "sparsecc/errors.hpp"

namespace sparsecc {

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

Graph make_graph(int n, std::vector<Edge> edges) {
  if (n < 0) throw invalid_input("negative vertex count");
  std::set<Edge> seen;
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw invalid_input("edge endpoint out of range");
    if (u == v) throw invalid_input("loops are not allowed in a simple graph");
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) throw invalid_input("repeated edge");
  }
  return Graph{n, std::move(edges)};
}

namespace {

Graph cycle(int p) {
  std::vector<Edge> e;
  for (int i = 0; i < p; ++i) e.emplace_back(i, (i + 1) % p);
  return make_graph(p, e);
}

}  // namespace

Graph named_graph(std::string_view name) {
  if (name.size() >= 2 && (name[0] == 'c' || name[0] == 'C')) {
    const std::string digits(name.substr(1));
    if (std::all_of(digits.begin(), digits.end(), ::isdigit)) {
      const int p = std::stoi(digits);
      if (p < 3 || p > 16) throw invalid_input("polygon length must be in [3,16]");
      return cycle(p);
    }
  }
  if (name == "k4") return make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  if (name == "diamond") return make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  if (name == "bowtie") return make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
  if (name == "k23")
    return make_graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  if (name == "house")
    return make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}});
  if (name == "prism")
    return make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  throw invalid_input("unknown graph name: " + std::string(name));
}

std::optional<int> polygon_length(const Graph& g) {
  if (g.n < 3 || g.edge_count() != g.n || !is_connected(g)) return std::nullopt;
  for (const auto& nb : g.adjacency())
    if (nb.size() != 2) return std::nullopt;
  return g.n;
}

bool is_connected(const Graph& g) {
  if (g.n == 0) return true;
  const auto adj = g.adjacency();
  std::vector<char> seen(g.n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == g.n;
}

bool is_two_connected(const Graph& g) {
  if (g.n < 3 || !is_connected(g)) return false;
  for (int cut = 0; cut < g.n; ++cut) {
    std::vector<Edge> rest;
    for (auto [u, v] : g.edges) {
      if (u == cut || v == cut) continue;
      rest.emplace_back(u > cut ? u - 1 : u, v > cut ? v - 1 : v);
    }
    if (!is_connected(Graph{g.n - 1, rest})) return false;
  }
  return true;
}

long automorphism_count(const Graph& g) {
  std::vector<std::vector<char>> a(g.n, std::vector<char>(g.n, 0));
  for (auto [u, v] : g.edges) a[u][v] = a[v][u] = 1;
  std::vector<int> perm(g.n);
  std::iota(perm.begin(), perm.end(), 0);
  long count = 0;
  do {
    bool ok = true;
    for (auto [u, v] : g.edges)
      if (!a[perm[u]][perm[v]]) {
        ok = false;
        break;
      }
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

Configuration configuration_of(const Graph& h) {
  return {XExpr::t_power(h.n, Rational(1, automorphism_count(h)), h.excess()),
          is_two_connected(h)};
}

int MultigraphInstance::edge_count() const {
  int m = 0;
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) m += mult[x][y];
  return m;
}

int MultigraphInstance::degree(int x) const {
  int d = 0;
  for (int y = 0; y < n; ++y) d += mult[x][y];
  return d + mult[x][x];
}

void MultigraphInstance::add_edge(int x, int y) {
  ++mult[x][y];
  if (x != y) ++mult[y][x];
}

Rational kappa(const MultigraphInstance& mg) {
  Integer den = 1;
  for (int x = 0; x < mg.n; ++x) {
    den <<= mg.mult[x][x];
    for (int y = x; y < mg.n; ++y) den *= factorial(mg.mult[x][y]);
  }
  return Rational(1, den);
}

bool isomorphic(const MultigraphInstance& a, const MultigraphInstance& b) {
  if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da(a.n), db(b.n);
  for (int x = 0; x < a.n; ++x) {
    da[x] = a.degree(x);
    db[x] = b.degree(x);
  }
  auto sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  std::vector<int> perm(a.n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; x < a.n && ok; ++x) {
      if (da[x] != db[perm[x]]) ok = false;
      for (int y = x; y < a.n && ok; ++y)
        if (a.mult[x][y] != b.mult[perm[x]][perm[y]]) ok = false;
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

MultigraphInstance as_multigraph(const Graph& g) {
  MultigraphInstance mg(g.n);
  for (auto [u, v] : g.edges) mg.add_edge(u, v);
  return mg;
}

std::optional<MultigraphInstance> kernel_of(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> inc(n);
  for (int id = 0; id < static_cast<int>(edges.size()); ++id) {
    inc[edges[id].first].push_back(id);
    inc[edges[id].second].push_back(id);  // a loop is listed twice
  }
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(inc[v].size());
  std::vector<char> alive(edges.size(), 1);
  std::vector<int> queue;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) queue.push_back(v);
  while (!queue.empty()) {
    const int v = queue.back();
    queue.pop_back();
    if (deg[v] != 1) continue;
    for (int id : inc[v]) {
      if (!alive[id]) continue;
      alive[id] = 0;
      const int w = edges[id].first == v ? edges[id].second : edges[id].first;
      --deg[v];
      --deg[w];
      if (deg[w] == 1) queue.push_back(w);
      break;
    }
  }
  std::vector<int> index(n, -1);
  int k = 0;
  for (int v = 0; v < n; ++v)
    if (deg[v] >= 3) index[v] = k++;
  if (k == 0) return std::nullopt;
  MultigraphInstance kernel(k);
  std::vector<char> used(edges.size(), 0);
  for (int x = 0; x < n; ++x) {
    if (index[x] < 0) continue;
    for (int start : inc[x]) {
      if (!alive[start] || used[start]) continue;
      used[start] = 1;
      int prev = x;
      int id = start;
      int cur = edges[id].first == prev ? edges[id].second : edges[id].first;
      while (index[cur] < 0) {
        int next_id = -1;
        for (int cand : inc[cur])
          if (alive[cand] && cand != id) {
            next_id = cand;
            break;
          }
        used[next_id] = 1;
        prev = cur;
        id = next_id;
        cur = edges[id].first == prev ? edges[id].second : edges[id].first;
      }
      kernel.add_edge(index[x], index[cur]);
    }
  }
  return kernel;
}

SparseGraph::SparseGraph(int n, const std::vector<Edge>& edges) : adj_(n) {
  for (auto [u, v] : edges) {
    if (u == v) continue;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
}

bool SparseGraph::has_edge(int u, int v) const {
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  const int target = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), target);
}

PatternMatcher::PatternMatcher(const Graph& pattern)
    : pattern_(pattern), automorphisms_(automorphism_count(pattern)) {
  if (pattern.n == 0) throw invalid_input("empty pattern");
  if (!is_connected(pattern)) throw invalid_input("pattern must be connected");
  const auto adj = pattern.adjacency();
  int root = 0;
  for (int v = 1; v < pattern.n; ++v)
    if (adj[v].size() > adj[root].size()) root = v;
  std::vector<int> position(pattern.n, -1);
  std::deque<int> bfs{root};
  position[root] = 0;
  order_.push_back(root);
  while (!bfs.empty()) {
    const int v = bfs.front();
    bfs.pop_front();
    for (int w : adj[v])
      if (position[w] < 0) {
        position[w] = static_cast<int>(order_.size());
        order_.push_back(w);
        bfs.push_back(w);
      }
  }
  anchor_.assign(pattern.n, -1);
  back_edges_.assign(pattern.n, {});
  for (int d = 1; d < pattern.n; ++d) {
    for (int w : adj[order_[d]]) {
      const int p = position[w];
      if (p >= d) continue;
      if (anchor_[d] < 0 || p < anchor_[d]) anchor_[d] = p;
    }
    for (int w : adj[order_[d]]) {
      const int p = position[w];
      if (p < d && p != anchor_[d]) back_edges_[d].push_back(p);
    }
  }
}

namespace {

struct SearchState {
  const SparseGraph& g;
  const std::vector<int>& order;
  const std::vector<int>& anchor;
  const std::vector<std::vector<int>>& back;
  std::vector<int> image;  // indexed by search position
  long steps = 0;
  long limit = -1;
  bool aborted = false;
};

// Returns number of completions found (stops at the first when stop_early).
long extend(SearchState& s, int depth, bool stop_early) {
  const int h = static_cast<int>(s.order.size());
  if (depth == h) return 1;
  auto try_vertex = [&](int v) -> long {
    if (s.limit >= 0 && ++s.steps > s.limit) {
      s.aborted = true;
      return 0;
    }
    for (int d = 0; d < depth; ++d)
      if (s.image[d] == v) return 0;
    for (int p : s.back[depth])
      if (!s.g.has_edge(v, s.image[p])) return 0;
    s.image[depth] = v;
    return extend(s, depth + 1, stop_early);
  };
  long found = 0;
  if (depth == 0) {
    for (int v = 0; v < s.g.size() && !s.aborted; ++v) {
      found += try_vertex(v);
      if (stop_early && found) return found;
    }
  } else {
    for (int v : s.g.neighbours(s.image[s.anchor[depth]])) {
      if (s.aborted) break;
      found += try_vertex(v);
      if (stop_early && found) return found;
    }
  }
  return found;
}

}  // namespace

std::optional<bool> PatternMatcher::exists(const SparseGraph& g, long step_limit) const {
  SearchState s{g, order_, anchor_, back_edges_, std::vector<int>(order_.size(), -1)};
  s.limit = step_limit;
  const long found = extend(s, 0, true);
  if (found) return true;
  if (s.aborted) return std::nullopt;
  return false;
}

long PatternMatcher::count_embeddings(const SparseGraph& g) const {
  SearchState s{g, order_, anchor_, back_edges_, std::vector<int>(order_.size(), -1)};
  return extend(s, 0, false);
}

}  // namespace sparsecc
