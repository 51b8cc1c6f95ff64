#include "sparsecc/kernel_census.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>

#include "sparsecc/errors.hpp"

namespace sparsecc::oracle {

namespace {

bool connected(const MultigraphInstance& k) {
  std::vector<char> seen(k.n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y = 0; y < k.n; ++y)
      if (k.mult[x][y] && !seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
  }
  return reached == k.n;
}

struct KernelEdge {
  int x, y;
};

// Simple cycles of the kernel using at most max_len edges, as edge-id sets.
std::vector<std::vector<int>> short_cycles(int n, const std::vector<KernelEdge>& edges,
                                           int max_len) {
  std::vector<std::vector<int>> cycles;
  std::vector<std::vector<std::vector<int>>> between(n, std::vector<std::vector<int>>(n));
  for (int id = 0; id < static_cast<int>(edges.size()); ++id) {
    between[edges[id].x][edges[id].y].push_back(id);
    if (edges[id].x != edges[id].y) between[edges[id].y][edges[id].x].push_back(id);
  }
  for (int x = 0; x < n; ++x) {
    if (max_len >= 1)
      for (int id : between[x][x]) cycles.push_back({id});
    for (int y = x + 1; y < n && max_len >= 2; ++y) {
      const auto& par = between[x][y];
      for (std::size_t i = 0; i < par.size(); ++i)
        for (std::size_t j = i + 1; j < par.size(); ++j) cycles.push_back({par[i], par[j]});
    }
  }
  // Vertex cycles of length >= 3 rooted at their smallest vertex, one
  // orientation (second vertex < last vertex).
  std::vector<int> path;
  std::vector<char> on_path(n, 0);
  std::function<void(int)> grow = [&](int len) {
    const int root = path.front(), last = path.back();
    if (len >= 3 && path[1] < last && !between[last][root].empty()) {
      // expand every choice of parallel edge along the cycle
      std::vector<std::vector<int>> choices{{}};
      for (int i = 0; i < len; ++i) {
        const int a = path[i], b = path[(i + 1) % len];
        std::vector<std::vector<int>> next;
        for (const auto& c : choices)
          for (int id : between[a][b]) {
            auto d = c;
            d.push_back(id);
            next.push_back(std::move(d));
          }
        choices = std::move(next);
      }
      for (auto& c : choices) cycles.push_back(std::move(c));
    }
    if (len == max_len) return;
    for (int y = root + 1; y < n; ++y) {
      if (on_path[y] || between[last][y].empty()) continue;
      on_path[y] = 1;
      path.push_back(y);
      grow(len + 1);
      path.pop_back();
      on_path[y] = 0;
    }
  };
  for (int root = 0; root < n && max_len >= 3; ++root) {
    path = {root};
    on_path[root] = 1;
    grow(1);
    on_path[root] = 0;
  }
  return cycles;
}

}  // namespace

std::vector<MultigraphInstance> labelled_kernels(int excess) {
  if (excess < 1) throw invalid_input("kernels exist for excess >= 1 only");
  std::vector<MultigraphInstance> out;
  for (int v = 1; v <= 2 * excess; ++v) {
    const int total = v + excess;
    std::vector<std::pair<int, int>> slots;
    for (int x = 0; x < v; ++x)
      for (int y = x; y < v; ++y) slots.emplace_back(x, y);
    MultigraphInstance k(v);
    std::vector<int> deg(v, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t s, int left) {
      if (s == slots.size()) {
        if (left == 0 && connected(k)) out.push_back(k);
        return;
      }
      const auto [x, y] = slots[s];
      const bool closes_x = (y == v - 1);
      for (int c = 0; c <= left; ++c) {
        const int add = (x == y) ? 2 * c : c;
        if (closes_x && deg[x] + add < 3) continue;
        k.mult[x][y] = k.mult[y][x] = c;
        deg[x] += add;
        if (x != y) deg[y] += add;
        rec(s + 1, left - c);
        deg[x] -= add;
        if (x != y) deg[y] -= add;
      }
      k.mult[x][y] = k.mult[y][x] = 0;
    };
    rec(0, total);
  }
  return out;
}

KernelCensus kernel_census(int excess, const std::vector<int>& polygons_in) {
  std::vector<int> polygons = polygons_in;
  std::sort(polygons.begin(), polygons.end());
  polygons.erase(std::unique(polygons.begin(), polygons.end()), polygons.end());
  for (int p : polygons)
    if (p < 3) throw invalid_input("polygon lengths must be >= 3");
  const int q = polygons.empty() ? 0 : polygons.back();
  // Lengths 1..L are tracked exactly, longer ones as one class. L >= 2 keeps
  // the simple-graph constraints (loops need length >= 3, at most one of a
  // bundle of parallel edges may have length 1) exact.
  const int L = std::max(q, 2);
  const int cls_long = L + 1;

  // key: (category, z power a, denominator power j) -> integer weight,
  // category 0 all, 1 free, 2 juxtaposition, 3 + i single of polygons[i].
  using Key = std::tuple<int, int, int>;
  std::map<Key, Rational> totals;

  for (const auto& kernel : labelled_kernels(excess)) {
    const int v = kernel.n;
    std::vector<KernelEdge> edges;
    for (int x = 0; x < v; ++x)
      for (int y = x; y < v; ++y)
        for (int r = 0; r < kernel.mult[x][y]; ++r) edges.push_back({x, y});
    const int ne = static_cast<int>(edges.size());

    const auto cycles = q >= 1 ? short_cycles(v, edges, q) : std::vector<std::vector<int>>{};
    std::vector<char> classified(ne, 0);
    for (const auto& c : cycles)
      for (int id : c) classified[id] = 1;
    std::vector<std::vector<int>> bundles;  // parallel edges between x != y
    for (int x = 0; x < v; ++x)
      for (int y = x + 1; y < v; ++y) {
        std::vector<int> b;
        for (int id = 0; id < ne; ++id)
          if (edges[id].x == x && edges[id].y == y) b.push_back(id);
        if (b.size() >= 2) {
          for (int id : b) classified[id] = 1;
          bundles.push_back(std::move(b));
        }
      }
    for (int id = 0; id < ne; ++id)
      if (edges[id].x == edges[id].y) classified[id] = 1;

    std::vector<int> active;
    int free_edges = 0;
    for (int id = 0; id < ne; ++id) {
      if (classified[id])
        active.push_back(id);
      else
        ++free_edges;
    }
    std::vector<int> length(ne, 0);
    for (int id : active) length[id] = edges[id].x == edges[id].y ? 3 : 1;

    std::map<Key, long> local;
    std::vector<std::uint32_t> copies;
    while (true) {
      bool ok = true;
      for (const auto& b : bundles) {
        int ones = 0;
        for (int id : b) ones += (length[id] == 1);
        if (ones > 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        int a = v, j = free_edges;
        for (int id : active) {
          if (length[id] == cls_long) {
            a += L;
            ++j;
          } else {
            a += length[id] - 1;
          }
        }
        copies.clear();
        int single_length = 0;
        for (const auto& c : cycles) {
          int len = 0;
          bool exact = true;
          for (int id : c) {
            if (length[id] == cls_long) exact = false;
            len += length[id];
          }
          if (!exact || !std::binary_search(polygons.begin(), polygons.end(), len)) continue;
          std::uint32_t mask = 0;
          for (int id : c) mask |= 1u << id;
          copies.push_back(mask);
          single_length = len;
        }
        local[{0, a, j}] += 1;
        if (copies.empty()) {
          local[{1, a, j}] += 1;
        } else if (copies.size() == 1) {
          const int idx = static_cast<int>(
              std::lower_bound(polygons.begin(), polygons.end(), single_length) -
              polygons.begin());
          local[{3 + idx, a, j}] += 1;
        } else {
          std::uint32_t shared = ~0u;
          for (auto m : copies) shared &= m;
          long s = 0;
          for (int id = 0; id < ne; ++id)
            if (shared >> id & 1) s += length[id];
          if (s) local[{2, a, j}] += s;
        }
      }
      // odometer
      std::size_t pos = 0;
      for (; pos < active.size(); ++pos) {
        int& l = length[active[pos]];
        if (l < cls_long) {
          ++l;
          break;
        }
        l = edges[active[pos]].x == edges[active[pos]].y ? 3 : 1;
      }
      if (pos == active.size()) break;
    }
    const Rational weight = kappa(kernel) / Rational(factorial(v));
    for (const auto& [key, count] : local) totals[key] += weight * count;
  }

  KernelCensus out;
  out.excess = excess;
  out.polygons = polygons;
  out.all = XExpr(excess);
  out.free = XExpr(excess);
  out.juxtaposition = XExpr(excess);
  for (int p : polygons) out.single[p] = XExpr(excess);
  for (const auto& [key, c] : totals) {
    const auto [cat, a, j] = key;
    // z^a / (1-z)^j with z -> T
    XExpr term = XExpr::t_power(a, c, excess) * XExpr::x_power(j);
    term = term.with_excess(excess);
    if (cat == 0)
      out.all += term;
    else if (cat == 1)
      out.free += term;
    else if (cat == 2)
      out.juxtaposition += term;
    else
      out.single[polygons[cat - 3]] += term;
  }
  return out;
}

}  // namespace sparsecc::oracle
