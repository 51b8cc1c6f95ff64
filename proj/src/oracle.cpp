#include "sparsecc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <thread>

#include "sparsecc/errors.hpp"

namespace sparsecc::oracle {

namespace {

using Poly = std::vector<Rational>;  // coefficients in w, truncated

Poly poly_mul(const Poly& a, const Poly& b, int degree) {
  Poly r(degree + 1, Rational(0));
  for (int i = 0; i < static_cast<int>(a.size()) && i <= degree; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < static_cast<int>(b.size()) && i + j <= degree; ++j)
      if (b[j] != 0) r[i + j] += a[i] * b[j];
  }
  return r;
}

}  // namespace

CountTable::CountTable(Model model, int nmax, int kmax)
    : model_(model), nmax_(nmax), kmax_(kmax),
      table_(nmax + 1, std::vector<Rational>(kmax + 2, Rational(0))) {}

const Rational& CountTable::at(int n, int k) const {
  if (n < 0 || n > nmax_ || k < -1 || k > kmax_)
    throw invalid_input("count table index out of range");
  return table_[n][k + 1];
}

CountTable connected_counts(Model model, int nmax, int kmax) {
  if (nmax < 1) throw invalid_input("connected_counts: nmax must be >= 1");
  if (kmax < -1) throw invalid_input("connected_counts: kmax must be >= -1");
  const int degree = nmax + kmax;
  // All structures on n labelled vertices, by edge count.
  std::vector<Poly> all(nmax + 1, Poly(degree + 1, Rational(0)));
  for (int n = 0; n <= nmax; ++n) {
    if (model == Model::graph) {
      const unsigned long pairs = static_cast<unsigned long>(n) * (n - 1) / 2;
      for (int m = 0; m <= degree && static_cast<unsigned long>(m) <= pairs; ++m)
        all[n][m] = Rational(binomial(pairs, m));
    } else {
      // exp(n^2 w / 2)
      const Rational rate = rat(n * n, 2);
      Rational term = 1;
      for (int m = 0; m <= degree; ++m) {
        all[n][m] = term;
        term = term * rate / (m + 1);
      }
    }
  }
  // c_n = g_n - sum_{j=1}^{n-1} C(n-1, j-1) c_j g_{n-j}
  std::vector<Poly> conn(nmax + 1, Poly(degree + 1, Rational(0)));
  for (int n = 1; n <= nmax; ++n) {
    Poly c = all[n];
    for (int j = 1; j < n; ++j) {
      Poly prod = poly_mul(conn[j], all[n - j], degree);
      const Rational weight(binomial(n - 1, j - 1));
      for (int m = 0; m <= degree; ++m)
        if (prod[m] != 0) c[m] -= weight * prod[m];
    }
    conn[n] = std::move(c);
  }
  CountTable table(model, nmax, kmax);
  for (int n = 1; n <= nmax; ++n)
    for (int k = -1; k <= kmax; ++k) {
      const int m = n + k;
      if (m >= 0 && m <= degree) table.table_[n][k + 1] = conn[n][m];
    }
  return table;
}

namespace {

std::string graph_label(const Graph& g) {
  if (auto p = polygon_length(g)) return "c" + std::to_string(*p);
  for (const char* name : {"k4", "diamond", "bowtie", "k23", "house", "prism"})
    if (g.n == named_graph(name).n && g.edges == named_graph(name).edges) return name;
  return "H(" + std::to_string(g.n) + "," + std::to_string(g.edge_count()) + ")";
}

int parse_int(std::string_view s, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(std::string(s), &used);
    if (used != s.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw invalid_input(std::string("malformed integer in ") + what + ": " + std::string(s));
  }
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::string Predicate::describe() const {
  std::vector<std::string> atoms;
  if (connected) atoms.push_back("connected");
  if (max_excess) atoms.push_back("maxexcess:" + std::to_string(*max_excess));
  for (const auto& h : forbidden) atoms.push_back("free:" + graph_label(h));
  for (const auto& c : copy_counts)
    atoms.push_back("copies:" + graph_label(c.pattern) + ":" + std::to_string(c.count));
  for (const auto& h : kernel_excluded) atoms.push_back("nokernel:" + graph_label(h));
  for (const auto& h : juxtaposition) atoms.push_back("juxta:" + graph_label(h));
  std::string out;
  for (std::size_t i = 0; i < atoms.size(); ++i) out += (i ? "&" : "") + atoms[i];
  return out.empty() ? "true" : out;
}

Predicate parse_predicate(std::string_view text) {
  Predicate p;
  std::string s(text);
  std::stringstream in(s);
  std::string raw;
  while (std::getline(in, raw, '&')) {
    const std::string atom = trim(raw);
    if (atom.empty() || atom == "true") continue;
    const auto colon = atom.find(':');
    const std::string head = atom.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : atom.substr(colon + 1);
    auto need_arg = [&] {
      if (arg.empty()) throw invalid_input("predicate atom needs an argument: " + atom);
    };
    if (head == "connected") {
      p.connected = true;
    } else if (head == "c3free") {
      p.forbidden.push_back(named_graph("c3"));
    } else if (head == "cpfree") {
      need_arg();
      std::stringstream list(arg);
      std::string item;
      while (std::getline(list, item, ','))
        p.forbidden.push_back(named_graph("c" + std::to_string(parse_int(item, "cpfree"))));
    } else if (head == "free") {
      need_arg();
      p.forbidden.push_back(named_graph(arg));
    } else if (head == "onecopy") {
      need_arg();
      p.copy_counts.push_back({named_graph(arg), 1});
    } else if (head == "copies") {
      need_arg();
      const auto c2 = arg.find(':');
      if (c2 == std::string::npos) throw invalid_input("copies:H:c expected, got " + atom);
      p.copy_counts.push_back(
          {named_graph(arg.substr(0, c2)), parse_int(arg.substr(c2 + 1), "copies")});
    } else if (head == "maxexcess") {
      need_arg();
      p.max_excess = parse_int(arg, "maxexcess");
    } else if (head == "nokernel") {
      need_arg();
      p.kernel_excluded.push_back(named_graph(arg));
    } else if (head == "juxta") {
      need_arg();
      p.juxtaposition.push_back(named_graph(arg));
    } else {
      throw invalid_input("unknown predicate atom: " + atom);
    }
  }
  return p;
}

namespace {

constexpr int kMaxGraphVertices = 9;
constexpr int kMaxMultigraphVertices = 6;

struct PairIndex {
  std::vector<int> u, v;
  int index[kMaxGraphVertices][kMaxGraphVertices] = {};
  explicit PairIndex(int n) {
    for (int b = 0; b < n; ++b)
      for (int a = 0; a < b; ++a) {
        index[a][b] = index[b][a] = static_cast<int>(u.size());
        u.push_back(a);
        v.push_back(b);
      }
  }
};

// Everything the predicates need about one graph, from bitmask adjacency.
class Evaluator {
 public:
  Evaluator(int n, const Predicate& pred) : n_(n), pred_(pred), pairs_(n) {
    for (const auto& h : pred.forbidden) forbidden_.emplace_back(h);
    for (const auto& c : pred.copy_counts) counted_.emplace_back(c.pattern);
    for (const auto& h : pred.juxtaposition) juxta_.emplace_back(h);
    for (const auto& h : pred.kernel_excluded) kernels_.push_back(as_multigraph(h));
  }

  // Weight of the graph whose edge set is `mask` (bits index pairs_).
  long weight(std::uint64_t mask) {
    std::uint16_t adj[kMaxGraphVertices] = {};
    for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
      const int id = std::countr_zero(rest);
      adj[pairs_.u[id]] |= static_cast<std::uint16_t>(1u << pairs_.v[id]);
      adj[pairs_.v[id]] |= static_cast<std::uint16_t>(1u << pairs_.u[id]);
    }
    std::vector<Edge> edges;
    if (!pred_.kernel_excluded.empty())
      for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
        const int id = std::countr_zero(rest);
        edges.emplace_back(pairs_.u[id], pairs_.v[id]);
      }
    return weight_from(adj, edges, nullptr);
  }

  // Multigraph entry: adj is the underlying simple graph, edges the full
  // list, comp_edges the edge count of each component keyed by its lowest
  // vertex.
  long weight_multi(const std::uint16_t* adj, const std::vector<Edge>& edges,
                    const std::vector<int>& comp_edges_hint) {
    return weight_from(adj, edges, &comp_edges_hint);
  }

 private:
  long weight_from(const std::uint16_t* adj, const std::vector<Edge>& edges,
                   const std::vector<int>* multi_edge_count) {
    // Components.
    std::uint16_t comps[kMaxGraphVertices];
    int ncomp = 0;
    std::uint16_t seen = 0;
    for (int s = 0; s < n_; ++s) {
      if (seen >> s & 1) continue;
      std::uint16_t comp = static_cast<std::uint16_t>(1u << s), frontier = comp;
      while (frontier) {
        std::uint16_t next = 0;
        for (std::uint16_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
        next &= static_cast<std::uint16_t>(~comp);
        comp |= next;
        frontier = next;
      }
      seen |= comp;
      comps[ncomp++] = comp;
    }
    if (pred_.connected && ncomp != 1) return 0;
    if (pred_.max_excess) {
      for (int c = 0; c < ncomp; ++c) {
        int e2 = 0;
        if (multi_edge_count) {
          e2 = 2 * (*multi_edge_count)[std::countr_zero(comps[c])];
        } else {
          for (std::uint16_t f = comps[c]; f; f &= f - 1) e2 += std::popcount(adj[std::countr_zero(f)]);
        }
        if (e2 / 2 - std::popcount(comps[c]) > *pred_.max_excess) return 0;
      }
    }
    for (const auto& matcher : forbidden_) {
      bool found = false;
      matcher.for_each_embedding(adj, n_, [&](const std::vector<int>&) {
        found = true;
        return false;
      });
      if (found) return 0;
    }
    for (std::size_t i = 0; i < counted_.size(); ++i) {
      long embeddings = 0;
      counted_[i].for_each_embedding(adj, n_, [&](const std::vector<int>&) {
        ++embeddings;
        return true;
      });
      if (embeddings / counted_[i].automorphisms() != pred_.copy_counts[i].count) return 0;
    }
    if (!kernels_.empty()) {
      for (int c = 0; c < ncomp; ++c) {
        std::vector<int> local(n_, -1);
        int size = 0;
        for (std::uint16_t f = comps[c]; f; f &= f - 1) local[std::countr_zero(f)] = size++;
        std::vector<Edge> ce;
        for (auto [a, b] : edges)
          if (local[a] >= 0) ce.emplace_back(local[a], local[b]);
        auto kernel = kernel_of(size, ce);
        if (!kernel) continue;
        for (const auto& h : kernels_)
          if (isomorphic(*kernel, h)) return 0;
      }
    }
    if (juxta_.empty()) return 1;
    std::vector<std::uint64_t> copies;
    for (const auto& matcher : juxta_) {
      const auto& pe = matcher.pattern().edges;
      matcher.for_each_embedding(adj, n_, [&](const std::vector<int>& image) {
        std::uint64_t em = 0;
        for (auto [a, b] : pe) em |= std::uint64_t{1} << pairs_.index[image[a]][image[b]];
        copies.push_back(em);
        return true;
      });
    }
    std::sort(copies.begin(), copies.end());
    copies.erase(std::unique(copies.begin(), copies.end()), copies.end());
    if (copies.size() < 2) return 0;
    std::uint64_t shared = ~std::uint64_t{0};
    for (auto c : copies) shared &= c;
    return std::popcount(shared);
  }

  int n_;
  const Predicate& pred_;
  PairIndex pairs_;
  std::vector<PatternMatcher> forbidden_, counted_, juxta_;
  std::vector<MultigraphInstance> kernels_;
};

double binomial_double(int n, int k) {
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

template <class Body>
void run_workers(int workers, Body&& body) {
  workers = std::max(1, workers);
  if (workers == 1) {
    body(0, 1);
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back([&, w] { body(w, workers); });
  for (auto& t : pool) t.join();
}

void check_graph_range(int n, int m, const BruteOptions& opt) {
  if (n < 1 || n > kMaxGraphVertices)
    throw resource_limit("brute census supports 1 <= n <= " + std::to_string(kMaxGraphVertices));
  const int pairs = n * (n - 1) / 2;
  if (m < 0 || m > pairs) throw invalid_input("edge count out of range");
  if (binomial_double(pairs, m) > opt.max_instances)
    throw resource_limit("brute census: too many edge sets (C(" + std::to_string(pairs) + "," +
                         std::to_string(m) + "))");
}

// Gosper's hack over m-subsets of `bits` positions; calls f(mask).
template <class F>
void for_each_subset(int bits, int m, int worker, int workers, F&& f) {
  if (m == 0) {
    if (worker == 0) f(std::uint64_t{0});
    return;
  }
  const std::uint64_t limit = std::uint64_t{1} << bits;
  std::uint64_t x = (std::uint64_t{1} << m) - 1;
  long counter = 0;
  while (x < limit) {
    if (counter++ % workers == worker) f(x);
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t r = x + c;
    x = (((r ^ x) >> 2) / c) | r;
  }
}

}  // namespace

Rational brute_census(int n, int m, const Predicate& pred, const BruteOptions& opt) {
  check_graph_range(n, m, opt);
  const int pairs = n * (n - 1) / 2;
  std::vector<long> partial(std::max(1, opt.workers), 0);
  run_workers(opt.workers, [&](int w, int workers) {
    Evaluator eval(n, pred);
    long acc = 0;
    for_each_subset(pairs, m, w, workers, [&](std::uint64_t mask) { acc += eval.weight(mask); });
    partial[w] = acc;
  });
  Integer total = 0;
  for (long p : partial) total += p;
  return Rational(total);
}

void for_each_graph(int n, int m, const std::function<void(const Graph&)>& visit,
                    const BruteOptions& opt) {
  check_graph_range(n, m, opt);
  const PairIndex pi(n);
  Graph g{n, {}};
  for_each_subset(n * (n - 1) / 2, m, 0, 1, [&](std::uint64_t mask) {
    g.edges.clear();
    for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
      const int id = std::countr_zero(rest);
      g.edges.emplace_back(pi.u[id], pi.v[id]);
    }
    visit(g);
  });
}

Rational brute_census_multigraph(int n, int m, const Predicate& pred, const BruteOptions& opt) {
  if (n < 1 || n > kMaxMultigraphVertices)
    throw resource_limit("multigraph census supports 1 <= n <= " +
                         std::to_string(kMaxMultigraphVertices));
  if (m < 0) throw invalid_input("edge count out of range");
  if (!pred.juxtaposition.empty())
    throw invalid_input("juxtaposition weighting is defined for simple graphs only");
  std::vector<Edge> slots;
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) slots.emplace_back(x, y);
  const int s = static_cast<int>(slots.size());
  if (binomial_double(s + m - 1, m) > opt.max_instances)
    throw resource_limit("multigraph census: too many multisets");
  Evaluator eval(n, pred);
  Rational total = 0;
  std::vector<int> mult(s, 0);
  // Enumerate multiplicity vectors summing to m.
  std::function<void(int, int)> rec = [&](int slot, int left) {
    if (slot == s - 1) {
      mult[slot] = left;
      MultigraphInstance mg(n);
      std::vector<Edge> edges;
      std::uint16_t adj[kMaxGraphVertices] = {};
      for (int i = 0; i < s; ++i)
        for (int r = 0; r < mult[i]; ++r) {
          auto [x, y] = slots[i];
          mg.add_edge(x, y);
          edges.emplace_back(x, y);
          if (x != y) {
            adj[x] |= static_cast<std::uint16_t>(1u << y);
            adj[y] |= static_cast<std::uint16_t>(1u << x);
          }
        }
      // Edge count per component, keyed by the component's lowest vertex.
      std::vector<int> comp_edges(n, 0);
      {
        std::vector<int> root(n);
        for (int v = 0; v < n; ++v) {
          std::uint16_t comp = static_cast<std::uint16_t>(1u << v), frontier = comp;
          while (frontier) {
            std::uint16_t next = 0;
            for (std::uint16_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
            next &= static_cast<std::uint16_t>(~comp);
            comp |= next;
            frontier = next;
          }
          root[v] = std::countr_zero(comp);
        }
        for (auto [x, y] : edges) ++comp_edges[root[x]];
      }
      const long w = eval.weight_multi(adj, edges, comp_edges);
      if (w) total += kappa(mg) * w;
      return;
    }
    for (int c = 0; c <= left; ++c) {
      mult[slot] = c;
      rec(slot + 1, left - c);
    }
  };
  rec(0, m);
  return total;
}

}  // namespace sparsecc::oracle
