#include "sparsecc/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "sparsecc/errors.hpp"

namespace sparsecc::simulator {

ProcessModel parse_process_model(std::string_view name) {
  if (name == "permutation" || name == "graph") return ProcessModel::permutation;
  if (name == "uniform" || name == "multigraph") return ProcessModel::uniform;
  throw invalid_input("unknown process model '" + std::string(name) + "'");
}

std::string to_string(ProcessModel m) {
  return m == ProcessModel::permutation ? "permutation" : "uniform";
}

namespace {

// Peels vertices of degree <= 1. Degrees count multiplicity, a loop adds 2.
// Returns the surviving vertices (the 2-core) as a mask.
std::vector<char> two_core(int n, const std::vector<Edge>& edges,
                           const std::vector<std::vector<int>>& incident) {
  std::vector<int> degree(n, 0);
  for (const auto& [u, v] : edges) {
    ++degree[u];
    ++degree[v];
  }
  std::vector<char> alive(n, 1);
  std::vector<char> edge_alive(edges.size(), 1);
  std::vector<int> stack;
  for (int v = 0; v < n; ++v)
    if (degree[v] <= 1) stack.push_back(v);
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (!alive[v]) continue;
    alive[v] = 0;
    for (int id : incident[v]) {
      if (!edge_alive[id]) continue;
      edge_alive[id] = 0;
      const int w = edges[id].first == v ? edges[id].second : edges[id].first;
      if (--degree[w] <= 1 && alive[w]) stack.push_back(w);
    }
  }
  return alive;
}

std::vector<std::vector<int>> incidence(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> inc(n);
  for (int id = 0; id < static_cast<int>(edges.size()); ++id) {
    inc[edges[id].first].push_back(id);
    if (edges[id].second != edges[id].first) inc[edges[id].second].push_back(id);
  }
  return inc;
}

int min_degree(const Graph& g) {
  int d = g.n;
  for (const auto& nb : g.adjacency()) d = std::min<int>(d, static_cast<int>(nb.size()));
  return d;
}

// Sub-edge-list induced on `keep`, relabelled.
std::pair<int, std::vector<Edge>> restrict(int n, const std::vector<Edge>& edges,
                                           const std::vector<char>& keep) {
  std::vector<int> id(n, -1);
  int k = 0;
  for (int v = 0; v < n; ++v)
    if (keep[v]) id[v] = k++;
  std::vector<Edge> out;
  for (const auto& [u, v] : edges)
    if (keep[u] && keep[v]) out.emplace_back(id[u], id[v]);
  return {k, out};
}

}  // namespace

ComponentClass classify_component(int vertices, const std::vector<Edge>& edges,
                                  const ForbiddenSet& forbidden, const ClassifyLimits& limits) {
  ComponentClass cls;
  cls.vertices = vertices;
  cls.edges = static_cast<long>(edges.size());
  cls.excess = cls.edges - vertices;
  cls.polygon_hit.assign(forbidden.polygons.size(), 0);
  cls.other_hit.assign(forbidden.others.size(), 0);
  if (cls.excess < 0) return cls;

  const auto inc = incidence(vertices, edges);
  const auto core = two_core(vertices, edges, inc);
  if (cls.excess == 0) {
    cls.cycle_length = static_cast<int>(std::count(core.begin(), core.end(), 1));
    for (std::size_t i = 0; i < forbidden.polygons.size(); ++i)
      cls.polygon_hit[i] = cls.cycle_length == forbidden.polygons[i];
  }

  // Patterns with minimum degree >= 2 live in the 2-core.
  const auto [core_n, core_edges] = restrict(vertices, edges, core);
  std::optional<SparseGraph> core_graph, full_graph;
  auto search = [&](const Graph& pattern) -> std::optional<bool> {
    if (pattern.excess() > cls.excess) return false;
    const bool in_core = min_degree(pattern) >= 2;
    const int size = in_core ? core_n : vertices;
    if (size > limits.max_search_vertices) return std::nullopt;
    auto& g = in_core ? core_graph : full_graph;
    if (!g) g.emplace(in_core ? SparseGraph(core_n, core_edges) : SparseGraph(vertices, edges));
    return PatternMatcher(pattern).exists(*g, limits.step_limit);
  };
  if (cls.excess >= 1) {
    for (std::size_t i = 0; i < forbidden.polygons.size(); ++i) {
      const auto hit = search(named_graph("c" + std::to_string(forbidden.polygons[i])));
      if (!hit) cls.discarded = true;
      cls.polygon_hit[i] = hit.value_or(false);
    }
  }
  for (std::size_t i = 0; i < forbidden.others.size(); ++i) {
    const auto hit = search(named_graph(forbidden.others[i]));
    if (!hit) cls.discarded = true;
    cls.other_hit[i] = hit.value_or(false);
  }
  return cls;
}

namespace {

std::vector<int> parse_int_list(std::string_view text, const char* what) {
  std::vector<int> out;
  std::string item;
  std::stringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw invalid_input(std::string("bad integer in ") + what + ": '" + item + "'");
    }
  }
  return out;
}

}  // namespace

Event parse_event(std::string_view text) {
  Event ev;
  ev.text = std::string(text);
  std::stringstream in{std::string(text)};
  std::string atom;
  bool any_atom = false;
  while (std::getline(in, atom, '&')) {
    atom.erase(0, atom.find_first_not_of(" \t"));
    atom.erase(atom.find_last_not_of(" \t") + 1);
    if (atom.empty()) continue;
    any_atom = true;
    const auto colon = atom.find(':');
    const std::string head = atom.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : atom.substr(colon + 1);
    if (head == "any") {
    } else if (head == "maxexcess") {
      const auto v = parse_int_list(arg, "maxexcess");
      if (v.size() != 1 || v[0] < -1) throw invalid_input("maxexcess needs one integer >= -1");
      ev.max_excess = ev.max_excess ? std::min<long>(*ev.max_excess, v[0]) : v[0];
    } else if (head == "c3free") {
      ev.polygons_free.push_back(3);
    } else if (head == "cpfree") {
      for (int p : parse_int_list(arg, "cpfree")) {
        if (p < 3) throw invalid_input("cpfree lengths must be >= 3");
        ev.polygons_free.push_back(p);
      }
    } else if (head == "free") {
      named_graph(arg);  // validates the name
      ev.others_free.push_back(arg);
    } else if (head == "profile") {
      auto r = parse_int_list(arg, "profile");
      for (int v : r)
        if (v < 0) throw invalid_input("profile entries must be >= 0");
      ev.profile = r;
    } else {
      throw invalid_input("unknown event atom '" + head + "'");
    }
  }
  if (!any_atom) throw invalid_input("empty event");
  std::sort(ev.polygons_free.begin(), ev.polygons_free.end());
  ev.polygons_free.erase(std::unique(ev.polygons_free.begin(), ev.polygons_free.end()),
                         ev.polygons_free.end());
  return ev;
}

ForbiddenSet patterns_for(const ProcessConfig& config, const std::vector<Event>& events) {
  ForbiddenSet set = config.forbidden;
  for (const auto& ev : events) {
    set.polygons.insert(set.polygons.end(), ev.polygons_free.begin(), ev.polygons_free.end());
    set.others.insert(set.others.end(), ev.others_free.begin(), ev.others_free.end());
  }
  std::sort(set.polygons.begin(), set.polygons.end());
  set.polygons.erase(std::unique(set.polygons.begin(), set.polygons.end()), set.polygons.end());
  std::sort(set.others.begin(), set.others.end());
  set.others.erase(std::unique(set.others.begin(), set.others.end()), set.others.end());
  return set;
}

bool evaluate(const Event& event, const ForbiddenSet& patterns, const TrialOutcome& outcome) {
  if (event.max_excess && outcome.max_excess > *event.max_excess) return false;
  for (int p : event.polygons_free) {
    const auto it = std::lower_bound(patterns.polygons.begin(), patterns.polygons.end(), p);
    if (it == patterns.polygons.end() || *it != p)
      throw invalid_input("polygon " + std::to_string(p) + " was not recorded");
    if (outcome.polygon_hit[it - patterns.polygons.begin()]) return false;
  }
  for (const auto& h : event.others_free) {
    const auto it = std::lower_bound(patterns.others.begin(), patterns.others.end(), h);
    if (it == patterns.others.end() || *it != h)
      throw invalid_input("pattern " + h + " was not recorded");
    if (outcome.other_hit[it - patterns.others.begin()]) return false;
  }
  if (event.profile) {
    const auto& r = *event.profile;
    if (outcome.max_excess > static_cast<long>(r.size())) return false;
    for (std::size_t i = 0; i < r.size(); ++i) {
      const auto it = outcome.complex_counts.find(static_cast<long>(i + 1));
      const int have = it == outcome.complex_counts.end() ? 0 : it->second;
      if (have != r[i]) return false;
    }
  }
  return true;
}

namespace {

void validate(const ProcessConfig& c) {
  if (c.n < 1) throw invalid_input("n must be >= 1");
  if (c.n > 200'000'000) throw resource_limit("n above 2e8");
  if (c.m < 0) throw invalid_input("m must be >= 0");
  if (c.trials < 1) throw invalid_input("trials must be >= 1");
  if (c.workers < 1) throw invalid_input("workers must be >= 1");
  if (c.model == ProcessModel::permutation) {
    const double pairs = static_cast<double>(c.n) * (c.n - 1) / 2;
    if (static_cast<double>(c.m) > pairs) throw invalid_input("m exceeds C(n,2)");
  }
  if (static_cast<double>(c.n + c.m) * c.trials > c.work_limit)
    throw resource_limit("(n + m) * trials exceeds the work limit");
}

// Per-worker buffers, reused across trials.
class TrialRunner {
 public:
  TrialRunner(const ProcessConfig& config, const ForbiddenSet& patterns)
      : config_(config),
        patterns_(patterns),
        parent_(config.n),
        size_(config.n),
        edge_count_(config.n),
        local_(config.n, -1) {}

  TrialOutcome run(long index) {
    std::seed_seq seq{static_cast<std::uint32_t>(config_.seed),
                      static_cast<std::uint32_t>(config_.seed >> 32),
                      static_cast<std::uint32_t>(index),
                      static_cast<std::uint32_t>(static_cast<std::uint64_t>(index) >> 32)};
    std::mt19937_64 rng(seq);
    generate(rng);
    return classify();
  }

 private:
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (size_[x] < size_[y]) std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
  }

  void generate(std::mt19937_64& rng) {
    const long n = config_.n;
    edges_.clear();
    edges_.reserve(config_.m);
    if (config_.model == ProcessModel::uniform) {
      std::uniform_int_distribution<long> vertex(0, n - 1);
      for (long i = 0; i < config_.m; ++i) {
        const int x = static_cast<int>(vertex(rng));
        const int y = static_cast<int>(vertex(rng));
        edges_.emplace_back(x, y);
      }
      return;
    }
    // First m entries of a random permutation of the C(n,2) pair indices,
    // with the displaced entries kept in a hash map.
    const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    swapped_.clear();
    swapped_.reserve(2 * config_.m);
    auto value_at = [&](std::uint64_t i) {
      auto it = swapped_.find(i);
      return it == swapped_.end() ? i : it->second;
    };
    for (long i = 0; i < config_.m; ++i) {
      const std::uint64_t lo = static_cast<std::uint64_t>(i);
      std::uniform_int_distribution<std::uint64_t> pick(lo, pairs - 1);
      const std::uint64_t j = pick(rng);
      const std::uint64_t chosen = value_at(j);
      swapped_[j] = value_at(lo);
      edges_.push_back(decode_pair(chosen));
    }
  }

  // index = v(v-1)/2 + u with 0 <= u < v
  static Edge decode_pair(std::uint64_t index) {
    std::uint64_t v = static_cast<std::uint64_t>((1 + std::sqrt(1 + 8.0 * index)) / 2);
    while (v * (v - 1) / 2 > index) --v;
    while ((v + 1) * v / 2 <= index) ++v;
    const std::uint64_t u = index - v * (v - 1) / 2;
    return {static_cast<int>(u), static_cast<int>(v)};
  }

  TrialOutcome classify() {
    const int n = static_cast<int>(config_.n);
    for (int v = 0; v < n; ++v) {
      parent_[v] = v;
      size_[v] = 1;
      edge_count_[v] = 0;
    }
    for (const auto& [x, y] : edges_) unite(x, y);
    for (const auto& e : edges_) ++edge_count_[find(e.first)];

    TrialOutcome out;
    out.polygon_hit.assign(patterns_.polygons.size(), 0);
    out.other_hit.assign(patterns_.others.size(), 0);

    // Bucket the edges of cyclic components by root.
    long total_excess = 0, components = 0;
    std::vector<int> cyclic_roots;
    for (int v = 0; v < n; ++v) {
      if (parent_[v] != v) continue;
      ++components;
      const long excess = static_cast<long>(edge_count_[v]) - size_[v];
      total_excess += excess;
      if (excess >= 0) cyclic_roots.push_back(v);
    }
    if (total_excess != static_cast<long>(edges_.size()) - n)
      throw consistency_failure("component excess does not add up to m - n");

    const bool need_structure = !patterns_.polygons.empty() || !patterns_.others.empty();
    std::unordered_map<int, std::vector<Edge>> buckets;
    if (need_structure) {
      for (int r : cyclic_roots) buckets[r].reserve(edge_count_[r]);
      for (const auto& e : edges_) {
        auto it = buckets.find(find(e.first));
        if (it != buckets.end()) it->second.push_back(e);
      }
    }

    for (int r : cyclic_roots) {
      const long excess = static_cast<long>(edge_count_[r]) - size_[r];
      out.max_excess = std::max(out.max_excess, excess);
      if (excess == 0)
        ++out.unicyclic;
      else
        ++out.complex_counts[excess];
      if (!need_structure) continue;
      // Relabel to local ids.
      auto& list = buckets[r];
      int k = 0;
      std::vector<Edge> local;
      local.reserve(list.size());
      std::vector<int> touched;
      for (const auto& [x, y] : list) {
        for (int v : {x, y})
          if (local_[v] < 0) {
            local_[v] = k++;
            touched.push_back(v);
          }
        local.emplace_back(local_[x], local_[y]);
      }
      for (int v : touched) local_[v] = -1;
      const auto cls = classify_component(k, local, patterns_, config_.limits);
      if (cls.discarded) out.discarded = true;
      for (std::size_t i = 0; i < cls.polygon_hit.size(); ++i)
        if (cls.polygon_hit[i]) out.polygon_hit[i] = 1;
      for (std::size_t i = 0; i < cls.other_hit.size(); ++i)
        if (cls.other_hit[i]) out.other_hit[i] = 1;
    }
    return out;
  }

  const ProcessConfig& config_;
  const ForbiddenSet& patterns_;
  std::vector<int> parent_, size_, edge_count_, local_;
  std::vector<Edge> edges_;
  std::unordered_map<std::uint64_t, std::uint64_t> swapped_;
};

}  // namespace

TrialOutcome run_trial(const ProcessConfig& config, const ForbiddenSet& patterns, long index) {
  validate(config);
  TrialRunner runner(config, patterns);
  return runner.run(index);
}

std::vector<Estimate> run_trials(const ProcessConfig& config, const std::vector<Event>& events) {
  validate(config);
  if (events.empty()) throw invalid_input("no events given");
  const ForbiddenSet patterns = patterns_for(config, events);

  struct Tally {
    std::vector<long> hits;
    long used = 0;
    long discarded = 0;
  };
  const int workers = static_cast<int>(std::min<long>(config.workers, config.trials));
  std::vector<Tally> tallies(workers, Tally{std::vector<long>(events.size(), 0), 0, 0});
  std::vector<std::exception_ptr> errors(workers);
  auto body = [&](int w) {
    try {
      TrialRunner runner(config, patterns);
      for (long t = w; t < config.trials; t += workers) {
        const TrialOutcome out = runner.run(t);
        if (out.discarded) {
          ++tallies[w].discarded;
          continue;
        }
        ++tallies[w].used;
        for (std::size_t e = 0; e < events.size(); ++e)
          if (evaluate(events[e], patterns, out)) ++tallies[w].hits[e];
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    body(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(body, w);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  Tally total{std::vector<long>(events.size(), 0), 0, 0};
  for (const auto& t : tallies) {
    total.used += t.used;
    total.discarded += t.discarded;
    for (std::size_t e = 0; e < events.size(); ++e) total.hits[e] += t.hits[e];
  }
  std::vector<Estimate> out;
  for (std::size_t e = 0; e < events.size(); ++e) {
    Estimate est;
    est.event = events[e].text;
    est.hits = total.hits[e];
    est.trials = total.used;
    est.discarded = total.discarded;
    est.seed = config.seed;
    if (total.used > 0) {
      est.p_hat = static_cast<double>(est.hits) / total.used;
      est.stderr_ = std::sqrt(est.p_hat * (1 - est.p_hat) / total.used);
    }
    out.push_back(est);
  }
  return out;
}

}  // namespace sparsecc::simulator
