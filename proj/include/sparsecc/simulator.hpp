#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sparsecc/graph.hpp"

// Monte Carlo runs of the random graph process at a fixed number of edges.
namespace sparsecc::simulator {

// permutation: m distinct edges, a uniformly random m-subset of all pairs.
// uniform: m independent ordered pairs; loops and repeated edges allowed.
enum class ProcessModel { permutation, uniform };

ProcessModel parse_process_model(std::string_view name);
std::string to_string(ProcessModel m);

// Subgraphs whose presence is recorded per component.
struct ForbiddenSet {
  std::vector<int> polygons;         // cycle lengths >= 3
  std::vector<std::string> others;   // named graphs, see named_graph()
};

struct ClassifyLimits {
  int max_search_vertices = 20000;   // larger search graphs are not searched
  long step_limit = 20'000'000;       // per pattern search
};

struct ComponentClass {
  int vertices = 0;
  long edges = 0;
  long excess = 0;
  int cycle_length = 0;              // excess-0 components only
  std::vector<char> polygon_hit;     // parallel to ForbiddenSet::polygons
  std::vector<char> other_hit;       // parallel to ForbiddenSet::others
  bool discarded = false;            // copy search exceeded its limits
};

// edges use local vertex ids 0..vertices-1 and must form one connected
// component. Loops and repeated edges count towards the excess.
ComponentClass classify_component(int vertices, const std::vector<Edge>& edges,
                                  const ForbiddenSet& forbidden,
                                  const ClassifyLimits& limits = {});

struct TrialOutcome {
  std::map<long, int> complex_counts;  // excess >= 1 -> number of components
  long max_excess = -1;
  int unicyclic = 0;
  std::vector<char> polygon_hit;       // any component
  std::vector<char> other_hit;
  bool discarded = false;
};

// Conjunction of atoms joined by '&':
//   maxexcess:k     every component has excess <= k
//   c3free          no triangle
//   cpfree:p[,p..]  no cycle of these lengths
//   free:H          no copy of the named graph H
//   profile:r1,...  exactly r_i components of excess i, none above excess q
//   any             always true
struct Event {
  std::string text;
  std::optional<long> max_excess;
  std::vector<int> polygons_free;
  std::vector<std::string> others_free;
  std::optional<std::vector<int>> profile;
};

Event parse_event(std::string_view text);

struct ProcessConfig {
  long n = 0;
  long m = 0;
  ProcessModel model = ProcessModel::uniform;
  ForbiddenSet forbidden;  // extra patterns to record beyond those in the events
  long trials = 1;
  std::uint64_t seed = 0;
  int workers = 1;
  ClassifyLimits limits;
  // Hard budget on n * trials.
  double work_limit = 1e10;
};

struct Estimate {
  std::string event;
  double p_hat = 0;
  double stderr_ = 0;
  long hits = 0;
  long trials = 0;     // trials used (discarded ones excluded)
  long discarded = 0;
  std::uint64_t seed = 0;
};

// One trial, fully determined by (config.seed, index).
TrialOutcome run_trial(const ProcessConfig& config, const ForbiddenSet& patterns, long index);

bool evaluate(const Event& event, const ForbiddenSet& patterns, const TrialOutcome& outcome);

// Patterns needed by the events together with config.forbidden.
ForbiddenSet patterns_for(const ProcessConfig& config, const std::vector<Event>& events);

// Every event is evaluated on the same trials.
std::vector<Estimate> run_trials(const ProcessConfig& config, const std::vector<Event>& events);

}  // namespace sparsecc::simulator
