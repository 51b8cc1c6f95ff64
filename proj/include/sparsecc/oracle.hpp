#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sparsecc/graph.hpp"
#include "sparsecc/model.hpp"
#include "sparsecc/rational.hpp"

namespace sparsecc::oracle {

// c(n, n+k) for 0 <= n <= nmax, -1 <= k <= kmax, from the exponential formula.
class CountTable {
 public:
  Model model() const { return model_; }
  int nmax() const { return nmax_; }
  int kmax() const { return kmax_; }
  // Exact; an integer for the graph model, kappa-weighted for multigraphs.
  const Rational& at(int n, int k) const;

 private:
  friend CountTable connected_counts(Model, int, int);
  CountTable(Model model, int nmax, int kmax);
  Model model_;
  int nmax_;
  int kmax_;
  std::vector<std::vector<Rational>> table_;  // [n][k + 1]
};

CountTable connected_counts(Model model, int nmax, int kmax);

// Conjunction of atoms evaluated on a whole (multi)graph.
struct Predicate {
  bool connected = false;
  std::optional<int> max_excess;  // every component
  std::vector<Graph> forbidden;   // no copy of any of these
  struct CopyCount {
    Graph pattern;
    int count;
  };
  std::vector<CopyCount> copy_counts;  // exactly `count` copies
  std::vector<Graph> kernel_excluded;  // no component whose kernel is one of these
  // When non-empty the census is weighted: a graph with at least two copies
  // of these members counts s = number of edges lying in every copy (the
  // edges whose deletion destroys all copies); other graphs count 0.
  std::vector<Graph> juxtaposition;

  std::string describe() const;
};

// Atoms joined by '&': connected, c3free, cpfree:p, free:H, onecopy:H,
// copies:H:c, maxexcess:k, nokernel:H, juxta:H. H is a named graph.
Predicate parse_predicate(std::string_view text);

struct BruteOptions {
  int workers = 1;
  // Hard cap on the number of edge sets (graphs) or multisets visited.
  double max_instances = 5e8;
};

// Sum over labelled graphs on n vertices with m edges of the predicate weight.
Rational brute_census(int n, int m, const Predicate& pred, const BruteOptions& opt = {});

// Same over multigraphs, each weighted additionally by kappa.
Rational brute_census_multigraph(int n, int m, const Predicate& pred,
                                 const BruteOptions& opt = {});

// Visits every labelled graph on n <= 9 vertices with m edges (edges listed
// with u < v). Used by tests with custom classifiers.
void for_each_graph(int n, int m, const std::function<void(const Graph&)>& visit,
                    const BruteOptions& opt = {});

}  // namespace sparsecc::oracle
