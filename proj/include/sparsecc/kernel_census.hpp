#pragma once

#include <map>
#include <vector>

#include "sparsecc/graph.hpp"
#include "sparsecc/xexpr.hpp"

namespace sparsecc::oracle {

// Exact EGFs of connected simple graphs of a fixed excess k >= 1, classified
// by their short cycles. Every such graph is a kernel multigraph (minimum
// degree 3, excess k) with edges subdivided into paths and rooted trees
// attached, so each family is a finite sum of kappa(K)/v! z^v prod_e P_e(z)
// with z -> T. Edge lengths are tracked exactly up to the largest polygon.
struct KernelCensus {
  int excess = 0;
  std::vector<int> polygons;    // the forbidden cycle lengths, sorted
  XExpr all;                    // every connected graph of this excess
  XExpr free;                   // no cycle whose length is in `polygons`
  std::map<int, XExpr> single;  // exactly one such cycle, of length p
  XExpr juxtaposition;          // >= 2 such cycles, weighted by shared edges
};

KernelCensus kernel_census(int excess, const std::vector<int>& polygons);

// Connected labelled multigraphs with minimum degree 3 and the given excess.
std::vector<MultigraphInstance> labelled_kernels(int excess);

}  // namespace sparsecc::oracle
