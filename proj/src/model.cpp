#include "sparsecc/model.hpp"

#include "sparsecc/errors.hpp"

namespace sparsecc {

Model parse_model(std::string_view name) {
  if (name == "graph") return Model::graph;
  if (name == "multigraph") return Model::multigraph;
  throw invalid_input("unknown model: " + std::string(name));
}

std::string to_string(Model m) {
  return m == Model::graph ? "graph" : "multigraph";
}

}  // namespace sparsecc
