#pragma once

#include <string>
#include <string_view>

namespace sparsecc {

// graph: simple labelled graphs. multigraph: kappa-weighted multigraphs
// (loops and multiple edges allowed).
enum class Model { graph, multigraph };

Model parse_model(std::string_view name);
std::string to_string(Model m);

}  // namespace sparsecc
