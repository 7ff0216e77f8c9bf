#pragma once

#include <string>
#include <vector>

#include "bck/duality.hpp"

namespace bck {

/// Hasse diagram (cover edges only, drawn bottom to top) in DOT. Nodes with
/// marked[i] set are drawn red.
std::string hasse_dot(const FinitePoset& poset, const std::vector<std::string>& labels,
                      const std::vector<bool>& marked = {}, const std::string& graph_name = "hasse");

}  // namespace bck
