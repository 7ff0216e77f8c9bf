#include "bck/dot.hpp"

#include <sstream>

#include "bck/errors.hpp"

namespace bck {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string hasse_dot(const FinitePoset& poset, const std::vector<std::string>& labels,
                      const std::vector<bool>& marked, const std::string& graph_name) {
  const std::size_t n = poset.size();
  if (labels.size() != n) throw PreconditionError("one label per poset element expected");
  if (!marked.empty() && marked.size() != n)
    throw PreconditionError("marked flags must match the poset size");

  std::ostringstream out;
  out << "digraph " << quoted(graph_name) << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < n; ++i) {
    out << "  n" << i << " [label=" << quoted(labels[i]);
    if (!marked.empty() && marked[i]) out << ", fontcolor=red, color=red";
    out << "];\n";
  }
  for (auto [a, b] : poset.covers()) out << "  n" << a << " -> n" << b << " [arrowhead=none];\n";
  out << "}\n";
  return out.str();
}

}  // namespace bck
