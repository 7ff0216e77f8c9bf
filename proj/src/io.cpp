#include "bck/io.hpp"

#include <string>

namespace bck {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::string kind_of(const Json& j) {
  const Json& k = field(j, "kind");
  if (!k.is_string()) throw ParseError("\"kind\" must be a string");
  return k.get<std::string>();
}

std::size_t as_index(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw ParseError(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

std::vector<FiniteCbckAlgebra> components_of(const Json& j) {
  const Json& cs = field(j, "components");
  if (!cs.is_array() || cs.empty()) throw ParseError("\"components\" must be a nonempty array");
  std::vector<FiniteCbckAlgebra> out;
  for (const auto& c : cs) out.push_back(parse_algebra(c));
  return out;
}

Json matrix_json(const FinitePoset& p) {
  Json rows = Json::array();
  for (std::size_t a = 0; a < p.size(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < p.size(); ++b) row.push_back(p.leq(a, b) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

FiniteCbckAlgebra parse_algebra(const Json& j) {
  const std::string kind = kind_of(j);
  if (kind == "trivial") return trivial_algebra();
  if (kind == "chain") return standard_chain(as_index(field(j, "k"), "k"));
  if (kind == "union") return cbck_union(components_of(j)).algebra;
  if (kind == "product") return direct_product(components_of(j));
  if (kind != "table") throw ParseError("unknown algebra kind \"" + kind + "\"");

  const Json& rows = field(j, "table");
  if (!rows.is_array()) throw ParseError("\"table\" must be an array of rows");
  Table t;
  for (const auto& row : rows) {
    if (!row.is_array()) throw ParseError("every table row must be an array");
    std::vector<Element> r;
    for (const auto& cell : row) r.push_back(as_index(cell, "table entry"));
    t.push_back(std::move(r));
  }
  if (j.contains("size") && as_index(j["size"], "size") != t.size())
    throw StructureError("\"size\" disagrees with the number of table rows");
  return FiniteCbckAlgebra(std::move(t));
}

Json to_json(const FiniteCbckAlgebra& a) {
  return Json{{"kind", "table"}, {"size", a.size()}, {"table", a.table()}};
}

BckHomomorphism parse_homomorphism(const Json& j) {
  BckHomomorphism h{parse_algebra(field(j, "source")), parse_algebra(field(j, "target")), {}};
  const Json& map = field(j, "map");
  if (!map.is_array()) throw ParseError("\"map\" must be an array");
  for (const auto& x : map) h.map.push_back(as_index(x, "map entry"));
  return h;
}

RootedTree parse_tree(const Json& j) {
  if (kind_of(j) != "tree") throw ParseError("expected {\"kind\":\"tree\"}");
  const Json& ps = field(j, "parents");
  if (!ps.is_array()) throw ParseError("\"parents\" must be an array");
  std::vector<std::optional<Vertex>> parents;
  for (const auto& p : ps) {
    if (p.is_null())
      parents.emplace_back(std::nullopt);
    else
      parents.emplace_back(as_index(p, "parent"));
  }
  std::vector<std::string> names;
  if (j.contains("names")) {
    if (!j["names"].is_array()) throw ParseError("\"names\" must be an array of strings");
    for (const auto& n : j["names"]) {
      if (!n.is_string()) throw ParseError("\"names\" must be an array of strings");
      names.push_back(n.get<std::string>());
    }
  }
  return RootedTree(std::move(parents), std::move(names));
}

Json to_json(const RootedTree& tree) {
  Json parents = Json::array();
  Json names = Json::array();
  for (Vertex v = 0; v < tree.size(); ++v) {
    parents.push_back(tree.parent(v) ? Json(*tree.parent(v)) : Json(nullptr));
    names.push_back(tree.name(v));
  }
  return Json{{"kind", "tree"}, {"parents", parents}, {"names", names}};
}

TreeElement parse_tree_element(const RootedTree& tree, const Json& j) {
  const Json& s = field(j, "support");
  if (!s.is_object()) throw ParseError("\"support\" must map vertices to integers");
  TreeElement::Support support;
  for (const auto& [key, value] : s.items()) {
    std::size_t used = 0;
    Vertex v = 0;
    try {
      v = std::stoul(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || key.empty()) throw ParseError("support key \"" + key + "\" is not a vertex");
    if (!value.is_number_integer()) throw ParseError("support values must be integers");
    support[v] = value.get<std::int64_t>();
  }
  return TreeElement(tree, std::move(support));
}

Json to_json(const TreeElement& u) {
  Json support = Json::object();
  for (const auto& [v, value] : u.support()) support[std::to_string(v)] = value;
  return Json{{"support", support}};
}

PathIdeal parse_path_ideal(const RootedTree& tree, const Json& j) {
  const Json& a = field(j, "antichain");
  if (a.is_null()) return PathIdeal{};
  if (!a.is_array()) throw ParseError("\"antichain\" must be an array or null");
  std::vector<Vertex> vertices;
  for (const auto& v : a) vertices.push_back(as_index(v, "antichain vertex"));
  return canonical_antichain(tree, vertices);
}

Json to_json(const PathIdeal& ideal) {
  if (ideal.is_whole()) return Json{{"antichain", nullptr}};
  return Json{{"antichain", ideal.antichain()}};
}

FinitePoset parse_poset(const Json& j) {
  const Json& rows = field(j, "leq");
  if (!rows.is_array()) throw ParseError("\"leq\" must be a matrix");
  std::vector<std::vector<bool>> leq;
  for (const auto& row : rows) {
    if (!row.is_array()) throw ParseError("\"leq\" rows must be arrays");
    std::vector<bool> r;
    for (const auto& x : row) {
      if (!x.is_number_integer() || (x.get<int>() != 0 && x.get<int>() != 1))
        throw ParseError("\"leq\" entries must be 0 or 1");
      r.push_back(x.get<int>() == 1);
    }
    leq.push_back(std::move(r));
  }
  return FinitePoset(std::move(leq));
}

Json to_json(const FinitePoset& p) { return Json{{"size", p.size()}, {"leq", matrix_json(p)}}; }

FiniteDistLattice parse_lattice(const Json& j) {
  return FiniteDistLattice::from_order(parse_poset(j));
}

Json to_json(const FiniteDistLattice& l) {
  return Json{{"size", l.size()},
              {"leq", matrix_json(l.order())},
              {"bottom", l.bottom()},
              {"top", l.top()}};
}

Json point_set_json(PointSet s) {
  Json out = Json::array();
  for (std::size_t i = 0; i < 64; ++i)
    if ((s >> i) & 1U) out.push_back(i);
  return out;
}

Json to_json(const FiniteSpace& space) {
  Json opens = Json::array();
  Json basis = Json::array();
  for (PointSet u : space.opens()) opens.push_back(point_set_json(u));
  for (PointSet b : space.basis()) basis.push_back(point_set_json(b));
  return Json{{"points", space.labels()}, {"opens", opens}, {"basis", basis}};
}

FiniteSpace parse_space(const Json& j) {
  const Json& pts = field(j, "points");
  if (!pts.is_array()) throw ParseError("\"points\" must be an array");
  std::vector<std::string> labels;
  for (const auto& p : pts) labels.push_back(p.is_string() ? p.get<std::string>() : p.dump());
  auto family = [&](const char* key) {
    std::vector<PointSet> out;
    const Json& f = field(j, key);
    if (!f.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
    for (const auto& s : f) {
      if (!s.is_array()) throw ParseError(std::string("\"") + key + "\" entries must be arrays");
      PointSet set = 0;
      for (const auto& x : s) {
        const std::size_t i = as_index(x, "point");
        if (i >= labels.size()) throw StructureError("point index out of range");
        set |= PointSet{1} << i;
      }
      out.push_back(set);
    }
    return out;
  };
  return FiniteSpace(labels, family("opens"), j.contains("basis") ? family("basis") : family("opens"));
}

Json to_json(const ElementSet& s) { return Json(s.members()); }

AlgebraInput parse_input(const Json& j) {
  if (kind_of(j) == "tree") return parse_tree(j);
  return parse_algebra(j);
}

}  // namespace bck
