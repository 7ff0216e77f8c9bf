#pragma once

// JSON schemas for algebras, homomorphisms, trees, elements, ideals, posets,
// lattices and spaces. Objects use sorted keys and sets are emitted sorted,
// so equal values serialize to identical bytes.

#include <variant>

#include <json.hpp>

#include "bck/algebra.hpp"
#include "bck/constructions.hpp"
#include "bck/duality.hpp"
#include "bck/space.hpp"
#include "bck/tree_algebra.hpp"

namespace bck {

using Json = nlohmann::json;

/// {"kind":"table"|"chain"|"union"|"product"|"trivial", ...}, nested freely.
/// Throws ParseError on schema mismatch; table problems surface as
/// StructureError or AxiomError.
FiniteCbckAlgebra parse_algebra(const Json& j);
Json to_json(const FiniteCbckAlgebra& algebra);

/// {"source":<algebra>,"target":<algebra>,"map":[...]}
BckHomomorphism parse_homomorphism(const Json& j);

/// {"kind":"tree","parents":[null,0,...],"names":[...]?}
RootedTree parse_tree(const Json& j);
Json to_json(const RootedTree& tree);

/// {"support":{"<vertex>":<int>,...}}
TreeElement parse_tree_element(const RootedTree& tree, const Json& j);
Json to_json(const TreeElement& u);

/// {"antichain":[...]} with null (or []) for the whole algebra.
PathIdeal parse_path_ideal(const RootedTree& tree, const Json& j);
Json to_json(const PathIdeal& ideal);

/// {"size":n,"leq":[[0,1,...],...]}
FinitePoset parse_poset(const Json& j);
Json to_json(const FinitePoset& poset);
/// Lattices are read through their order.
FiniteDistLattice parse_lattice(const Json& j);
Json to_json(const FiniteDistLattice& lattice);

/// {"points":[labels],"opens":[[...]],"basis":[[...]]}
Json to_json(const FiniteSpace& space);
FiniteSpace parse_space(const Json& j);
Json point_set_json(PointSet s);

Json to_json(const ElementSet& s);

/// Either a finite algebra or a tree, dispatched on "kind".
using AlgebraInput = std::variant<FiniteCbckAlgebra, RootedTree>;
AlgebraInput parse_input(const Json& j);

}  // namespace bck
