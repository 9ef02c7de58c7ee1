#pragma once

#include <json.hpp>

#include "hyperhom/exact_linalg.hpp"
#include "hyperhom/homology.hpp"
#include "hyperhom/hypergraph.hpp"
#include "hyperhom/spanning_tree.hpp"

// Machine-readable forms of every report. Exact values (coefficients,
// elementary divisors, indices of lattices) are written as decimal strings
// such as "-3/2" so that no precision is lost; counts and ranks are numbers.

namespace hyperhom {

using ojson = nlohmann::ordered_json;

ojson to_json(const ValidationReport& report);
ojson to_json(const ModuleStructure& m);
ojson to_json(const Chain& c);
ojson to_json(const HomologyReport& report);
ojson to_json(const GraphLikenessReport& report);
ojson to_json(const SpanningTree& tree);
ojson to_json(const TreeAxiomReport& report);
ojson to_json(const TreeSearchResult& result);
ojson to_json(const DecompositionCheck& check);
ojson to_json(const RationalDecomposition& d);
ojson to_json(const IntegerDecomposition& d);

ojson vector_json(const IntVector& v);
ojson vector_json(const RatVector& v);

}  // namespace hyperhom
