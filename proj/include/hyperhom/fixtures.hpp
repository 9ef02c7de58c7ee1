#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "hyperhom/document.hpp"

namespace hyperhom {

/// Built-in example hypergraphs:
///   main-example    three vertices, edges e_i = ({v_j, v_k}, {v_i})
///   parallel-edges  two vertices joined by two parallel edges e, t
///   triangle-graph  u→v, v→w, u→w
///   path-graph      a→b, b→c
std::optional<HypergraphDocument> builtin_example(std::string_view name);

std::vector<std::string_view> builtin_example_names();

}  // namespace hyperhom
