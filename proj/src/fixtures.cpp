#include "hyperhom/fixtures.hpp"

namespace hyperhom {

namespace {

HypergraphDocument make(std::string name, std::vector<std::string> vertices, std::vector<NamedEdge> edges) {
  return HypergraphDocument{std::move(name), std::move(vertices), std::move(edges)};
}

}  // namespace

std::vector<std::string_view> builtin_example_names() {
  return {"main-example", "parallel-edges", "triangle-graph", "path-graph"};
}

std::optional<HypergraphDocument> builtin_example(std::string_view name) {
  if (name == "main-example") {
    return make("main-example", {"v1", "v2", "v3"},
                {{{"v2", "v3"}, {"v1"}}, {{"v1", "v3"}, {"v2"}}, {{"v1", "v2"}, {"v3"}}});
  }
  if (name == "parallel-edges") {
    return make("parallel-edges", {"u", "v"}, {{{"u"}, {"v"}}, {{"u"}, {"v"}}});
  }
  if (name == "triangle-graph") {
    return make("triangle-graph", {"u", "v", "w"}, {{{"u"}, {"v"}}, {{"v"}, {"w"}}, {{"u"}, {"w"}}});
  }
  if (name == "path-graph") {
    return make("path-graph", {"a", "b", "c"}, {{{"a"}, {"b"}}, {{"b"}, {"c"}}});
  }
  return std::nullopt;
}

}  // namespace hyperhom
