#include <doctest.h>

#include "hyperhom/boundary.hpp"
#include "hyperhom/homology.hpp"
#include "hyperhom/random.hpp"
#include "hyperhom/spanning_tree.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace hyperhom;
using support::ints;

namespace {

OrientedHypergraph random_instance(std::uint64_t seed) {
  Rng rng(seed * 31 + 3);
  RandomHypergraphOptions o;
  o.vertices = 1 + rng.below(6);
  o.edges = rng.below(7);
  o.max_arity = 1 + rng.below(3);
  o.seed = seed;
  return random_hypergraph(o);
}

}  // namespace

TEST_CASE("three-edge example") {
  const auto h = support::example("main-example");

  const auto z = homology(h, Ring::Integer);
  CHECK(z.h1.is_zero());
  CHECK(z.h1_basis.empty());
  CHECK(z.rank_image_boundary == 3);
  CHECK(z.h1_cohomology == ModuleStructure{0, ints({2, 2})});

  const auto q = homology(h, Ring::Rational);
  CHECK(q.h1.is_zero());
  CHECK(q.h1_cohomology.is_zero());

  const auto g = graph_likeness(h);
  CHECK_FALSE(g.graph_like());
  CHECK(g.consistent());
  CHECK_FALSE(g.canonical_iso);
  CHECK_FALSE(g.annihilator_equals_image);
  CHECK_FALSE(g.b_equals_c_perp);
  CHECK_FALSE(g.image_direct_summand);
  CHECK_FALSE(g.hom_iso);
  CHECK_FALSE(hom_h1_iso_check(h));

  // Ker ∂1 = 0, so the annihilator is all of C¹; e1 itself witnesses the gap.
  CHECK(annihilator_of_cycles(h).size() == 3);
  REQUIRE(g.annihilator_witness.has_value());
  const IntMatrix bt = boundary_matrix(h).transpose();
  CHECK_FALSE(solve_integer(bt, *g.annihilator_witness).has_value());
  REQUIRE(g.torsion_witness.has_value());
  const IntVector doubled{2 * (*g.torsion_witness)[0], 2 * (*g.torsion_witness)[1], 2 * (*g.torsion_witness)[2]};
  CHECK(solve_integer(bt, doubled).has_value());
  REQUIRE(g.summand_witness.has_value());
  CHECK_FALSE(solve_integer(boundary_matrix(h), *g.summand_witness).has_value());
  REQUIRE(g.c_perp_witness.has_value());
}

TEST_CASE("D is strictly smaller than Im δ0 on the three-edge example") {
  const auto h = support::example("main-example");
  const auto d = compute_D(h);
  const IntMatrix b = boundary_matrix(h);
  CHECK(sublattice_equal(d, (b.transpose() * b).columns(), 3));
  const auto s = compare_D_with_coboundaries(h);
  CHECK(s.contained);
  CHECK(s.proper);
  REQUIRE(s.vertex.has_value());
  REQUIRE(s.coboundary.has_value());
  CHECK_FALSE(lattice_contains(d, *s.coboundary, 3));
  CHECK(*s.coboundary == b.transpose().column(*s.vertex));

  CHECK(membership_in_U(h, gamma(boundary(h, support::chain(Ring::Integer, {1, 1, 0})))));
  CHECK(membership_in_U(h, gamma(boundary(h, Chain::basis(1, Ring::Integer, 1)))));
  CHECK_FALSE(membership_in_U(h, Cochain::basis(0, Ring::Integer, 0)));

  const std::vector<Chain> samples{Chain::basis(1, Ring::Integer, 0), support::chain(Ring::Integer, {1, -1, 2})};
  CHECK(prop_D_isomorphism_check(h, samples));
}

TEST_CASE("two parallel edges") {
  const auto h = support::example("parallel-edges");
  const auto z = homology(h, Ring::Integer);
  CHECK(z.h1 == ModuleStructure{1, {}});
  CHECK(z.h1_cohomology == ModuleStructure{1, {}});

  const auto d = orthogonal_decomposition_integer(h);
  REQUIRE(d.cycle_basis.size() == 1);
  REQUIRE(d.cut_basis.size() == 1);
  CHECK(sublattice_equal(d.cycle_basis, std::vector<IntVector>{ints({1, -1})}, 2));
  CHECK(sublattice_equal(d.cut_basis, std::vector<IntVector>{ints({1, 1})}, 2));
  CHECK(d.check.orthogonal);
  CHECK(d.check.intersection_zero);
  CHECK_FALSE(d.check.sum_is_everything);
  CHECK(d.check.sum_index == 2);

  const auto g = graph_likeness(h);
  CHECK(g.graph_like());
  CHECK(g.consistent());
  CHECK_FALSE(g.annihilator_witness.has_value());
  CHECK(check_C_equals_B_perp_integer(h).holds);
}

TEST_CASE("rational decomposition") {
  const auto h = support::example("triangle-graph");
  const auto d = orthogonal_decomposition_rational(h);
  CHECK(d.cycle_basis.size() == 1);
  CHECK(d.cut_basis.size() == 2);
  CHECK(d.check.orthogonal);
  CHECK(d.check.dimensions_add_up);
  CHECK(d.check.intersection_zero);
  CHECK(d.check.sum_is_everything);
}

TEST_CASE("graphs are graph-like") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = random_connected_graph(2 + seed % 6, 1 + seed % 6 + seed % 5, seed);
    const auto r = graph_likeness(g);
    CHECK(r.graph_like());
    CHECK(r.consistent());
    CHECK(is_direct_summand(boundary_matrix(g)));
  }
  CHECK(graph_likeness(support::example("path-graph")).graph_like());
  CHECK(graph_likeness(support::example("triangle-graph")).graph_like());
}

TEST_CASE("homology properties on random hypergraphs") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const auto h = random_instance(seed);
    const std::size_t m = h.edge_count();
    const std::size_t r = oracle::elimination_rank(boundary_matrix(h));

    const auto z = homology(h, Ring::Integer);
    CHECK(z.h1.is_free());
    CHECK(z.h1.free_rank == m - r);
    CHECK(z.h1_basis.size() == m - r);
    for (const auto& c : z.h1_basis) CHECK(boundary(h, c).is_zero());
    CHECK(z.h1_cohomology.free_rank == m - r);

    const auto q = homology(h, Ring::Rational);
    CHECK(q.h1.free_rank == m - r);
    CHECK(q.h1_cohomology.free_rank == m - r);

    const auto g = graph_likeness(h);
    CHECK(g.consistent());
    CHECK(g.graph_like() == is_direct_summand(boundary_matrix(h)));
    CHECK(check_C_equals_B_perp_integer(h).holds);

    const auto dq = orthogonal_decomposition_rational(h);
    CHECK(dq.check.orthogonal);
    CHECK(dq.check.dimensions_add_up);
    CHECK(dq.check.sum_is_everything);

    const auto dz = orthogonal_decomposition_integer(h);
    CHECK(dz.check.orthogonal);
    CHECK(dz.check.intersection_zero);

    const auto s = compare_D_with_coboundaries(h);
    CHECK(s.contained);
    std::vector<Chain> samples;
    for (std::size_t e = 0; e < m; ++e) samples.push_back(Chain::basis(1, Ring::Integer, e));
    CHECK(prop_D_isomorphism_check(h, samples));
  }
}

TEST_CASE("worked homology examples") {
  const OrientedHypergraph edgeless({"a", "b"}, {});
  const auto e = homology(edgeless, Ring::Integer);
  CHECK(e.h1.is_zero());
  CHECK(e.h1_cohomology.is_zero());
  CHECK(hom_h1_iso_check(edgeless));
  const auto ed = orthogonal_decomposition_rational(edgeless);
  CHECK(ed.cycle_basis.empty());
  CHECK(ed.cut_basis.empty());

  // Connected graphs: c = |E| − |V| + 1 independent cycles.
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t n = 2 + seed % 5, m = n - 1 + seed % 4;
    const auto g = random_connected_graph(n, m, seed + 70);
    const auto r = homology(g, Ring::Integer);
    CHECK(r.h1 == ModuleStructure{m - n + 1, {}});
    CHECK(r.h1_cohomology == ModuleStructure{m - n + 1, {}});
    CHECK(hom_h1_iso_check(g));
  }

  const auto main = support::example("main-example");
  CHECK(sublattice_equal(annihilator_of_cycles(main), IntMatrix::identity(3).columns(), 3));
  const auto mq = orthogonal_decomposition_rational(main);
  CHECK(mq.cycle_basis.empty());
  CHECK(mq.cut_basis.size() == 3);
  CHECK(check_C_equals_B_perp_integer(main).holds);
  CHECK(compute_D(main).size() == 3);
  CHECK(membership_in_U(main, Cochain(0, Ring::Integer)));

  const auto p = support::example("parallel-edges");
  CHECK(sublattice_equal(annihilator_of_cycles(p), std::vector<IntVector>{ints({1, 1})}, 2));
  const auto pq = orthogonal_decomposition_rational(p);
  CHECK(pq.check.sum_is_everything);
  const auto cycle = primitive_integer_vector(pq.cycle_basis.at(0));
  const auto cut = primitive_integer_vector(pq.cut_basis.at(0));
  CHECK((cycle == ints({1, -1}) || cycle == ints({-1, 1})));
  CHECK((cut == ints({1, 1}) || cut == ints({-1, -1})));
  CHECK(psi_partial(p, support::chain(Ring::Integer, {1, -1})).is_zero());

  const auto path = support::example("path-graph");
  CHECK(sublattice_equal(annihilator_of_cycles(path), boundary_matrix(path).transpose().columns(), 2));

  const OrientedHypergraph single({"a", "b", "c"}, {{{0}, {1, 2}}});
  const auto s = graph_likeness(single);
  CHECK(s.canonical_iso);
  CHECK(s.annihilator_equals_image);
  CHECK(s.b_equals_c_perp);
  CHECK(s.image_direct_summand);
  CHECK(s.hom_iso);
}
