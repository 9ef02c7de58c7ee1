#include "hyperhom/boundary.hpp"

namespace hyperhom {

namespace {

void require_dimension(int actual, int expected, const char* what) {
  if (actual != expected) {
    throw DimensionError(std::string(what) + " must have dimension " + std::to_string(expected));
  }
}

}  // namespace

Chain boundary(const OrientedHypergraph& h, const Chain& x) {
  require_dimension(x.dimension(), 1, "boundary argument");
  x.require_within(h.edge_count());
  Chain out(0, x.ring());
  for (const auto& [j, coeff] : x.terms()) {
    const Edge& e = h.edge(j);
    for (std::size_t v : e.heads) out.add(v, coeff);
    for (std::size_t v : e.tails) out.add(v, mpq_class(-coeff));
  }
  return out;
}

Cochain coboundary(const OrientedHypergraph& h, const Cochain& phi) {
  require_dimension(phi.dimension(), 0, "coboundary argument");
  phi.require_within(h.vertex_count());
  Cochain out(1, phi.ring());
  for (std::size_t j = 0; j < h.edge_count(); ++j) {
    const Edge& e = h.edge(j);
    mpq_class value = 0;
    for (std::size_t v : e.heads) value += phi.coefficient(v).value();
    for (std::size_t v : e.tails) value -= phi.coefficient(v).value();
    out.add(j, value);
  }
  return out;
}

IntMatrix boundary_matrix(const OrientedHypergraph& h) {
  IntMatrix b(h.vertex_count(), h.edge_count());
  for (std::size_t j = 0; j < h.edge_count(); ++j) {
    for (std::size_t v : h.edge(j).heads) b(v, j) = 1;
    for (std::size_t v : h.edge(j).tails) b(v, j) = -1;
  }
  return b;
}

Scalar boundary_inner_product(const OrientedHypergraph& h, const Chain& x, const Chain& y) {
  if (x.ring() != y.ring()) throw RingError("boundary inner product of chains over different rings");
  return evaluate(gamma(boundary(h, x)), boundary(h, y));
}

Scalar canonical_inner_product(const Chain& x, const Chain& y) {
  return evaluate(gamma(x), y);
}

Cochain psi_partial(const OrientedHypergraph& h, const Chain& x) {
  return coboundary(h, gamma(boundary(h, x)));
}

}  // namespace hyperhom
