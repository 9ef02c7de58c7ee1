#pragma once

#include "hyperhom/chain.hpp"
#include "hyperhom/hypergraph.hpp"
#include "hyperhom/matrix.hpp"

namespace hyperhom {

/// ∂1: sends an edge (A,B) to Σ_{v∈B} v − Σ_{v∈A} v, extended linearly.
/// Throws IndexError if `x` has support outside the edge set.
Chain boundary(const OrientedHypergraph& h, const Chain& x);

/// δ0: φ ↦ φ∘∂1. The result takes the value φ(∂e) on each edge e.
Cochain coboundary(const OrientedHypergraph& h, const Cochain& phi);

/// The |V|×|E| incidence matrix: entry (v,e) is +1 if v is a head of e,
/// −1 if v is a tail of e, 0 otherwise. δ0 is its transpose.
IntMatrix boundary_matrix(const OrientedHypergraph& h);

/// ⟨x,y⟩_∂ computed as Σ_v α_v β_v where ∂x = Σ α_v v and ∂y = Σ β_v v.
Scalar boundary_inner_product(const OrientedHypergraph& h, const Chain& x, const Chain& y);

/// ⟨x,y⟩ = Σ_i x_i y_i over the common basis.
Scalar canonical_inner_product(const Chain& x, const Chain& y);

/// ψ_∂x = (δ∘γ∘∂)(x).
Cochain psi_partial(const OrientedHypergraph& h, const Chain& x);

}  // namespace hyperhom
