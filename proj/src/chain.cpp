#include "hyperhom/chain.hpp"

namespace hyperhom {

Scalar evaluate(const Cochain& psi, const Chain& x) {
  if (psi.ring() != x.ring()) throw RingError("cochain and chain are over different rings");
  if (psi.dimension() != x.dimension()) throw DimensionError("cochain and chain have different dimensions");
  mpq_class sum = 0;
  // Iterate the sparser side.
  const auto& small = psi.terms().size() <= x.terms().size() ? psi.terms() : x.terms();
  const auto& large = psi.terms().size() <= x.terms().size() ? x.terms() : psi.terms();
  for (const auto& [i, v] : small) {
    if (auto it = large.find(i); it != large.end()) sum += v * it->second;
  }
  return Scalar(psi.ring(), sum);
}

Cochain gamma(const Chain& c) {
  Cochain psi(c.dimension(), c.ring());
  for (const auto& [i, v] : c.terms()) psi.add(i, v);
  return psi;
}

Chain gamma_inverse(const Cochain& psi) {
  Chain c(psi.dimension(), psi.ring());
  for (const auto& [i, v] : psi.terms()) c.add(i, v);
  return c;
}

}  // namespace hyperhom
