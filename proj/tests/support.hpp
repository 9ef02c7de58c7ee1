#pragma once

#include <string>
#include <vector>

#include "hyperhom/chain.hpp"
#include "hyperhom/document.hpp"
#include "hyperhom/fixtures.hpp"
#include "hyperhom/hypergraph.hpp"

namespace support {

inline hyperhom::OrientedHypergraph example(std::string_view name) {
  return hyperhom::to_hypergraph(hyperhom::builtin_example(name).value());
}

inline hyperhom::IntVector ints(std::initializer_list<long> values) {
  hyperhom::IntVector v;
  for (long x : values) v.emplace_back(x);
  return v;
}

inline hyperhom::Chain chain(hyperhom::Ring ring, std::initializer_list<long> values) {
  const auto v = ints(values);
  return hyperhom::Chain::from_dense(1, ring, std::span<const mpz_class>(v));
}

inline hyperhom::Chain chain0(hyperhom::Ring ring, std::initializer_list<long> values) {
  const auto v = ints(values);
  return hyperhom::Chain::from_dense(0, ring, std::span<const mpz_class>(v));
}

}  // namespace support
