#pragma once

#include <cstdint>
#include <vector>

#include "fusionkit/premetric.hpp"
#include "fusionkit/root_of_unity.hpp"

namespace fusionkit {

/// The standard 3-cocycle on Z_M attached to an Mth root of unity zeta:
/// omega(i,j,l) = 1 when j+l < M and zeta^i otherwise.
struct CyclicCocycle {
  std::int64_t modulus;
  RootOfUnity zeta;

  CyclicCocycle(std::int64_t m, RootOfUnity z);
};

RootOfUnity omega_eval(const CyclicCocycle& c, std::int64_t i, std::int64_t j,
                       std::int64_t l);

/// Braiding datum on the cyclic pointed ring: xi with xi^{2M} = xi^{M^2} = 1.
/// The induced cocycle label is zeta = xi^M (always +-1), the braiding is
/// sigma(i,j) = xi^{ij} and the squared braiding is xi^{2ij}.
struct CyclicBraiding {
  std::int64_t modulus;
  RootOfUnity xi;

  CyclicBraiding(std::int64_t m, RootOfUnity x);
  RootOfUnity zeta() const { return xi.pow(modulus); }
  RootOfUnity sigma(std::int64_t i, std::int64_t j) const { return xi.pow(i * j); }
  RootOfUnity squared(std::int64_t i, std::int64_t j) const {
    return xi.pow(2 * i * j);
  }
};

/// Quadratic form q(j) = xi^{j^2} on Z_M.
QuadraticForm quadratic_from_xi(const CyclicBraiding& b);

/// All braidings with the given induced cocycle label: xi with
/// xi^{2M} = xi^{M^2} = 1 and xi^M = zeta. Empty unless zeta = 1 (M odd) or
/// zeta = +-1 (M even); M entries otherwise, ordered by exponent.
std::vector<CyclicBraiding> enumerate_braidings(std::int64_t m, const RootOfUnity& zeta);

} // namespace fusionkit
