#include "fusionkit/cyclic_forms.hpp"

#include <numeric>
#include <stdexcept>

namespace fusionkit {

CyclicCocycle::CyclicCocycle(std::int64_t m, RootOfUnity z) : modulus(m), zeta(z) {
  if (m < 1) throw std::invalid_argument("cocycle modulus must be >= 1");
  if (!zeta.pow(m).is_one())
    throw std::invalid_argument("cocycle label must satisfy zeta^M = 1");
}

RootOfUnity omega_eval(const CyclicCocycle& c, std::int64_t i, std::int64_t j,
                       std::int64_t l) {
  if (i < 0 || i >= c.modulus || j < 0 || j >= c.modulus || l < 0 || l >= c.modulus)
    throw std::invalid_argument("omega_eval: residues must lie in [0, M)");
  return (j + l < c.modulus) ? RootOfUnity::one() : c.zeta.pow(i);
}

CyclicBraiding::CyclicBraiding(std::int64_t m, RootOfUnity x) : modulus(m), xi(x) {
  if (m < 1) throw std::invalid_argument("braiding modulus must be >= 1");
  if (!xi.pow(2 * m).is_one() || !xi.pow(m * m).is_one())
    throw std::invalid_argument("braiding label must satisfy xi^{2M} = xi^{M^2} = 1");
}

QuadraticForm quadratic_from_xi(const CyclicBraiding& b) {
  QuadraticForm q;
  q.group = b.modulus > 1 ? FiniteAbelianGroup({b.modulus}) : FiniteAbelianGroup();
  q.values.resize(b.modulus);
  for (std::int64_t j = 0; j < b.modulus; ++j) q.values[j] = b.xi.pow(j * j);
  return q;
}

std::vector<CyclicBraiding> enumerate_braidings(std::int64_t m, const RootOfUnity& zeta) {
  if (m < 1) throw std::invalid_argument("enumerate_braidings: M must be >= 1");
  std::vector<CyclicBraiding> out;
  const std::int64_t d = std::gcd(m * m, 2 * m);
  for (std::int64_t k = 0; k < d; ++k) {
    RootOfUnity xi = RootOfUnity::from_exponent(k, d);
    if (xi.pow(m) == zeta) out.emplace_back(m, xi);
  }
  return out;
}

} // namespace fusionkit
