#include "fusionkit/nising.hpp"

#include <numeric>
#include <stdexcept>

#include "fusionkit/analysis.hpp"
#include "fusionkit/isomorphism.hpp"
#include "fusionkit/product.hpp"
#include "fusionkit/subring.hpp"

namespace fusionkit {

FusionRing make_ising() {
  FusionRing r(3, {"1", "δ", "Z"}, 0, {0, 1, 2});
  const int one = 0, delta = 1, z = 2;
  r.set_coeff(one, one, one, 1);
  r.set_coeff(one, delta, delta, 1);
  r.set_coeff(delta, one, delta, 1);
  r.set_coeff(one, z, z, 1);
  r.set_coeff(z, one, z, 1);
  r.set_coeff(delta, delta, one, 1);
  r.set_coeff(delta, z, z, 1);
  r.set_coeff(z, delta, z, 1);
  r.set_coeff(z, z, one, 1);
  r.set_coeff(z, z, delta, 1);
  r.meta["family"] = "ising";
  return r;
}

CmData make_cm(int m) {
  if (m < 2 || m % 2 != 0)
    throw std::invalid_argument("make_cm: M must be an even integer >= 2");
  const int h = m / 2;
  CmData cm;
  cm.M = m;

  // Basis: invertibles delta^i a^j at i*h + j, then Z_j at 2h + j.
  std::vector<std::string> labels;
  std::vector<int> dual;
  cm.invertible_index.resize(2 * h);
  cm.z_index.resize(h);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < h; ++j) {
      cm.invertible_index[i * h + j] = i * h + j;
      labels.push_back(std::string(i == 0 ? "1" : "δ") + "⊠" + std::to_string(2 * j));
      dual.push_back(i * h + (h - j) % h);
    }
  for (int j = 0; j < h; ++j) {
    cm.z_index[j] = 2 * h + j;
    labels.push_back("Z⊠" + std::to_string(2 * j + 1));
    dual.push_back(2 * h + ((h - 1 - j) % h + h) % h);
  }

  FusionRing r(3 * h, labels, 0, dual);
  auto inv = [&](int i, int j) { return (i % 2) * h + ((j % h) + h) % h; };
  auto zz = [&](int j) { return 2 * h + ((j % h) + h) % h; };
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < h; ++j) {
      for (int i2 = 0; i2 < 2; ++i2)
        for (int j2 = 0; j2 < h; ++j2)
          r.set_coeff(inv(i, j), inv(i2, j2), inv(i + i2, j + j2), 1);
      for (int l = 0; l < h; ++l) {
        r.set_coeff(inv(i, j), zz(l), zz(j + l), 1);
        r.set_coeff(zz(l), inv(i, j), zz(j + l), 1);
      }
    }
  for (int j = 0; j < h; ++j)
    for (int l = 0; l < h; ++l) {
      r.set_coeff(zz(j), zz(l), inv(0, j + l + 1), 1);
      r.set_coeff(zz(j), zz(l), inv(1, j + l + 1), 1);
    }
  r.meta["family"] = "cm";
  r.meta["M"] = std::to_string(m);
  cm.ring = std::move(r);

  cm.grading.group = FiniteAbelianGroup({m});
  cm.grading.faithful = true;
  cm.grading.degree.resize(3 * h);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < h; ++j) cm.grading.degree[inv(i, j)] = {2 * j};
  for (int j = 0; j < h; ++j) cm.grading.degree[zz(j)] = {2 * j + 1};
  return cm;
}

NisingSpec::NisingSpec(int n, RootOfUnity z) : N(n), zeta(z) {
  if (n < 1) throw std::invalid_argument("N must be >= 1");
  if (!zeta.pow(std::int64_t(1) << n).is_one())
    throw std::invalid_argument("twist label must satisfy zeta^{2^N} = 1");
}

NisingData make_nising(const NisingSpec& spec) {
  NisingData d{make_cm(1 << spec.N), spec};
  d.cm.ring.meta["family"] = "nising";
  d.cm.ring.meta["N"] = std::to_string(spec.N);
  d.cm.ring.meta["zeta"] = spec.zeta.str();
  return d;
}

std::vector<int> self_dual_noninvertibles(int m) {
  auto cm = make_cm(m);
  std::vector<int> out;
  for (int idx : cm.z_index)
    if (cm.ring.dual(idx) == idx) out.push_back(idx);
  return out;
}

namespace {

FactCmWitness make_fact_witness(int m, std::vector<int> map_or_empty) {
  int n2 = 0, odd = m;
  while (odd % 2 == 0) odd /= 2, ++n2;
  FactCmWitness w;
  w.N = n2;
  w.m = odd;
  auto nis = make_nising(NisingSpec(n2, RootOfUnity::one()));
  w.product = deligne_product(nis.cm.ring,
                              pointed_ring(FiniteAbelianGroup::from_cyclic_orders({odd})));
  w.map = std::move(map_or_empty);
  return w;
}

} // namespace

FactCmWitness verify_fact_cm(int m) {
  if (m < 2 || m % 2 != 0)
    throw std::invalid_argument("verify_fact_cm: M must be even");
  auto w = make_fact_witness(m, {});
  auto cm = make_cm(m);
  auto found = ring_isomorphic(cm.ring, w.product);
  if (!found)
    throw std::runtime_error("verify_fact_cm: no isomorphism found (should not happen)");
  w.map = *found;
  if (!verify_iso_witness(cm.ring, w.product, w.map))
    throw std::runtime_error("verify_fact_cm: witness failed verification");
  return w;
}

FactCmWitness fact_cm_split(int m) {
  if (m < 2 || m % 2 != 0)
    throw std::invalid_argument("fact_cm_split: M must be even");
  auto w = make_fact_witness(m, {});
  const int twoN = 1 << w.N;
  const int odd = w.m;
  auto cm = make_cm(m);

  // Z_M = <m> + <2^N>: residue u = m*alpha + 2^N*beta with alpha mod 2^N,
  // beta mod odd. alpha keeps the parity of u, so the Ising letter carries
  // over unchanged.
  std::int64_t minv = 1, tinv = 1;
  while ((odd * minv) % twoN != 1 % twoN) ++minv;
  while ((static_cast<std::int64_t>(twoN) * tinv) % odd != 1 % odd) ++tinv;

  const int h = m / 2;
  const int hn = twoN / 2;
  auto product_index = [&](int ising_basis, std::int64_t beta) {
    return static_cast<int>(ising_basis * odd + beta);
  };
  w.map.assign(cm.ring.rank(), -1);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < h; ++j) {
      std::int64_t u = 2 * j;
      std::int64_t alpha = (u % twoN) * minv % twoN;
      std::int64_t beta = (u % odd) * tinv % odd;
      int ising_basis = i * hn + static_cast<int>(alpha / 2);
      w.map[i * h + j] = product_index(ising_basis, beta);
    }
  for (int j = 0; j < h; ++j) {
    std::int64_t u = 2 * j + 1;
    std::int64_t alpha = (u % twoN) * minv % twoN;
    std::int64_t beta = (u % odd) * tinv % odd;
    int ising_basis = 2 * hn + static_cast<int>((alpha - 1) / 2);
    w.map[2 * h + j] = product_index(ising_basis, beta);
  }
  if (!verify_iso_witness(cm.ring, w.product, w.map))
    throw std::runtime_error("fact_cm_split: constructed witness failed verification");
  return w;
}

NofactReport verify_nofact(int n) {
  NofactReport rep;
  rep.N = n;
  auto nis = make_nising(NisingSpec(n, RootOfUnity::one()));
  const auto& r = nis.cm.ring;
  auto lat = subring_lattice(r);
  rep.all_proper_pointed = true;
  for (const auto& s : lat.members) {
    if (s.is_whole()) continue;
    ++rep.proper_subrings;
    if (!subring_is_pointed(s)) rep.all_proper_pointed = false;
  }
  rep.all_noninvertibles_faithful = true;
  for (int x = 0; x < r.rank(); ++x)
    if (!is_invertible_object(r, x) && subring_generated(r, {x}).rank() != r.rank())
      rep.all_noninvertibles_faithful = false;
  return rep;
}

TwistObstruction twist_obstruction(const NisingSpec& spec) {
  const auto& z = spec.zeta;
  if (z.is_one() || z.is_minus_one())
    return {TwistVerdict::Admits,
            "induced braidings exist: the ambient product of an Ising ring "
            "with the braided cyclic pointed ring restricts"};
  bool is_pm_i = z.den() == 4;
  if (!is_pm_i)
    return {TwistVerdict::RuledOut,
            "the restriction zeta^2 = " + z.pow(2).str() +
                " to the cyclic half of the invertibles admits no braiding"};
  if (spec.N == 2)
    return {TwistVerdict::RuledOut,
            "a braiding would make the cyclic half a non-degenerate proper "
            "pointed part, contradicting primeness"};
  return {TwistVerdict::Unknown,
          "zeta = +-i with N > 2 is not settled by the classification"};
}

} // namespace fusionkit
