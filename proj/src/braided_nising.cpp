#include "fusionkit/braided_nising.hpp"

#include <map>
#include <stdexcept>

namespace fusionkit {

IsingPairing derive_ising_pairing() {
  // Candidates for the delta-vs-Z scalar are +-1 (delta has order 2). The
  // centralizer of <delta> in a non-degenerate rank-3 ring must have total
  // dimension 4 / 2 = 2. It always contains 1 and delta (beta(delta,delta) =
  // q(0) q(delta)^{-2} = 1), whose dimensions already sum to 2, so the
  // sqrt(2)-dimensional Z is excluded: only s = -1 leaves Z out.
  std::optional<RootOfUnity> s;
  for (RootOfUnity cand : {RootOfUnity::one(), RootOfUnity::minus_one()}) {
    double centralizer_dim = 1.0 + 1.0; // 1 and delta
    if (cand.is_one()) centralizer_dim += 2.0; // Z contributes dim(Z)^2 = 2
    if (centralizer_dim == 2.0) {
      if (s) throw std::runtime_error("ising pairing: candidate not unique");
      s = cand;
    }
  }
  if (!s) throw std::runtime_error("ising pairing: no candidate");
  // The pointed part of a braided Ising ring is the super-vector-spaces
  // premetric: q(delta) = -1.
  return IsingPairing{*s, RootOfUnity::minus_one()};
}

InducedBraiding::InducedBraiding(int n, RootOfUnity x)
    : InducedBraiding(n, x, derive_ising_pairing()) {}

InducedBraiding::InducedBraiding(int n, RootOfUnity x, IsingPairing p)
    : N(n), xi(x), pairing(p) {
  if (n < 1) throw std::invalid_argument("InducedBraiding: N must be >= 1");
  if (!xi.pow(std::int64_t(1) << (n + 1)).is_one())
    throw std::invalid_argument("InducedBraiding: xi^{2^{N+1}} = 1 required");
}

namespace {

// Basis bookkeeping for make_nising(N): invertible (eps, t) at eps*h + t with
// residue 2t, non-invertible Z_j at 2h + j with residue 2j+1, h = 2^{N-1}.
struct NisBasis {
  int h;
  explicit NisBasis(int n) : h(1 << (n - 1)) {}
  int rank() const { return 3 * h; }
  bool invertible(int x) const { return x < 2 * h; }
  bool is_delta(int x) const { return x < 2 * h && x >= h; }
  std::int64_t residue(int x) const {
    return invertible(x) ? 2 * static_cast<std::int64_t>(x % h)
                         : 2 * static_cast<std::int64_t>(x - 2 * h) + 1;
  }
};

RootOfUnity letter_scalar(const IsingPairing& p, bool x_delta, bool y_delta,
                          bool x_z, bool y_z) {
  // 1 unless exactly one side is delta and the other is Z; delta against
  // delta pairs trivially (beta(delta,delta) = 1).
  if ((x_delta && y_z) || (y_delta && x_z)) return p.s_delta_z;
  return RootOfUnity::one();
}

} // namespace

std::vector<BraidingEntry> squared_braiding_table(const InducedBraiding& br) {
  NisBasis basis(br.N);
  std::vector<BraidingEntry> table;
  for (int x = 0; x < basis.rank(); ++x)
    for (int y = 0; y < basis.rank(); ++y) {
      BraidingEntry e;
      e.x = x;
      e.y = y;
      e.scalar_defined = basis.invertible(x) || basis.invertible(y);
      RootOfUnity s = letter_scalar(br.pairing, basis.is_delta(x), basis.is_delta(y),
                                    !basis.invertible(x), !basis.invertible(y));
      e.value = s * br.xi.pow(2 * basis.residue(x) * basis.residue(y));
      table.push_back(e);
    }
  return table;
}

RootOfUnity scalar_vs_generator(const InducedBraiding& br, int invertible_i,
                                bool is_delta) {
  RootOfUnity s = is_delta ? br.pairing.s_delta_z : RootOfUnity::one();
  return s * br.xi.pow(2 * invertible_i);
}

QuadraticForm induced_pointed_form(const InducedBraiding& br) {
  QuadraticForm q;
  const int h = 1 << (br.N - 1);
  q.group = br.N == 1 ? FiniteAbelianGroup({2})
                      : FiniteAbelianGroup({2, static_cast<std::int64_t>(h)});
  q.values.resize(2 * h);
  for (int eps = 0; eps < 2; ++eps)
    for (int t = 0; t < h; ++t) {
      FiniteAbelianGroup::Elem e =
          br.N == 1 ? FiniteAbelianGroup::Elem{eps}
                    : FiniteAbelianGroup::Elem{eps, t};
      RootOfUnity v = br.xi.pow(4 * static_cast<std::int64_t>(t) * t);
      if (eps) v = v * br.pairing.q_delta;
      q.values[q.group.index_of(e)] = v;
    }
  return q;
}

InducedCenter induced_center(const InducedBraiding& br) {
  NisBasis basis(br.N);
  auto nis = make_nising(NisingSpec(br.N, br.zeta()));
  InducedCenter out;
  out.pointed_form = induced_pointed_form(br);

  // Center support: invertibles with trivial scalar against the generator.
  std::vector<std::pair<int, int>> center_elems; // (eps, t)
  for (int eps = 0; eps < 2; ++eps)
    for (int t = 0; t < basis.h; ++t)
      if (scalar_vs_generator(br, 2 * t, eps == 1).is_one()) {
        center_elems.emplace_back(eps, t);
        int idx = eps * basis.h + t;
        out.center_basis.push_back(idx);
        out.center_labels.push_back(nis.cm.ring.label(idx));
      }

  // The support is a subgroup of the invertibles; classify q restricted to it.
  AbelianTable t;
  t.n = static_cast<int>(center_elems.size());
  std::map<std::pair<int, int>, int> pos;
  for (int i = 0; i < t.n; ++i) pos[center_elems[i]] = i;
  t.identity = pos.at({0, 0});
  t.mul.assign(t.n, std::vector<int>(t.n));
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j) {
      std::pair<int, int> s{(center_elems[i].first + center_elems[j].first) % 2,
                            (center_elems[i].second + center_elems[j].second) % basis.h};
      auto it = pos.find(s);
      if (it == pos.end())
        throw std::runtime_error("induced center support is not a subgroup");
      t.mul[i][j] = it->second;
    }
  auto structure = AbelianStructure::analyze(t);
  out.center_form.group = structure.group;
  out.center_form.values.resize(t.n);
  for (int i = 0; i < t.n; ++i) {
    auto [eps, tt] = center_elems[i];
    FiniteAbelianGroup::Elem e = br.N == 1 ? FiniteAbelianGroup::Elem{eps}
                                           : FiniteAbelianGroup::Elem{eps, tt};
    out.center_form.values[structure.group.index_of(structure.coords[i])] =
        out.pointed_form.q_of(e);
  }
  out.verdict = classify_center(out.center_form);
  if (out.verdict.witness) {
    for (int i = 0; i < t.n; ++i)
      if (structure.group.index_of(structure.coords[i]) == *out.verdict.witness) {
        auto [eps, tt] = center_elems[i];
        out.witness_label = nis.cm.ring.label(eps * basis.h + tt);
      }
  }

  // Center of the cyclic block <1 x 2>: radical of q restricted to eps = 0,
  // reported by its order-2 generator when the block is nontrivial.
  if (br.N >= 2) {
    QuadraticForm qa;
    qa.group = FiniteAbelianGroup({static_cast<std::int64_t>(basis.h)});
    qa.values.resize(basis.h);
    for (int tt = 0; tt < basis.h; ++tt)
      qa.values[tt] = br.xi.pow(4 * static_cast<std::int64_t>(tt) * tt);
    auto rad = radical(qa);
    for (auto e : rad.elements)
      if (qa.group.elem_order(qa.group.elem_at(e)) == 2)
        out.a_chain_center_generator = nis.cm.ring.label(static_cast<int>(e));
  }
  return out;
}

DegeneracyTable degeneracy_criterion(int n, const RootOfUnity& zeta) {
  if (n < 1) throw std::invalid_argument("degeneracy_criterion: N must be >= 1");
  DegeneracyTable table;
  table.N = n;
  table.zeta = zeta;
  table.equivalence_holds = true;
  table.iff_asserted = n > 2;
  const std::int64_t m = std::int64_t(1) << n;
  for (const auto& b : enumerate_braidings(m, zeta)) {
    InducedBraiding br(n, b.xi);
    auto center = induced_center(br);
    DegeneracyRow row;
    row.xi = b.xi;
    row.verdict = center.verdict.cls;
    row.pointed_nondegenerate = radical(quadratic_from_xi(b)).trivial();
    row.agree = (row.verdict == CenterClass::SlightlyDegenerate) ==
                row.pointed_nondegenerate;
    if (!row.agree) table.equivalence_holds = false;
    table.rows.push_back(row);
  }
  return table;
}

} // namespace fusionkit
