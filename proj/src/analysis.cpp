#include "fusionkit/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "fusionkit/grading.hpp"
#include "fusionkit/subring.hpp"

namespace fusionkit {

DimensionData fp_dims(const FusionRing& r) {
  const int n = r.rank();
  // T[b][e] = sum_a N_{ab}^e; strictly positive for a valid ring, so the
  // iteration converges geometrically to the common dimension eigenvector.
  std::vector<std::vector<double>> t(n, std::vector<double>(n, 0.0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (const auto& e : r.tensor(a, b)) t[b][e.c] += static_cast<double>(e.n);

  std::vector<double> v(n, 1.0), w(n, 0.0);
  bool converged = false;
  for (int iter = 0; iter < 20000; ++iter) {
    double norm = 0.0;
    for (int b = 0; b < n; ++b) {
      double s = 0.0;
      for (int e = 0; e < n; ++e) s += t[b][e] * v[e];
      w[b] = s;
      norm = std::max(norm, std::abs(s));
    }
    if (norm == 0.0) break;
    double resid = 0.0;
    for (int b = 0; b < n; ++b) {
      w[b] /= norm;
      resid = std::max(resid, std::abs(w[b] - v[b]));
    }
    v = w;
    if (resid < 1e-13) {
      converged = true;
      if (iter > 2) break;
    }
  }
  if (!converged || v[r.unit()] <= 0.0)
    throw std::runtime_error("dimension iteration did not converge (corrupt ring)");

  DimensionData d;
  d.dims.resize(n);
  double vu = v[r.unit()];
  for (int i = 0; i < n; ++i) {
    if (v[i] / vu < 1.0 - 1e-9)
      throw std::runtime_error("simple dimension below 1 (corrupt ring)");
    d.dims[i] = ExactDim::snap(v[i] / vu, 1e-9);
  }

  bool exact = true;
  for (int i = 0; i < n && exact; ++i) exact = d.dims[i].exact;
  if (exact) {
    // dim(a) dim(b) == sum_c N_{ab}^c dim(c), exactly in Z[sqrt(2)].
    for (int a = 0; a < n && exact; ++a)
      for (int b = 0; b < n && exact; ++b) {
        ExactDim sum = ExactDim::integer(0);
        for (const auto& e : r.tensor(a, b))
          sum = sum + ExactDim::integer(e.n) * d.dims[e.c];
        if (!(sum == d.dims[a] * d.dims[b])) exact = false;
      }
  }
  if (!exact) {
    // Keep floats, but insist they satisfy the homomorphism property within
    // a loose tolerance; otherwise the input is not a fusion ring.
    double scale = 1.0;
    for (int i = 0; i < n; ++i) scale = std::max(scale, v[i] / vu);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        double sum = 0.0;
        for (const auto& e : r.tensor(a, b)) sum += e.n * (v[e.c] / vu);
        if (std::abs(sum - (v[a] / vu) * (v[b] / vu)) > 1e-6 * scale * scale)
          throw std::runtime_error("dimension equation fails (corrupt ring)");
      }
    for (int i = 0; i < n; ++i) d.dims[i] = ExactDim::inexact(v[i] / vu);
  }
  d.all_exact = exact;
  d.total = ExactDim::integer(0);
  for (int i = 0; i < n; ++i) d.total = d.total + d.dims[i] * d.dims[i];
  return d;
}

std::vector<ExactDim> cd_set(const FusionRing& r) {
  auto d = fp_dims(r);
  std::vector<ExactDim> out;
  for (const auto& x : d.dims) {
    bool dup = false;
    for (const auto& y : out)
      if (x == y) dup = true;
    if (!dup) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_invertible_object(const FusionRing& r, int x) {
  const auto& p = r.tensor(x, r.dual(x));
  return p.size() == 1 && p[0].c == r.unit() && p[0].n == 1;
}

InvertibleData invertibles(const FusionRing& r) {
  InvertibleData inv;
  inv.group_index.assign(r.rank(), -1);
  for (int x = 0; x < r.rank(); ++x)
    if (is_invertible_object(r, x)) {
      inv.group_index[x] = static_cast<int>(inv.indices.size());
      inv.indices.push_back(x);
    }
  int m = static_cast<int>(inv.indices.size());
  inv.table.n = m;
  inv.table.identity = inv.group_index[r.unit()];
  inv.table.mul.assign(m, std::vector<int>(m, -1));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const auto& p = r.tensor(inv.indices[i], inv.indices[j]);
      if (p.size() != 1 || p[0].n != 1 || inv.group_index[p[0].c] < 0)
        throw std::runtime_error("invertibles do not close into a group (corrupt ring)");
      inv.table.mul[i][j] = inv.group_index[p[0].c];
    }
  inv.abelian = inv.table.is_abelian();
  if (inv.abelian) inv.structure = AbelianStructure::analyze(inv.table);
  return inv;
}

StabilizerData stabilizer_decomposition(const FusionRing& r, int x) {
  if (x < 0 || x >= r.rank()) throw std::invalid_argument("basis index out of range");
  auto inv = invertibles(r);
  StabilizerData sd;
  for (int g : inv.indices)
    if (r.coeff(g, x, x) > 0) sd.stabilizer.push_back(g);
  sd.decomposition = r.tensor(x, r.dual(x));
  // Expected shape: every stabilizer element exactly once among the
  // invertible constituents, and no other invertibles.
  for (const auto& e : sd.decomposition)
    if (inv.is_invertible(e.c)) {
      bool in_stab = std::binary_search(sd.stabilizer.begin(), sd.stabilizer.end(), e.c);
      if (!in_stab || e.n != 1) sd.canonical_shape = false;
    }
  for (int g : sd.stabilizer)
    if (r.coeff(x, r.dual(x), g) != 1) sd.canonical_shape = false;
  return sd;
}

GtyReport gty_structure(const FusionRing& r) {
  auto inv = invertibles(r);
  std::vector<int> noninv;
  for (int x = 0; x < r.rank(); ++x)
    if (!inv.is_invertible(x)) noninv.push_back(x);
  if (noninv.empty())
    throw std::invalid_argument("gty_structure: pointed input rejected");

  GtyReport rep;
  rep.n = static_cast<int>(noninv.size());
  rep.invertible_count = static_cast<int>(inv.indices.size());

  rep.is_gty = true;
  for (int x : noninv)
    for (int y : noninv)
      for (const auto& e : r.tensor(x, y))
        if (!inv.is_invertible(e.c)) rep.is_gty = false;
  if (!rep.is_gty) return rep;

  rep.counts_match = rep.invertible_count == 2 * rep.n;

  auto adj = adjoint_subring(r);
  rep.adjoint_rank = adj.rank();

  auto ug = universal_grading(r);
  rep.universal_order = ug.grading.group.order();

  // Orbit of the first non-invertible under left tensor multiplication.
  std::set<int> orbit;
  for (int g : inv.indices) {
    const auto& p = r.tensor(g, noninv[0]);
    if (p.size() == 1 && p[0].n == 1) orbit.insert(p[0].c);
  }
  rep.action_transitive = orbit.size() == noninv.size();

  // <delta> normal in G(C): adjoint = {1, delta} with delta invertible.
  rep.z2_normal = false;
  if (rep.adjoint_rank == 2) {
    int delta = adj.simples[0] == r.unit() ? adj.simples[1] : adj.simples[0];
    if (inv.is_invertible(delta)) {
      rep.z2_normal = true;
      for (int g : inv.indices) {
        auto gd = r.mult(FusionRing::simple(g), FusionRing::simple(delta));
        auto gdg = r.mult(gd, FusionRing::simple(r.dual(g)));
        if (!(gdg.size() == 1 && gdg[0].c == delta && gdg[0].n == 1))
          rep.z2_normal = false;
      }
    }
  }
  return rep;
}

} // namespace fusionkit
