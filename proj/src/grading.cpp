#include "fusionkit/grading.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace fusionkit {

std::vector<int> Grading::component(const FiniteAbelianGroup::Elem& g) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < degree.size(); ++i)
    if (degree[i] == g) out.push_back(static_cast<int>(i));
  return out;
}

bool grading_consistent(const FusionRing& r, const Grading& g) {
  if (g.degree.size() != static_cast<std::size_t>(r.rank())) return false;
  for (int a = 0; a < r.rank(); ++a)
    for (int b = 0; b < r.rank(); ++b) {
      auto sum = g.group.add(g.degree[a], g.degree[b]);
      for (const auto& e : r.tensor(a, b))
        if (g.degree[e.c] != sum) return false;
    }
  std::set<std::int64_t> hit;
  for (const auto& d : g.degree) hit.insert(g.group.index_of(d));
  bool surjective = static_cast<std::int64_t>(hit.size()) == g.group.order();
  return g.faithful == surjective;
}

namespace {
struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};
} // namespace

UniversalGrading universal_grading(const FusionRing& r) {
  const int n = r.rank();
  auto adj = adjoint_subring(r);

  // X ~ Y iff some constituent of X (x) Y* is adjoint.
  UnionFind uf(n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (const auto& e : r.tensor(x, r.dual(y)))
        if (adj.contains(e.c)) {
          uf.unite(x, y);
          break;
        }

  UniversalGrading ug;
  ug.class_of.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    int root = uf.find(x);
    if (ug.class_of[root] < 0) {
      ug.class_of[root] = static_cast<int>(ug.classes.size());
      ug.classes.emplace_back();
    }
    ug.class_of[x] = ug.class_of[root];
  }
  for (int x = 0; x < n; ++x) ug.classes[ug.class_of[x]].push_back(x);
  for (auto& c : ug.classes) std::sort(c.begin(), c.end());

  const int k = static_cast<int>(ug.classes.size());
  AbelianTable table;
  table.n = k;
  table.identity = ug.class_of[r.unit()];
  table.mul.assign(k, std::vector<int>(k, -1));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int cx = ug.class_of[x], cy = ug.class_of[y];
      for (const auto& e : r.tensor(x, y)) {
        int cz = ug.class_of[e.c];
        if (table.mul[cx][cy] < 0)
          table.mul[cx][cy] = cz;
        else if (table.mul[cx][cy] != cz)
          throw std::invalid_argument(
              "universal grading: inconsistent class multiplication "
              "(non-commutative or corrupt ring)");
      }
    }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (table.mul[i][j] < 0)
        throw std::invalid_argument("universal grading: empty class product");

  ug.structure = AbelianStructure::analyze(table);
  ug.trivial_class = table.identity;
  ug.grading.group = ug.structure.group;
  ug.grading.faithful = true;
  ug.grading.degree.resize(n);
  for (int x = 0; x < n; ++x)
    ug.grading.degree[x] = ug.structure.coords[ug.class_of[x]];
  return ug;
}

} // namespace fusionkit
