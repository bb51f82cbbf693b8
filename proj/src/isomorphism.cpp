#include "fusionkit/isomorphism.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "fusionkit/analysis.hpp"
#include "fusionkit/config.hpp"
#include "fusionkit/grading.hpp"
#include "fusionkit/subring.hpp"

namespace fusionkit {

bool verify_iso_witness(const FusionRing& r1, const FusionRing& r2,
                        const std::vector<int>& map) {
  const int n = r1.rank();
  if (r2.rank() != n || map.size() != static_cast<std::size_t>(n)) return false;
  std::vector<char> hit(n, 0);
  for (int x : map) {
    if (x < 0 || x >= n || hit[x]) return false;
    hit[x] = 1;
  }
  if (map[r1.unit()] != r2.unit()) return false;
  for (int a = 0; a < n; ++a)
    if (map[r1.dual(a)] != r2.dual(map[a])) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      // Forward equality on every constituent plus equal total multiplicity
      // rules out extra constituents on the image side (map is a bijection).
      for (const auto& e : r1.tensor(a, b))
        if (r2.coeff(map[a], map[b], map[e.c]) != e.n) return false;
      if (r1.constituent_count(a, b) != r2.constituent_count(map[a], map[b]))
        return false;
    }
  return true;
}

namespace {

std::uint64_t hash_mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

struct RingInfo {
  const FusionRing* r;
  std::vector<std::uint64_t> color;

  explicit RingInfo(const FusionRing& ring) : r(&ring) {
    const int n = ring.rank();
    auto dims = fp_dims(ring);
    std::vector<std::int64_t> deg_order(n, 0);
    // Universal grading degree orders, when computable; optional invariant.
    try {
      auto ug = universal_grading(ring);
      for (int x = 0; x < n; ++x)
        deg_order[x] = ug.grading.group.elem_order(ug.grading.degree[x]);
    } catch (const std::exception&) {
      std::fill(deg_order.begin(), deg_order.end(), -1);
    }
    auto inv = invertibles(ring);
    color.assign(n, 0);
    for (int x = 0; x < n; ++x) {
      std::uint64_t h = 0xcbf29ce484222325ull;
      h = hash_mix(h, x == ring.unit() ? 1 : 0);
      const auto& d = dims.dims[x];
      h = hash_mix(h, d.exact ? static_cast<std::uint64_t>(d.a * 131071 + d.b)
                              : static_cast<std::uint64_t>(d.value() * 1e6));
      h = hash_mix(h, inv.is_invertible(x) ? 1 : 0);
      h = hash_mix(h, ring.dual(x) == x ? 1 : 0);
      h = hash_mix(h, static_cast<std::uint64_t>(deg_order[x]));
      if (inv.is_invertible(x))
        h = hash_mix(h, static_cast<std::uint64_t>(
                            inv.table.order_of(inv.group_index[x])));
      color[x] = h;
    }
    refine();
    refine();
  }

  void refine() {
    const int n = r->rank();
    std::vector<std::uint64_t> next(n);
    for (int x = 0; x < n; ++x) {
      std::vector<std::uint64_t> sig;
      for (int y = 0; y < n; ++y) {
        std::uint64_t h = color[y];
        std::vector<std::uint64_t> cs;
        for (const auto& e : r->tensor(x, y))
          cs.push_back(hash_mix(color[e.c], static_cast<std::uint64_t>(e.n)));
        std::sort(cs.begin(), cs.end());
        for (auto c : cs) h = hash_mix(h, c);
        sig.push_back(h);
      }
      std::sort(sig.begin(), sig.end());
      std::uint64_t h = color[x];
      for (auto s : sig) h = hash_mix(h, s);
      next[x] = h;
    }
    color = next;
  }
};

struct Search {
  const FusionRing& r1;
  const FusionRing& r2;
  const RingInfo& i1;
  const RingInfo& i2;
  std::vector<int> order;                  // r1 indices in assignment order
  std::vector<std::pair<int, int>> parent; // per order slot: (a,b) or (-1,-1)
  std::vector<int> map;                    // r1 -> r2 (-1 unassigned)
  std::vector<char> used;                  // r2 side
  std::vector<int> assigned;               // r1 indices assigned so far
  std::int64_t nodes = 0;
  static constexpr std::int64_t kNodeLimit = 20'000'000;

  Search(const FusionRing& a, const FusionRing& b, const RingInfo& ia,
         const RingInfo& ib)
      : r1(a), r2(b), i1(ia), i2(ib) {}

  // Assignment order: unit first, then a faithful non-invertible generator
  // when one exists, then breadth-first through tensor products so each new
  // element is constrained by an already-mapped pair.
  void build_order() {
    const int n = r1.rank();
    std::vector<char> placed(n, 0);
    auto push = [&](int x, int pa, int pb) {
      order.push_back(x);
      parent.emplace_back(pa, pb);
      placed[x] = 1;
    };
    push(r1.unit(), -1, -1);

    int seed = -1;
    for (int x = 0; x < n && seed < 0; ++x)
      if (!is_invertible_object(r1, x) &&
          subring_generated(r1, {x}).rank() == n)
        seed = x;
    if (seed >= 0 && !placed[seed]) push(seed, -1, -1);

    while (static_cast<int>(order.size()) < n) {
      bool found = false;
      for (std::size_t i = 0; i < order.size() && !found; ++i)
        for (std::size_t j = 0; j <= i && !found; ++j)
          for (auto [a, b] : {std::pair{order[i], order[j]},
                              std::pair{order[j], order[i]}})
            for (const auto& e : r1.tensor(a, b))
              if (!placed[e.c]) {
                push(e.c, a, b);
                found = true;
                break;
              }
      if (!found) {
        for (int x = 0; x < n; ++x)
          if (!placed[x]) {
            push(x, -1, -1);
            break;
          }
      }
    }
  }

  bool pair_consistent(int u, int v) const {
    int pu = map[u], pv = map[v];
    for (const auto& e : r1.tensor(u, v))
      if (map[e.c] >= 0 && r2.coeff(pu, pv, map[e.c]) != e.n) return false;
    if (r1.constituent_count(u, v) != r2.constituent_count(pu, pv)) return false;
    return true;
  }

  bool consistent_with(int x) const {
    int d = r1.dual(x);
    if (map[d] >= 0 && map[d] != r2.dual(map[x])) return false;
    for (int y : assigned) {
      if (!pair_consistent(x, y) || !pair_consistent(y, x)) return false;
    }
    return pair_consistent(x, x);
  }

  bool run(std::size_t slot) {
    if (slot == order.size()) return true;
    if (++nodes > kNodeLimit)
      throw bound_error("ring_isomorphic: search node limit exceeded");
    int x = order[slot];
    if (map[x] >= 0) return run(slot + 1); // forced earlier via dual

    std::vector<int> candidates;
    auto [pa, pb] = parent[slot];
    if (pa >= 0 && map[pa] >= 0 && map[pb] >= 0) {
      for (const auto& e : r2.tensor(map[pa], map[pb]))
        if (!used[e.c] && i2.color[e.c] == i1.color[x] &&
            e.n == r1.coeff(pa, pb, x))
          candidates.push_back(e.c);
    } else {
      for (int y = 0; y < r2.rank(); ++y)
        if (!used[y] && i2.color[y] == i1.color[x]) candidates.push_back(y);
    }

    for (int y : candidates) {
      map[x] = y;
      used[y] = 1;
      assigned.push_back(x);
      int d = r1.dual(x);
      bool forced_dual = false;
      bool ok = consistent_with(x);
      if (ok && map[d] < 0 && d != x) {
        int dy = r2.dual(y);
        if (!used[dy] && i2.color[dy] == i1.color[d]) {
          map[d] = dy;
          used[dy] = 1;
          assigned.push_back(d);
          forced_dual = true;
          ok = consistent_with(d);
        } else {
          ok = false;
        }
      }
      if (ok && run(slot + 1)) return true;
      if (forced_dual) {
        assigned.pop_back();
        used[map[d]] = 0;
        map[d] = -1;
      }
      assigned.pop_back();
      used[y] = 0;
      map[x] = -1;
    }
    return false;
  }
};

} // namespace

std::optional<std::vector<int>> ring_isomorphic(const FusionRing& r1,
                                                const FusionRing& r2) {
  if (r1.rank() + r2.rank() > 4 * max_rank())
    throw bound_error("ring_isomorphic: combined rank exceeds bound");
  if (r1.rank() != r2.rank()) return std::nullopt;

  RingInfo i1(r1), i2(r2);
  {
    auto c1 = i1.color, c2 = i2.color;
    std::sort(c1.begin(), c1.end());
    std::sort(c2.begin(), c2.end());
    if (c1 != c2) return std::nullopt;
  }

  Search s(r1, r2, i1, i2);
  s.map.assign(r1.rank(), -1);
  s.used.assign(r2.rank(), 0);
  s.build_order();
  if (!s.run(0)) return std::nullopt;
  if (!verify_iso_witness(r1, r2, s.map))
    throw std::runtime_error("ring_isomorphic: internal witness verification failed");
  return s.map;
}

} // namespace fusionkit
