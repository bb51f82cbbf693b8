#include "fusionkit/abelian.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "fusionkit/config.hpp"

namespace fusionkit {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> invariant_factors)
    : factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2)
      throw std::invalid_argument("invariant factors must be >= 2");
    if (i + 1 < factors_.size() && factors_[i + 1] % factors_[i] != 0)
      throw std::invalid_argument("invariant factors must form a divisibility chain");
  }
}

FiniteAbelianGroup FiniteAbelianGroup::from_cyclic_orders(
    const std::vector<std::int64_t>& orders) {
  // Collect prime-power components, then greedily rebuild the chain from the
  // largest factor down.
  std::map<std::int64_t, std::vector<std::int64_t>> primary; // p -> exponents desc
  for (std::int64_t d : orders) {
    if (d < 1) throw std::invalid_argument("cyclic order must be >= 1");
    std::int64_t m = d;
    for (std::int64_t p = 2; p * p <= m; ++p) {
      if (m % p) continue;
      std::int64_t q = 1;
      while (m % p == 0) m /= p, q *= p;
      primary[p].push_back(q);
    }
    if (m > 1) primary[m].push_back(m);
  }
  std::size_t rank = 0;
  for (auto& [p, qs] : primary) {
    std::sort(qs.rbegin(), qs.rend());
    rank = std::max(rank, qs.size());
  }
  std::vector<std::int64_t> chain(rank, 1);
  for (auto& [p, qs] : primary)
    for (std::size_t i = 0; i < qs.size(); ++i) chain[i] *= qs[i];
  std::reverse(chain.begin(), chain.end()); // ascending divisibility chain
  while (!chain.empty() && chain.front() == 1) chain.erase(chain.begin());
  return FiniteAbelianGroup(chain);
}

std::int64_t FiniteAbelianGroup::order() const {
  std::int64_t n = 1;
  for (auto d : factors_) n *= d;
  return n;
}

std::int64_t FiniteAbelianGroup::exponent() const {
  return factors_.empty() ? 1 : factors_.back();
}

FiniteAbelianGroup::Elem FiniteAbelianGroup::add(const Elem& x, const Elem& y) const {
  Elem r(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i)
    r[i] = (x[i] + y[i]) % factors_[i];
  return r;
}

FiniteAbelianGroup::Elem FiniteAbelianGroup::neg(const Elem& x) const {
  Elem r(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i)
    r[i] = (factors_[i] - x[i]) % factors_[i];
  return r;
}

FiniteAbelianGroup::Elem FiniteAbelianGroup::scale(std::int64_t k, const Elem& x) const {
  Elem r(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    std::int64_t v = (x[i] % factors_[i]) * (k % factors_[i]) % factors_[i];
    r[i] = v < 0 ? v + factors_[i] : v;
  }
  return r;
}

std::int64_t FiniteAbelianGroup::elem_order(const Elem& x) const {
  std::int64_t o = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    std::int64_t oi = factors_[i] / std::gcd(factors_[i], x[i]);
    o = std::lcm(o, oi);
  }
  return o;
}

std::int64_t FiniteAbelianGroup::index_of(const Elem& x) const {
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i] + x[i];
  return idx;
}

FiniteAbelianGroup::Elem FiniteAbelianGroup::elem_at(std::int64_t idx) const {
  Elem x(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    x[i] = idx % factors_[i];
    idx /= factors_[i];
  }
  return x;
}

std::vector<FiniteAbelianGroup::Elem> FiniteAbelianGroup::all_elements() const {
  std::vector<Elem> out;
  out.reserve(order());
  for (std::int64_t i = 0; i < order(); ++i) out.push_back(elem_at(i));
  return out;
}

std::string FiniteAbelianGroup::elem_str(const Elem& x) const {
  if (x.empty()) return "0";
  if (x.size() == 1) return std::to_string(x[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(x[i]);
  }
  return s + ")";
}

bool AbelianTable::is_abelian() const {
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (mul[a][b] != mul[b][a]) return false;
  return true;
}

int AbelianTable::inv(int a) const {
  for (int b = 0; b < n; ++b)
    if (mul[a][b] == identity) return b;
  throw std::invalid_argument("table element has no inverse");
}

int AbelianTable::pow(int a, std::int64_t k) const {
  if (k < 0) return pow(inv(a), -k);
  int r = identity;
  for (std::int64_t i = 0; i < k; ++i) r = mul[r][a];
  return r;
}

std::int64_t AbelianTable::order_of(int a) const {
  std::int64_t o = 1;
  int x = a;
  while (x != identity) {
    x = mul[x][a];
    ++o;
    if (o > n) throw std::invalid_argument("table is not a group");
  }
  return o;
}

std::vector<int> AbelianTable::cyclic_subgroup(int a) const {
  std::vector<int> s{identity};
  int x = a;
  while (x != identity) {
    s.push_back(x);
    x = mul[x][a];
  }
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<int> AbelianTable::subgroup_generated(const std::vector<int>& gens) const {
  std::set<int> s{identity};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(s.begin(), s.end());
    for (int x : cur)
      for (int g : gens) {
        if (s.insert(mul[x][g]).second) grew = true;
      }
  }
  return std::vector<int>(s.begin(), s.end());
}

namespace {

// Basis of an abelian table group: generators with orders m_1 >= m_2 >= ...,
// each dividing the previous, found by splitting off a maximal-order cyclic
// subgroup and recursing on the quotient.
std::vector<std::pair<int, std::int64_t>> table_basis(const AbelianTable& t) {
  if (t.n == 1) return {};
  int x = 0;
  std::int64_t xo = 1;
  for (int a = 0; a < t.n; ++a) {
    std::int64_t o = t.order_of(a);
    if (o > xo) xo = o, x = a;
  }
  std::vector<int> sub = t.cyclic_subgroup(x);
  // dlog within <x>
  std::vector<std::int64_t> dlog(t.n, -1);
  {
    int e = t.identity;
    for (std::int64_t k = 0; k < xo; ++k) {
      dlog[e] = k;
      e = t.mul[e][x];
    }
  }
  if (static_cast<int>(sub.size()) == t.n) return {{x, xo}};

  // Quotient by <x>: coset representative = minimal member index.
  std::vector<int> rep(t.n, -1);
  std::vector<int> reps;
  for (int a = 0; a < t.n; ++a) {
    if (rep[a] != -1) continue;
    int r = a;
    std::vector<int> coset;
    for (int s : sub) coset.push_back(t.mul[a][s]);
    for (int c : coset) r = std::min(r, c);
    for (int c : coset) rep[c] = r;
    reps.push_back(r);
  }
  std::sort(reps.begin(), reps.end());
  std::vector<int> repidx(t.n, -1);
  for (std::size_t i = 0; i < reps.size(); ++i) repidx[reps[i]] = static_cast<int>(i);

  AbelianTable q;
  q.n = static_cast<int>(reps.size());
  q.identity = repidx[rep[t.identity]];
  q.mul.assign(q.n, std::vector<int>(q.n));
  for (int i = 0; i < q.n; ++i)
    for (int j = 0; j < q.n; ++j)
      q.mul[i][j] = repidx[rep[t.mul[reps[i]][reps[j]]]];

  auto qbasis = table_basis(q);
  std::vector<std::pair<int, std::int64_t>> out{{x, xo}};
  for (auto [gq, oq] : qbasis) {
    int g = reps[gq];
    // Lift to an element of exact order oq: oq*g lies in <x>, say x^k with
    // oq | k; replace g by g * x^{-k/oq}.
    int gp = t.pow(g, oq);
    std::int64_t k = dlog[gp];
    if (k < 0 || k % oq != 0)
      throw std::invalid_argument("table is not an abelian group");
    int fixed = t.mul[g][t.pow(x, ((xo - k / oq) % xo))];
    if (t.order_of(fixed) != oq)
      throw std::invalid_argument("table is not an abelian group");
    out.emplace_back(fixed, oq);
  }
  return out;
}

} // namespace

AbelianStructure AbelianStructure::analyze(const AbelianTable& t) {
  if (!t.is_abelian()) throw std::invalid_argument("table is not abelian");
  auto basis = table_basis(t); // orders descending
  std::reverse(basis.begin(), basis.end());

  AbelianStructure s;
  std::vector<std::int64_t> factors;
  for (auto [g, o] : basis) {
    factors.push_back(o);
    s.generators.push_back(g);
  }
  s.group = FiniteAbelianGroup(factors);
  if (s.group.order() != t.n)
    throw std::invalid_argument("table is not an abelian group");

  s.coords.assign(t.n, {});
  s.elem_by_index_.assign(t.n, -1);
  std::vector<char> seen(t.n, 0);
  for (std::int64_t idx = 0; idx < t.n; ++idx) {
    auto tuple = s.group.elem_at(idx);
    int e = t.identity;
    for (std::size_t i = 0; i < tuple.size(); ++i)
      e = t.mul[e][t.pow(s.generators[i], tuple[i])];
    if (seen[e]) throw std::invalid_argument("table is not an abelian group");
    seen[e] = 1;
    s.coords[e] = tuple;
    s.elem_by_index_[idx] = e;
  }
  return s;
}

int AbelianStructure::element_for(const FiniteAbelianGroup::Elem& t) const {
  return elem_by_index_[group.index_of(t)];
}

std::vector<std::vector<FiniteAbelianGroup::Elem>> automorphisms(
    const FiniteAbelianGroup& g) {
  if (g.order() > 256) throw bound_error("automorphism enumeration bounded at |G| <= 256");
  std::size_t r = g.num_factors();
  if (r == 0) return {{}};

  // Candidate images of generator i: elements killed by d_i.
  std::vector<std::vector<FiniteAbelianGroup::Elem>> candidates(r);
  auto elems = g.all_elements();
  for (std::size_t i = 0; i < r; ++i)
    for (const auto& e : elems)
      if (g.elem_order(e) > 0 && g.factors()[i] % g.elem_order(e) == 0)
        candidates[i].push_back(e);

  double total = 1;
  for (auto& c : candidates) total *= static_cast<double>(c.size());
  if (total > 5e6) throw bound_error("automorphism candidate space too large");

  std::vector<std::vector<FiniteAbelianGroup::Elem>> out;
  std::vector<std::size_t> pick(r, 0);
  std::int64_t n = g.order();
  while (true) {
    std::vector<FiniteAbelianGroup::Elem> images(r);
    for (std::size_t i = 0; i < r; ++i) images[i] = candidates[i][pick[i]];
    // bijectivity check
    std::vector<char> hit(n, 0);
    bool bij = true;
    for (std::int64_t idx = 0; idx < n && bij; ++idx) {
      auto img = apply_automorphism(g, images, g.elem_at(idx));
      std::int64_t j = g.index_of(img);
      if (hit[j]) bij = false;
      hit[j] = 1;
    }
    if (bij) out.push_back(images);
    std::size_t i = 0;
    while (i < r && ++pick[i] == candidates[i].size()) pick[i++] = 0;
    if (i == r) break;
  }
  return out;
}

FiniteAbelianGroup::Elem apply_automorphism(
    const FiniteAbelianGroup& g,
    const std::vector<FiniteAbelianGroup::Elem>& images,
    const FiniteAbelianGroup::Elem& x) {
  auto r = g.zero();
  for (std::size_t i = 0; i < images.size(); ++i)
    r = g.add(r, g.scale(x[i], images[i]));
  return r;
}

std::vector<std::vector<std::int64_t>> index2_subgroups(const FiniteAbelianGroup& g) {
  std::vector<std::vector<std::int64_t>> out;
  std::size_t r = g.num_factors();
  std::vector<std::size_t> evens;
  for (std::size_t i = 0; i < r; ++i)
    if (g.factors()[i] % 2 == 0) evens.push_back(i);
  for (std::uint64_t mask = 1; mask < (1ull << evens.size()); ++mask) {
    std::vector<std::int64_t> ker;
    for (std::int64_t idx = 0; idx < g.order(); ++idx) {
      auto e = g.elem_at(idx);
      std::int64_t phi = 0;
      for (std::size_t k = 0; k < evens.size(); ++k)
        if (mask & (1ull << k)) phi += e[evens[k]];
      if (phi % 2 == 0) ker.push_back(idx);
    }
    out.push_back(std::move(ker));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<std::int64_t>> all_subgroups(const FiniteAbelianGroup& g) {
  if (g.order() > 256) throw bound_error("subgroup enumeration bounded at |G| <= 256");
  std::set<std::vector<std::int64_t>> known;
  known.insert({g.index_of(g.zero())});
  bool grew = true;
  while (grew) {
    grew = false;
    auto snapshot = known;
    for (const auto& h : snapshot) {
      for (std::int64_t idx = 0; idx < g.order(); ++idx) {
        if (std::binary_search(h.begin(), h.end(), idx)) continue;
        // close h + idx
        std::set<std::int64_t> s(h.begin(), h.end());
        s.insert(idx);
        bool changed = true;
        while (changed) {
          changed = false;
          std::vector<std::int64_t> cur(s.begin(), s.end());
          for (auto x : cur)
            for (auto y : cur) {
              auto z = g.index_of(g.add(g.elem_at(x), g.elem_at(y)));
              if (s.insert(z).second) changed = true;
            }
        }
        if (known.insert(std::vector<std::int64_t>(s.begin(), s.end())).second)
          grew = true;
      }
    }
  }
  return std::vector<std::vector<std::int64_t>>(known.begin(), known.end());
}

} // namespace fusionkit
