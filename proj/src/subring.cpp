#include "fusionkit/subring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "fusionkit/analysis.hpp"
#include "fusionkit/config.hpp"

namespace fusionkit {

bool Subring::contains(int x) const {
  return std::binary_search(simples.begin(), simples.end(), x);
}

bool Subring::contains_all(const Subring& o) const {
  return std::includes(simples.begin(), simples.end(), o.simples.begin(),
                       o.simples.end());
}

Subring subring_generated(const FusionRing& r, const std::vector<int>& s) {
  std::set<int> cur(s.begin(), s.end());
  cur.insert(r.unit());
  for (int x : s)
    if (x < 0 || x >= r.rank())
      throw std::invalid_argument("subring generator out of range");
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> snapshot(cur.begin(), cur.end());
    for (int x : snapshot)
      if (cur.insert(r.dual(x)).second) grew = true;
    for (int x : snapshot)
      for (int y : snapshot)
        for (const auto& e : r.tensor(x, y))
          if (cur.insert(e.c).second) grew = true;
  }
  return Subring{&r, std::vector<int>(cur.begin(), cur.end())};
}

Subring adjoint_subring(const FusionRing& r) {
  std::vector<int> gens;
  for (int x = 0; x < r.rank(); ++x)
    for (const auto& e : r.tensor(x, r.dual(x))) gens.push_back(e.c);
  return subring_generated(r, gens);
}

Subring subring_join(const Subring& a, const Subring& b) {
  std::vector<int> gens = a.simples;
  gens.insert(gens.end(), b.simples.begin(), b.simples.end());
  return subring_generated(*a.parent, gens);
}

bool subring_is_pointed(const Subring& s) {
  for (int x : s.simples)
    if (!is_invertible_object(*s.parent, x)) return false;
  return true;
}

ExactDim subring_fpdim(const Subring& s, const std::vector<ExactDim>& dims) {
  ExactDim total = ExactDim::integer(0);
  for (int x : s.simples) total = total + dims[x] * dims[x];
  return total;
}

FusionRing extract_subring(const Subring& s, std::vector<int>* new_to_parent) {
  const FusionRing& r = *s.parent;
  const auto& m = s.simples;
  std::vector<int> back(r.rank(), -1);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m.size(); ++i) {
    back[m[i]] = static_cast<int>(i);
    labels.push_back(r.label(m[i]));
  }
  std::vector<int> dual(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (back[r.dual(m[i])] < 0)
      throw std::invalid_argument("set is not closed under duals");
    dual[i] = back[r.dual(m[i])];
  }
  FusionRing out(static_cast<int>(m.size()), labels, back[r.unit()], dual);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      for (const auto& e : r.tensor(m[i], m[j])) {
        if (back[e.c] < 0)
          throw std::invalid_argument("set is not closed under tensor constituents");
        out.set_coeff(static_cast<int>(i), static_cast<int>(j), back[e.c], e.n);
      }
  if (new_to_parent) *new_to_parent = m;
  return out;
}

SubringLattice subring_lattice(const FusionRing& r) {
  if (r.rank() > max_rank())
    throw bound_error("subring_lattice: rank exceeds FUSIONKIT_MAX_RANK bound");

  std::set<std::vector<int>> found;
  for (int x = 0; x < r.rank(); ++x)
    found.insert(subring_generated(r, {x}).simples);

  // Every subring is the join of the single-generator subrings of its
  // members, so saturating under pairwise joins yields the full lattice.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> cur(found.begin(), found.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        std::vector<int> gens = cur[i];
        gens.insert(gens.end(), cur[j].begin(), cur[j].end());
        auto join = subring_generated(r, gens).simples;
        if (found.insert(join).second) grew = true;
      }
  }

  SubringLattice lat;
  for (const auto& s : found) lat.members.push_back(Subring{&r, s});
  std::sort(lat.members.begin(), lat.members.end());
  lat.contains.assign(lat.members.size(),
                      std::vector<bool>(lat.members.size(), false));
  for (std::size_t i = 0; i < lat.members.size(); ++i)
    for (std::size_t j = 0; j < lat.members.size(); ++j)
      lat.contains[i][j] = lat.members[i].contains_all(lat.members[j]);
  return lat;
}

} // namespace fusionkit
