#include "fusionkit/premetric.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "fusionkit/config.hpp"

namespace fusionkit {

RootOfUnity QuadraticForm::bilinear(std::int64_t a, std::int64_t b) const {
  auto ea = group.elem_at(a), eb = group.elem_at(b);
  return q_of(group.add(ea, eb)) * q(a).inverse() * q(b).inverse();
}

bool is_quadratic(const QuadraticForm& q) {
  const std::int64_t n = q.group.order();
  if (q.values.size() != static_cast<std::size_t>(n)) return false;
  for (std::int64_t g = 0; g < n; ++g)
    if (q.q(g) != q.q_of(q.group.neg(q.group.elem_at(g)))) return false;
  // beta(a+b, c) == beta(a, c) beta(b, c)
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b) {
      auto ab = q.group.index_of(q.group.add(q.group.elem_at(a), q.group.elem_at(b)));
      for (std::int64_t c = 0; c < n; ++c)
        if (q.bilinear(ab, c) != q.bilinear(a, c) * q.bilinear(b, c)) return false;
    }
  return true;
}

Radical radical(const QuadraticForm& q) {
  const std::int64_t n = q.group.order();
  Radical rad;
  for (std::int64_t g = 0; g < n; ++g) {
    bool central = true;
    for (std::int64_t h = 0; h < n && central; ++h)
      if (!q.bilinear(g, h).is_one()) central = false;
    if (central) {
      rad.elements.push_back(g);
      rad.q_values.push_back(q.q(g));
    }
  }
  return rad;
}

std::string center_class_name(CenterClass c) {
  switch (c) {
    case CenterClass::NonDegenerate: return "NonDegenerate";
    case CenterClass::SlightlyDegenerate: return "SlightlyDegenerate";
    case CenterClass::ContainsTannakian: return "ContainsTannakian";
    case CenterClass::SymmetricOther: return "SymmetricOther";
  }
  return "?";
}

CenterVerdict classify_center(const QuadraticForm& q) {
  auto rad = radical(q);
  std::int64_t zero = q.group.index_of(q.group.zero());
  if (rad.trivial()) return {CenterClass::NonDegenerate, std::nullopt};
  for (std::size_t i = 0; i < rad.elements.size(); ++i)
    if (rad.elements[i] != zero && rad.q_values[i].is_one())
      return {CenterClass::ContainsTannakian, rad.elements[i]};
  if (rad.elements.size() == 2) {
    std::int64_t u = rad.elements[0] == zero ? rad.elements[1] : rad.elements[0];
    if (q.q(u).is_minus_one()) return {CenterClass::SlightlyDegenerate, u};
  }
  return {CenterClass::SymmetricOther, std::nullopt};
}

std::optional<std::vector<FiniteAbelianGroup::Elem>> premetric_equivalent(
    const QuadraticForm& q1, const QuadraticForm& q2) {
  if (!(q1.group == q2.group))
    throw std::invalid_argument("premetric_equivalent: groups differ");
  for (const auto& images : automorphisms(q1.group)) {
    bool ok = true;
    for (std::int64_t g = 0; g < q1.group.order() && ok; ++g) {
      auto img = apply_automorphism(q1.group, images, q1.group.elem_at(g));
      if (q2.q_of(img) != q1.q(g)) ok = false;
    }
    if (ok) return images;
  }
  return std::nullopt;
}

std::vector<QuadraticForm> enumerate_quadratic_forms(const FiniteAbelianGroup& g) {
  if (g.order() > 64)
    throw bound_error("enumerate_quadratic_forms bounded at |G| <= 64");
  const std::size_t r = g.num_factors();
  const std::int64_t n = g.order();

  if (r == 0) {
    QuadraticForm q{g, {RootOfUnity::one()}};
    return {q};
  }

  // q is determined by q(e_i) (order dividing 2 d_i) and the pairings
  // beta(e_i, e_j) (order dividing gcd(d_i, d_j)); candidates are filtered by
  // the exhaustive invariant check afterwards.
  std::vector<std::vector<RootOfUnity>> gen_vals(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::int64_t k = 0; k < 2 * g.factors()[i]; ++k)
      gen_vals[i].push_back(RootOfUnity::from_exponent(k, 2 * g.factors()[i]));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::vector<RootOfUnity>> pair_vals;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      pairs.emplace_back(i, j);
      std::int64_t d = std::gcd(g.factors()[i], g.factors()[j]);
      std::vector<RootOfUnity> vals;
      for (std::int64_t k = 0; k < d; ++k)
        vals.push_back(RootOfUnity::from_exponent(k, d));
      pair_vals.push_back(vals);
    }

  std::vector<std::size_t> dims;
  for (auto& v : gen_vals) dims.push_back(v.size());
  for (auto& v : pair_vals) dims.push_back(v.size());
  double total = 1;
  for (auto d : dims) total *= static_cast<double>(d);
  if (total > 2e7) throw bound_error("enumerate_quadratic_forms: candidate space too large");

  std::set<std::vector<RootOfUnity>> seen;
  std::vector<QuadraticForm> out;
  std::vector<std::size_t> pick(dims.size(), 0);
  while (true) {
    QuadraticForm q;
    q.group = g;
    q.values.resize(n);
    for (std::int64_t idx = 0; idx < n; ++idx) {
      auto e = g.elem_at(idx);
      RootOfUnity v = RootOfUnity::one();
      for (std::size_t i = 0; i < r; ++i)
        v = v * gen_vals[i][pick[i]].pow(e[i] * e[i]);
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        auto [i, j] = pairs[p];
        v = v * pair_vals[p][pick[r + p]].pow(e[i] * e[j]);
      }
      q.values[idx] = v;
    }
    if (is_quadratic(q) && seen.insert(q.values).second) out.push_back(q);
    std::size_t i = 0;
    while (i < dims.size() && ++pick[i] == dims[i]) pick[i++] = 0;
    if (i == dims.size()) break;
  }
  std::sort(out.begin(), out.end(), [](const QuadraticForm& a, const QuadraticForm& b) {
    return a.values < b.values;
  });
  return out;
}

std::optional<SvectSplit> split_svect_factor(const QuadraticForm& q) {
  auto rad = radical(q);
  std::int64_t u = -1;
  for (std::size_t i = 0; i < rad.elements.size(); ++i) {
    auto e = q.group.elem_at(rad.elements[i]);
    if (q.group.elem_order(e) == 2 && rad.q_values[i].is_minus_one()) {
      u = rad.elements[i];
      break;
    }
  }
  if (u < 0) return std::nullopt;

  // Direct complements of <u> = index-2 subgroups avoiding u.
  for (const auto& h : index2_subgroups(q.group)) {
    if (std::binary_search(h.begin(), h.end(), u)) continue;
    SvectSplit split;
    split.u = u;
    split.complement = h;
    split.complement_map = h;
    // Identify H with its own abelian group via its multiplication table.
    AbelianTable t;
    t.n = static_cast<int>(h.size());
    std::map<std::int64_t, int> pos;
    for (std::size_t i = 0; i < h.size(); ++i) pos[h[i]] = static_cast<int>(i);
    t.identity = pos.at(q.group.index_of(q.group.zero()));
    t.mul.assign(t.n, std::vector<int>(t.n));
    for (std::size_t i = 0; i < h.size(); ++i)
      for (std::size_t j = 0; j < h.size(); ++j) {
        auto s = q.group.add(q.group.elem_at(h[i]), q.group.elem_at(h[j]));
        t.mul[i][j] = pos.at(q.group.index_of(s));
      }
    auto structure = AbelianStructure::analyze(t);
    split.restricted.group = structure.group;
    split.restricted.values.resize(t.n);
    std::vector<std::int64_t> remap(t.n);
    for (int i = 0; i < t.n; ++i) {
      auto tuple = structure.coords[i];
      split.restricted.values[structure.group.index_of(tuple)] = q.q(h[i]);
      remap[structure.group.index_of(tuple)] = h[i];
    }
    split.complement_map = remap;
    // Re-verify multiplicativity across the split: q(u + h) = q(u) q(h).
    bool ok = true;
    auto ue = q.group.elem_at(u);
    for (auto hi : h)
      if (q.q_of(q.group.add(ue, q.group.elem_at(hi))) != q.q(u) * q.q(hi))
        ok = false;
    if (ok) return split;
  }
  return std::nullopt;
}

using ordered_json = nlohmann::ordered_json;

std::string premetric_to_json(const QuadraticForm& q, int indent) {
  ordered_json j;
  j["invariant_factors"] = q.group.factors();
  auto arr = ordered_json::array();
  for (std::int64_t i = 0; i < q.group.order(); ++i)
    arr.push_back({q.group.elem_at(i), q.q(i).str()});
  j["q"] = arr;
  return j.dump(indent);
}

QuadraticForm premetric_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("premetric JSON parse error: ") + e.what());
  }
  QuadraticForm q;
  q.group = FiniteAbelianGroup(j.at("invariant_factors").get<std::vector<std::int64_t>>());
  q.values.assign(q.group.order(), RootOfUnity::one());
  std::vector<char> seen(q.group.order(), 0);
  for (const auto& entry : j.at("q")) {
    auto e = entry.at(0).get<FiniteAbelianGroup::Elem>();
    auto idx = q.group.index_of(e);
    q.values[idx] = RootOfUnity::parse(entry.at(1).get<std::string>());
    seen[idx] = 1;
  }
  for (char s : seen)
    if (!s) throw std::invalid_argument("premetric JSON: q must cover every element");
  return q;
}

} // namespace fusionkit
