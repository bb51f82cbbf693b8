#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fusionkit {

/// Finite abelian group in invariant-factor form: Z_{d_1} x ... x Z_{d_r}
/// with d_1 | d_2 | ... | d_r and every d_j >= 2. The empty list is the
/// trivial group. Elements are residue tuples.
class FiniteAbelianGroup {
public:
  using Elem = std::vector<std::int64_t>;

  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<std::int64_t> invariant_factors);

  /// Canonicalizes an arbitrary list of cyclic orders (e.g. {2,5} -> {10},
  /// {4,2} -> {2,4}) into an invariant-factor chain.
  static FiniteAbelianGroup from_cyclic_orders(
      const std::vector<std::int64_t>& orders);

  const std::vector<std::int64_t>& factors() const { return factors_; }
  std::int64_t order() const;
  std::size_t num_factors() const { return factors_.size(); }
  std::int64_t exponent() const;

  Elem zero() const { return Elem(factors_.size(), 0); }
  Elem add(const Elem& x, const Elem& y) const;
  Elem neg(const Elem& x) const;
  Elem scale(std::int64_t k, const Elem& x) const;
  std::int64_t elem_order(const Elem& x) const;

  /// Mixed-radix index <-> tuple, index 0 = identity.
  std::int64_t index_of(const Elem& x) const;
  Elem elem_at(std::int64_t idx) const;
  std::vector<Elem> all_elements() const;

  std::string elem_str(const Elem& x) const;

  bool operator==(const FiniteAbelianGroup& o) const {
    return factors_ == o.factors_;
  }

private:
  std::vector<std::int64_t> factors_;
};

/// An abelian group presented by an explicit multiplication table on
/// {0, ..., n-1}. Used for groups that arise inside fusion rings (groups of
/// invertible objects, universal grading class groups).
struct AbelianTable {
  int n = 1;
  int identity = 0;
  std::vector<std::vector<int>> mul; // mul[a][b]

  bool is_abelian() const;
  int inv(int a) const;
  int pow(int a, std::int64_t k) const;
  std::int64_t order_of(int a) const;
  std::vector<int> cyclic_subgroup(int a) const;
  std::vector<int> subgroup_generated(const std::vector<int>& gens) const;
};

/// Constructive structure theorem data for an AbelianTable: invariant
/// factors, one generator per factor, and coordinates of every element in
/// that basis (so the table group is identified with `group`).
struct AbelianStructure {
  FiniteAbelianGroup group;
  std::vector<int> generators;                    // table element per factor
  std::vector<FiniteAbelianGroup::Elem> coords;   // per table element

  int element_for(const FiniteAbelianGroup::Elem& t) const;

  /// Brute-force element-order analysis; throws std::invalid_argument if the
  /// table is not an abelian group.
  static AbelianStructure analyze(const AbelianTable& table);

private:
  std::vector<int> elem_by_index_; // group index -> table element
};

/// All automorphisms of G, as images of the canonical generators. Bounded:
/// throws bound_error when |G| > 256 or the candidate space is too large.
std::vector<std::vector<FiniteAbelianGroup::Elem>> automorphisms(
    const FiniteAbelianGroup& g);

/// Applies an automorphism given by canonical-generator images.
FiniteAbelianGroup::Elem apply_automorphism(
    const FiniteAbelianGroup& g,
    const std::vector<FiniteAbelianGroup::Elem>& images,
    const FiniteAbelianGroup::Elem& x);

/// All index-2 subgroups (kernels of nonzero characters to Z_2), as sorted
/// element-index lists.
std::vector<std::vector<std::int64_t>> index2_subgroups(
    const FiniteAbelianGroup& g);

/// All subgroups of G, as sorted element-index lists.
std::vector<std::vector<std::int64_t>> all_subgroups(
    const FiniteAbelianGroup& g);

} // namespace fusionkit
