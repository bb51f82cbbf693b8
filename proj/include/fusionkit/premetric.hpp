#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fusionkit/abelian.hpp"
#include "fusionkit/root_of_unity.hpp"

namespace fusionkit {

/// A quadratic form on a finite abelian group, valued in roots of unity:
/// q(g) = q(-g) and beta(a,b) = q(a+b) q(a)^-1 q(b)^-1 is bi-additive.
/// Together with its group this is a premetric group, the classifying datum
/// for pointed braided data.
struct QuadraticForm {
  FiniteAbelianGroup group;
  std::vector<RootOfUnity> values; // by element index

  const RootOfUnity& q(std::int64_t elem_index) const { return values[elem_index]; }
  RootOfUnity q_of(const FiniteAbelianGroup::Elem& e) const {
    return values[group.index_of(e)];
  }
  /// Associated symmetric bilinear form beta(a, b).
  RootOfUnity bilinear(std::int64_t a, std::int64_t b) const;
};

/// Exhaustive check of both quadratic-form invariants.
bool is_quadratic(const QuadraticForm& q);

/// Radical of the bilinear form: elements pairing trivially with everything.
/// This is the support of the Mueger center of the pointed braided data.
struct Radical {
  std::vector<std::int64_t> elements;      // element indices, ascending
  std::vector<RootOfUnity> q_values;       // q on those elements
  bool trivial() const { return elements.size() == 1; }
};

Radical radical(const QuadraticForm& q);

enum class CenterClass { NonDegenerate, SlightlyDegenerate, ContainsTannakian, SymmetricOther };

std::string center_class_name(CenterClass c);

/// Mueger-center classification with witness:
///  - NonDegenerate: radical trivial;
///  - ContainsTannakian: some g != 0 in the radical with q(g) = 1 (witness);
///  - SlightlyDegenerate: radical = {0, u} with q(u) = -1 (witness u);
///  - SymmetricOther: anything else.
struct CenterVerdict {
  CenterClass cls;
  std::optional<std::int64_t> witness; // element index
};

CenterVerdict classify_center(const QuadraticForm& q);

/// Group automorphism phi with q2(phi(g)) == q1(g) for all g, found by
/// exhaustive Aut(G) search; nullopt when none exists.
std::optional<std::vector<FiniteAbelianGroup::Elem>> premetric_equivalent(
    const QuadraticForm& q1, const QuadraticForm& q2);

/// All quadratic forms on G, enumerated from values on canonical generators
/// and pairwise bilinear pairings, then filtered by is_quadratic. Deduplicated
/// and sorted by value table. Throws bound_error above |G| = 64.
std::vector<QuadraticForm> enumerate_quadratic_forms(const FiniteAbelianGroup& g);

/// Splits off a super-vector-spaces factor: an order-2 radical element u with
/// q(u) = -1 together with a direct complement H of <u> and the restricted
/// form. nullopt when no such u exists.
struct SvectSplit {
  std::int64_t u;                          // element index
  std::vector<std::int64_t> complement;    // element indices of H
  QuadraticForm restricted;                // q restricted to H (as its own group)
  std::vector<std::int64_t> complement_map; // H element index -> original index
};

std::optional<SvectSplit> split_svect_factor(const QuadraticForm& q);

/// Premetric JSON: { "invariant_factors": [int], "q": [[[residues], "p/q"]] }.
std::string premetric_to_json(const QuadraticForm& q, int indent = 2);
QuadraticForm premetric_from_json(const std::string& text);

} // namespace fusionkit
