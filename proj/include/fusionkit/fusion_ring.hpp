#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace fusionkit {

/// A fusion ring: distinguished basis with unit, dual involution and
/// nonnegative integer structure constants N_{ab}^c. Coefficients are stored
/// sparsely per (a,b); absent triples are zero. Immutable once built.
class FusionRing {
public:
  struct Entry {
    int c;
    std::int64_t n;
    bool operator==(const Entry& o) const { return c == o.c && n == o.n; }
  };
  using Product = std::vector<Entry>; // sorted by c

  FusionRing() = default;
  FusionRing(int rank, std::vector<std::string> labels, int unit,
             std::vector<int> dual);

  int rank() const { return rank_; }
  int unit() const { return unit_; }
  int dual(int a) const { return dual_[a]; }
  const std::vector<int>& dual_map() const { return dual_; }
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }

  void set_coeff(int a, int b, int c, std::int64_t n);
  std::int64_t coeff(int a, int b, int c) const;
  const Product& tensor(int a, int b) const;

  /// Multiset product of two formal sums of basis elements.
  Product mult(const Product& x, const Product& y) const;
  static Product simple(int a) { return {{a, 1}}; }

  /// Total number of simple constituents of a (x) b, with multiplicity.
  std::int64_t constituent_count(int a, int b) const;

  /// All stored (a, b, c, N) quadruples, sorted; canonical serialization order.
  std::vector<std::array<std::int64_t, 4>> coeff_list() const;

  /// Free-form metadata (family tags, twist labels). Never affects any
  /// arithmetic, equality or isomorphism computation.
  std::map<std::string, std::string> meta;

  bool same_table(const FusionRing& o) const;

private:
  int rank_ = 0;
  int unit_ = 0;
  std::vector<std::string> labels_;
  std::vector<int> dual_;
  std::unordered_map<std::int64_t, Product> coeffs_;
  static const Product kEmpty;
  std::int64_t key(int a, int b) const {
    return static_cast<std::int64_t>(a) * rank_ + b;
  }
};

/// Ring axiom / well-formedness report. Malformed input (bad indices,
/// negative coefficients, wrong array sizes) is reported distinctly from
/// axiom failures.
struct ValidationIssue {
  enum class Kind { Malformed, UnitAxiom, Rigidity, Associativity, DualInvolution };
  Kind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  std::int64_t associativity_failures = 0; // total count (issues list is capped)
  bool valid() const { return issues.empty(); }
  bool malformed() const;
  std::string summary() const;
};

ValidationReport validate_ring(const FusionRing& r);

/// True when the multiplication is commutative (N_{ab}^c == N_{ba}^c).
bool is_commutative(const FusionRing& r);

} // namespace fusionkit
