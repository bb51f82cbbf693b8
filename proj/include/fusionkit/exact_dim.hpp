#pragma once

#include <cstdint>
#include <string>

namespace fusionkit {

/// A Frobenius-Perron dimension, exact in Z[sqrt(2)] whenever possible:
/// value = a + b*sqrt(2). Rings outside Z[sqrt(2)] keep the floating
/// approximation with exact == false.
struct ExactDim {
  std::int64_t a = 0;
  std::int64_t b = 0;
  bool exact = true;
  double approx = 0.0;

  static ExactDim integer(std::int64_t n);
  static ExactDim sqrt2(std::int64_t mult = 1);
  static ExactDim inexact(double v);

  double value() const;
  bool is_one() const { return exact && a == 1 && b == 0; }

  ExactDim operator+(const ExactDim& o) const;
  ExactDim operator*(const ExactDim& o) const;
  bool operator==(const ExactDim& o) const;
  bool operator!=(const ExactDim& o) const { return !(*this == o); }
  /// Exact order by real value for exact dims, by approx otherwise.
  bool operator<(const ExactDim& o) const;

  std::string str() const;

  /// Snap a floating eigenvalue to a + b*sqrt(2) with |a|,|b| <= 2^16,
  /// within tol. Returns exact==false when no candidate is close enough.
  static ExactDim snap(double v, double tol = 1e-9);
};

} // namespace fusionkit
