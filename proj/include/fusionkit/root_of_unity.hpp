#pragma once

#include <cstdint>
#include <string>

namespace fusionkit {

/// A root of unity exp(2*pi*i * num/den), stored as a reduced rational
/// exponent mod 1. All scalar arithmetic in the library is exact: products
/// add exponents, powers multiply them, and equality is equality of the
/// reduced fraction. The multiplicative order equals den.
class RootOfUnity {
public:
  RootOfUnity() : num_(0), den_(1) {}
  static RootOfUnity from_exponent(std::int64_t num, std::int64_t den);
  static RootOfUnity one() { return RootOfUnity(); }
  static RootOfUnity minus_one() { return from_exponent(1, 2); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  std::int64_t order() const { return den_; }

  bool is_one() const { return num_ == 0; }
  bool is_minus_one() const { return num_ == 1 && den_ == 2; }
  bool is_real() const { return den_ <= 2; }

  RootOfUnity operator*(const RootOfUnity& o) const;
  RootOfUnity inverse() const;
  RootOfUnity pow(std::int64_t k) const;

  bool operator==(const RootOfUnity& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RootOfUnity& o) const { return !(*this == o); }
  bool operator<(const RootOfUnity& o) const {
    return num_ * o.den_ < o.num_ * den_;
  }

  /// Reduced exponent string "p/q"; parse accepts "p/q", "1", "-1", "i", "-i".
  std::string str() const;
  static RootOfUnity parse(const std::string& s);

private:
  RootOfUnity(std::int64_t n, std::int64_t d) : num_(n), den_(d) {}
  std::int64_t num_, den_;
};

} // namespace fusionkit
