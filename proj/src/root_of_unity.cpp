#include "fusionkit/root_of_unity.hpp"

#include <numeric>
#include <stdexcept>

namespace fusionkit {

RootOfUnity RootOfUnity::from_exponent(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("root of unity: zero denominator");
  if (den < 0) {
    den = -den;
    num = -num;
  }
  num %= den;
  if (num < 0) num += den;
  std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return RootOfUnity(num, den);
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
  std::int64_t g = std::gcd(den_, o.den_);
  std::int64_t d = den_ / g * o.den_;
  std::int64_t n = num_ * (o.den_ / g) + o.num_ * (den_ / g);
  return from_exponent(n, d);
}

RootOfUnity RootOfUnity::inverse() const { return from_exponent(-num_, den_); }

RootOfUnity RootOfUnity::pow(std::int64_t k) const {
  // Reduce k mod den_ first so num_*k cannot overflow for the orders in use.
  std::int64_t kk = k % den_;
  if (kk < 0) kk += den_;
  return from_exponent(num_ * kk, den_);
}

std::string RootOfUnity::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

RootOfUnity RootOfUnity::parse(const std::string& s) {
  if (s == "1") return one();
  if (s == "-1") return minus_one();
  if (s == "i") return from_exponent(1, 4);
  if (s == "-i") return from_exponent(3, 4);
  auto slash = s.find('/');
  if (slash == std::string::npos)
    throw std::invalid_argument("root of unity: expected p/q, got '" + s + "'");
  std::size_t pos1 = 0, pos2 = 0;
  std::int64_t p = std::stoll(s.substr(0, slash), &pos1);
  std::int64_t q = std::stoll(s.substr(slash + 1), &pos2);
  if (pos1 != slash || pos2 != s.size() - slash - 1)
    throw std::invalid_argument("root of unity: expected p/q, got '" + s + "'");
  return from_exponent(p, q);
}

} // namespace fusionkit
