#include "fusionkit/exact_dim.hpp"

#include <cmath>
#include <cstdlib>

namespace fusionkit {

namespace {
constexpr double kSqrt2 = 1.4142135623730950488;
constexpr std::int64_t kSnapBound = 1 << 16;
} // namespace

ExactDim ExactDim::integer(std::int64_t n) {
  return ExactDim{n, 0, true, static_cast<double>(n)};
}

ExactDim ExactDim::sqrt2(std::int64_t mult) {
  return ExactDim{0, mult, true, mult * kSqrt2};
}

ExactDim ExactDim::inexact(double v) { return ExactDim{0, 0, false, v}; }

double ExactDim::value() const {
  return exact ? static_cast<double>(a) + static_cast<double>(b) * kSqrt2
               : approx;
}

ExactDim ExactDim::operator+(const ExactDim& o) const {
  if (exact && o.exact) {
    ExactDim r{a + o.a, b + o.b, true, 0.0};
    r.approx = r.value();
    return r;
  }
  return inexact(value() + o.value());
}

ExactDim ExactDim::operator*(const ExactDim& o) const {
  if (exact && o.exact) {
    // (a + b s)(c + d s) = (ac + 2bd) + (ad + bc) s,  s = sqrt(2)
    ExactDim r{a * o.a + 2 * b * o.b, a * o.b + b * o.a, true, 0.0};
    r.approx = r.value();
    return r;
  }
  return inexact(value() * o.value());
}

bool ExactDim::operator==(const ExactDim& o) const {
  if (exact && o.exact) return a == o.a && b == o.b;
  return std::abs(value() - o.value()) < 1e-9;
}

bool ExactDim::operator<(const ExactDim& o) const {
  if (exact && o.exact) {
    // a1 + b1 s < a2 + b2 s  <=>  x < y s  with x = a1-a2, y = b2-b1.
    std::int64_t x = a - o.a, y = o.b - b;
    if (y >= 0) {
      if (x < 0) return !(x == 0 && y == 0);
      return x * x < 2 * y * y;
    }
    if (x >= 0) return false;
    return x * x > 2 * y * y;
  }
  return value() < o.value() - 1e-9;
}

std::string ExactDim::str() const {
  if (!exact) return std::to_string(approx);
  if (b == 0) return std::to_string(a);
  std::string s2 = (b == 1) ? "√2" : (b == -1 ? "-√2" : std::to_string(b) + "√2");
  if (a == 0) return s2;
  return std::to_string(a) + (b > 0 ? "+" : "") + s2;
}

ExactDim ExactDim::snap(double v, double tol) {
  double bmaxd = std::abs(v) / kSqrt2 + 2.0;
  std::int64_t bmax = bmaxd > static_cast<double>(kSnapBound)
                          ? kSnapBound
                          : static_cast<std::int64_t>(bmaxd);
  for (std::int64_t k = 0; k <= bmax; ++k) {
    for (std::int64_t b : {k, -k}) {
      double ad = v - static_cast<double>(b) * kSqrt2;
      std::int64_t a = static_cast<std::int64_t>(std::llround(ad));
      if (std::abs(a) > kSnapBound) continue;
      double got = static_cast<double>(a) + static_cast<double>(b) * kSqrt2;
      if (std::abs(got - v) <= tol) return ExactDim{a, b, true, got};
      if (b == 0) break;
    }
  }
  return inexact(v);
}

} // namespace fusionkit
