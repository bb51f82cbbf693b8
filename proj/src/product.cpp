#include "fusionkit/product.hpp"

namespace fusionkit {

FusionRing deligne_product(const FusionRing& r1, const FusionRing& r2) {
  const int n1 = r1.rank(), n2 = r2.rank();
  std::vector<std::string> labels;
  std::vector<int> dual;
  labels.reserve(n1 * n2);
  dual.reserve(n1 * n2);
  for (int a = 0; a < n1; ++a)
    for (int b = 0; b < n2; ++b) {
      labels.push_back(r1.label(a) + "⊠" + r2.label(b));
      dual.push_back(r1.dual(a) * n2 + r2.dual(b));
    }
  FusionRing out(n1 * n2, labels, r1.unit() * n2 + r2.unit(), dual);
  for (const auto& q1 : r1.coeff_list())
    for (const auto& q2 : r2.coeff_list())
      out.set_coeff(static_cast<int>(q1[0]) * n2 + static_cast<int>(q2[0]),
                    static_cast<int>(q1[1]) * n2 + static_cast<int>(q2[1]),
                    static_cast<int>(q1[2]) * n2 + static_cast<int>(q2[2]),
                    q1[3] * q2[3]);
  return out;
}

FusionRing pointed_ring(const FiniteAbelianGroup& g) {
  const std::int64_t n = g.order();
  std::vector<std::string> labels;
  std::vector<int> dual;
  for (std::int64_t i = 0; i < n; ++i) {
    auto e = g.elem_at(i);
    labels.push_back(g.elem_str(e));
    dual.push_back(static_cast<int>(g.index_of(g.neg(e))));
  }
  FusionRing out(static_cast<int>(n), labels, 0, dual);
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < n; ++j)
      out.set_coeff(static_cast<int>(i), static_cast<int>(j),
                    static_cast<int>(g.index_of(g.add(g.elem_at(i), g.elem_at(j)))),
                    1);
  return out;
}

} // namespace fusionkit
