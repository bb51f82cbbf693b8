#include "fusionkit/fusion_ring.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace fusionkit {

const FusionRing::Product FusionRing::kEmpty{};

FusionRing::FusionRing(int rank, std::vector<std::string> labels, int unit,
                       std::vector<int> dual)
    : rank_(rank), unit_(unit), labels_(std::move(labels)), dual_(std::move(dual)) {
  if (rank_ < 1) throw std::invalid_argument("ring rank must be >= 1");
  if (labels_.size() != static_cast<std::size_t>(rank_))
    labels_.resize(rank_, "?");
}

void FusionRing::set_coeff(int a, int b, int c, std::int64_t n) {
  if (a < 0 || a >= rank_ || b < 0 || b >= rank_ || c < 0 || c >= rank_)
    throw std::out_of_range("coefficient index out of range");
  auto& prod = coeffs_[key(a, b)];
  auto it = std::lower_bound(prod.begin(), prod.end(), c,
                             [](const Entry& e, int v) { return e.c < v; });
  if (it != prod.end() && it->c == c) {
    if (n == 0)
      prod.erase(it);
    else
      it->n = n;
  } else if (n != 0) {
    prod.insert(it, Entry{c, n});
  }
  if (prod.empty()) coeffs_.erase(key(a, b));
}

std::int64_t FusionRing::coeff(int a, int b, int c) const {
  auto it = coeffs_.find(key(a, b));
  if (it == coeffs_.end()) return 0;
  for (const auto& e : it->second)
    if (e.c == c) return e.n;
  return 0;
}

const FusionRing::Product& FusionRing::tensor(int a, int b) const {
  auto it = coeffs_.find(key(a, b));
  return it == coeffs_.end() ? kEmpty : it->second;
}

FusionRing::Product FusionRing::mult(const Product& x, const Product& y) const {
  std::map<int, std::int64_t> acc;
  for (const auto& ex : x)
    for (const auto& ey : y)
      for (const auto& e : tensor(ex.c, ey.c)) acc[e.c] += ex.n * ey.n * e.n;
  Product out;
  out.reserve(acc.size());
  for (auto [c, n] : acc)
    if (n != 0) out.push_back({c, n});
  return out;
}

std::int64_t FusionRing::constituent_count(int a, int b) const {
  std::int64_t total = 0;
  for (const auto& e : tensor(a, b)) total += e.n;
  return total;
}

std::vector<std::array<std::int64_t, 4>> FusionRing::coeff_list() const {
  std::vector<std::array<std::int64_t, 4>> out;
  for (const auto& [k, prod] : coeffs_) {
    std::int64_t a = k / rank_, b = k % rank_;
    for (const auto& e : prod) out.push_back({a, b, e.c, e.n});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool FusionRing::same_table(const FusionRing& o) const {
  return rank_ == o.rank_ && unit_ == o.unit_ && dual_ == o.dual_ &&
         labels_ == o.labels_ && coeff_list() == o.coeff_list();
}

bool ValidationReport::malformed() const {
  for (const auto& i : issues)
    if (i.kind == ValidationIssue::Kind::Malformed) return true;
  return false;
}

std::string ValidationReport::summary() const {
  if (issues.empty()) return "valid";
  std::string s;
  for (const auto& i : issues) {
    if (!s.empty()) s += "; ";
    s += i.message;
  }
  return s;
}

namespace {
bool products_equal(const FusionRing::Product& x, const FusionRing::Product& y) {
  return x == y;
}
} // namespace

ValidationReport validate_ring(const FusionRing& r) {
  ValidationReport rep;
  auto add = [&rep](ValidationIssue::Kind k, std::string msg) {
    rep.issues.push_back({k, std::move(msg)});
  };
  const int n = r.rank();

  if (r.unit() < 0 || r.unit() >= n)
    add(ValidationIssue::Kind::Malformed, "unit index out of range");
  if (r.dual_map().size() != static_cast<std::size_t>(n))
    add(ValidationIssue::Kind::Malformed, "dual map has wrong size");
  else
    for (int a = 0; a < n; ++a)
      if (r.dual(a) < 0 || r.dual(a) >= n)
        add(ValidationIssue::Kind::Malformed,
            "dual index out of range at " + std::to_string(a));
  for (const auto& q : r.coeff_list())
    if (q[3] < 0)
      add(ValidationIssue::Kind::Malformed,
          "negative coefficient at (" + std::to_string(q[0]) + "," +
              std::to_string(q[1]) + "," + std::to_string(q[2]) + ")");
  if (rep.malformed()) return rep; // axioms cannot be evaluated safely

  const int e = r.unit();
  for (int a = 0; a < n; ++a) {
    for (int c = 0; c < n; ++c) {
      std::int64_t want = (a == c) ? 1 : 0;
      if (r.coeff(a, e, c) != want || r.coeff(e, a, c) != want) {
        add(ValidationIssue::Kind::UnitAxiom,
            "unit axiom fails at a=" + r.label(a) + " c=" + r.label(c));
      }
    }
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::int64_t want = (b == r.dual(a)) ? 1 : 0;
      if (r.coeff(a, b, e) != want)
        add(ValidationIssue::Kind::Rigidity,
            "rigidity fails at a=" + r.label(a) + " b=" + r.label(b));
    }

  for (int a = 0; a < n; ++a)
    if (r.dual(r.dual(a)) != a)
      add(ValidationIssue::Kind::DualInvolution,
          "dual is not an involution at " + r.label(a));

  // (a b) c == a (b c), compared as sparse constituent vectors.
  constexpr int kMaxReported = 16;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto& ab = r.tensor(a, b);
      for (int c = 0; c < n; ++c) {
        auto lhs = r.mult(ab, FusionRing::simple(c));
        auto rhs = r.mult(FusionRing::simple(a), r.tensor(b, c));
        if (!products_equal(lhs, rhs)) {
          ++rep.associativity_failures;
          if (rep.associativity_failures <= kMaxReported)
            add(ValidationIssue::Kind::Associativity,
                "associativity fails at (" + r.label(a) + "," + r.label(b) +
                    "," + r.label(c) + ")");
        }
      }
    }
  return rep;
}

bool is_commutative(const FusionRing& r) {
  for (int a = 0; a < r.rank(); ++a)
    for (int b = a + 1; b < r.rank(); ++b)
      if (!(r.tensor(a, b) == r.tensor(b, a))) return false;
  return true;
}

} // namespace fusionkit
