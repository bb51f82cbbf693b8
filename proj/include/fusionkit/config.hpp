#pragma once

#include <stdexcept>
#include <string>

namespace fusionkit {

/// Thrown when an enumeration or search exceeds its configured size bound.
class bound_error : public std::runtime_error {
public:
  explicit bound_error(const std::string& what) : std::runtime_error(what) {}
};

/// Rank bound for lattice enumeration; FUSIONKIT_MAX_RANK overrides the
/// default of 64. Isomorphism search allows 4x this combined rank.
int max_rank();

} // namespace fusionkit
