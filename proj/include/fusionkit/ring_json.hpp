#pragma once

#include <string>

#include "fusionkit/fusion_ring.hpp"

namespace fusionkit {

/// `.fring.json` schema:
///   { "rank": int, "labels": [string], "unit": int, "dual": [int],
///     "coeffs": [[a,b,c,N], ...], "meta": {..}? }
/// Omitted triples are zero; coeffs are emitted sorted by (a,b,c).
std::string ring_to_json(const FusionRing& r, int indent = 2);
FusionRing ring_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

} // namespace fusionkit
