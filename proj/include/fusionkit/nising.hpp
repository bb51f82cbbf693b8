#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fusionkit/fusion_ring.hpp"
#include "fusionkit/grading.hpp"
#include "fusionkit/root_of_unity.hpp"

namespace fusionkit {

/// Rank-3 ring {1, delta, Z} with Z (x) Z = 1 + delta.
FusionRing make_ising();

/// The rank 3M/2 ring with invertibles delta^i (x) a^j (labels "1⊠2j",
/// "δ⊠2j") and non-invertibles Z_j (labels "Z⊠(2j+1)"), fusion rule
/// Z_j (x) Z_l = a^{j+l+1} + delta a^{j+l+1} (indices mod M/2), graded by
/// Z_M with deg Z_j = 2j+1 and deg delta^i a^j = 2j. Requires M even.
struct CmData {
  FusionRing ring;
  Grading grading;
  int M = 0;
  std::vector<int> invertible_index; // (i, j) -> basis index, i*M/2 + j
  std::vector<int> z_index;          // j -> basis index
};

CmData make_cm(int m);

struct NisingSpec {
  int N;
  RootOfUnity zeta; // twist label, zeta^{2^N} = 1

  NisingSpec(int n, RootOfUnity z);
};

/// The 2^N-member family ring: make_cm(2^N) with the twist label recorded as
/// metadata only (twists share the same fusion rules).
struct NisingData {
  CmData cm;
  NisingSpec spec;
};

NisingData make_nising(const NisingSpec& spec);

/// Z_j with Z_j* = Z_j; nonempty iff M/2 is odd.
std::vector<int> self_dual_noninvertibles(int m);

/// Ring-level factorization M = 2^N m (m odd): a verified basis bijection
/// make_cm(M) -> make_nising(N) (x) pointed(Z_m).
struct FactCmWitness {
  int N;
  int m;
  std::vector<int> map;    // cm basis -> product basis
  FusionRing product;      // deligne_product(nising(N).ring, pointed(Z_m))
};

/// Witness found by the pruned isomorphism search; fine up to M ~ 48.
FactCmWitness verify_fact_cm(int m);
/// Witness built directly from the subgroup splitting Z_M = <m> + <2^N>;
/// scales to large M. Both results are checked by verify_iso_witness.
FactCmWitness fact_cm_split(int m);

/// Lattice-level verification that every proper subring of the family ring
/// is pointed and every non-invertible simple generates the whole ring.
struct NofactReport {
  int N;
  int proper_subrings = 0;
  bool all_proper_pointed = false;
  bool all_noninvertibles_faithful = false;
  bool pass() const { return all_proper_pointed && all_noninvertibles_faithful; }
};

NofactReport verify_nofact(int n);

enum class TwistVerdict { Admits, RuledOut, Unknown };

struct TwistObstruction {
  TwistVerdict verdict;
  std::string reason;
};

/// Braiding existence for the twist label zeta:
///  - zeta = +-1: admits (induced braidings from the ambient product exist);
///  - zeta not in {+-1, +-i}: ruled out (the restriction zeta^2 to the cyclic
///    half of the invertibles admits no braiding);
///  - N = 2, zeta = +-i: ruled out (a non-degenerate proper pointed part
///    contradicts primeness);
///  - N > 2, zeta = +-i: unknown.
TwistObstruction twist_obstruction(const NisingSpec& spec);

} // namespace fusionkit
