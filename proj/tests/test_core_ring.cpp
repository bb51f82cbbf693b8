#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fusionkit/analysis.hpp"
#include "fusionkit/config.hpp"
#include "fusionkit/grading.hpp"
#include "fusionkit/isomorphism.hpp"
#include "fusionkit/nising.hpp"
#include "fusionkit/product.hpp"
#include "fusionkit/ring_json.hpp"
#include "fusionkit/subring.hpp"
#include "oracles.hpp"

using namespace fusionkit;

TEST_CASE("rank-1 and Ising rings validate") {
  FusionRing trivial(1, {"1"}, 0, {0});
  trivial.set_coeff(0, 0, 0, 1);
  CHECK(validate_ring(trivial).valid());

  auto ising = make_ising();
  CHECK(validate_ring(ising).valid());
  CHECK(oracles::associativity_quadruples(ising));
}

TEST_CASE("a corrupted coefficient is caught as an associativity failure") {
  auto r = make_ising();
  r.set_coeff(2, 2, 1, 2); // N_{ZZ}^delta = 2
  auto rep = validate_ring(r);
  CHECK(!rep.valid());
  bool has_assoc = false;
  for (const auto& issue : rep.issues)
    if (issue.kind == ValidationIssue::Kind::Associativity) has_assoc = true;
  CHECK(has_assoc);
  std::int64_t violations = 0;
  CHECK(!oracles::associativity_quadruples(r, &violations));
  CHECK(violations > 0);
}

TEST_CASE("malformed input is reported distinctly from axiom failure") {
  auto r = make_ising();
  r.set_coeff(2, 2, 0, -1);
  auto rep = validate_ring(r);
  CHECK(rep.malformed());

  FusionRing bad_dual(2, {"1", "x"}, 0, {0, 5});
  bad_dual.set_coeff(0, 0, 0, 1);
  auto rep2 = validate_ring(bad_dual);
  CHECK(rep2.malformed());

  CHECK_THROWS_AS(make_ising().set_coeff(0, 0, 7, 1), std::out_of_range);
}

TEST_CASE("Frobenius-Perron dimensions of the rank-3 ring") {
  auto d = fp_dims(make_ising());
  CHECK(d.all_exact);
  CHECK(d.dims[0] == ExactDim::integer(1));
  CHECK(d.dims[1] == ExactDim::integer(1));
  CHECK(d.dims[2] == ExactDim::sqrt2());
  CHECK(d.total == ExactDim::integer(4));
}

TEST_CASE("dimensions of family rings are exact") {
  auto d8 = fp_dims(make_cm(8).ring);
  CHECK(d8.total == ExactDim::integer(16));
  auto d6 = fp_dims(make_cm(6).ring);
  CHECK(d6.dims[make_cm(6).ring.unit()] == ExactDim::integer(1));
  CHECK(d6.total == ExactDim::integer(12));
}

TEST_CASE("rings outside Z[sqrt 2] keep flagged floating dimensions") {
  FusionRing yl(2, {"1", "x"}, 0, {0, 1});
  yl.set_coeff(0, 0, 0, 1);
  yl.set_coeff(0, 1, 1, 1);
  yl.set_coeff(1, 0, 1, 1);
  yl.set_coeff(1, 1, 0, 1);
  yl.set_coeff(1, 1, 1, 1); // x (x) x = 1 + x
  CHECK(validate_ring(yl).valid());
  auto d = fp_dims(yl);
  CHECK(!d.all_exact);
  CHECK(d.dims[1].value() ==
        doctest::Approx(1.61803398875).epsilon(1e-8));
}

TEST_CASE("a rigidity-broken ring cannot carry dimensions") {
  auto r = make_ising();
  r.set_coeff(2, 2, 0, 0);
  r.set_coeff(2, 2, 1, 0); // Z (x) Z = 0
  CHECK(!validate_ring(r).valid());
  CHECK_THROWS(fp_dims(r));
}

TEST_CASE("invertible groups of family rings") {
  auto i8 = invertibles(make_cm(8).ring);
  REQUIRE(i8.structure.has_value());
  CHECK(i8.structure->group.factors() == std::vector<std::int64_t>{2, 4});

  auto i6 = invertibles(make_cm(6).ring);
  CHECK(i6.structure->group.factors() == std::vector<std::int64_t>{6});

  auto ii = invertibles(make_ising());
  CHECK(ii.structure->group.factors() == std::vector<std::int64_t>{2});

  FusionRing trivial(1, {"1"}, 0, {0});
  trivial.set_coeff(0, 0, 0, 1);
  CHECK(invertibles(trivial).structure->group.factors().empty());
}

TEST_CASE("stabilizer decomposition") {
  auto ising = make_ising();
  auto sd = stabilizer_decomposition(ising, 2);
  CHECK(sd.stabilizer == std::vector<int>{0, 1});
  CHECK(sd.canonical_shape);
  REQUIRE(sd.decomposition.size() == 2);
  CHECK(sd.decomposition[0].c == 0);
  CHECK(sd.decomposition[1].c == 1);

  auto sd_inv = stabilizer_decomposition(ising, 1);
  CHECK(sd_inv.stabilizer == std::vector<int>{0});
  CHECK(sd_inv.decomposition.size() == 1);

  // Brute-force cross-check on C_8, X = Z_1.
  auto cm = make_cm(8);
  int z1 = cm.z_index[1];
  std::vector<int> expect;
  for (int g = 0; g < cm.ring.rank(); ++g)
    if (is_invertible_object(cm.ring, g) && cm.ring.coeff(g, z1, z1) > 0)
      expect.push_back(g);
  auto sd8 = stabilizer_decomposition(cm.ring, z1);
  CHECK(sd8.stabilizer == expect);
  CHECK(sd8.stabilizer ==
        std::vector<int>{cm.invertible_index[0], cm.invertible_index[4]});
  CHECK(sd8.canonical_shape);
}

TEST_CASE("subring closure") {
  auto ising = make_ising();
  CHECK(subring_generated(ising, {2}).rank() == 3);
  CHECK(subring_generated(ising, {}).rank() == 1);

  auto cm = make_cm(8);
  int delta_a = cm.invertible_index[4 + 1]; // delta (x) a
  auto s = subring_generated(cm.ring, {delta_a});
  CHECK(s.rank() == 4);
  CHECK(subring_is_pointed(s));
}

TEST_CASE("closure is idempotent and monotone") {
  auto cm = make_cm(8);
  std::mt19937 rng(20260808);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<int> s, t;
    for (int x = 0; x < cm.ring.rank(); ++x) {
      if (rng() % 3 == 0) s.push_back(x);
      if (rng() % 3 == 0) t.push_back(x);
    }
    auto cs = subring_generated(cm.ring, s);
    CHECK(subring_generated(cm.ring, cs.simples).simples == cs.simples);
    std::vector<int> su = s;
    su.insert(su.end(), t.begin(), t.end());
    CHECK(subring_generated(cm.ring, su).contains_all(cs));
  }
}

TEST_CASE("adjoint subrings") {
  auto cm = make_cm(6);
  auto adj = adjoint_subring(cm.ring);
  CHECK(adj.rank() == 2);
  CHECK(adj.contains(cm.invertible_index[3])); // delta

  auto p = oracles::pointed_of({2, 4});
  CHECK(adjoint_subring(p).rank() == 1);

  auto prod = deligne_product(make_ising(), oracles::pointed_of({3}));
  auto adj2 = adjoint_subring(prod);
  CHECK(adj2.rank() == 2);
  CHECK(prod.label(adj2.simples[1]) == "δ⊠0");
}

TEST_CASE("universal gradings of family rings") {
  for (int n = 1; n <= 4; ++n) {
    auto nis = make_nising(NisingSpec(n, RootOfUnity::one()));
    auto ug = universal_grading(nis.cm.ring);
    CHECK(ug.grading.group.factors() ==
          std::vector<std::int64_t>{std::int64_t(1) << n});
    CHECK(ug.grading.faithful);
    // trivial component = adjoint subring
    auto adj = adjoint_subring(nis.cm.ring);
    CHECK(ug.classes[ug.trivial_class] == adj.simples);
  }

  auto p = oracles::pointed_of({2, 4});
  CHECK(universal_grading(p).grading.group.factors() ==
        std::vector<std::int64_t>{2, 4});

  auto prod = deligne_product(make_ising(), oracles::pointed_of({3}));
  CHECK(universal_grading(prod).grading.group.factors() ==
        std::vector<std::int64_t>{6});
}

TEST_CASE("faithful grading dimension identities hold exactly") {
  for (const FusionRing& r :
       {make_ising(), make_cm(6).ring, make_cm(8).ring,
        deligne_product(make_ising(), oracles::pointed_of({3}))}) {
    auto ug = universal_grading(r);
    auto dims = fp_dims(r);
    REQUIRE(dims.all_exact);
    ExactDim trivial_dim = ExactDim::integer(0);
    for (int x : ug.classes[ug.trivial_class])
      trivial_dim = trivial_dim + dims.dims[x] * dims.dims[x];
    ExactDim expected = ExactDim::integer(0);
    for (std::int64_t i = 0; i < ug.grading.group.order(); ++i)
      expected = expected + trivial_dim;
    CHECK(dims.total == expected);
    for (const auto& cls : ug.classes) {
      ExactDim comp = ExactDim::integer(0);
      for (int x : cls) comp = comp + dims.dims[x] * dims.dims[x];
      CHECK(comp == trivial_dim);
    }
  }
}

TEST_CASE("deligne products") {
  auto prod = deligne_product(make_ising(), oracles::pointed_of({2}));
  CHECK(prod.rank() == 6);
  CHECK(fp_dims(prod).total == ExactDim::integer(8));
  CHECK(validate_ring(prod).valid());

  // R (x) trivial has the same table as R.
  FusionRing trivial(1, {"1"}, 0, {0});
  trivial.set_coeff(0, 0, 0, 1);
  auto same = deligne_product(make_cm(4).ring, trivial);
  CHECK(same.coeff_list() == make_cm(4).ring.coeff_list());
  CHECK(same.dual_map() == make_cm(4).ring.dual_map());
  CHECK(same.unit() == make_cm(4).ring.unit());
}

TEST_CASE("the cyclic family ring is the closure of (Z,1) in the product") {
  for (int m : {2, 6, 8}) {
    auto prod = deligne_product(make_ising(), oracles::pointed_of({m}));
    int gen = 2 * m + 1; // (Z, 1)
    CHECK(prod.label(gen) == "Z⊠1");
    auto closure = subring_generated(prod, {gen});
    auto extracted = extract_subring(closure);
    auto cm = make_cm(m);
    CHECK(extracted.rank() == cm.ring.rank());
    CHECK(extracted.labels() == cm.ring.labels());
    CHECK(extracted.unit() == cm.ring.unit());
    CHECK(extracted.dual_map() == cm.ring.dual_map());
    CHECK(extracted.coeff_list() == cm.ring.coeff_list());
  }
}

TEST_CASE("cm grading is consistent and matches the stated degrees") {
  auto cm = make_cm(8);
  CHECK(grading_consistent(cm.ring, cm.grading));
  CHECK(cm.grading.degree[cm.z_index[2]] == FiniteAbelianGroup::Elem{5});
  CHECK(cm.grading.degree[cm.invertible_index[4 + 3]] ==
        FiniteAbelianGroup::Elem{6});
  CHECK(cm.ring.dual(cm.z_index[0]) == cm.z_index[3]);
}

TEST_CASE("subring lattices") {
  auto lat = subring_lattice(make_ising());
  CHECK(lat.members.size() == 3);

  FusionRing trivial(1, {"1"}, 0, {0});
  trivial.set_coeff(0, 0, 0, 1);
  CHECK(subring_lattice(trivial).members.size() == 1);

  auto nis3 = make_nising(NisingSpec(3, RootOfUnity::one()));
  for (const auto& s : subring_lattice(nis3.cm.ring).members)
    if (!s.is_whole()) CHECK(subring_is_pointed(s));

  // joins stay inside the lattice; members re-close to themselves
  auto cm6 = make_cm(6);
  auto lat6 = subring_lattice(cm6.ring);
  bool has_ising_node = false;
  for (const auto& s : lat6.members) {
    CHECK(subring_generated(cm6.ring, s.simples).simples == s.simples);
    if (s.rank() == 3 && !subring_is_pointed(s)) has_ising_node = true;
    for (const auto& t : lat6.members) {
      auto join = subring_join(s, t);
      bool present = false;
      for (const auto& u : lat6.members)
        if (u.simples == join.simples) present = true;
      CHECK(present);
    }
  }
  CHECK(has_ising_node);
}

TEST_CASE("lattice rank bound") {
  auto big = deligne_product(make_cm(48).ring, oracles::pointed_of({2}));
  CHECK(big.rank() > 64);
  CHECK_THROWS_AS(subring_lattice(big), bound_error);
}

TEST_CASE("cd sets") {
  auto check_cd = [](const FusionRing& r, std::vector<ExactDim> want) {
    auto got = cd_set(r);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == want[i]);
  };
  check_cd(make_cm(6).ring, {ExactDim::integer(1), ExactDim::sqrt2()});
  check_cd(oracles::pointed_of({4}), {ExactDim::integer(1)});
  check_cd(deligne_product(make_ising(), make_ising()),
           {ExactDim::integer(1), ExactDim::sqrt2(), ExactDim::integer(2)});
}

TEST_CASE("gty structure reports") {
  auto rep8 = gty_structure(make_cm(8).ring);
  CHECK(rep8.is_gty);
  CHECK(rep8.n == 4);
  CHECK(rep8.invertible_count == 8);
  CHECK(rep8.universal_order == 8);
  CHECK(rep8.action_transitive);
  CHECK(rep8.z2_normal);
  CHECK(rep8.all_checks());

  auto repi = gty_structure(make_ising());
  CHECK(repi.n == 1);
  CHECK(repi.invertible_count == 2);
  CHECK(repi.all_checks());

  CHECK(!gty_structure(deligne_product(make_ising(), make_ising())).is_gty);
  CHECK_THROWS_AS(gty_structure(oracles::pointed_of({4})), std::invalid_argument);

  auto fmr = oracles::make_fmr();
  CHECK(validate_ring(fmr).valid());
  auto repf = gty_structure(fmr);
  CHECK(repf.is_gty);
  CHECK(repf.all_checks());
}

TEST_CASE("gty characterization by dimension set") {
  auto is_gty_or_throws = [](const FusionRing& r) {
    try {
      return gty_structure(r).is_gty;
    } catch (const std::invalid_argument&) {
      return false; // pointed
    }
  };
  std::vector<FusionRing> rings = {
      make_ising(), make_cm(4).ring, make_cm(6).ring, oracles::pointed_of({4}),
      deligne_product(make_ising(), make_ising()),
      deligne_product(make_ising(), oracles::pointed_of({3})),
      oracles::make_fmr()};
  for (const auto& r : rings) {
    auto cds = cd_set(r);
    bool pointed = cds.size() == 1 && cds[0] == ExactDim::integer(1);
    bool dim_shape = cds.size() == 2 && cds[0] == ExactDim::integer(1) &&
                     cds[1] == ExactDim::sqrt2();
    CHECK(is_gty_or_throws(r) == (!pointed && dim_shape));
  }
}

TEST_CASE("transitivity agrees with the brute-force orbit computation") {
  for (const FusionRing& r :
       {make_cm(8).ring, make_cm(6).ring, oracles::make_fmr()}) {
    auto rep = gty_structure(r);
    CHECK(rep.action_transitive == oracles::orbit_transitive(r));
  }
}

TEST_CASE("isomorphism search finds the odd-part splitting") {
  auto cm6 = make_cm(6);
  auto target = deligne_product(make_ising(), oracles::pointed_of({3}));
  auto w = ring_isomorphic(cm6.ring, target);
  REQUIRE(w.has_value());
  CHECK(verify_iso_witness(cm6.ring, target, *w));
}

TEST_CASE("isomorphism search is reflexive and deterministic") {
  auto cm = make_cm(8).ring;
  auto w1 = ring_isomorphic(cm, cm);
  auto w2 = ring_isomorphic(cm, cm);
  REQUIRE(w1.has_value());
  CHECK(*w1 == *w2);
  CHECK(verify_iso_witness(cm, cm, *w1));
}

TEST_CASE("non-isomorphic rings of equal rank are distinguished") {
  auto i2 = make_nising(NisingSpec(2, RootOfUnity::one()));
  auto fmr = oracles::make_fmr();
  CHECK(i2.cm.ring.rank() == fmr.rank());
  CHECK(!ring_isomorphic(i2.cm.ring, fmr).has_value());
  CHECK(!oracles::exhaustive_isomorphic(i2.cm.ring, fmr).has_value());
}

TEST_CASE("search agrees with the exhaustive permutation oracle") {
  std::vector<FusionRing> rings = {make_ising(),
                                   make_cm(2).ring,
                                   make_cm(4).ring,
                                   oracles::make_fmr(),
                                   oracles::pointed_of({2}),
                                   oracles::pointed_of({4}),
                                   oracles::pointed_of({2, 2}),
                                   oracles::pointed_of({6})};
  for (const auto& a : rings)
    for (const auto& b : rings) {
      if (a.rank() > 6 || b.rank() > 6) continue;
      auto fast = ring_isomorphic(a, b);
      auto slow = oracles::exhaustive_isomorphic(a, b);
      CHECK(fast.has_value() == slow.has_value());
      if (fast) CHECK(verify_iso_witness(a, b, *fast));
    }
}

TEST_CASE("a non-abelian invertible group is returned as a bare table") {
  // group ring of the order-6 dihedral group: r^k at k, s r^k at 3+k,
  // with r^3 = s^2 = 1 and s r s = r^{-1}
  auto mul6 = [](int a, int b) {
    bool fa = a >= 3, fb = b >= 3;
    int i = a % 3, j = b % 3;
    if (!fa && !fb) return (i + j) % 3;
    if (!fa && fb) return 3 + (j - i + 3) % 3;
    if (fa && !fb) return 3 + (i + j) % 3;
    return (j - i + 3) % 3;
  };
  std::vector<int> dual(6);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      if (mul6(a, b) == 0) dual[a] = b;
  FusionRing s3(6, {"e", "r", "r2", "s", "sr", "sr2"}, 0, dual);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) s3.set_coeff(a, b, mul6(a, b), 1);
  REQUIRE(validate_ring(s3).valid());
  auto inv = invertibles(s3);
  CHECK(inv.indices.size() == 6);
  CHECK(!inv.abelian);
  CHECK(!inv.structure.has_value());
  CHECK_THROWS_AS(universal_grading(s3), std::invalid_argument);
}

TEST_CASE("isomorphism search honors the combined rank bound") {
  auto big = oracles::pointed_of({200});
  CHECK_THROWS_AS(ring_isomorphic(big, big), bound_error);
}

TEST_CASE("ring JSON round trip") {
  auto cm = make_cm(6).ring;
  auto text = ring_to_json(cm);
  auto back = ring_from_json(text);
  CHECK(back.same_table(cm));
  CHECK(back.meta == cm.meta);
  CHECK(ring_to_json(back) == text);

  CHECK_THROWS_AS(ring_from_json("{not json"), std::invalid_argument);
  CHECK_THROWS_AS(ring_from_json("{\"rank\": 1}"), std::invalid_argument);
}
