#include "ecvsig/cryptanalysis.hpp"

#include <cstdint>
#include <vector>

#include "gtest/gtest.h"

namespace ecvsig {
namespace {

const CurveParams kDemoCurve{757, 6, 2};
const Point kDemoG = Point::affine(529, 566);
const Natural kDemoQ = 113;

EcKeyPair demo_keys() { return ec_key_from_private(kDemoCurve, kDemoG, kDemoQ, 78); }

// A point outside <G>: project a random point by q to land in the order-7
// component.
Point cofactor_point(Rng& rng) {
  for (;;) {
    Point candidate =
        scalar_mul(kDemoCurve, kDemoQ, random_point(kDemoCurve, rng));
    if (!candidate.is_infinity()) return candidate;
  }
}

TEST(BruteForceEcdlp, KnownLogs) {
  EcKeyPair keys = demo_keys();
  DlogInstance to_b{kDemoCurve, kDemoG, keys.pub.public_point, kDemoQ};
  EXPECT_EQ(brute_force_ecdlp(to_b), Natural(78));

  DlogInstance to_infinity{kDemoCurve, kDemoG, Point::infinity(), kDemoQ};
  EXPECT_EQ(brute_force_ecdlp(to_infinity), Natural(0));

  DlogInstance to_r{kDemoCurve, kDemoG, Point::affine(248, 195), kDemoQ};
  EXPECT_EQ(brute_force_ecdlp(to_r), Natural(81));
}

TEST(BruteForceEcdlp, TargetOutsideSubgroup) {
  Rng rng(0x5eed0401);
  DlogInstance instance{kDemoCurve, kDemoG, cofactor_point(rng), kDemoQ};
  EXPECT_EQ(brute_force_ecdlp(instance), std::nullopt);
}

TEST(BruteForceEcdlp, CutoffEnforced) {
  DlogInstance instance{kDemoCurve, kDemoG, kDemoG, Natural("2000000")};
  EXPECT_THROW(brute_force_ecdlp(instance), OrderTooLargeError);
}

TEST(BsgsEcdlp, KnownLogs) {
  DlogInstance to_s{kDemoCurve, kDemoG, scalar_mul(kDemoCurve, 63, kDemoG),
                    kDemoQ};
  EXPECT_EQ(bsgs_ecdlp(to_s), Natural(63));

  DlogInstance to_infinity{kDemoCurve, kDemoG, Point::infinity(), kDemoQ};
  EXPECT_EQ(bsgs_ecdlp(to_infinity), Natural(0));
}

TEST(BsgsEcdlp, OrderCapEnforced) {
  DlogInstance instance{kDemoCurve, kDemoG, kDemoG, Natural(1) << 41};
  EXPECT_THROW(bsgs_ecdlp(instance), OrderTooLargeError);
}

TEST(NonceReuse, NonInvertibleDeltaReported) {
  // with a composite modulus a non-unit digest delta has no inverse
  EcKeyPair keys = demo_keys();
  EcSignature sig1 = ec_sign({56}, keys, {81, 63});
  EcSignature sig2 = ec_sign({10}, keys, {81, 63});
  EXPECT_THROW(nonce_reuse_recover_alpha(sig1, {56}, sig2, {10}, 92),
               NotInvertibleError);  // 56 - 10 = 46 shares a factor with 92
}

TEST(AttackSystemRank, EmptyBatchRejected) {
  EXPECT_THROW(attack_system_rank({}, kDemoQ), Error);
}

TEST(BsgsEcdlp, TargetOutsideSubgroupNotFound) {
  Rng rng(0x5eed0402);
  DlogInstance instance{kDemoCurve, kDemoG, cofactor_point(rng), kDemoQ};
  EXPECT_EQ(bsgs_ecdlp(instance), std::nullopt);
}

TEST(BsgsEcdlp, AgreesWithBruteForce) {
  Rng rng(0x5eed0403);

  // Whole-group instances on the demo curve (order 791) and subgroup
  // instances of order 7 and 113, with random targets.
  std::vector<DlogInstance> instances;
  for (int i = 0; i < 30; ++i) {
    Point target = scalar_mul(kDemoCurve, rng.below(kDemoQ), kDemoG);
    instances.push_back({kDemoCurve, kDemoG, target, kDemoQ});
  }
  Point seven = cofactor_point(rng);
  for (int i = 0; i < 10; ++i) {
    Point target = scalar_mul(kDemoCurve, rng.below(7), seven);
    instances.push_back({kDemoCurve, seven, target, 7});
    instances.push_back({kDemoCurve, seven, scalar_mul(kDemoCurve, rng.below(kDemoQ), kDemoG), 7});
  }
  Point full = random_point(kDemoCurve, rng);
  instances.push_back(
      {kDemoCurve, full, scalar_mul(kDemoCurve, 678, full), 791});

  // Random desk-scale curves with subgroup orders up to 10^4.
  int curves_used = 0;
  while (curves_used < 5) {
    Natural p = gen_prime(12, rng);
    CurveParams params{p, rng.below(p), rng.below(p)};
    SubgroupInfo info;
    try {
      validate_params(params);
      info = find_prime_order_generator(params, rng, 3);
    } catch (const Error&) {
      continue;
    }
    if (info.order > 10000) continue;
    for (int i = 0; i < 8; ++i) {
      Point target = scalar_mul(params, rng.below(info.order), info.generator);
      instances.push_back({params, info.generator, target, info.order});
    }
    ++curves_used;
  }

  for (const DlogInstance& instance : instances) {
    ASSERT_LE(instance.order, 10000);
    EXPECT_EQ(brute_force_ecdlp(instance), bsgs_ecdlp(instance));
  }
}

TEST(NonceReuse, RecoversDemoPrivateKey) {
  EcKeyPair keys = demo_keys();
  EcSignature sig1 = ec_sign({56}, keys, {81, 63});
  EcSignature sig2 = ec_sign({10}, keys, {81, 63});
  EXPECT_EQ(sig1.t_scalar, 52);
  EXPECT_EQ(sig2.t_scalar, 80);

  Natural alpha =
      nonce_reuse_recover_alpha(sig1, {56}, sig2, {10}, kDemoQ);
  EXPECT_EQ(alpha, 78);
  EXPECT_EQ(scalar_mul(kDemoCurve, alpha, kDemoG), keys.pub.public_point);
}

TEST(NonceReuse, PreconditionErrors) {
  EcKeyPair keys = demo_keys();
  EcSignature sig1 = ec_sign({56}, keys, {81, 63});
  EcSignature sig2 = ec_sign({10}, keys, {81, 63});
  EcSignature other = ec_sign({10}, keys, {82, 63});

  EXPECT_THROW(nonce_reuse_recover_alpha(sig1, {56}, other, {10}, kDemoQ),
               AttackPreconditionError);
  EXPECT_THROW(nonce_reuse_recover_alpha(sig1, {56}, sig1, {56}, kDemoQ),
               AttackPreconditionError);
  (void)sig2;
}

TEST(NonceReuse, RandomizedRecoveryAlwaysSucceeds) {
  Rng rng(0x5eed0404);
  int recovered = 0;
  const int scenarios = 200;
  for (int i = 0; i < scenarios; ++i) {
    EcKeyPair keys = ec_keygen(kDemoCurve, kDemoG, kDemoQ, rng);
    Natural m1 = rng.below(kDemoQ);
    Natural m2;
    do {
      m2 = rng.below(kDemoQ);
    } while (m2 == m1);
    NoncePair shared{rng.in_range(1, kDemoQ - 1), rng.in_range(1, kDemoQ - 1)};
    EcSignature sig1, sig2;
    try {
      sig1 = ec_sign({m1}, keys, shared);
      sig2 = ec_sign({m2}, keys, shared);
    } catch (const DegenerateNonceError&) {
      --i;
      continue;
    }
    Natural alpha = nonce_reuse_recover_alpha(sig1, {m1}, sig2, {m2}, kDemoQ);
    if (alpha == keys.priv.secret_scalar) ++recovered;
  }
  EXPECT_EQ(recovered, scenarios);
}

TEST(VariantNonceReuse, DemoCandidates) {
  DlKeyPair keys = dl_key_from_private(509, 2, 281);
  VariantSignature sig1 = variant_sign(432, keys.priv, keys.pub, {208, 386});
  VariantSignature sig2 = variant_sign(100, keys.priv, keys.pub, {208, 386});
  EXPECT_EQ(sig2.t, 304);

  std::vector<Natural> candidates =
      variant_nonce_reuse_recover_l(sig1, 432, sig2, 100, 509);
  std::vector<Natural> expected = {5, 132, 259, 386};
  EXPECT_EQ(candidates, expected);

  // every candidate satisfies the congruence exactly
  Natural dm = normalize_mod(432 - 100, 508);
  Natural dt = normalize_mod(sig1.t - sig2.t, 508);
  for (const Natural& l : candidates) EXPECT_EQ(l * dm % 508, dt);
}

TEST(VariantNonceReuse, UniqueCandidateWhenDeltaInvertible) {
  DlKeyPair keys = dl_key_from_private(509, 2, 281);
  // m1 - m2 = 3, coprime to 508
  VariantSignature sig1 = variant_sign(103, keys.priv, keys.pub, {208, 386});
  VariantSignature sig2 = variant_sign(100, keys.priv, keys.pub, {208, 386});
  std::vector<Natural> candidates =
      variant_nonce_reuse_recover_l(sig1, 103, sig2, 100, 509);
  ASSERT_EQ(candidates.size(), 1u);
  EXPECT_EQ(candidates[0], 386);
}

TEST(VariantNonceReuse, PreconditionErrors) {
  DlKeyPair keys = dl_key_from_private(509, 2, 281);
  VariantSignature sig1 = variant_sign(432, keys.priv, keys.pub, {208, 386});
  VariantSignature other = variant_sign(100, keys.priv, keys.pub, {209, 386});
  EXPECT_THROW(variant_nonce_reuse_recover_l(sig1, 432, other, 100, 509),
               AttackPreconditionError);
  EXPECT_THROW(variant_nonce_reuse_recover_l(sig1, 432, sig1, 432, 509),
               AttackPreconditionError);
}

TEST(AttackSystemRank, DistinctNoncesStayUnderdetermined) {
  Rng rng(0x5eed0405);
  EcKeyPair keys = demo_keys();
  for (std::size_t z : {1u, 2u, 3u, 5u}) {
    std::vector<std::pair<EcSignature, MessageDigest>> batch;
    while (batch.size() < z) {
      MessageDigest digest{rng.below(kDemoQ)};
      EcSignature sig = ec_sign_random(digest, keys, rng);
      bool repeat = false;
      for (const auto& [existing, _] : batch) {
        if (existing.r_point == sig.r_point && existing.s_point == sig.s_point)
          repeat = true;
      }
      if (!repeat) batch.emplace_back(sig, digest);
    }
    SystemShapeReport report = attack_system_rank(batch, kDemoQ);
    EXPECT_EQ(report.equations, z);
    EXPECT_EQ(report.unknowns, 2 * z + 1);
    EXPECT_EQ(report.effective_unknowns, 2 * z + 1);
    EXPECT_EQ(report.rank, z);
    EXPECT_EQ(report.solution_space_dim, z + 1);
    EXPECT_TRUE(report.underdetermined);
    EXPECT_TRUE(report.repeated_nonce_pairs.empty());
    EXPECT_FALSE(report.reuse_recovered_key.has_value());
  }
}

TEST(AttackSystemRank, RepeatedNoncePairTriggersRecovery) {
  Rng rng(0x5eed0406);
  EcKeyPair keys = demo_keys();
  EcSignature sig1 = ec_sign({56}, keys, {81, 63});
  EcSignature sig2 = ec_sign({10}, keys, {81, 63});
  EcSignature sig3 = ec_sign_random({99}, keys, rng);

  SystemShapeReport report =
      attack_system_rank({{sig1, {56}}, {sig2, {10}}, {sig3, {99}}}, kDemoQ);
  EXPECT_EQ(report.equations, 3u);
  EXPECT_EQ(report.unknowns, 7u);
  EXPECT_EQ(report.effective_unknowns, 5u);
  ASSERT_EQ(report.repeated_nonce_pairs.size(), 1u);
  EXPECT_EQ(report.repeated_nonce_pairs[0], (std::pair<std::size_t, std::size_t>{0, 1}));
  ASSERT_TRUE(report.reuse_recovered_key.has_value());
  EXPECT_EQ(*report.reuse_recovered_key, 78);
}

TEST(MeasureOps, NoOpIsAllZeros) {
  OpCountReport report = measure_ops([] {});
  EXPECT_EQ(report, OpCountReport{});
}

TEST(MeasureOps, DeterministicForFixedInputs) {
  EcKeyPair keys = demo_keys();
  auto run = [&] {
    return measure_ops([&] { ec_sign({56}, keys, {81, 63}); });
  };
  OpCountReport first = run();
  OpCountReport second = run();
  EXPECT_EQ(first, second);
  EXPECT_EQ(first.ec_scalar_mults, 2u);
}

TEST(MeasureOps, NestedScopesIsolate) {
  EcKeyPair keys = demo_keys();
  OpCountReport outer = measure_ops([&] {
    OpCountReport inner = measure_ops([&] { ec_sign({56}, keys, {81, 63}); });
    EXPECT_EQ(inner.ec_scalar_mults, 2u);
  });
  EXPECT_EQ(outer.ec_scalar_mults, 0u);
}

}  // namespace
}  // namespace ecvsig
