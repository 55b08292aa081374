#include "ecvsig/modmath.hpp"

#include <cstdint>
#include <vector>

#include "gtest/gtest.h"

namespace ecvsig {
namespace {

TEST(ModPow, KnownValues) {
  EXPECT_EQ(mod_pow(2, 208, 509), 332);
  EXPECT_EQ(mod_pow(2, 386, 509), 39);
  EXPECT_EQ(mod_pow(2, 281, 509), 482);
}

TEST(ModPow, ZeroExponentIsOne) {
  EXPECT_EQ(mod_pow(0, 0, 7), 1);
  EXPECT_EQ(mod_pow(123456789, 0, 2), 1);
  EXPECT_EQ(mod_pow(Natural("0x123456789abcdef0123456789abcdef"), 0,
                    Natural("0xfffffffffffffffffffffff")),
            1);
}

TEST(ModPow, RejectsTinyModulus) {
  EXPECT_THROW(mod_pow(2, 10, 1), InvalidModulusError);
  EXPECT_THROW(mod_pow(2, 10, 0), InvalidModulusError);
}

TEST(ModPow, NegativeBaseIsNormalized) {
  EXPECT_EQ(mod_pow(-2, 2, 7), 4);
  EXPECT_EQ(mod_pow(-1, 3, 7), 6);
}

TEST(ModPow, ExponentAdditivity) {
  Rng rng(0x5eed0001);
  for (int i = 0; i < 300; ++i) {
    Natural n = rng.in_range(2, Natural(1) << 80);
    Natural a = rng.below(n);
    Natural e1 = rng.bits(72);
    Natural e2 = rng.bits(72);
    EXPECT_EQ(mod_pow(a, e1 + e2, n),
              mod_pow(a, e1, n) * mod_pow(a, e2, n) % n);
  }
}

TEST(ExtGcd, KnownValues) {
  ExtGcd zero_case = ext_gcd(0, 7);
  EXPECT_EQ(zero_case.g, 7);
  EXPECT_EQ(zero_case.u, 0);
  EXPECT_EQ(zero_case.v, 1);

  ExtGcd coprime = ext_gcd(46, 113);
  EXPECT_EQ(coprime.g, 1);
  EXPECT_EQ(normalize_mod(coprime.u, 113), 86);

  ExtGcd shared = ext_gcd(4, 6);
  EXPECT_EQ(shared.g, 2);
  EXPECT_EQ(4 * shared.u + 6 * shared.v, 2);
}

TEST(ExtGcd, BothZeroUndefined) {
  EXPECT_THROW(ext_gcd(0, 0), UndefinedGcdError);
}

TEST(ExtGcd, BezoutIdentityHoldsExactly) {
  Rng rng(0x5eed0002);
  for (int i = 0; i < 1000; ++i) {
    Natural a = rng.bits(64);
    Natural b = rng.bits(64);
    if (rng.coin()) a = -a;
    if (rng.coin()) b = -b;
    if (a == 0 && b == 0) continue;
    ExtGcd e = ext_gcd(a, b);
    EXPECT_GT(e.g, 0);
    EXPECT_EQ(e.u * a + e.v * b, e.g);
    EXPECT_EQ(a % e.g, 0);
    EXPECT_EQ(b % e.g, 0);
  }
}

TEST(ModInv, KnownValues) {
  EXPECT_EQ(mod_inv(1, 97), 1);
  EXPECT_EQ(mod_inv(46, 113), 86);
}

TEST(ModInv, NonUnitFailsWithGcd) {
  try {
    mod_inv(2, 4);
    FAIL() << "expected NotInvertibleError";
  } catch (const NotInvertibleError& e) {
    EXPECT_EQ(e.gcd(), 2);
  }
}

TEST(ModInv, RandomInversesRoundTrip) {
  Rng rng(0x5eed0003);
  int tested = 0;
  while (tested < 1000) {
    Natural n = rng.in_range(2, (Natural(1) << 64) - 1);
    Natural a = rng.below(n);
    if (a == 0 || boost::multiprecision::gcd(a, n) != 1) continue;
    EXPECT_EQ(mod_inv(a, n) * a % n, 1);
    ++tested;
  }
}

// Independent primality oracle: a sieve of Eratosthenes.
std::vector<bool> sieve(std::uint32_t limit) {
  std::vector<bool> prime(limit, true);
  prime[0] = prime[1] = false;
  for (std::uint32_t i = 2; static_cast<std::uint64_t>(i) * i < limit; ++i) {
    if (!prime[i]) continue;
    for (std::uint32_t j = i * i; j < limit; j += i) prime[j] = false;
  }
  return prime;
}

TEST(IsProbablePrime, KnownValues) {
  EXPECT_TRUE(is_probable_prime(509));
  EXPECT_TRUE(is_probable_prime(757));
  EXPECT_FALSE(is_probable_prime(791));  // 7 * 113
  EXPECT_TRUE(is_probable_prime(113));
  EXPECT_FALSE(is_probable_prime(0));
  EXPECT_FALSE(is_probable_prime(1));
  EXPECT_TRUE(is_probable_prime(2));
}

TEST(IsProbablePrime, AgreesWithSieveBelow100000) {
  std::vector<bool> oracle = sieve(100000);
  for (std::uint32_t n = 0; n < 100000; ++n) {
    ASSERT_EQ(is_probable_prime(n, 5), oracle[n]) << "n = " << n;
  }
}

TEST(IsProbablePrime, LargeKnownPrimeAndComposite) {
  // 2^127 - 1 is a Mersenne prime; 2^128 + 1 factors as 59649589127497217 * ...
  Natural mersenne = (Natural(1) << 127) - 1;
  EXPECT_TRUE(is_probable_prime(mersenne));
  Natural fermat = (Natural(1) << 128) + 1;
  EXPECT_FALSE(is_probable_prime(fermat));
}

TEST(GenPrime, ContractHolds) {
  Rng rng(0x5eed0004);
  Natural p16 = gen_prime(16, rng);
  EXPECT_EQ(bit_length(p16), 16u);
  EXPECT_TRUE(is_probable_prime(p16));

  Natural p8 = gen_prime(8, rng);
  EXPECT_GE(p8, 128);
  EXPECT_LE(p8, 255);
  EXPECT_TRUE(is_probable_prime(p8));
}

TEST(GenPrime, DeterministicUnderSeeding) {
  Rng rng1(42);
  Rng rng2(42);
  EXPECT_EQ(gen_prime(32, rng1), gen_prime(32, rng2));
}

TEST(GenPrime, RejectsTinySizes) {
  Rng rng(1);
  EXPECT_THROW(gen_prime(7, rng), Error);
}

TEST(ModSqrt, RootsSquareBack) {
  Rng rng(0x5eed0005);
  std::vector<Natural> primes = {
      757, 509, 113, Natural("1000003"),
      Natural("170141183460469231731687303715884105757")};  // 2^127 + 29
  for (const Natural& p : primes) {
    int residues = 0;
    int non_residues = 0;
    for (int i = 0; i < 50; ++i) {
      Natural a = rng.below(p);
      auto root = mod_sqrt(a, p);
      if (root) {
        ++residues;
        EXPECT_EQ(*root * *root % p, a % p);
      } else {
        ++non_residues;
        EXPECT_NE(mod_pow(a, (p - 1) / 2, p), 1);
      }
    }
    EXPECT_GT(residues, 0);
    EXPECT_GT(non_residues, 0);
  }
}

TEST(ModSqrt, ZeroMapsToZero) {
  EXPECT_EQ(mod_sqrt(0, 757), Natural(0));
}

TEST(Factorization, TrialDivisionAndDivisors) {
  Factorization f = factor_trial_division(791);
  ASSERT_TRUE(f.complete());
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].first, 7);
  EXPECT_EQ(f.factors[1].first, 113);

  std::vector<Natural> d = divisors(f);
  std::vector<Natural> expected = {1, 7, 113, 791};
  EXPECT_EQ(d, expected);

  Factorization f508 = factor_trial_division(508);
  ASSERT_TRUE(f508.complete());
  EXPECT_EQ(f508.factors[0].first, 2);
  EXPECT_EQ(f508.factors[0].second, 2u);
  EXPECT_EQ(f508.factors[1].first, 127);
}

TEST(Factorization, IncompleteCofactorSurvives) {
  // product of two 40-bit primes resists the default limit
  Natural p1("1099511627791");
  Natural p2("1099511627803");
  Factorization f = factor_trial_division(p1 * p2);
  EXPECT_FALSE(f.complete());
  EXPECT_EQ(f.cofactor, p1 * p2);
}

TEST(Rng, BoundedDrawsStayInRange) {
  Rng rng(0x5eed0006);
  Natural bound("0x1ffffffffffffffffff");
  for (int i = 0; i < 200; ++i) {
    Natural v = rng.below(bound);
    EXPECT_GE(v, 0);
    EXPECT_LT(v, bound);
  }
  for (int i = 0; i < 200; ++i) {
    Natural v = rng.in_range(10, 17);
    EXPECT_GE(v, 10);
    EXPECT_LE(v, 17);
  }
}

TEST(NormalizeMod, SignedValuesLandInRange) {
  EXPECT_EQ(normalize_mod(-1, 10), 9);
  EXPECT_EQ(normalize_mod(-10, 10), 0);
  EXPECT_EQ(normalize_mod(25, 10), 5);
}

}  // namespace
}  // namespace ecvsig
