#pragma once

/**
 * @file modmath.hpp
 * @brief Arbitrary-precision modular integer arithmetic.
 *
 * The number-theoretic substrate for every scheme in this library:
 * square-and-multiply exponentiation, the extended Euclidean algorithm,
 * modular inverses, Miller-Rabin primality testing, prime generation,
 * Tonelli-Shanks square roots and trial-division factoring.
 *
 * All functions are pure; randomness is always supplied explicitly by the
 * caller through an Rng, so everything is safe for concurrent use and
 * reproducible under seeding.
 *
 * None of this is constant-time. It is a research toolkit, not production
 * cryptography.
 */

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ecvsig {

/// Arbitrary-precision integer. "Natural" values are kept >= 0 by
/// convention; intermediate signed quantities are normalized with
/// normalize_mod() before they re-enter a residue ring.
using Natural = boost::multiprecision::cpp_int;

/// Base class for every error this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidModulusError : public Error {
 public:
  using Error::Error;
};

class UndefinedGcdError : public Error {
 public:
  using Error::Error;
};

/// Thrown when an inverse is requested for a non-unit. Carries the
/// offending gcd so callers can report why the element was not invertible.
class NotInvertibleError : public Error {
 public:
  NotInvertibleError(std::string message, Natural gcd)
      : Error(std::move(message)), gcd_(std::move(gcd)) {}
  const Natural& gcd() const { return gcd_; }

 private:
  Natural gcd_;
};

/// Number of bits in the binary representation of n; 0 for n == 0.
inline unsigned bit_length(const Natural& n) {
  if (n == 0) return 0;
  return static_cast<unsigned>(boost::multiprecision::msb(n)) + 1u;
}

/// Reduce a possibly negative value into the canonical range [0, modulus).
inline Natural normalize_mod(const Natural& value, const Natural& modulus) {
  if (modulus < 2) throw InvalidModulusError("modulus must be >= 2");
  Natural r = value % modulus;
  if (r < 0) r += modulus;
  return r;
}

/**
 * Deterministic random source. Wraps a seeded mt19937_64 and extends it to
 * arbitrary-precision draws by concatenating 64-bit words, with rejection
 * sampling for bounded ranges.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  bool coin() { return (engine_() & 1u) != 0; }

  /// Uniform value in [0, 2^nbits).
  Natural bits(unsigned nbits) {
    Natural out = 0;
    unsigned full = nbits / 64;
    unsigned rest = nbits % 64;
    for (unsigned i = 0; i < full; ++i) out = (out << 64) | next_u64();
    if (rest != 0) out = (out << rest) | (next_u64() >> (64 - rest));
    return out;
  }

  /// Uniform value in [0, bound).
  Natural below(const Natural& bound) {
    if (bound < 1) throw Error("Rng::below: bound must be positive");
    if (bound == 1) return 0;
    unsigned k = bit_length(bound - 1);
    for (;;) {
      Natural candidate = bits(k);
      if (candidate < bound) return candidate;
    }
  }

  /// Uniform value in [lo, hi], inclusive.
  Natural in_range(const Natural& lo, const Natural& hi) {
    if (lo > hi) throw Error("Rng::in_range: empty range");
    return lo + below(hi - lo + 1);
  }

 private:
  std::mt19937_64 engine_;
};

/**
 * base^exp mod modulus by square-and-multiply: O(log exp) modular
 * multiplications. exp == 0 yields 1 for any base.
 */
inline Natural mod_pow(const Natural& base, const Natural& exp,
                       const Natural& modulus) {
  if (modulus < 2) throw InvalidModulusError("mod_pow: modulus must be >= 2");
  Natural result = 1;
  Natural b = normalize_mod(base, modulus);
  Natural e = exp;
  while (e > 0) {
    if (boost::multiprecision::bit_test(e, 0)) result = result * b % modulus;
    e >>= 1;
    if (e > 0) b = b * b % modulus;
  }
  return result;
}

struct ExtGcd {
  Natural g;  // gcd(a, b), always positive
  Natural u;  // Bezout coefficient of a
  Natural v;  // Bezout coefficient of b; u*a + v*b == g exactly
};

/// Extended Euclidean algorithm. Inputs may be negative; (0, 0) is an error.
inline ExtGcd ext_gcd(const Natural& a, const Natural& b) {
  if (a == 0 && b == 0)
    throw UndefinedGcdError("ext_gcd: gcd(0, 0) is undefined");
  Natural old_r = a, r = b;
  Natural old_u = 1, u = 0;
  Natural old_v = 0, v = 1;
  while (r != 0) {
    Natural q = old_r / r;
    Natural tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_u - q * u;
    old_u = u;
    u = tmp;
    tmp = old_v - q * v;
    old_v = v;
    v = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_u = -old_u;
    old_v = -old_v;
  }
  return {old_r, old_u, old_v};
}

/**
 * Multiplicative inverse of a modulo n. Fails with NotInvertibleError
 * (carrying the gcd) unless gcd(a, n) == 1.
 */
inline Natural mod_inv(const Natural& a, const Natural& n) {
  if (n < 2) throw InvalidModulusError("mod_inv: modulus must be >= 2");
  ExtGcd e = ext_gcd(normalize_mod(a, n), n);
  if (e.g != 1)
    throw NotInvertibleError("mod_inv: element is not invertible", e.g);
  return normalize_mod(e.u, n);
}

namespace detail {

// Primes below 1000. Trial division against this table is decisive for
// every n < 10^6.
inline constexpr std::uint32_t kSmallPrimes[] = {
    2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,
    47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97,  101, 103, 107,
    109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181,
    191, 193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251, 257, 263,
    269, 271, 277, 281, 283, 293, 307, 311, 313, 317, 331, 337, 347, 349,
    353, 359, 367, 373, 379, 383, 389, 397, 401, 409, 419, 421, 431, 433,
    439, 443, 449, 457, 461, 463, 467, 479, 487, 491, 499, 503, 509, 521,
    523, 541, 547, 557, 563, 569, 571, 577, 587, 593, 599, 601, 607, 613,
    617, 619, 631, 641, 643, 647, 653, 659, 661, 673, 677, 683, 691, 701,
    709, 719, 727, 733, 739, 743, 751, 757, 761, 769, 773, 787, 797, 809,
    811, 821, 823, 827, 829, 839, 853, 857, 859, 863, 877, 881, 883, 887,
    907, 911, 919, 929, 937, 941, 947, 953, 967, 971, 977, 983, 991, 997};

inline std::uint64_t witness_seed(const Natural& n) {
  auto low = (n & std::numeric_limits<std::uint64_t>::max())
                 .convert_to<std::uint64_t>();
  return low * 0x9e3779b97f4a7c15ULL ^ bit_length(n);
}

}  // namespace detail

/**
 * Probabilistic primality: deterministic trial division below 1000 (decisive
 * for n < 10^6), then `rounds` Miller-Rabin witnesses. Witnesses are drawn
 * from a generator seeded by n itself, so the result is a pure function of
 * (n, rounds). False-positive probability is at most 4^-rounds.
 */
inline bool is_probable_prime(const Natural& n, int rounds = 40) {
  if (rounds < 1) throw Error("is_probable_prime: rounds must be >= 1");
  if (n < 2) return false;
  for (std::uint32_t p : detail::kSmallPrimes) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 1000 * 1000) return true;

  Natural d = n - 1;
  unsigned s = 0;
  while (!boost::multiprecision::bit_test(d, 0)) {
    d >>= 1;
    ++s;
  }
  Rng witness_rng(detail::witness_seed(n));
  for (int round = 0; round < rounds; ++round) {
    Natural a = witness_rng.in_range(2, n - 2);
    Natural x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = x * x % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/**
 * Random probable prime of exactly `bits` bits (top bit set, odd), screened
 * with 40 Miller-Rabin rounds. Retries internally until one is found.
 */
inline Natural gen_prime(unsigned bits, Rng& rng) {
  if (bits < 8) throw Error("gen_prime: bits must be >= 8");
  for (;;) {
    Natural candidate = rng.bits(bits);
    boost::multiprecision::bit_set(candidate, bits - 1);
    boost::multiprecision::bit_set(candidate, 0);
    if (is_probable_prime(candidate, 40)) return candidate;
  }
}

/**
 * Square root of a modulo an odd prime p (Tonelli-Shanks), or nullopt when
 * a is a quadratic non-residue. Returns one of the two roots; the other is
 * p minus it.
 */
inline std::optional<Natural> mod_sqrt(const Natural& a, const Natural& p) {
  if (p < 3) throw InvalidModulusError("mod_sqrt: p must be an odd prime");
  Natural value = normalize_mod(a, p);
  if (value == 0) return Natural(0);
  Natural legendre = mod_pow(value, (p - 1) / 2, p);
  if (legendre != 1) return std::nullopt;
  if (p % 4 == 3) return mod_pow(value, (p + 1) / 4, p);

  // General case: write p - 1 = odd * 2^shift and walk the 2-Sylow tower.
  Natural odd = p - 1;
  unsigned shift = 0;
  while (!boost::multiprecision::bit_test(odd, 0)) {
    odd >>= 1;
    ++shift;
  }
  Natural non_residue = 2;
  while (mod_pow(non_residue, (p - 1) / 2, p) != p - 1) ++non_residue;

  Natural m = shift;
  Natural c = mod_pow(non_residue, odd, p);
  Natural t = mod_pow(value, odd, p);
  Natural r = mod_pow(value, (odd + 1) / 2, p);
  while (t != 1) {
    Natural i = 0;
    Natural probe = t;
    while (probe != 1) {
      probe = probe * probe % p;
      ++i;
    }
    Natural b = c;
    for (Natural j = 0; j < m - i - 1; ++j) b = b * b % p;
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return r;
}

/// Prime factorization by trial division up to `limit`.
struct Factorization {
  std::vector<std::pair<Natural, unsigned>> factors;  // (prime, exponent)
  Natural cofactor = 1;  // unfactored remainder; 1 when complete

  bool complete() const { return cofactor == 1; }
};

inline Factorization factor_trial_division(Natural n,
                                           std::uint64_t limit = 100000) {
  if (n < 1) throw Error("factor_trial_division: n must be positive");
  Factorization result;
  auto strip = [&](const Natural& d) {
    unsigned exponent = 0;
    while (n % d == 0) {
      n /= d;
      ++exponent;
    }
    if (exponent > 0) result.factors.emplace_back(d, exponent);
  };
  strip(2);
  for (Natural d = 3; d <= limit && d * d <= n; d += 2) strip(d);
  if (n > 1) {
    Natural bound = limit;
    if (n <= bound * bound) {
      result.factors.emplace_back(n, 1);  // remainder below limit^2 is prime
    } else {
      result.cofactor = n;
    }
  }
  return result;
}

/// All divisors of a completely factored value, ascending.
inline std::vector<Natural> divisors(const Factorization& factorization) {
  if (!factorization.complete())
    throw Error("divisors: factorization is incomplete");
  std::vector<Natural> result{1};
  for (const auto& [prime, exponent] : factorization.factors) {
    std::size_t current = result.size();
    Natural power = 1;
    for (unsigned e = 1; e <= exponent; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < current; ++i)
        result.push_back(result[i] * power);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace ecvsig
