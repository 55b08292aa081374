#pragma once

/**
 * @file dlog_schemes.hpp
 * @brief Signature schemes over the multiplicative group (Z/pZ)*.
 *
 * Two schemes share the key setup y = alpha^x mod p for a primitive root
 * alpha:
 *
 *  - classic:  signature (r, s) with r = alpha^k and
 *              s = (m - x*r) / k mod (p-1); verified by
 *              alpha^m == y^r * r^s (mod p). Requires gcd(k, p-1) = 1.
 *  - variant:  signature (r, s, t) with r = alpha^k, s = alpha^l and
 *              t = r*x + k*s + l*m mod (p-1); verified by
 *              alpha^t == y^r * r^s * s^m (mod p). Needs no modular
 *              inverse, so the nonces are unconstrained in (0, p).
 *
 * Message digests m are Naturals; the signing equations reduce them mod
 * p - 1. Verification never throws: malformed input is rejected.
 */

#include <optional>
#include <utility>
#include <vector>

#include "ecvsig/modmath.hpp"
#include "ecvsig/nonce.hpp"
#include "ecvsig/opcount.hpp"

namespace ecvsig {

class NonceNotInvertibleError : public Error {
 public:
  NonceNotInvertibleError(std::string message, Natural gcd)
      : Error(std::move(message)), gcd_(std::move(gcd)) {}
  const Natural& gcd() const { return gcd_; }

 private:
  Natural gcd_;
};

class PrimitiveRootError : public Error {
 public:
  using Error::Error;
};

struct DlPublicKey {
  Natural p;      // prime modulus
  Natural alpha;  // primitive root of (Z/pZ)*
  Natural y;      // alpha^x mod p
};

struct DlPrivateKey {
  Natural x;  // in [1, p-1]
};

struct DlKeyPair {
  DlPublicKey pub;
  DlPrivateKey priv;
  // False when p-1 resisted trial-division factoring and the
  // primitive-root property of alpha could not be confirmed.
  bool primitive_root_checked = false;
};

struct ClassicSignature {
  Natural r;  // in (0, p)
  Natural s;  // mod p-1
};

struct VariantSignature {
  Natural r;  // in (0, p)
  Natural s;  // in (0, p)
  Natural t;  // mod p-1
};

namespace detail {

// Best-effort factorization of n for validation purposes: trial division,
// plus the cofactor itself when it is probably prime.
inline std::optional<std::vector<Natural>> distinct_prime_factors(
    const Natural& n) {
  Factorization factorization = factor_trial_division(n);
  std::vector<Natural> primes;
  for (const auto& [prime, exponent] : factorization.factors)
    primes.push_back(prime);
  if (!factorization.complete()) {
    if (!is_probable_prime(factorization.cofactor, 40)) return std::nullopt;
    primes.push_back(factorization.cofactor);
  }
  return primes;
}

inline bool is_primitive_root(const Natural& alpha, const Natural& p,
                              const std::vector<Natural>& factors_of_p_minus_1) {
  for (const Natural& q : factors_of_p_minus_1) {
    if (mod_pow(alpha, (p - 1) / q, p) == 1) return false;
  }
  return true;
}

}  // namespace detail

/**
 * Assemble a key pair from a chosen private exponent. alpha is validated as
 * a primitive root whenever p - 1 can be factored; otherwise the check is
 * skipped and the pair is flagged unchecked.
 */
inline DlKeyPair dl_key_from_private(const Natural& p, const Natural& alpha,
                                     const Natural& x) {
  if (p < 3 || !is_probable_prime(p, 40))
    throw Error("dl_key_from_private: p must be an odd prime");
  if (alpha < 2 || alpha >= p)
    throw PrimitiveRootError("dl_key_from_private: alpha out of range");
  if (x < 1 || x > p - 1)
    throw Error("dl_key_from_private: private exponent out of range");
  bool checked = false;
  if (auto factors = detail::distinct_prime_factors(p - 1)) {
    if (!detail::is_primitive_root(alpha, p, *factors))
      throw PrimitiveRootError(
          "dl_key_from_private: alpha is not a primitive root mod p");
    checked = true;
  }
  Natural y = mod_pow(alpha, x, p);
  return {{p, alpha, std::move(y)}, {x}, checked};
}

inline DlKeyPair dl_keygen(const Natural& p, const Natural& alpha, Rng& rng) {
  return dl_key_from_private(p, alpha, rng.in_range(1, p - 1));
}

/// Sign a digest with nonce k; gcd(k, p-1) must be 1.
inline ClassicSignature classic_sign(const Natural& m, const DlPrivateKey& priv,
                                     const DlPublicKey& pub, const Natural& k) {
  const Natural& p = pub.p;
  Natural group_exponent = p - 1;
  if (k < 1 || k >= p) throw Error("classic_sign: nonce out of range");
  Natural g = boost::multiprecision::gcd(k, group_exponent);
  if (g != 1)
    throw NonceNotInvertibleError(
        "classic_sign: nonce is not invertible mod p-1", g);
  Natural r = mod_pow(pub.alpha, k, p);
  Natural k_inv = mod_inv(k, group_exponent);
  opcount::tick_modular_inversion();
  Natural xr = priv.x * r % group_exponent;
  opcount::tick_modular_mult();
  Natural s = normalize_mod(m - xr, group_exponent) * k_inv % group_exponent;
  opcount::tick_modular_mult();
  return {std::move(r), std::move(s)};
}

/// Accept iff 0 < r < p and alpha^m == y^r * r^s (mod p).
inline bool classic_verify(const Natural& m, const ClassicSignature& sig,
                           const DlPublicKey& pub) {
  const Natural& p = pub.p;
  if (sig.r <= 0 || sig.r >= p) return false;
  if (sig.s < 0 || m < 0) return false;
  Natural lhs = mod_pow(pub.alpha, m, p);
  Natural rhs = mod_pow(pub.y, sig.r, p) * mod_pow(sig.r, sig.s, p) % p;
  return lhs == rhs;
}

/// Sign a digest with nonce pair (k, l). No invertibility requirement.
inline VariantSignature variant_sign(const Natural& m, const DlPrivateKey& priv,
                                     const DlPublicKey& pub,
                                     const NoncePair& nonces) {
  const Natural& p = pub.p;
  Natural group_exponent = p - 1;
  if (nonces.k < 1 || nonces.k >= p || nonces.l < 1 || nonces.l >= p)
    throw Error("variant_sign: nonce out of range");
  Natural r = mod_pow(pub.alpha, nonces.k, p);
  Natural s = mod_pow(pub.alpha, nonces.l, p);
  Natural rx = r * priv.x % group_exponent;
  opcount::tick_modular_mult();
  Natural ks = nonces.k * s % group_exponent;
  opcount::tick_modular_mult();
  Natural lm = nonces.l * normalize_mod(m, group_exponent) % group_exponent;
  opcount::tick_modular_mult();
  Natural t = (rx + ks + lm) % group_exponent;
  return {std::move(r), std::move(s), std::move(t)};
}

struct VariantCheck {
  Natural lhs;  // alpha^t mod p
  Natural rhs;  // y^r * r^s * s^m mod p
  bool accepted = false;
};

/// Verification with both sides of the congruence exposed.
inline VariantCheck variant_verify_detail(const Natural& m,
                                          const VariantSignature& sig,
                                          const DlPublicKey& pub) {
  const Natural& p = pub.p;
  if (sig.r <= 0 || sig.r >= p || sig.s <= 0 || sig.s >= p || sig.t < 0 ||
      m < 0)
    return {};
  Natural lhs = mod_pow(pub.alpha, sig.t, p);
  Natural rhs = mod_pow(pub.y, sig.r, p) * mod_pow(sig.r, sig.s, p) % p *
                mod_pow(sig.s, m, p) % p;
  bool accepted = lhs == rhs;
  return {std::move(lhs), std::move(rhs), accepted};
}

/// Accept iff 0 < r, s < p and alpha^t == y^r * r^s * s^m (mod p).
inline bool variant_verify(const Natural& m, const VariantSignature& sig,
                           const DlPublicKey& pub) {
  return variant_verify_detail(m, sig, pub).accepted;
}

}  // namespace ecvsig
