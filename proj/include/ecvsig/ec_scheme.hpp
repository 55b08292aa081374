#pragma once

/**
 * @file ec_scheme.hpp
 * @brief Elliptic-curve signature scheme with two commitment points.
 *
 * Keys live in a prime-order subgroup <G> of order q on a curve over F_p.
 * The private key is a scalar alpha in [1, q-1]; the public point is
 * B = alpha * G. A signature on a digest m < q is (R, S, t) where R = kG,
 * S = lG for an ephemeral nonce pair (k, l) and
 *
 *     t = s*k + r*l + m*alpha  (mod q),   r = x(R), s = x(S).
 *
 * The verifier accepts iff t*G == s*R + r*S + m*B. Signing needs two scalar
 * multiplications and three modular multiplications — no modular inverse —
 * and verification needs four scalar multiplications.
 *
 * Nonce pairs are one-shot secrets: reusing (k, l) across two digests
 * reveals alpha through the linear structure of t (cryptanalysis.hpp
 * implements the recovery).
 */

#include <cstdint>
#include <span>
#include <utility>

#include "ecvsig/curve.hpp"
#include "ecvsig/hash.hpp"
#include "ecvsig/nonce.hpp"
#include "ecvsig/opcount.hpp"

namespace ecvsig {

class BadGeneratorError : public Error {
 public:
  using Error::Error;
};

class DegenerateNonceError : public Error {
 public:
  using Error::Error;
};

class DigestRangeError : public Error {
 public:
  using Error::Error;
};

struct EcPublicKey {
  CurveParams params;
  Point generator;        // G, of prime order `subgroup_order`
  Natural subgroup_order; // q
  Point public_point;     // B = alpha * G
};

struct EcPrivateKey {
  Natural secret_scalar;  // alpha in [1, q-1]
};

struct EcKeyPair {
  EcPublicKey pub;
  EcPrivateKey priv;
};

/// A digest already reduced into [0, q).
struct MessageDigest {
  Natural value;
};

struct EcSignature {
  Point r_point;     // R = kG
  Point s_point;     // S = lG
  Natural t_scalar;  // in [0, q)
};

/// Every point a correct verifier computes, alongside the verdict.
struct EcVerifyDetail {
  Point t_g;   // t * G
  Point s_r;   // x(S) * R
  Point r_s;   // x(R) * S
  Point m_b;   // m * B
  bool accepted = false;
};

/**
 * Assemble a key pair from a chosen private scalar. Validates the curve,
 * that G is a non-identity point of prime order q, and that the scalar is
 * in [1, q-1].
 */
inline EcKeyPair ec_key_from_private(const CurveParams& params, const Point& g,
                                     const Natural& q, const Natural& secret) {
  validate_params(params);
  if (g.is_infinity() || !is_on_curve(params, g))
    throw BadGeneratorError("ec_key_from_private: generator is not usable");
  if (q < 2 || !is_probable_prime(q, 40))
    throw BadGeneratorError("ec_key_from_private: subgroup order is not prime");
  if (!scalar_mul(params, q, g).is_infinity())
    throw BadGeneratorError(
        "ec_key_from_private: q * G is not the identity");
  if (secret < 1 || secret > q - 1)
    throw Error("ec_key_from_private: private scalar out of range");
  opcount::tick_ec_scalar_mult();
  Point public_point = scalar_mul(params, secret, g);
  return {{params, g, q, std::move(public_point)}, {secret}};
}

inline EcKeyPair ec_keygen(const CurveParams& params, const Point& g,
                           const Natural& q, Rng& rng) {
  return ec_key_from_private(params, g, q, rng.in_range(1, q - 1));
}

/**
 * Sign a digest with an explicit nonce pair. Throws DegenerateNonceError
 * when a nonce is out of [1, q-1] or when a commitment point degenerates
 * (infinity, or an x-coordinate divisible by q) — the caller resamples.
 */
inline EcSignature ec_sign(const MessageDigest& digest,
                           const EcKeyPair& keypair, const NoncePair& nonces) {
  const EcPublicKey& pub = keypair.pub;
  const Natural& q = pub.subgroup_order;
  if (digest.value < 0 || digest.value >= q)
    throw DigestRangeError("ec_sign: digest must lie in [0, q)");
  if (nonces.k < 1 || nonces.k >= q || nonces.l < 1 || nonces.l >= q)
    throw DegenerateNonceError("ec_sign: nonce out of range");

  opcount::tick_ec_scalar_mult();
  Point r_point = scalar_mul(pub.params, nonces.k, pub.generator);
  opcount::tick_ec_scalar_mult();
  Point s_point = scalar_mul(pub.params, nonces.l, pub.generator);
  if (r_point.is_infinity() || s_point.is_infinity())
    throw DegenerateNonceError("ec_sign: commitment point is the identity");
  const Natural& r = r_point.x();
  const Natural& s = s_point.x();
  if (r % q == 0 || s % q == 0)
    throw DegenerateNonceError(
        "ec_sign: commitment x-coordinate vanishes mod q");

  Natural sk = s * nonces.k % q;
  opcount::tick_modular_mult();
  Natural rl = r * nonces.l % q;
  opcount::tick_modular_mult();
  Natural ma = digest.value * keypair.priv.secret_scalar % q;
  opcount::tick_modular_mult();
  Natural t = (sk + rl + ma) % q;
  return {std::move(r_point), std::move(s_point), std::move(t)};
}

/// Sign with fresh random nonces, resampling on degenerate draws.
inline EcSignature ec_sign_random(const MessageDigest& digest,
                                  const EcKeyPair& keypair, Rng& rng) {
  const Natural& q = keypair.pub.subgroup_order;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    NoncePair nonces{rng.in_range(1, q - 1), rng.in_range(1, q - 1)};
    try {
      return ec_sign(digest, keypair, nonces);
    } catch (const DegenerateNonceError&) {
    }
  }
  throw DegenerateNonceError("ec_sign_random: could not find usable nonces");
}

/// Verification with all four computed points exposed. Malformed input of
/// any kind is rejected, never thrown on.
inline EcVerifyDetail ec_verify_detail(const MessageDigest& digest,
                                       const EcSignature& sig,
                                       const EcPublicKey& pub) {
  const Natural& q = pub.subgroup_order;
  if (digest.value < 0 || digest.value >= q) return {};
  if (sig.t_scalar < 0 || sig.t_scalar >= q) return {};
  if (sig.r_point.is_infinity() || sig.s_point.is_infinity()) return {};
  if (!is_on_curve(pub.params, sig.r_point) ||
      !is_on_curve(pub.params, sig.s_point))
    return {};

  const Natural& r = sig.r_point.x();
  const Natural& s = sig.s_point.x();
  EcVerifyDetail detail;
  opcount::tick_ec_scalar_mult();
  detail.t_g = scalar_mul(pub.params, sig.t_scalar, pub.generator);
  opcount::tick_ec_scalar_mult();
  detail.s_r = scalar_mul(pub.params, s, sig.r_point);
  opcount::tick_ec_scalar_mult();
  detail.r_s = scalar_mul(pub.params, r, sig.s_point);
  opcount::tick_ec_scalar_mult();
  detail.m_b = scalar_mul(pub.params, digest.value, pub.public_point);
  Point rhs = add(pub.params, add(pub.params, detail.s_r, detail.r_s),
                  detail.m_b);
  detail.accepted = detail.t_g == rhs;
  return detail;
}

inline bool ec_verify(const MessageDigest& digest, const EcSignature& sig,
                      const EcPublicKey& pub) {
  return ec_verify_detail(digest, sig, pub).accepted;
}

/// Hash a message and reduce the digest into [0, q).
inline MessageDigest digest_message(std::span<const std::uint8_t> message,
                                    const Natural& q,
                                    HashAlgo algo = HashAlgo::sha256) {
  if (q < 2) throw InvalidModulusError("digest_message: q must be >= 2");
  opcount::tick_hash();
  std::vector<std::uint8_t> digest = hash_bytes(algo, message);
  return {bytes_to_natural(digest) % q};
}

/// Accept a raw digest value directly, reducing it mod q. No hashing.
inline MessageDigest digest_raw(const Natural& m, const Natural& q) {
  if (q < 2) throw InvalidModulusError("digest_raw: q must be >= 2");
  return {normalize_mod(m, q)};
}

inline EcSignature sign_message(std::span<const std::uint8_t> message,
                                const EcKeyPair& keypair,
                                const NoncePair& nonces,
                                HashAlgo algo = HashAlgo::sha256) {
  return ec_sign(digest_message(message, keypair.pub.subgroup_order, algo),
                 keypair, nonces);
}

inline EcSignature sign_message(std::span<const std::uint8_t> message,
                                const EcKeyPair& keypair, Rng& rng,
                                HashAlgo algo = HashAlgo::sha256) {
  return ec_sign_random(
      digest_message(message, keypair.pub.subgroup_order, algo), keypair, rng);
}

inline bool verify_message(std::span<const std::uint8_t> message,
                           const EcSignature& sig, const EcPublicKey& pub,
                           HashAlgo algo = HashAlgo::sha256) {
  return ec_verify(digest_message(message, pub.subgroup_order, algo), sig,
                   pub);
}

}  // namespace ecvsig
