#pragma once

/**
 * @file cryptanalysis.hpp
 * @brief Discrete-log oracles and key-recovery attacks for the schemes in
 * this library, all at desk scale.
 *
 * The centerpiece is nonce_reuse_recover_alpha: two signatures made with
 * the same nonce pair (k, l) on digests m1 != m2 satisfy
 *
 *     t1 - t2 = (m1 - m2) * alpha  (mod q),
 *
 * so the private key falls out of one modular division. The analogous
 * relation for the (Z/pZ)* variant scheme recovers the nonce component l
 * (but not the full key — one equation, and x, k stay underdetermined).
 *
 * attack_system_rank quantifies why distinct-nonce signatures do NOT leak:
 * z signatures give z equations in 2z + 1 unknowns, a solution space of
 * dimension z + 1.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ecvsig/dlog_schemes.hpp"
#include "ecvsig/ec_scheme.hpp"

namespace ecvsig {

class OrderTooLargeError : public Error {
 public:
  using Error::Error;
};

class AttackPreconditionError : public Error {
 public:
  using Error::Error;
};

/// A discrete-log problem: find n with n * base = target in <base>.
struct DlogInstance {
  CurveParams params;
  Point base;
  Point target;
  Natural order;  // order of <base>: order * base == infinity
};

inline std::uint64_t default_dlog_cutoff() { return 1000000; }

/**
 * Least n >= 0 with n * base = target, by iterated addition over the whole
 * subgroup. nullopt when the target lies outside <base>.
 */
inline std::optional<Natural> brute_force_ecdlp(
    const DlogInstance& instance,
    std::uint64_t cutoff = default_dlog_cutoff()) {
  if (instance.order > cutoff)
    throw OrderTooLargeError(
        "brute_force_ecdlp: order exceeds the exhaustive cutoff");
  detail::require_on_curve(instance.params, instance.base,
                           "brute_force_ecdlp");
  detail::require_on_curve(instance.params, instance.target,
                           "brute_force_ecdlp");
  Point walker = Point::infinity();
  for (Natural n = 0; n < instance.order; ++n) {
    if (walker == instance.target) return n;
    walker = detail::add_unchecked(instance.params, walker, instance.base);
  }
  return std::nullopt;
}

/**
 * Baby-step giant-step: same contract as brute_force_ecdlp in O(sqrt(order))
 * group operations and memory. Handles orders up to 2^40.
 */
inline std::optional<Natural> bsgs_ecdlp(const DlogInstance& instance) {
  if (instance.order > (Natural(1) << 40))
    throw OrderTooLargeError("bsgs_ecdlp: order exceeds 2^40");
  if (instance.order < 1)
    throw Error("bsgs_ecdlp: order must be positive");
  detail::require_on_curve(instance.params, instance.base, "bsgs_ecdlp");
  detail::require_on_curve(instance.params, instance.target, "bsgs_ecdlp");

  const CurveParams& params = instance.params;
  Natural step = boost::multiprecision::sqrt(instance.order);
  if (step * step < instance.order) ++step;

  // Baby table: point -> least j with j * base = point. Infinity is keyed
  // by the out-of-range coordinate pair (p, p).
  auto key_of = [&](const Point& point) {
    return point.is_infinity() ? std::make_pair(params.p, params.p)
                               : std::make_pair(point.x(), point.y());
  };
  std::map<std::pair<Natural, Natural>, Natural> baby;
  Point walker = Point::infinity();
  for (Natural j = 0; j < step; ++j) {
    baby.emplace(key_of(walker), j);
    walker = detail::add_unchecked(params, walker, instance.base);
  }

  Point giant_stride =
      negate(params, scalar_mul(params, step, instance.base));
  Point probe = instance.target;
  for (Natural i = 0; i < step; ++i) {
    auto hit = baby.find(key_of(probe));
    if (hit != baby.end()) {
      Natural n = i * step + hit->second;
      if (n < instance.order) return n;
    }
    probe = detail::add_unchecked(params, probe, giant_stride);
  }
  return std::nullopt;
}

/**
 * Recover the private key from two signatures that share a nonce pair.
 * Requires identical commitment points and digests that differ by a unit
 * mod q. The caller should confirm the result via alpha * G == B.
 */
inline Natural nonce_reuse_recover_alpha(const EcSignature& sig1,
                                         const MessageDigest& m1,
                                         const EcSignature& sig2,
                                         const MessageDigest& m2,
                                         const Natural& q) {
  if (sig1.r_point != sig2.r_point || sig1.s_point != sig2.s_point)
    throw AttackPreconditionError(
        "nonce_reuse_recover_alpha: commitment points differ (nonces not "
        "reused)");
  Natural digest_delta = normalize_mod(m1.value - m2.value, q);
  if (digest_delta == 0)
    throw AttackPreconditionError(
        "nonce_reuse_recover_alpha: digests are equal mod q");
  Natural t_delta = normalize_mod(sig1.t_scalar - sig2.t_scalar, q);
  return t_delta * mod_inv(digest_delta, q) % q;
}

/**
 * Solve l * (m1 - m2) = t1 - t2 (mod p-1) for the variant scheme under
 * nonce reuse. Returns every solution, ascending — gcd(m1 - m2, p-1)
 * candidates. The remaining secrets x and k stay underdetermined.
 */
inline std::vector<Natural> variant_nonce_reuse_recover_l(
    const VariantSignature& sig1, const Natural& m1,
    const VariantSignature& sig2, const Natural& m2, const Natural& p) {
  if (sig1.r != sig2.r || sig1.s != sig2.s)
    throw AttackPreconditionError(
        "variant_nonce_reuse_recover_l: commitments differ (nonces not "
        "reused)");
  Natural modulus = p - 1;
  Natural digest_delta = normalize_mod(m1 - m2, modulus);
  if (digest_delta == 0)
    throw AttackPreconditionError(
        "variant_nonce_reuse_recover_l: digests are equal mod p-1");
  Natural t_delta = normalize_mod(sig1.t - sig2.t, modulus);
  Natural g = boost::multiprecision::gcd(digest_delta, modulus);
  if (t_delta % g != 0) return {};
  Natural reduced_modulus = modulus / g;
  Natural base_solution =
      t_delta / g * mod_inv(digest_delta / g, reduced_modulus) %
      reduced_modulus;
  std::vector<Natural> candidates;
  for (Natural i = 0; i < g; ++i)
    candidates.push_back(base_solution + i * reduced_modulus);
  return candidates;
}

/// Shape of the linear system an adversary gets from a batch of signatures.
struct SystemShapeReport {
  std::size_t equations = 0;
  std::size_t unknowns = 0;            // nominal: 2z + 1
  std::size_t effective_unknowns = 0;  // collapsed when nonce pairs repeat
  std::size_t rank = 0;
  std::size_t solution_space_dim = 0;
  bool underdetermined = false;
  // index pairs of signatures sharing a nonce pair
  std::vector<std::pair<std::size_t, std::size_t>> repeated_nonce_pairs;
  // private key, when a repeated pair with invertible digest delta exists
  std::optional<Natural> reuse_recovered_key;
};

namespace detail {

inline std::size_t matrix_rank_mod(std::vector<std::vector<Natural>> matrix,
                                   const Natural& q) {
  std::size_t rank = 0;
  if (matrix.empty()) return 0;
  std::size_t rows = matrix.size();
  std::size_t cols = matrix[0].size();
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && matrix[pivot][col] % q == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(matrix[rank], matrix[pivot]);
    Natural inv = mod_inv(matrix[rank][col], q);
    for (std::size_t c = col; c < cols; ++c)
      matrix[rank][c] = matrix[rank][c] * inv % q;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || matrix[r][col] % q == 0) continue;
      Natural factor = matrix[r][col] % q;
      for (std::size_t c = col; c < cols; ++c)
        matrix[r][c] =
            normalize_mod(matrix[r][c] - factor * matrix[rank][c], q);
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

/**
 * Analyze the system t_i = s_i*k_i + r_i*l_i + m_i*alpha (mod q) induced by
 * a batch of signatures: its nominal and effective unknown counts, its rank
 * over F_q and the dimension of its solution space. Repeated nonce pairs
 * are detected and, when a digest delta is invertible, exploited.
 */
inline SystemShapeReport attack_system_rank(
    const std::vector<std::pair<EcSignature, MessageDigest>>& signatures,
    const Natural& q) {
  if (signatures.empty())
    throw Error("attack_system_rank: need at least one signature");

  SystemShapeReport report;
  std::size_t z = signatures.size();
  report.equations = z;
  report.unknowns = 2 * z + 1;

  // Column assignment: one (k, l) column pair per distinct commitment pair.
  std::vector<std::pair<Point, Point>> distinct_pairs;
  std::vector<std::size_t> pair_index(z);
  for (std::size_t i = 0; i < z; ++i) {
    const auto& sig = signatures[i].first;
    std::pair<Point, Point> key{sig.r_point, sig.s_point};
    std::size_t found = distinct_pairs.size();
    for (std::size_t d = 0; d < distinct_pairs.size(); ++d) {
      if (distinct_pairs[d] == key) {
        found = d;
        break;
      }
    }
    if (found == distinct_pairs.size()) {
      distinct_pairs.push_back(key);
    } else {
      for (std::size_t j = 0; j < i; ++j) {
        if (pair_index[j] == found)
          report.repeated_nonce_pairs.emplace_back(j, i);
      }
    }
    pair_index[i] = found;
  }
  report.effective_unknowns = 2 * distinct_pairs.size() + 1;

  std::vector<std::vector<Natural>> matrix(
      z, std::vector<Natural>(report.effective_unknowns, 0));
  for (std::size_t i = 0; i < z; ++i) {
    const auto& [sig, digest] = signatures[i];
    matrix[i][2 * pair_index[i]] = normalize_mod(sig.s_point.x(), q);
    matrix[i][2 * pair_index[i] + 1] = normalize_mod(sig.r_point.x(), q);
    matrix[i][report.effective_unknowns - 1] = normalize_mod(digest.value, q);
  }
  report.rank = detail::matrix_rank_mod(std::move(matrix), q);
  report.solution_space_dim = report.effective_unknowns - report.rank;
  report.underdetermined = report.solution_space_dim > 0;

  for (const auto& [i, j] : report.repeated_nonce_pairs) {
    try {
      report.reuse_recovered_key = nonce_reuse_recover_alpha(
          signatures[i].first, signatures[i].second, signatures[j].first,
          signatures[j].second, q);
      break;
    } catch (const Error&) {
    }
  }
  return report;
}

}  // namespace ecvsig
