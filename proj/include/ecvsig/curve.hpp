#pragma once

/**
 * @file curve.hpp
 * @brief Affine elliptic-curve arithmetic over a prime field.
 *
 * Curves are given by y^2 = x^3 + ax + b over F_p in affine coordinates,
 * with an explicit point at infinity as the group identity. Addition is the
 * chord-and-tangent law; scalar multiplication is plain left-to-right
 * double-and-add. Point counting and subgroup-order computation are
 * exhaustive and therefore restricted to desk-scale moduli by a hard
 * cutoff; find_group_without_counting() provides larger groups through a
 * curve family of known order.
 */

#include <cstdint>
#include <optional>
#include <utility>

#include "ecvsig/modmath.hpp"

namespace ecvsig {

class SingularCurveError : public Error {
 public:
  using Error::Error;
};

class CompositeModulusError : public Error {
 public:
  using Error::Error;
};

class PointNotOnCurveError : public Error {
 public:
  using Error::Error;
};

class ModulusTooLargeError : public Error {
 public:
  using Error::Error;
};

class OrderHypothesisError : public Error {
 public:
  using Error::Error;
};

class GeneratorSearchError : public Error {
 public:
  using Error::Error;
};

/// y^2 = x^3 + ax + b over F_p, with a, b reduced into [0, p).
struct CurveParams {
  Natural p;
  Natural a;
  Natural b;

  friend bool operator==(const CurveParams&, const CurveParams&) = default;
};

/// A curve point: either the point at infinity or an affine pair with
/// coordinates in [0, p). Default-constructed points are at infinity.
class Point {
 public:
  Point() = default;

  static Point infinity() { return Point(); }

  static Point affine(Natural x, Natural y) {
    Point point;
    point.infinity_ = false;
    point.x_ = std::move(x);
    point.y_ = std::move(y);
    return point;
  }

  bool is_infinity() const { return infinity_; }

  const Natural& x() const {
    if (infinity_) throw Error("Point::x: point at infinity has no x");
    return x_;
  }

  const Natural& y() const {
    if (infinity_) throw Error("Point::y: point at infinity has no y");
    return y_;
  }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  bool infinity_ = true;
  Natural x_ = 0;
  Natural y_ = 0;
};

/// Which branch of the addition law fired, and the chord/tangent slope when
/// one was computed. case_id: 0 identity operand, 1 chord (distinct x),
/// 2 opposite points (x1 == x2, y1 == -y2, y != 0), 3 doubling a point with
/// y == 0, 4 tangent doubling. lambda is present exactly for cases 1 and 4.
struct AdditionTrace {
  int case_id = 0;
  std::optional<Natural> lambda;
};

inline std::uint64_t default_counting_cutoff() { return 1000000; }

/**
 * Check that p is probably prime and > 3 and that the curve is nonsingular
 * (4a^3 + 27b^2 != 0 mod p). Coefficients must already be reduced.
 */
inline void validate_params(const CurveParams& params, int prime_rounds = 40) {
  if (params.p < 5 || !is_probable_prime(params.p, prime_rounds))
    throw CompositeModulusError("curve modulus must be a prime > 3");
  if (params.a < 0 || params.a >= params.p || params.b < 0 ||
      params.b >= params.p)
    throw Error("curve coefficients must lie in [0, p)");
  Natural discriminant_term = normalize_mod(
      4 * params.a * params.a * params.a + 27 * params.b * params.b, params.p);
  if (discriminant_term == 0)
    throw SingularCurveError("curve is singular: 4a^3 + 27b^2 = 0 mod p");
}

/// True for the point at infinity, and for affine points with reduced
/// coordinates satisfying y^2 = x^3 + ax + b mod p.
inline bool is_on_curve(const CurveParams& params, const Point& point) {
  if (point.is_infinity()) return true;
  const Natural& x = point.x();
  const Natural& y = point.y();
  if (x < 0 || x >= params.p || y < 0 || y >= params.p) return false;
  Natural lhs = y * y % params.p;
  Natural rhs = normalize_mod(x * x % params.p * x + params.a * x + params.b,
                              params.p);
  return lhs == rhs;
}

namespace detail {

// Core addition law. Assumes both points are on the curve.
inline Point add_unchecked(const CurveParams& params, const Point& lhs,
                           const Point& rhs, AdditionTrace* trace = nullptr) {
  if (trace != nullptr) *trace = {};
  if (lhs.is_infinity()) return rhs;
  if (rhs.is_infinity()) return lhs;

  const Natural& p = params.p;
  const Natural& x1 = lhs.x();
  const Natural& y1 = lhs.y();
  const Natural& x2 = rhs.x();
  const Natural& y2 = rhs.y();

  Natural lambda;
  int case_id;
  if (x1 != x2) {
    lambda = normalize_mod(y2 - y1, p) * mod_inv(x2 - x1, p) % p;
    case_id = 1;
  } else if ((y1 + y2) % p == 0) {
    if (trace != nullptr) trace->case_id = (y1 == y2) ? 3 : 2;
    return Point::infinity();
  } else if (y1 == y2) {
    lambda = normalize_mod(3 * x1 * x1 + params.a, p) * mod_inv(2 * y1, p) % p;
    case_id = 4;
  } else {
    throw PointNotOnCurveError(
        "points with equal x must have equal or opposite y");
  }

  Natural x3 = normalize_mod(lambda * lambda - x1 - x2, p);
  Natural y3 = normalize_mod(lambda * (x1 - x3) - y1, p);
  if (trace != nullptr) {
    trace->case_id = case_id;
    trace->lambda = lambda;
  }
  return Point::affine(std::move(x3), std::move(y3));
}

inline void require_on_curve(const CurveParams& params, const Point& point,
                             const char* who) {
  if (!is_on_curve(params, point))
    throw PointNotOnCurveError(std::string(who) + ": point is not on curve");
}

}  // namespace detail

/// Group sum plus the trace of which law branch produced it.
inline std::pair<Point, AdditionTrace> add_traced(const CurveParams& params,
                                                  const Point& lhs,
                                                  const Point& rhs) {
  detail::require_on_curve(params, lhs, "add");
  detail::require_on_curve(params, rhs, "add");
  AdditionTrace trace;
  Point sum = detail::add_unchecked(params, lhs, rhs, &trace);
  return {std::move(sum), std::move(trace)};
}

/// Group sum of two on-curve points.
inline Point add(const CurveParams& params, const Point& lhs,
                 const Point& rhs) {
  detail::require_on_curve(params, lhs, "add");
  detail::require_on_curve(params, rhs, "add");
  return detail::add_unchecked(params, lhs, rhs);
}

/// Group inverse: (x, y) -> (x, p - y mod p); infinity maps to itself.
inline Point negate(const CurveParams& params, const Point& point) {
  if (point.is_infinity()) return point;
  return Point::affine(point.x(), normalize_mod(-point.y(), params.p));
}

/**
 * n * P by left-to-right double-and-add. n is used as given; it is not
 * reduced by the point's order. P must be on the curve.
 */
inline Point scalar_mul(const CurveParams& params, const Natural& n,
                        const Point& point) {
  if (n < 0) throw Error("scalar_mul: scalar must be non-negative");
  detail::require_on_curve(params, point, "scalar_mul");
  Point accumulator = Point::infinity();
  if (n == 0 || point.is_infinity()) return accumulator;
  for (unsigned i = bit_length(n); i-- > 0;) {
    accumulator = detail::add_unchecked(params, accumulator, accumulator);
    if (boost::multiprecision::bit_test(n, i))
      accumulator = detail::add_unchecked(params, accumulator, point);
  }
  return accumulator;
}

/**
 * Exhaustive group order: 1 (for infinity) plus, for each x, the number of
 * square roots of x^3 + ax + b determined by Euler's criterion. Refuses
 * moduli above the cutoff.
 */
inline Natural count_points(const CurveParams& params,
                            std::uint64_t cutoff = default_counting_cutoff()) {
  if (params.p > cutoff)
    throw ModulusTooLargeError(
        "count_points: modulus exceeds the exhaustive-counting cutoff");
  const Natural& p = params.p;
  Natural half = (p - 1) / 2;
  Natural count = 1;
  for (Natural x = 0; x < p; ++x) {
    Natural rhs = normalize_mod(x * x % p * x + params.a * x + params.b, p);
    if (rhs == 0) {
      count += 1;
    } else if (mod_pow(rhs, half, p) == 1) {
      count += 2;
    }
  }
  return count;
}

/**
 * Least d > 0 with d * P = infinity, found by testing the divisors of
 * group_order in ascending order. group_order * P = infinity is a
 * precondition and is checked.
 */
inline Natural point_order(const CurveParams& params, const Point& point,
                           const Natural& group_order) {
  if (group_order < 1) throw Error("point_order: group order must be >= 1");
  detail::require_on_curve(params, point, "point_order");
  if (!scalar_mul(params, group_order, point).is_infinity())
    throw OrderHypothesisError(
        "point_order: group_order * P is not the identity");
  if (point.is_infinity()) return 1;
  Factorization factorization = factor_trial_division(group_order);
  if (!factorization.complete())
    throw Error("point_order: cannot factor group order by trial division");
  for (const Natural& d : divisors(factorization)) {
    if (scalar_mul(params, d, point).is_infinity()) return d;
  }
  throw OrderHypothesisError("point_order: no divisor annihilates the point");
}

/// Uniformly random curve point: sample x until x^3 + ax + b is a square,
/// then pick one of its roots at random.
inline Point random_point(const CurveParams& params, Rng& rng) {
  const Natural& p = params.p;
  for (;;) {
    Natural x = rng.below(p);
    Natural rhs = normalize_mod(x * x % p * x + params.a * x + params.b, p);
    std::optional<Natural> root = mod_sqrt(rhs, p);
    if (!root) continue;
    Natural y = *root;
    if (y != 0 && rng.coin()) y = p - y;
    return Point::affine(std::move(x), std::move(y));
  }
}

/// A subgroup of prime order inside the curve group.
struct SubgroupInfo {
  Point generator;
  Natural order;     // prime order of the generator
  Natural cofactor;  // group order divided by `order`
};

/**
 * Find a generator of prime order: count the group exhaustively, take the
 * largest prime factor q of the order, and project random points by the
 * cofactor until the projection is not the identity. Desk scale only.
 */
inline SubgroupInfo find_prime_order_generator(const CurveParams& params,
                                               Rng& rng,
                                               const Natural& min_order = 2) {
  validate_params(params);
  Natural group_order = count_points(params);
  Factorization factorization = factor_trial_division(group_order);
  if (!factorization.complete())
    throw GeneratorSearchError(
        "find_prime_order_generator: cannot factor the group order");
  Natural q = factorization.factors.back().first;
  if (q < min_order)
    throw GeneratorSearchError(
        "find_prime_order_generator: no prime factor above threshold");
  Natural cofactor = group_order / q;
  for (;;) {
    Point candidate = scalar_mul(params, cofactor, random_point(params, rng));
    if (candidate.is_infinity()) continue;
    if (!scalar_mul(params, q, candidate).is_infinity())
      throw OrderHypothesisError(
          "find_prime_order_generator: cofactor projection has wrong order");
    return {std::move(candidate), std::move(q), std::move(cofactor)};
  }
}

/// A curve together with a distinguished prime-order subgroup.
struct GroupSearchResult {
  CurveParams params;
  Point generator;
  Natural order;
  Natural cofactor;
};

/**
 * Build a prime-order group at sizes where exhaustive counting is
 * infeasible. For p = 2 (mod 3) the curve y^2 = x^3 + b has exactly p + 1
 * points (cubing permutes F_p), so the group order is known without
 * counting. p + 1 is factored by trial division; when the remaining
 * cofactor is a probable prime above 2^20 it becomes the subgroup order q,
 * and q * G = infinity is verified directly on the returned generator.
 */
inline GroupSearchResult find_group_without_counting(unsigned bits, Rng& rng) {
  if (bits < 16)
    throw Error("find_group_without_counting: need at least 16 bits");
  const Natural min_subgroup = Natural(1) << 20;
  for (;;) {
    Natural p = gen_prime(bits, rng);
    if (p % 3 != 2) continue;
    Natural group_order = p + 1;
    Factorization factorization = factor_trial_division(group_order);
    const Natural& q = factorization.cofactor;
    if (q <= min_subgroup || !is_probable_prime(q, 40)) continue;
    Natural cofactor = group_order / q;
    CurveParams params{p, 0, rng.in_range(1, p - 1)};
    for (int attempt = 0; attempt < 64; ++attempt) {
      Point candidate =
          scalar_mul(params, cofactor, random_point(params, rng));
      if (candidate.is_infinity()) continue;
      if (!scalar_mul(params, q, candidate).is_infinity()) break;
      return {std::move(params), std::move(candidate), q,
              std::move(cofactor)};
    }
  }
}

}  // namespace ecvsig
