#pragma once

/// @file opcount.hpp
/// Scheme-level operation counting. Counters tick only for the arithmetic a
/// scheme performs at protocol level (scalar multiples of curve points, the
/// multiplications and inversions in its signing equation, hash calls) —
/// never for field arithmetic inside the point formulas, which belongs to
/// the scalar-multiplication unit.

#include <cstdint>
#include <utility>

namespace ecvsig {

struct OpCountReport {
  std::uint64_t ec_scalar_mults = 0;
  std::uint64_t modular_mults = 0;
  std::uint64_t hash_calls = 0;
  std::uint64_t modular_inversions = 0;

  friend bool operator==(const OpCountReport&, const OpCountReport&) = default;
};

namespace opcount {

namespace detail {
inline thread_local OpCountReport* active = nullptr;
}

/// Installs a fresh counter for the current thread; restores the previous
/// one on destruction. One measurement context per thread at a time.
class Scope {
 public:
  Scope() : previous_(detail::active) { detail::active = &counts_; }
  ~Scope() { detail::active = previous_; }
  Scope(const Scope&) = delete;
  Scope& operator=(const Scope&) = delete;

  const OpCountReport& counts() const { return counts_; }

 private:
  OpCountReport counts_;
  OpCountReport* previous_;
};

inline void tick_ec_scalar_mult() {
  if (detail::active != nullptr) ++detail::active->ec_scalar_mults;
}
inline void tick_modular_mult() {
  if (detail::active != nullptr) ++detail::active->modular_mults;
}
inline void tick_hash() {
  if (detail::active != nullptr) ++detail::active->hash_calls;
}
inline void tick_modular_inversion() {
  if (detail::active != nullptr) ++detail::active->modular_inversions;
}

}  // namespace opcount

/// Run a callable under an isolated counter and return what it accrued.
template <typename F>
OpCountReport measure_ops(F&& fn) {
  opcount::Scope scope;
  std::forward<F>(fn)();
  return scope.counts();
}

}  // namespace ecvsig
