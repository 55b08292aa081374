#pragma once

#include "ecvsig/modmath.hpp"

namespace ecvsig {

/// Per-signature ephemeral secret pair. Never persist one and never reuse
/// one across two messages: reuse leaks the private key (see
/// cryptanalysis.hpp).
struct NoncePair {
  Natural k;
  Natural l;
};

}  // namespace ecvsig
