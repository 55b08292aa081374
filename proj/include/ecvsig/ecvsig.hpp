#pragma once

/// Umbrella header for the whole toolkit.

#include "ecvsig/modmath.hpp"     // IWYU pragma: export
#include "ecvsig/curve.hpp"       // IWYU pragma: export
#include "ecvsig/opcount.hpp"     // IWYU pragma: export
#include "ecvsig/hash.hpp"        // IWYU pragma: export
#include "ecvsig/nonce.hpp"       // IWYU pragma: export
#include "ecvsig/dlog_schemes.hpp"  // IWYU pragma: export
#include "ecvsig/ec_scheme.hpp"   // IWYU pragma: export
#include "ecvsig/cryptanalysis.hpp"  // IWYU pragma: export
#include "ecvsig/codec.hpp"       // IWYU pragma: export
