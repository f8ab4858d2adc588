#pragma once

#include "rcq/simulate.hpp"

namespace rcq {

// Rewrites every gate into the native basis {X, X+, Ztheta, ECRv}. Outcome
// distributions are preserved exactly (up to global phase per gate identity).
// Throws on kinds without a known decomposition (Custom, CR+-).
Circuit to_native(const Circuit& circuit);

}  // namespace rcq
