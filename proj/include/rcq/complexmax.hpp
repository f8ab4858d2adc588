#pragma once

#include <array>

#include "rcq/complexmat.hpp"
#include "rcq/witness.hpp"

namespace rcq {

// Bloch-sphere rotations (one per permutation, canonical order) that permute
// the three axis observables up to the permutation sign.
std::array<UMatrix, 6> axis_permutation_rotations();

// Analytic maximal strategy: singlet pairs, axis observables for the outer
// parties, rotated Bell projectors for the middle party. Every signed term
// evaluates to 1/4, totalling 18.
WitnessResult complex_construction();

}  // namespace rcq
