#pragma once

#include <string>
#include <vector>

#include "rcq/gates.hpp"

namespace rcq {

struct GateIdentityCheck {
    std::string name;
    double deviation = 0.0;
    bool pass = false;  // deviation < 1e-12
};

// Every stated gate identity: ECR compositions, CNOT rewrites, half-turn
// algebra, the six pre-rotation closed forms (plain and axis-flipped) and the
// native rewrites. `inject_cr_sign_error` flips one factor as a negative
// control; the first check must then fail.
std::vector<GateIdentityCheck> verify_gate_identities(bool inject_cr_sign_error = false);

}  // namespace rcq
