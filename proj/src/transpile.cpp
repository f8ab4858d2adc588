#include "rcq/transpile.hpp"

#include <stdexcept>

namespace rcq {

namespace {

// Remap a decomposition's local slots (A -> first target, P -> second) onto
// the gate's actual wires.
void emit_remapped(Circuit& out, const GateSequence& seq, const std::vector<Wire>& targets) {
    for (GateOp op : seq) {
        for (Wire& w : op.targets) {
            if (w == Wire::A)
                w = targets[0];
            else if (w == Wire::P)
                w = targets.at(1);
            else
                throw std::logic_error("decomposition uses unexpected local slot");
        }
        out.push(std::move(op));
    }
}

}  // namespace

Circuit to_native(const Circuit& circuit) {
    Circuit out;
    for (const GateOp& op : circuit.gates) {
        if (op.kind == GateKind::I) continue;
        if (is_native_kind(op.kind)) {
            out.push(op);
            continue;
        }
        switch (op.kind) {
            case GateKind::Z:
            case GateKind::Y:
            case GateKind::H:
            case GateKind::YPlus:
            case GateKind::YMinus:
            case GateKind::CnotDown:
            case GateKind::CnotUp:
            case GateKind::EcrUp:
                emit_remapped(out, decompose(op.kind), op.targets);
                break;
            case GateKind::Custom:
                throw std::invalid_argument("cannot transpile a custom unitary to the native basis");
            default:
                throw std::invalid_argument(std::string("no native rewriting for gate kind ") +
                                            gate_kind_name(op.kind));
        }
    }
    return out;
}

}  // namespace rcq
