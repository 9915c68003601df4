#pragma once

#include <string>
#include <vector>

#include "stabscope/rng.hpp"
#include "stabscope/state.hpp"

namespace stabscope {

enum class GateKind { H, S, CNOT, T, X, Y, Z };

const char* gate_name(GateKind kind);

struct Gate {
  GateKind kind;
  int target;        // single-qubit target, or CNOT control
  int target2 = -1;  // CNOT target; -1 for single-qubit gates

  friend bool operator==(const Gate&, const Gate&) = default;
};

// Ordered Clifford+T gate sequence with T-count accounting.
struct Circuit {
  int n = 0;
  std::vector<Gate> gates;
  int t_count = 0;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

// Grammar: line 1 "qubits N"; then nonempty lines "GATE q" or "CNOT a b".
// "#" starts a comment; gate names are case-insensitive.
Circuit parse_circuit(const std::string& text);

// Canonical text form; parse_circuit(render_circuit(c)) == c.
std::string render_circuit(const Circuit& circuit);

// Applies the gates left-to-right to |0^n>.
StateVector simulate(const Circuit& circuit);

// Applies the circuit's gates to an existing state of matching size.
StateVector apply_circuit(const Circuit& circuit, const StateVector& state);

// Random generator-gate circuit: `depth` gates drawn from {H, S, CNOT}, with
// exactly t T-gates inserted at random positions.
Circuit random_clifford_t(int n, int t, int depth, Rng& rng);

}  // namespace stabscope
