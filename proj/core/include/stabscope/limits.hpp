#pragma once

namespace stabscope::limits {

// Largest qubit count for which a dense 2^n state vector may be built.
// Default 14; STABSCOPE_MEM_CAP_MB overrides (16 bytes per amplitude).
int max_state_qubits();

// Largest qubit count for which a dense 4^n distribution table may be built.
// Default 11; STABSCOPE_MEM_CAP_MB overrides (8 bytes per entry).
int max_table_qubits();

}  // namespace stabscope::limits
