#include "stabscope/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

#include "stabscope/errors.hpp"
#include "stabscope/limits.hpp"

namespace stabscope {
namespace {

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return s;
}

bool parse_int(const std::string& token, int& out) {
  try {
    size_t pos = 0;
    int v = std::stoi(token, &pos);
    if (pos != token.size()) return false;
    out = v;
    return true;
  } catch (...) {
    return false;
  }
}

void check_target(int q, int n, int line) {
  if (q < 0 || q >= n) {
    throw ParseError(line, "qubit index " + std::to_string(q) +
                               " out of range for " + std::to_string(n) +
                               " qubits");
  }
}

void apply_single(std::vector<Amplitude>& amp, int n, GateKind kind, int target) {
  const std::uint64_t stride = std::uint64_t{1} << target;
  const std::uint64_t dim = std::uint64_t{1} << n;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const Amplitude phase_s{0.0, 1.0};
  const Amplitude phase_t = std::polar(1.0, std::numbers::pi / 4.0);

  for (std::uint64_t base = 0; base < dim; base += 2 * stride) {
    for (std::uint64_t off = 0; off < stride; ++off) {
      std::uint64_t i0 = base + off;
      std::uint64_t i1 = i0 + stride;
      Amplitude a = amp[i0];
      Amplitude b = amp[i1];
      switch (kind) {
        case GateKind::H:
          amp[i0] = (a + b) * inv_sqrt2;
          amp[i1] = (a - b) * inv_sqrt2;
          break;
        case GateKind::S:
          amp[i1] = phase_s * b;
          break;
        case GateKind::T:
          amp[i1] = phase_t * b;
          break;
        case GateKind::X:
          amp[i0] = b;
          amp[i1] = a;
          break;
        case GateKind::Y:
          amp[i0] = Amplitude{0.0, -1.0} * b;
          amp[i1] = Amplitude{0.0, 1.0} * a;
          break;
        case GateKind::Z:
          amp[i1] = -b;
          break;
        case GateKind::CNOT:
          break;  // handled separately
      }
    }
  }
}

void apply_cnot(std::vector<Amplitude>& amp, int control, int target) {
  const std::uint64_t cbit = std::uint64_t{1} << control;
  const std::uint64_t tbit = std::uint64_t{1} << target;
  for (std::uint64_t i = 0; i < amp.size(); ++i) {
    if ((i & cbit) && !(i & tbit)) {
      std::swap(amp[i], amp[i | tbit]);
    }
  }
}

}  // namespace

const char* gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::CNOT: return "CNOT";
    case GateKind::T: return "T";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
  }
  return "?";
}

Circuit parse_circuit(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  Circuit circuit;
  bool have_header = false;

  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    std::istringstream tokens(raw);
    std::vector<std::string> parts;
    for (std::string tok; tokens >> tok;) parts.push_back(tok);
    if (parts.empty()) continue;

    if (!have_header) {
      if (upper(parts[0]) != "QUBITS" || parts.size() != 2) {
        throw ParseError(line_no, "expected header \"qubits N\"");
      }
      int n = 0;
      if (!parse_int(parts[1], n) || n < 1) {
        throw ParseError(line_no, "invalid qubit count \"" + parts[1] + "\"");
      }
      circuit.n = n;
      have_header = true;
      continue;
    }

    std::string name = upper(parts[0]);
    GateKind kind;
    if (name == "H") kind = GateKind::H;
    else if (name == "S") kind = GateKind::S;
    else if (name == "CNOT") kind = GateKind::CNOT;
    else if (name == "T") kind = GateKind::T;
    else if (name == "X") kind = GateKind::X;
    else if (name == "Y") kind = GateKind::Y;
    else if (name == "Z") kind = GateKind::Z;
    else throw ParseError(line_no, "unknown gate \"" + parts[0] + "\"");

    if (kind == GateKind::CNOT) {
      if (parts.size() != 3) {
        throw ParseError(line_no, "CNOT takes exactly two qubit indices");
      }
      int a = 0, b = 0;
      if (!parse_int(parts[1], a) || !parse_int(parts[2], b)) {
        throw ParseError(line_no, "invalid qubit index");
      }
      check_target(a, circuit.n, line_no);
      check_target(b, circuit.n, line_no);
      if (a == b) throw ParseError(line_no, "duplicate CNOT targets");
      circuit.gates.push_back(Gate{kind, a, b});
    } else {
      if (parts.size() != 2) {
        throw ParseError(line_no, std::string(gate_name(kind)) +
                                      " takes exactly one qubit index");
      }
      int q = 0;
      if (!parse_int(parts[1], q)) {
        throw ParseError(line_no, "invalid qubit index");
      }
      check_target(q, circuit.n, line_no);
      circuit.gates.push_back(Gate{kind, q});
      if (kind == GateKind::T) ++circuit.t_count;
    }
  }

  if (!have_header) throw ParseError(1, "missing header \"qubits N\"");
  return circuit;
}

std::string render_circuit(const Circuit& circuit) {
  std::ostringstream out;
  out << "qubits " << circuit.n << "\n";
  for (const auto& g : circuit.gates) {
    out << gate_name(g.kind) << " " << g.target;
    if (g.kind == GateKind::CNOT) out << " " << g.target2;
    out << "\n";
  }
  return out.str();
}

StateVector apply_circuit(const Circuit& circuit, const StateVector& state) {
  if (circuit.n != state.qubits()) {
    throw DimensionError("apply_circuit: qubit counts differ");
  }
  std::vector<Amplitude> amp = state.amplitudes();
  for (const auto& g : circuit.gates) {
    if (g.kind == GateKind::CNOT) {
      apply_cnot(amp, g.target, g.target2);
    } else {
      apply_single(amp, circuit.n, g.kind, g.target);
    }
  }
  return StateVector::from_amplitudes(circuit.n, std::move(amp), 1e-9);
}

StateVector simulate(const Circuit& circuit) {
  return apply_circuit(circuit, StateVector::computational_basis(circuit.n, 0));
}

Circuit random_clifford_t(int n, int t, int depth, Rng& rng) {
  if (n < 1) throw DimensionError("random_clifford_t: n must be >= 1");
  if (t < 0) throw DimensionError("random_clifford_t: t must be >= 0");

  Circuit circuit;
  circuit.n = n;
  for (int i = 0; i < depth; ++i) {
    int pick = static_cast<int>(rng.uniform_below(n > 1 ? 3 : 2));
    if (pick == 0) {
      circuit.gates.push_back(Gate{GateKind::H, static_cast<int>(rng.uniform_below(n))});
    } else if (pick == 1) {
      circuit.gates.push_back(Gate{GateKind::S, static_cast<int>(rng.uniform_below(n))});
    } else {
      int a = static_cast<int>(rng.uniform_below(n));
      int b = static_cast<int>(rng.uniform_below(n - 1));
      if (b >= a) ++b;
      circuit.gates.push_back(Gate{GateKind::CNOT, a, b});
    }
  }
  for (int i = 0; i < t; ++i) {
    auto pos = circuit.gates.begin() +
               static_cast<std::ptrdiff_t>(rng.uniform_below(circuit.gates.size() + 1));
    circuit.gates.insert(pos, Gate{GateKind::T, static_cast<int>(rng.uniform_below(n))});
  }
  circuit.t_count = t;
  return circuit;
}

}  // namespace stabscope
