// Copyright 2026 The itree authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// The (N+1)-qubit tree-evolution circuit, its standard-gate decomposition,
// dense statevector simulation and OpenQASM 2.0 export.
//
// Qubit layout: qubit 0 carries the spin, qubit n (1..N) the step-n path
// bit. Statevector basis indices use the same layout (bit 0 = spin), so a
// basis index maps to an outcome key as path_key = index >> 1,
// spin = index & 1. All gates are real orthogonal matrices; the statevector
// is a plain real vector.
//
// RY(phi) = [[cos(phi/2), -sin(phi/2)], [sin(phi/2), cos(phi/2)]].
//
// The abstract circuit is: RY(2*lambda) on the spin qubit; per step n a pair
// of controlled-RY gates on path qubit n (one fires on spin 0 with the
// down-tree angle, one on spin 1 with the up-tree angle); RY(-2*lambda) on
// the spin qubit. A controlled rotation with angle pi - 2*theta_s places the
// left amplitude cos(theta_s) on |1> and the right amplitude sin(theta_s) on
// |0>, matching the event encoding 1 = left.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "itree/distribution.hpp"
#include "itree/event.hpp"
#include "itree/model.hpp"

namespace itree {

/// Dense unitary reconstruction caps at 2^(N+1) = 128.
inline constexpr int kMaxUnitarySteps = 6;
/// Statevector array of 2^(N+1) doubles.
inline constexpr int kMaxStatevectorSteps = 24;

struct Gate {
  enum class Kind { kRy, kX, kCx, kCry };
  Kind kind = Kind::kRy;
  double angle = 0.0;     // kRy, kCry
  int target = 0;
  int control = -1;       // kCx, kCry
  int control_value = 1;  // kCry fires when the control qubit equals this

  static Gate ry(double angle, int target) { return {Kind::kRy, angle, target, -1, 1}; }
  static Gate x(int target) { return {Kind::kX, 0.0, target, -1, 1}; }
  static Gate cx(int control, int target) { return {Kind::kCx, 0.0, target, control, 1}; }
  static Gate cry(double angle, int control, int control_value, int target) {
    return {Kind::kCry, angle, target, control, control_value};
  }
};

struct Circuit {
  int n_qubits = 0;
  std::vector<Gate> gates;
};

/// Abstract circuit of 2 + 2N gates for a config.
Circuit build_circuit(const ModelConfig& config);

/// Rewrites every controlled rotation into {RY, X, CX}: CRY(phi) becomes
/// RY(phi/4) . CX . RY(-phi/2) . CX . RY(phi/4) on the target, and a
/// control-on-0 gate is X-conjugated on the control. Output size is exactly
/// 2 + 12N for circuits produced by build_circuit.
Circuit decompose(const Circuit& circuit);

/// Dense 2^(N+1) x 2^(N+1) product of the gate matrices, in order.
/// Throws TooLargeError above kMaxUnitarySteps path qubits.
Eigen::MatrixXd circuit_unitary(const Circuit& circuit);

/// Applies one gate to a statevector in place.
void apply_gate(Eigen::VectorXd& state, const Gate& gate);

/// Runs the circuit on |0...0> with the spin register set to
/// (a, sqrt(1 - a^2)) and returns the squared amplitudes as an outcome
/// table. Throws TooLargeError above kMaxStatevectorSteps.
OutcomeDistribution statevector_run(const ModelConfig& config);

/// Draws events from the exact statevector table by inverse CDF; event k
/// consumes one draw from its own (seed, k) substream, so the stream is
/// deterministic for a fixed config and independent of threading.
std::vector<Event> sample_events_statevector(const ModelConfig& config,
                                             std::int64_t num_events,
                                             int threads = 1);

/// OpenQASM 2.0 text. With decomposed = false the controlled rotations are
/// emitted through custom cry/cry0 gate definitions; with decomposed = true
/// the circuit must contain only RY/X/CX (UnsupportedGateError otherwise).
/// q[0] is the spin qubit; q[n] the step-n path qubit. Angles are printed
/// with 17 significant digits and every qubit is measured at the end.
std::string qasm_export(const Circuit& circuit, bool decomposed);

/// Minimal reader for the subset qasm_export emits; used to round-trip the
/// exported text back into a Circuit.
Circuit parse_qasm(std::string_view text);

}  // namespace itree
