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

#include "itree/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "itree/errors.hpp"
#include "itree/parallel.hpp"
#include "itree/rng.hpp"

namespace itree {
namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void check_qubits(const Gate& g, int n_qubits) {
  const bool controlled = g.kind == Gate::Kind::kCx || g.kind == Gate::Kind::kCry;
  if (g.target < 0 || g.target >= n_qubits ||
      (controlled && (g.control < 0 || g.control >= n_qubits))) {
    throw OutOfRangeError("gate qubit index outside register of size " +
                          std::to_string(n_qubits));
  }
  if (controlled && g.control == g.target) {
    throw OutOfRangeError("gate control equals target");
  }
}

// In-place rotation of the target-qubit pairs selected by `mask_test`:
// pairs (i, i | target_bit) with i's control bits matching.
template <typename Pred>
void rotate_pairs(Eigen::VectorXd& state, int target, double half_angle, Pred pred) {
  const double c = std::cos(half_angle);
  const double s = std::sin(half_angle);
  const std::int64_t size = state.size();
  const std::int64_t tbit = std::int64_t{1} << target;
  for (std::int64_t i = 0; i < size; ++i) {
    if ((i & tbit) || !pred(i)) continue;
    const std::int64_t j = i | tbit;
    const double v0 = state[i];
    const double v1 = state[j];
    state[i] = c * v0 - s * v1;
    state[j] = s * v0 + c * v1;
  }
}

template <typename Pred>
void swap_pairs(Eigen::VectorXd& state, int target, Pred pred) {
  const std::int64_t size = state.size();
  const std::int64_t tbit = std::int64_t{1} << target;
  for (std::int64_t i = 0; i < size; ++i) {
    if ((i & tbit) || !pred(i)) continue;
    std::swap(state[i], state[i | tbit]);
  }
}

}  // namespace

Circuit build_circuit(const ModelConfig& config) {
  const DecoupledParams params = decoupled_params(config);
  Circuit circuit;
  circuit.n_qubits = config.n_steps + 1;
  circuit.gates.reserve(static_cast<std::size_t>(2 * config.n_steps) + 2);
  circuit.gates.push_back(Gate::ry(2 * config.lambda, 0));
  for (int n = 1; n <= config.n_steps; ++n) {
    // pi - 2*theta puts cos(theta), the left amplitude, on the |1> outcome.
    circuit.gates.push_back(
        Gate::cry(kPi - 2 * params.theta_down[static_cast<std::size_t>(n - 1)], 0, 0, n));
    circuit.gates.push_back(
        Gate::cry(kPi - 2 * params.theta_up[static_cast<std::size_t>(n - 1)], 0, 1, n));
  }
  circuit.gates.push_back(Gate::ry(-2 * config.lambda, 0));
  return circuit;
}

Circuit decompose(const Circuit& circuit) {
  Circuit out;
  out.n_qubits = circuit.n_qubits;
  for (const Gate& g : circuit.gates) {
    switch (g.kind) {
      case Gate::Kind::kRy:
      case Gate::Kind::kX:
      case Gate::Kind::kCx:
        out.gates.push_back(g);
        break;
      case Gate::Kind::kCry: {
        if (g.control_value == 0) out.gates.push_back(Gate::x(g.control));
        out.gates.push_back(Gate::ry(g.angle / 4, g.target));
        out.gates.push_back(Gate::cx(g.control, g.target));
        out.gates.push_back(Gate::ry(-g.angle / 2, g.target));
        out.gates.push_back(Gate::cx(g.control, g.target));
        out.gates.push_back(Gate::ry(g.angle / 4, g.target));
        if (g.control_value == 0) out.gates.push_back(Gate::x(g.control));
        break;
      }
      default:
        throw UnsupportedGateError("unknown gate kind");
    }
  }
  return out;
}

void apply_gate(Eigen::VectorXd& state, const Gate& g) {
  switch (g.kind) {
    case Gate::Kind::kRy:
      rotate_pairs(state, g.target, g.angle / 2, [](std::int64_t) { return true; });
      return;
    case Gate::Kind::kX:
      swap_pairs(state, g.target, [](std::int64_t) { return true; });
      return;
    case Gate::Kind::kCx: {
      const std::int64_t cbit = std::int64_t{1} << g.control;
      swap_pairs(state, g.target, [cbit](std::int64_t i) { return (i & cbit) != 0; });
      return;
    }
    case Gate::Kind::kCry: {
      const std::int64_t cbit = std::int64_t{1} << g.control;
      const std::int64_t want = g.control_value ? cbit : 0;
      rotate_pairs(state, g.target, g.angle / 2,
                   [cbit, want](std::int64_t i) { return (i & cbit) == want; });
      return;
    }
  }
  throw UnsupportedGateError("unknown gate kind");
}

Eigen::MatrixXd circuit_unitary(const Circuit& circuit) {
  if (circuit.n_qubits > kMaxUnitarySteps + 1) {
    throw TooLargeError("dense unitary limited to " +
                        std::to_string(kMaxUnitarySteps + 1) + " qubits, got " +
                        std::to_string(circuit.n_qubits));
  }
  const std::int64_t dim = std::int64_t{1} << circuit.n_qubits;
  Eigen::MatrixXd unitary = Eigen::MatrixXd::Identity(dim, dim);
  Eigen::VectorXd column(dim);
  for (const Gate& g : circuit.gates) {
    check_qubits(g, circuit.n_qubits);
    for (std::int64_t col = 0; col < dim; ++col) {
      column = unitary.col(col);
      apply_gate(column, g);
      unitary.col(col) = column;
    }
  }
  return unitary;
}

OutcomeDistribution statevector_run(const ModelConfig& config) {
  if (config.n_steps > kMaxStatevectorSteps) {
    throw TooLargeError("statevector limited to n_steps <= " +
                        std::to_string(kMaxStatevectorSteps) + ", got " +
                        std::to_string(config.n_steps));
  }
  const Circuit circuit = build_circuit(config);
  const std::int64_t dim = std::int64_t{1} << circuit.n_qubits;
  Eigen::VectorXd state = Eigen::VectorXd::Zero(dim);
  const Eigen::Vector2d start = initial_spin(config);
  state[0] = start[0];  // spin bit is index bit 0
  state[1] = start[1];
  for (const Gate& g : circuit.gates) {
    check_qubits(g, circuit.n_qubits);
    apply_gate(state, g);
  }
  OutcomeDistribution dist =
      OutcomeDistribution::zeros(config.n_steps, "statevector", config_hash(config));
  dist.prob = state.array().square();
  return dist;
}

std::vector<Event> sample_events_statevector(const ModelConfig& config,
                                             std::int64_t num_events, int threads) {
  const OutcomeDistribution dist = statevector_run(config);
  std::vector<double> cdf(static_cast<std::size_t>(dist.size()));
  double running = 0.0;
  for (std::int64_t i = 0; i < dist.size(); ++i) {
    running += dist.prob[i];
    cdf[static_cast<std::size_t>(i)] = running;
  }

  std::vector<Event> events(static_cast<std::size_t>(num_events));
  parallel_for_index(num_events, threads, [&](std::int64_t k) {
    SplitMix64 rng = event_stream(config.seed, static_cast<std::uint64_t>(k));
    const double u = rng.next_double();
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const std::int64_t index =
        it == cdf.end() ? dist.size() - 1 : std::distance(cdf.begin(), it);
    Event& ev = events[static_cast<std::size_t>(k)];
    ev.spin = static_cast<int>(index & 1);
    ev.path.resize(static_cast<std::size_t>(config.n_steps));
    const std::uint64_t path = static_cast<std::uint64_t>(index) >> 1;
    for (int n = 0; n < config.n_steps; ++n) {
      ev.path[static_cast<std::size_t>(n)] =
          static_cast<std::uint8_t>((path >> n) & 1u);
    }
  });
  return events;
}

std::string qasm_export(const Circuit& circuit, bool decomposed) {
  if (decomposed) {
    for (const Gate& g : circuit.gates) {
      if (g.kind == Gate::Kind::kCry) {
        throw UnsupportedGateError(
            "controlled-RY present in a circuit exported as decomposed");
      }
    }
  }
  std::ostringstream os;
  os << "OPENQASM 2.0;\n";
  os << "include \"qelib1.inc\";\n";
  os << "// q[0]: spin qubit (1 = spin up); q[n]: path qubit for step n (1 = left)\n";
  if (!decomposed) {
    os << "gate cry(theta) a,b { ry(theta/2) b; cx a,b; ry(-theta/2) b; cx a,b; }\n";
    os << "gate cry0(theta) a,b { x a; cry(theta) a,b; x a; }\n";
  }
  os << "qreg q[" << circuit.n_qubits << "];\n";
  os << "creg c[" << circuit.n_qubits << "];\n";
  for (const Gate& g : circuit.gates) {
    switch (g.kind) {
      case Gate::Kind::kRy:
        os << "ry(" << fmt17(g.angle) << ") q[" << g.target << "];\n";
        break;
      case Gate::Kind::kX:
        os << "x q[" << g.target << "];\n";
        break;
      case Gate::Kind::kCx:
        os << "cx q[" << g.control << "],q[" << g.target << "];\n";
        break;
      case Gate::Kind::kCry:
        os << (g.control_value ? "cry(" : "cry0(") << fmt17(g.angle) << ") q["
           << g.control << "],q[" << g.target << "];\n";
        break;
    }
  }
  for (int q = 0; q < circuit.n_qubits; ++q) {
    os << "measure q[" << q << "] -> c[" << q << "];\n";
  }
  return os.str();
}

namespace {

// Parses "q[K]" starting at text[pos]; advances pos past the closing bracket.
int parse_qubit_ref(const std::string& line, std::size_t& pos) {
  const std::size_t open = line.find("q[", pos);
  if (open == std::string::npos) throw ConfigError("qasm: expected qubit ref in '" + line + "'");
  const std::size_t close = line.find(']', open);
  if (close == std::string::npos) throw ConfigError("qasm: unterminated qubit ref");
  const int index = std::stoi(line.substr(open + 2, close - open - 2));
  pos = close + 1;
  return index;
}

double parse_angle_arg(const std::string& line) {
  const std::size_t open = line.find('(');
  const std::size_t close = line.find(')', open);
  if (open == std::string::npos || close == std::string::npos) {
    throw ConfigError("qasm: expected (angle) in '" + line + "'");
  }
  return std::stod(line.substr(open + 1, close - open - 1));
}

}  // namespace

Circuit parse_qasm(std::string_view text) {
  Circuit circuit;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    const std::size_t comment = line.find("//");
    if (comment != std::string::npos) line.erase(comment);
    // trim
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first);

    if (line.rfind("OPENQASM", 0) == 0 || line.rfind("include", 0) == 0 ||
        line.rfind("gate ", 0) == 0 || line.rfind("creg", 0) == 0 ||
        line.rfind("measure", 0) == 0 || line.rfind("barrier", 0) == 0) {
      continue;
    }
    if (line.rfind("qreg", 0) == 0) {
      std::size_t pos = 0;
      circuit.n_qubits = parse_qubit_ref(line, pos);
      continue;
    }
    std::size_t pos = line.find(' ');
    if (pos == std::string::npos) pos = line.size();
    if (line.rfind("ry", 0) == 0 && line.rfind("ry(", 0) == 0) {
      const double angle = parse_angle_arg(line);
      std::size_t p = line.find(')');
      circuit.gates.push_back(Gate::ry(angle, parse_qubit_ref(line, p)));
    } else if (line.rfind("x ", 0) == 0) {
      std::size_t p = 1;
      circuit.gates.push_back(Gate::x(parse_qubit_ref(line, p)));
    } else if (line.rfind("cx ", 0) == 0) {
      std::size_t p = 2;
      const int control = parse_qubit_ref(line, p);
      circuit.gates.push_back(Gate::cx(control, parse_qubit_ref(line, p)));
    } else if (line.rfind("cry0(", 0) == 0 || line.rfind("cry(", 0) == 0) {
      const int control_value = line.rfind("cry0(", 0) == 0 ? 0 : 1;
      const double angle = parse_angle_arg(line);
      std::size_t p = line.find(')');
      const int control = parse_qubit_ref(line, p);
      circuit.gates.push_back(
          Gate::cry(angle, control, control_value, parse_qubit_ref(line, p)));
    } else {
      throw ConfigError("qasm: unsupported statement '" + line + "'");
    }
  }
  if (circuit.n_qubits == 0) throw ConfigError("qasm: missing qreg declaration");
  return circuit;
}

}  // namespace itree
