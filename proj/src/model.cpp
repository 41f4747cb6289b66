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

#include "itree/model.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "itree/errors.hpp"

namespace itree {
namespace {

constexpr double kPi = 3.14159265358979323846;

double rotation_eq_residual(double lambda, double diag_diff, double cross) {
  return std::cos(lambda) * std::sin(lambda) * diag_diff +
         std::cos(2 * lambda) * cross;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

StepAmplitudes StepAmplitudes::from_matrices(const Eigen::Matrix2d& left,
                                             const Eigen::Matrix2d& right) {
  StepAmplitudes a;
  a.aLdd = left(0, 0);
  a.aLdu = left(1, 0);
  a.aLud = left(0, 1);
  a.aLuu = left(1, 1);
  a.aRdd = right(0, 0);
  a.aRdu = right(1, 0);
  a.aRud = right(0, 1);
  a.aRuu = right(1, 1);
  return a;
}

UnitarityReport validate_unitarity(const StepAmplitudes& a) {
  UnitarityReport report;
  const double row_down =
      a.aLdd * a.aLdd + a.aLdu * a.aLdu + a.aRdd * a.aRdd + a.aRdu * a.aRdu;
  const double row_up =
      a.aLuu * a.aLuu + a.aLud * a.aLud + a.aRuu * a.aRuu + a.aRud * a.aRud;
  report.residual_down = std::abs(row_down - 1.0);
  report.residual_up = std::abs(row_up - 1.0);
  report.pass =
      report.residual_down <= kUnitarityTol && report.residual_up <= kUnitarityTol;
  return report;
}

bool is_decouplable(const StepAmplitudes& a, double tol) {
  return std::abs(a.aLdu - a.aLud) <= tol && std::abs(a.aRdu - a.aRud) <= tol;
}

Eigen::Matrix2d rotation(double lambda) {
  const double c = std::cos(lambda);
  const double s = std::sin(lambda);
  Eigen::Matrix2d r;
  r << c, -s, s, c;
  return r;
}

double solve_rotation_angle(const StepAmplitudes& a) {
  if (!is_decouplable(a)) {
    throw NotDecouplableError("cross-spin amplitudes are not symmetric: aLdu=" +
                              fmt(a.aLdu) + " aLud=" + fmt(a.aLud) + " aRdu=" +
                              fmt(a.aRdu) + " aRud=" + fmt(a.aRud));
  }
  const double cross_l = a.aLdu;
  const double diff_l = a.aLdd - a.aLuu;
  const double cross_r = a.aRdu;
  const double diff_r = a.aRdd - a.aRuu;

  // tan(2 lambda) = -2*cross / diff. Solve the better-conditioned equation;
  // the left one is vacuous when both its coefficients vanish.
  const bool use_left =
      std::hypot(2 * cross_l, diff_l) >= std::hypot(2 * cross_r, diff_r);
  double lambda = use_left ? 0.5 * std::atan2(-2 * cross_l, diff_l)
                           : 0.5 * std::atan2(-2 * cross_r, diff_r);
  if (lambda > kPi / 4) {
    lambda -= kPi / 2;
  } else if (lambda <= -kPi / 4) {
    lambda += kPi / 2;
  }

  const double res_l = rotation_eq_residual(lambda, diff_l, cross_l);
  const double res_r = rotation_eq_residual(lambda, diff_r, cross_r);
  if (std::abs(res_l) > kRotationEqTol || std::abs(res_r) > kRotationEqTol) {
    throw InconsistentAmplitudesError(
        "left and right rotation equations have no common angle (residuals " +
        fmt(res_l) + ", " + fmt(res_r) + " at lambda=" + fmt(lambda) + ")");
  }
  return lambda;
}

double DecoupledStep::theta_down() const { return std::atan2(r_down, l_down); }
double DecoupledStep::theta_up() const { return std::atan2(r_up, l_up); }

DecoupledStep decouple(const StepAmplitudes& a, double lambda) {
  if (!is_decouplable(a)) {
    throw NotDecouplableError("cross-spin amplitudes are not symmetric");
  }
  const double cross_l = a.aLdu;
  const double cross_r = a.aRdu;
  const double diff = a.aLdd - a.aLuu;
  const double t = std::tan(lambda);

  DecoupledStep out;
  const double scale = std::abs(a.aLdd) + std::abs(a.aLuu) + std::abs(cross_l);
  if (std::abs(diff) > 1e-12 * std::max(scale, 1.0) && std::abs(t) <= 1.0 + 1e-12) {
    // Closed-form root of  cross*t^2 - diff*t - cross = 0, the branch with
    // |t| <= 1 matching the principal lambda. Stable: no cancellation for
    // small diff, and the lambda argument only selected the branch.
    const double s = std::sqrt(4 * cross_l * cross_l * diff * diff +
                               diff * diff * diff * diff);
    out.l_down = a.aLdd + 2 * cross_l * cross_l * diff / (s + diff * diff);
    out.l_up = a.aLdd - (s + diff * diff) / (2 * diff);
  } else {
    // Degenerate diagonal difference (or non-principal angle): linear
    // elimination, valid whenever cos(lambda) != 0.
    out.l_down = a.aLdd - t * cross_l;
    out.l_up = a.aLuu + t * cross_l;
  }
  out.r_down = a.aRdd - t * cross_r;
  out.r_up = a.aRuu + t * cross_r;
  return out;
}

StepAmplitudes recouple_step(double lambda, double theta_down, double theta_up) {
  const double c = std::cos(lambda);
  const double s = std::sin(lambda);
  const double cc = c * c, ss = s * s, cs = c * s;
  const double ld = std::cos(theta_down), lu = std::cos(theta_up);
  const double rd = std::sin(theta_down), ru = std::sin(theta_up);
  // R^T diag(x_down, x_up) R, written entrywise so the off-diagonal pair is
  // one shared value and the symmetry aLdu == aLud holds exactly.
  StepAmplitudes a;
  a.aLdd = cc * ld + ss * lu;
  a.aLuu = ss * ld + cc * lu;
  a.aLdu = a.aLud = cs * (lu - ld);
  a.aRdd = cc * rd + ss * ru;
  a.aRuu = ss * rd + cc * ru;
  a.aRdu = a.aRud = cs * (ru - rd);
  return a;
}

std::pair<Eigen::Matrix2d, Eigen::Matrix2d> recouple(const DecoupledParams& params,
                                                     int step) {
  if (step < 1 || step > params.n_steps()) {
    throw OutOfRangeError("step " + std::to_string(step) + " outside 1.." +
                          std::to_string(params.n_steps()));
  }
  const StepAmplitudes a = recouple_step(params.lambda, params.theta_down[step - 1],
                                         params.theta_up[step - 1]);
  return {a.left_matrix(), a.right_matrix()};
}

namespace {

std::vector<double> broadcast_probabilities(std::vector<double> p, int n_steps,
                                            const char* name) {
  if (p.size() == 1) p.assign(static_cast<std::size_t>(n_steps), p[0]);
  if (static_cast<int>(p.size()) != n_steps) {
    throw LengthMismatchError(std::string(name) + " has " +
                              std::to_string(p.size()) + " entries, expected " +
                              std::to_string(n_steps));
  }
  for (double v : p) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw OutOfRangeError(std::string(name) + " entry " + fmt(v) +
                            " outside [0, 1]");
    }
  }
  return p;
}

}  // namespace

ModelConfig config_from_probabilities(int n_steps, double lambda,
                                      std::vector<double> p_down,
                                      std::vector<double> p_up, double initial_a,
                                      std::uint64_t seed) {
  if (n_steps < 1) {
    throw OutOfRangeError("n_steps must be >= 1, got " + std::to_string(n_steps));
  }
  if (!std::isfinite(lambda)) throw OutOfRangeError("lambda must be finite");
  if (!(initial_a >= -1.0 && initial_a <= 1.0)) {
    throw OutOfRangeError("initial_a " + fmt(initial_a) + " outside [-1, 1]");
  }
  ModelConfig config;
  config.n_steps = n_steps;
  config.lambda = lambda;
  config.p_down = broadcast_probabilities(std::move(p_down), n_steps, "p_down");
  config.p_up = broadcast_probabilities(std::move(p_up), n_steps, "p_up");
  config.initial_a = initial_a;
  config.seed = seed;
  return config;
}

DecoupledParams decoupled_params(const ModelConfig& config) {
  DecoupledParams params;
  params.lambda = config.lambda;
  params.theta_down.reserve(config.p_down.size());
  params.theta_up.reserve(config.p_up.size());
  for (double p : config.p_down) params.theta_down.push_back(std::acos(std::sqrt(p)));
  for (double p : config.p_up) params.theta_up.push_back(std::acos(std::sqrt(p)));
  return params;
}

Eigen::Vector2d initial_spin(const ModelConfig& config) {
  const double a = config.initial_a;
  return {a, std::sqrt(std::max(0.0, 1.0 - a * a))};
}

std::uint64_t config_hash(const ModelConfig& config) {
  std::string canon = "n_steps=" + std::to_string(config.n_steps) +
                      ";lambda=" + fmt(config.lambda) + ";p_down=";
  for (double p : config.p_down) canon += fmt(p) + ",";
  canon += ";p_up=";
  for (double p : config.p_up) canon += fmt(p) + ",";
  canon += ";initial_a=" + fmt(config.initial_a) + ";seed=" + std::to_string(config.seed);

  std::uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a
  for (unsigned char ch : canon) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace itree
