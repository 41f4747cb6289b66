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
// Tree parameters in the original (spin-mixing) and decoupled bases.
//
// A step of the walk is described by eight real amplitudes a{move}{s1}{s2},
// move in {L,R}, s1/s2 the initial/final spin (d = down, u = up). Packed as
// 2x2 matrices the convention throughout is: rows index the FINAL spin,
// columns the INITIAL spin, so a step maps spin vectors by left
// multiplication. Down is component 0, up is component 1.
//
// For amplitude sets with aLdu == aLud and aRdu == aRud there is a rotation
// angle lambda such that in the rotated spin basis the two trees evolve
// independently, each step reducing to a single angle per tree:
// left amplitude cos(theta_s), right amplitude sin(theta_s).

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace itree {

inline constexpr double kUnitarityTol = 1e-12;
inline constexpr double kDecouplableTol = 1e-12;
inline constexpr double kRotationEqTol = 1e-9;

/// The eight original-basis amplitudes of one step.
struct StepAmplitudes {
  double aLdd = 0, aLdu = 0, aLud = 0, aLuu = 0;
  double aRdd = 0, aRdu = 0, aRud = 0, aRuu = 0;

  /// Left-move matrix, rows = final spin, cols = initial spin.
  Eigen::Matrix2d left_matrix() const {
    Eigen::Matrix2d m;
    m << aLdd, aLud, aLdu, aLuu;
    return m;
  }
  /// Right-move matrix, same layout.
  Eigen::Matrix2d right_matrix() const {
    Eigen::Matrix2d m;
    m << aRdd, aRud, aRdu, aRuu;
    return m;
  }
  static StepAmplitudes from_matrices(const Eigen::Matrix2d& left,
                                      const Eigen::Matrix2d& right);
};

struct UnitarityReport {
  bool pass = false;
  double residual_down = 0;  // |sum of squared amplitudes out of spin-down - 1|
  double residual_up = 0;
};

/// Checks the two per-initial-spin normalization conditions
///   aLdd^2 + aLdu^2 + aRdd^2 + aRdu^2 = 1
///   aLuu^2 + aLud^2 + aRuu^2 + aRud^2 = 1
/// within kUnitarityTol.
UnitarityReport validate_unitarity(const StepAmplitudes& amps);

/// True when the cross-spin amplitudes are symmetric (aLdu == aLud and
/// aRdu == aRud within tol), the precondition for decoupling.
bool is_decouplable(const StepAmplitudes& amps, double tol = kDecouplableTol);

/// Rotation matrix [[cos, -sin], [sin, cos]].
Eigen::Matrix2d rotation(double lambda);

/// Solves cos(l)sin(l)(aLdd - aLuu) + cos(2l)*aL = 0 for the rotation angle,
/// reduced to the principal branch (-pi/4, pi/4] (the equation is pi/2
/// periodic and every branch describes the same physics). When the left
/// equation is vacuous (aL = 0 and aLdd = aLuu) the angle is taken from the
/// right-move equation instead. Both equations are then verified to hold
/// within kRotationEqTol.
///
/// Throws NotDecouplableError when the symmetry precondition fails and
/// InconsistentAmplitudesError when no common angle satisfies both equations.
double solve_rotation_angle(const StepAmplitudes& amps);

/// Decoupled-basis amplitudes of one step: left/right amplitude per tree.
struct DecoupledStep {
  double l_down = 0, l_up = 0;  // left-move amplitude on each decoupled tree
  double r_down = 0, r_up = 0;

  double theta_down() const;  // atan2(r_down, l_down)
  double theta_up() const;
};

/// Rotates a decouplable amplitude set into the decoupled basis at the given
/// angle (normally the output of solve_rotation_angle). The left amplitudes
/// use the closed-form root of the underlying quadratic, matched to the
/// principal branch; when aLdd == aLuu that expression degenerates (it
/// divides by the difference) and the evaluation falls back to the linear
/// elimination  l_down = aLdd - tan(lambda)*aLdu.
DecoupledStep decouple(const StepAmplitudes& amps, double lambda);

/// Rotation angle plus per-step decoupled angles; cos(theta) is the left
/// amplitude and sin(theta) the right amplitude on each tree.
struct DecoupledParams {
  double lambda = 0;
  std::vector<double> theta_down;  // one entry per step, step 1 first
  std::vector<double> theta_up;

  int n_steps() const { return static_cast<int>(theta_down.size()); }
};

/// Original-basis amplitudes of one step built from decoupled angles:
/// M_L = R(lambda)^T diag(cos theta_down, cos theta_up) R(lambda) and the
/// sin counterpart for M_R. The result is exactly symmetric by construction
/// and satisfies the rotation-angle equation at lambda.
StepAmplitudes recouple_step(double lambda, double theta_down, double theta_up);

/// Matrix form of recouple_step for step n (1-based): (M_L, M_R).
std::pair<Eigen::Matrix2d, Eigen::Matrix2d> recouple(const DecoupledParams& params,
                                                     int step);

/// Full tree configuration: per-step left probabilities in the decoupled
/// basis, the rotation angle, initial spin amplitude and RNG seed. The
/// initial spin state is a*|down> + sqrt(1 - a^2)*|up>.
struct ModelConfig {
  int n_steps = 1;
  double lambda = 0;
  std::vector<double> p_down;  // size n_steps; P(left) on the down tree
  std::vector<double> p_up;
  double initial_a = 1.0;
  std::uint64_t seed = 0;
};

/// Validates and assembles a ModelConfig; a scalar probability (vector of
/// size 1) broadcasts to all steps. theta_s = arccos(sqrt(p_s)) in [0, pi/2].
/// Throws OutOfRangeError for p outside [0, 1], |a| > 1 or n_steps < 1.
ModelConfig config_from_probabilities(int n_steps, double lambda,
                                      std::vector<double> p_down,
                                      std::vector<double> p_up, double initial_a,
                                      std::uint64_t seed);

/// Per-step angles of a config: theta = arccos(sqrt(p)).
DecoupledParams decoupled_params(const ModelConfig& config);

/// Initial spin vector (a, sqrt(1 - a^2)).
Eigen::Vector2d initial_spin(const ModelConfig& config);

/// FNV-1a hash of the canonical JSON form of a config; recorded as
/// distribution metadata and in run manifests.
std::uint64_t config_hash(const ModelConfig& config);

}  // namespace itree
