// Time evolution of deviation density matrices under time-dependent
// Hamiltonians: piecewise-constant midpoint stepping (exact unitary per
// step), optional T2 coherence damping by operator splitting, and step-size
// convergence control.
#pragma once

#include <array>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "chirpdnp/spin_ops.hpp"

namespace chirpdnp {

enum class RelaxMode {
  AllOffDiagonal,  ///< damp every off-diagonal element
  DqZqOnly         ///< damp only the (1,4) and (2,3) coherence pairs
};

struct IntegratorConfig {
  double dt = 0.0;            ///< step, us; 0 = derive from problem scales
  std::optional<double> t2;   ///< decoherence constant, us
  RelaxMode relax_mode = RelaxMode::AllOffDiagonal;
  double conv_tol = 1e-6;     ///< observable convergence tolerance
  int max_halvings = 10;
};

/// Default step: min(0.001 * duration, 0.05 / nu_max), resolving the fastest
/// precession at nu_max (linear MHz) by at least 20 samples.
double default_time_step(double duration, double nu_max);

enum class Observable { Sz, Iz, Sx, Sy, DQx, DQy, DQz, ZQx, ZQy, ZQz };
inline constexpr int kNumObservables = 10;
const char* observable_name(int index);

/// Sampling instructions for evolve(). Stride counts steps between recorded
/// rows; the initial and final states are always recorded. Probe times are
/// snapped to the nearest step boundary and their states stored.
struct SampleSpec {
  long stride = 1;
  std::vector<double> probe_times;
};

struct Trajectory {
  int dim = 4;  ///< 2 for single-spin runs (nuclear/fictitious rows stay 0)
  std::vector<double> times;  ///< us, strictly increasing
  std::array<std::vector<double>, kNumObservables> series;

  std::vector<double> probe_times;            ///< grid-snapped
  std::vector<Eigen::MatrixXcd> probe_states;
  Eigen::MatrixXcd final_state;
  double final_time = 0.0;

  std::size_t size() const { return times.size(); }
  const std::vector<double>& of(Observable o) const {
    return series[static_cast<int>(o)];
  }
  double final_value(Observable o) const { return of(o).back(); }
  /// Linear interpolation of a series at time t (clamped to the range).
  double interpolate(Observable o, double t) const;
  /// Probe state nearest to time t; throws SimError if none stored.
  const Eigen::MatrixXcd& probe_state_at(double t) const;
};

using HamFn2 = std::function<Mat2(double)>;
using HamFn4 = std::function<Mat4(double)>;

/// One exact unitary step rho -> U rho U^dagger, U = exp(-i H dt), computed
/// by Hermitian eigendecomposition. Throws NonHermitianHamiltonian.
Mat2 step_unitary(const Mat2& rho, const Mat2& h, double dt);
Mat4 step_unitary(const Mat4& rho, const Mat4& h, double dt);

/// Multiply the selected off-diagonal elements by exp(-dt/t2); diagonal
/// untouched. Throws NonPositiveT2.
Mat4 apply_t2(const Mat4& rho, double dt, double t2,
              RelaxMode mode = RelaxMode::AllOffDiagonal);
Mat2 apply_t2(const Mat2& rho, double dt, double t2);

/// Propagate rho0 under h(t) over [t0, t1]. Each step samples H at the
/// interval midpoint, applies the exact unitary for that frozen H, then the
/// T2 damping factor (operator splitting). cfg.dt must be positive; the span
/// is covered by an integer number of equal steps no longer than cfg.dt.
Trajectory evolve(const Mat4& rho0, const HamFn4& h, double t0, double t1,
                  const IntegratorConfig& cfg, const SampleSpec& sample = {});
Trajectory evolve(const Mat2& rho0, const HamFn2& h, double t0, double t1,
                  const IntegratorConfig& cfg, const SampleSpec& sample = {});

struct ConvergedResult {
  Trajectory trajectory;  ///< run at the finest step evaluated
  double dt_used;
  int halvings;  ///< number of times the step was halved
};

/// Halve dt until the final <Iz> and <Sz> change by less than cfg.conv_tol
/// between successive refinements; throws ConvergenceFailure after
/// cfg.max_halvings unsuccessful halvings.
ConvergedResult evolve_converged(const Mat4& rho0, const HamFn4& h, double t0,
                                 double t1, const IntegratorConfig& cfg,
                                 const SampleSpec& sample = {});
ConvergedResult evolve_converged(const Mat2& rho0, const HamFn2& h, double t0,
                                 double t1, const IntegratorConfig& cfg,
                                 const SampleSpec& sample = {});

namespace detail {
/// exp(-i h dt) for Hermitian h via diagonal Pade with scaling-squaring;
/// unitary to roundoff and equivalent to the eigendecomposition route. Used
/// in the stepping hot loop.
Mat4 unitary_exp(const Mat4& h, double dt);
}  // namespace detail

}  // namespace chirpdnp
