// Hamiltonian builders for the dipolar-coupled electron-nucleus pair: static
// solid-effect form, single-spin chirp, full chirped-DNP form, and the
// effective DQ/ZQ two-level Hamiltonians; plus matching offsets,
// effective-field geometry and Landau-Zener adiabaticity factors.
//
// Unit convention: every user-facing frequency is LINEAR (MHz), matching the
// way sweep parameters are normally quoted. Hamiltonian matrices are ANGULAR
// (rad/us); the factor 2*pi is applied exactly once, inside the builders.
//
// Offset convention: a chirp sweeps the microwave offset W(t) linearly across
// the band. The electron offset that enters the Hamiltonian's Sz coefficient
// is delta(t) = packet_offset - W(t), so sweeping W low -> high tips the
// effective field of an on-band packet continuously from +z to -z. Under the
// default nuclear-Zeeman sign (-omega0n Iz) the flip-flip (DQ) anticrossing
// then sits on the first-swept side of the band, packet_offset - sqrt(
// omega0n^2 - omega1^2), and the flip-flop (ZQ) one on the other; flipping
// the sign exchanges the two labels and mirrors <Iz> while leaving its
// magnitude unchanged.
#pragma once

#include <optional>

#include "chirpdnp/spin_ops.hpp"

namespace chirpdnp {

struct SpinSystemParams {
  double omega0n = 0.0;        ///< nuclear Larmor frequency, MHz (> 0)
  double hf_a = 0.0;           ///< secular hyperfine A, MHz
  double hf_b = 0.0;           ///< pseudo-secular hyperfine B, MHz
  double packet_offset = 0.0;  ///< electron offset from band center, MHz
  int nuclear_zeeman_sign = -1;  ///< sign s of the s*omega0n*Iz Zeeman term

  // Populated when the hyperfine pair was derived from a point-dipole
  // coupling d at orientation beta; hf_a/hf_b stay consistent with them.
  std::optional<double> dipolar_d;  ///< MHz
  std::optional<double> beta;       ///< radians

  /// Build params from the dipolar form; A and B are filled in via
  /// hyperfine_from_dipolar.
  static SpinSystemParams from_dipolar(double omega0n, double d, double beta,
                                       double packet_offset = 0.0,
                                       int nuclear_zeeman_sign = -1);

  /// Throws ValidationError on inconsistent fields (omega0n <= 0, dipolar
  /// form disagreeing with A/B, sign not +-1).
  void validate() const;
};

/// Linear microwave frequency sweep. The instantaneous band offset is
/// W(t) = offset_start + sign(offset_end - offset_start) * rate * t.
struct ChirpPulse {
  double omega1 = 0.0;        ///< microwave amplitude, MHz
  double offset_start = 0.0;  ///< sweep window start, MHz
  double offset_end = 0.0;    ///< sweep window end, MHz
  double rate = 0.0;          ///< sweep rate k, MHz/us (> 0)
  double phase = 0.0;         ///< microwave phase, radians

  double duration() const;  ///< |offset_end - offset_start| / rate, us

  /// W(t); throws TimeOutOfRange outside [0, duration] (small slack for
  /// roundoff).
  double offset_at(double t) const;

  /// Inverse of offset_at; throws TimeOutOfRange if x lies outside the
  /// window.
  double time_at_offset(double x) const;

  /// Electron offset delta(t) = packet_offset - W(t) entering the Sz term.
  double instantaneous_offset(double t, double packet_offset) const {
    return packet_offset - offset_at(t);
  }

  void validate() const;
};

/// Static solid-effect Hamiltonian (4x4, rad/us):
///   2*pi * [ offset*Sz + s*omega0n*Iz + A*SzIz + B*SzIx + omega1*Sx ]
/// with s = p.nuclear_zeeman_sign. `offset` is the electron offset delta.
Mat4 h_se_static(const SpinSystemParams& p, double offset, double omega1);

/// Single-spin chirp Hamiltonian (2x2, rad/us):
///   2*pi * [ delta(t)*Sz + omega1*(cos(phase)*Sx + sin(phase)*Sy) ]
Mat2 h_chirp(double t, const ChirpPulse& pulse, double packet_offset);

/// Full chirped-DNP Hamiltonian (4x4): h_se_static evaluated at the
/// instantaneous electron offset delta(t), with the pulse phase applied to
/// the microwave term.
Mat4 h_ise(double t, const ChirpPulse& pulse, const SpinSystemParams& p);

struct EffectiveSe {
  double coefficient;  ///< omega1*B/(2*omega0n), MHz
  Mat4 hamiltonian;    ///< 2*pi * coefficient * (DQx or ZQx)
};

/// Effective solid-effect Hamiltonian at the DQ or ZQ matching condition.
/// Throws ZeroNuclearLarmor when omega0n == 0.
EffectiveSe h_effective_se(Subspace kind, const SpinSystemParams& p,
                           double omega1);

struct MatchingOffsets {
  double dq;  ///< band offset of the flip-flip (DQ) anticrossing, MHz
  double zq;  ///< band offset of the flip-flop (ZQ) anticrossing, MHz
};

/// Band offsets where the dressed DQ / ZQ level pairs become degenerate,
/// i.e. where sqrt(delta^2 + omega1^2) = omega0n. With the default
/// nuclear-Zeeman sign the DQ offset is packet_offset - sqrt(omega0n^2 -
/// omega1^2), the side swept first in a low-to-high sweep. Throws
/// AmplitudeExceedsNuclearLarmor when omega1 >= omega0n.
MatchingOffsets matching_offsets(const SpinSystemParams& p, double omega1);

struct LzFactor {
  double factor;       ///< pi * p_ang^2 / (2 * k_ang), dimensionless
  double p_diabatic;   ///< asymptotic probability to jump the anticrossing
};

/// Landau-Zener adiabaticity factor for a linear sweep at rate `rate`
/// (MHz/us) through an anticrossing of full splitting `gap` (linear MHz).
/// Internally angular: factor = pi*(2*pi*gap)^2 / (2*(2*pi*rate)). The
/// diabatic passage probability exp(-2*pi*(gap_ang/2)^2 / rate_ang)
/// (= exp(-factor)) is the quantity validated against propagation.
/// Throws NonPositiveRate.
LzFactor lz_factor(double gap, double rate);

struct EffectiveField {
  double magnitude;  ///< omega_eff = sqrt(delta^2 + omega1^2), MHz
  double theta;      ///< tilt from +z, radians, in (0, pi] for omega1 >= 0
};

/// Instantaneous effective-field magnitude and tilt of the chirp, with theta
/// continued monotonically past resonance (theta = atan2(omega1, delta)) so
/// the field tips from +z toward -z over a low-to-high sweep.
EffectiveField effective_field(double t, const ChirpPulse& pulse,
                               double packet_offset);

struct Hyperfine {
  double a;  ///< secular component, MHz
  double b;  ///< pseudo-secular component, MHz
};

/// Point-dipole secular/pseudo-secular decomposition at orientation beta:
/// A = d*(3cos^2(beta) - 1), B = (3/2)*d*sin(2*beta). This is a pinned
/// convention for the anisotropic coupling, not a unique definition.
Hyperfine hyperfine_from_dipolar(double d, double beta);

}  // namespace chirpdnp
