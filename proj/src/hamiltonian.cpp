#include "chirpdnp/hamiltonian.hpp"

#include <cmath>

namespace chirpdnp {

namespace {
// Slack applied to pulse time-range checks; one part in 1e9 of the duration
// absorbs accumulated floating-point stepping error at the window edges.
double time_slack(double duration) { return 1e-9 * (duration + 1.0); }
}  // namespace

SpinSystemParams SpinSystemParams::from_dipolar(double omega0n, double d,
                                                double beta,
                                                double packet_offset,
                                                int nuclear_zeeman_sign) {
  SpinSystemParams p;
  p.omega0n = omega0n;
  const Hyperfine hf = hyperfine_from_dipolar(d, beta);
  p.hf_a = hf.a;
  p.hf_b = hf.b;
  p.packet_offset = packet_offset;
  p.nuclear_zeeman_sign = nuclear_zeeman_sign;
  p.dipolar_d = d;
  p.beta = beta;
  return p;
}

void SpinSystemParams::validate() const {
  if (!(omega0n > 0.0))
    throw ValidationError("omega0n", "nuclear Larmor frequency must be > 0");
  if (nuclear_zeeman_sign != 1 && nuclear_zeeman_sign != -1)
    throw ValidationError("nuclear_zeeman_sign", "must be +1 or -1");
  if (dipolar_d.has_value() != beta.has_value())
    throw ValidationError("dipolar_d/beta", "must be given together");
  if (dipolar_d) {
    const Hyperfine hf = hyperfine_from_dipolar(*dipolar_d, *beta);
    if (std::abs(hf.a - hf_a) > 1e-9 || std::abs(hf.b - hf_b) > 1e-9)
      throw ValidationError("hf_a/hf_b",
                            "disagree with the dipolar form d, beta");
  }
}

double ChirpPulse::duration() const {
  return std::abs(offset_end - offset_start) / rate;
}

double ChirpPulse::offset_at(double t) const {
  const double dur = duration();
  if (t < -time_slack(dur) || t > dur + time_slack(dur))
    throw TimeOutOfRange("chirp offset requested at t = " + std::to_string(t) +
                         " us outside [0, " + std::to_string(dur) + "]");
  const double dir = (offset_end >= offset_start) ? 1.0 : -1.0;
  return offset_start + dir * rate * t;
}

double ChirpPulse::time_at_offset(double x) const {
  const double lo = std::min(offset_start, offset_end);
  const double hi = std::max(offset_start, offset_end);
  if (x < lo || x > hi)
    throw TimeOutOfRange("offset " + std::to_string(x) +
                         " MHz lies outside the sweep window");
  return std::abs(x - offset_start) / rate;
}

void ChirpPulse::validate() const {
  if (!(rate > 0.0))
    throw ValidationError("rate", "sweep rate must be positive");
  if (!(omega1 >= 0.0))
    throw ValidationError("omega1", "microwave amplitude must be >= 0");
  if (offset_end == offset_start)
    throw ValidationError("offset_end", "sweep window has zero width");
}

namespace {
// Common core of the static and chirped 4x4 builders: microwave term with an
// arbitrary in-plane direction.
Mat4 build_four_level(const SpinSystemParams& p, double offset, double w1x,
                      double w1y) {
  const TwoSpinOps& t = two_spin_operators();
  Mat4 h = offset * t.sz + (p.nuclear_zeeman_sign * p.omega0n) * t.iz +
           p.hf_a * t.sz_iz + p.hf_b * t.sz_ix + w1x * t.sx + w1y * t.sy;
  return kTwoPi * h;
}
}  // namespace

Mat4 h_se_static(const SpinSystemParams& p, double offset, double omega1) {
  return build_four_level(p, offset, omega1, 0.0);
}

Mat2 h_chirp(double t, const ChirpPulse& pulse, double packet_offset) {
  const SpinHalfOps& s = spin_half_operators();
  const double delta = pulse.instantaneous_offset(t, packet_offset);
  Mat2 h = delta * s.z + pulse.omega1 * std::cos(pulse.phase) * s.x +
           pulse.omega1 * std::sin(pulse.phase) * s.y;
  return kTwoPi * h;
}

Mat4 h_ise(double t, const ChirpPulse& pulse, const SpinSystemParams& p) {
  const double delta = pulse.instantaneous_offset(t, p.packet_offset);
  return build_four_level(p, delta, pulse.omega1 * std::cos(pulse.phase),
                          pulse.omega1 * std::sin(pulse.phase));
}

EffectiveSe h_effective_se(Subspace kind, const SpinSystemParams& p,
                           double omega1) {
  if (p.omega0n == 0.0)
    throw ZeroNuclearLarmor("effective SE Hamiltonian undefined at omega0n = 0");
  const FictitiousBasis& f = fictitious_basis();
  EffectiveSe out;
  out.coefficient = omega1 * p.hf_b / (2.0 * p.omega0n);
  out.hamiltonian =
      kTwoPi * out.coefficient * (kind == Subspace::DQ ? f.dq_x : f.zq_x);
  return out;
}

MatchingOffsets matching_offsets(const SpinSystemParams& p, double omega1) {
  if (!(omega1 < p.omega0n))
    throw AmplitudeExceedsNuclearLarmor(
        "no real matching offset: omega1 = " + std::to_string(omega1) +
        " >= omega0n = " + std::to_string(p.omega0n));
  const double root = std::sqrt(p.omega0n * p.omega0n - omega1 * omega1);
  MatchingOffsets mo;
  mo.dq = p.packet_offset + p.nuclear_zeeman_sign * root;
  mo.zq = p.packet_offset - p.nuclear_zeeman_sign * root;
  return mo;
}

LzFactor lz_factor(double gap, double rate) {
  if (!(rate > 0.0))
    throw NonPositiveRate("Landau-Zener factor requires a positive sweep rate");
  const double gap_ang = kTwoPi * gap;
  const double rate_ang = kTwoPi * rate;
  LzFactor lz;
  lz.factor = kPi * gap_ang * gap_ang / (2.0 * rate_ang);
  // Half-gap exponent; identical to exp(-factor) in this convention.
  lz.p_diabatic =
      std::exp(-kTwoPi * (gap_ang / 2.0) * (gap_ang / 2.0) / rate_ang);
  return lz;
}

EffectiveField effective_field(double t, const ChirpPulse& pulse,
                               double packet_offset) {
  const double delta = pulse.instantaneous_offset(t, packet_offset);
  EffectiveField ef;
  ef.magnitude = std::hypot(delta, pulse.omega1);
  ef.theta = std::atan2(pulse.omega1, delta);
  return ef;
}

Hyperfine hyperfine_from_dipolar(double d, double beta) {
  const double c = std::cos(beta);
  return Hyperfine{d * (3.0 * c * c - 1.0), 1.5 * d * std::sin(2.0 * beta)};
}

}  // namespace chirpdnp
