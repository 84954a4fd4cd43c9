#include "pulse/pulses.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nvqc {

void ConstantPulse::validate() const {
  if (!(duration > 0.0)) throw std::invalid_argument("constant pulse needs duration > 0");
  const double bound = channel_amplitude_bound(transition_channel(transition));
  if (std::abs(amplitude()) > bound * (1.0 + 1e-12)) {
    throw std::invalid_argument("constant pulse amplitude " +
                                std::to_string(std::abs(amplitude())) +
                                " rad/us exceeds channel bound " + std::to_string(bound));
  }
}

double EnvelopeSpec::alpha(double total) const {
  const double tr = rise_time(total);
  const double s = sigma(total);
  return 1.0 - std::exp(-tr * tr / (2.0 * s * s));
}

double envelope_value(const EnvelopeSpec& env, double total, double t) {
  if (t < -1e-12 || t > total + 1e-12) {
    throw std::invalid_argument("envelope evaluated outside [0, T]");
  }
  t = std::clamp(t, 0.0, total);
  const double tr = env.rise_time(total);
  const double s = env.sigma(total);
  const double a = env.alpha(total);
  const double floor = std::exp(-tr * tr / (2.0 * s * s));
  if (t <= tr) {
    return (std::exp(-(t - tr) * (t - tr) / (2.0 * s * s)) - floor) / a;
  }
  if (t < total - tr) {
    return 1.0;
  }
  const double u = t - total + tr;
  return (std::exp(-u * u / (2.0 * s * s)) - floor) / a;
}

double modulation_value(std::span<const DcrabBasis> basis, double t) {
  double f = 0.0;
  for (const DcrabBasis& b : basis) {
    for (const DcrabTerm& term : b.terms) {
      f += term.a * std::sin(term.omega * t) + term.b * std::cos(term.omega * t);
    }
  }
  return f;
}

double ShapedPulse::max_modulation_omega() const {
  double w = 0.0;
  for (const DcrabBasis& b : modulation) {
    for (const DcrabTerm& term : b.terms) w = std::max(w, term.omega);
  }
  return w;
}

double shaped_amplitude(const ShapedPulse& p, double t) {
  const double raw = p.omega0 * envelope_value(p.envelope, p.duration, t) *
                     modulation_value(p.modulation, t);
  const double bound = channel_amplitude_bound(Channel::MW);
  return std::clamp(raw, -bound, bound);
}

std::vector<double> draw_random_frequencies(double total, int n_basis, Rng& rng) {
  if (n_basis < 1) throw std::invalid_argument("need at least one basis function");
  if (!(total > 0.0)) throw std::invalid_argument("need positive pulse duration");
  std::vector<double> omegas;
  omegas.reserve(static_cast<std::size_t>(n_basis));
  for (int k = 1; k <= n_basis; ++k) {
    const double lo = kTwoPi * static_cast<double>(k - 1) / total;
    const double hi = kTwoPi * static_cast<double>(k) / total;
    omegas.push_back(rng.uniform(lo, hi));
  }
  return omegas;
}

ChannelDrive compile_to_channel(const ConstantPulse& pulse, const SystemParams& p) {
  pulse.validate();
  ChannelDrive d;
  d.channel = transition_channel(pulse.transition);
  d.phase = pulse.phi;
  d.carrier = transition_frequency(p, pulse.transition);
  d.duration = pulse.duration;
  const double omega = pulse.amplitude();
  d.amplitude = [omega](double) { return omega; };
  d.max_abs_amplitude = std::abs(omega);
  d.max_modulation_freq = 0.0;
  return d;
}

ChannelDrive compile_to_channel(const ShapedPulse& pulse, const SystemParams& p) {
  if (!(pulse.duration > 0.0)) throw std::invalid_argument("shaped pulse needs duration > 0");
  ChannelDrive d;
  d.channel = Channel::MW;
  d.phase = pulse.phase;
  d.carrier = pulse.carrier;
  d.duration = pulse.duration;
  d.amplitude = [pulse](double t) { return shaped_amplitude(pulse, t); };

  // coarse deterministic scan for the realized peak; clipping caps it anyway
  double peak = 0.0;
  const int n_scan = 512;
  for (int i = 0; i <= n_scan; ++i) {
    const double t = pulse.duration * static_cast<double>(i) / n_scan;
    peak = std::max(peak, std::abs(shaped_amplitude(pulse, t)));
  }
  d.max_abs_amplitude = peak;

  // envelope flanks carry content up to ~1/sigma on top of the basis
  const double sigma = pulse.envelope.sigma(pulse.duration);
  d.max_modulation_freq = std::max(pulse.max_modulation_omega(),
                                   sigma > 0.0 ? 1.0 / sigma : 0.0);
  return d;
}

namespace {

void block_rotation(Matrix4& u, int i, int j, double theta, double phi) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  Matrix4 r = Matrix4::Identity();
  r(i, i) = c;
  r(j, j) = c;
  r(i, j) = Complex(0.0, -1.0) * Complex(std::cos(phi), -std::sin(phi)) * s;
  r(j, i) = Complex(0.0, -1.0) * Complex(std::cos(phi), std::sin(phi)) * s;
  u = r * u;
}

}  // namespace

UnitaryOp ideal_unitary(const ConstantPulse& pulse) {
  Matrix4 u = Matrix4::Identity();
  switch (pulse.transition) {
    case Transition::N00_01: block_rotation(u, 0, 1, pulse.theta, pulse.phi); break;
    case Transition::N10_11: block_rotation(u, 2, 3, pulse.theta, pulse.phi); break;
    case Transition::E00_10: block_rotation(u, 0, 2, pulse.theta, pulse.phi); break;
    case Transition::E01_11: block_rotation(u, 1, 3, pulse.theta, pulse.phi); break;
    case Transition::E_NONSEL:
      block_rotation(u, 0, 2, pulse.theta, pulse.phi);
      block_rotation(u, 1, 3, pulse.theta, pulse.phi);
      break;
  }
  return UnitaryOp(u);
}

namespace {

UnitaryOp simulate_drive(const ChannelDrive& drive, const SystemParams& p,
                         const GridPolicy& policy) {
  const std::span<const ChannelDrive> drives(&drive, 1);
  const double f_max = max_content_frequency(p, drives);
  const TimeGrid grid = policy.make(drive.duration, f_max);
  return propagate([&](double t) { return total_hamiltonian(p, drives, t); }, grid);
}

}  // namespace

UnitaryOp simulate_pulse(const ConstantPulse& pulse, const SystemParams& p,
                         const GridPolicy& policy) {
  return simulate_drive(compile_to_channel(pulse, p), p, policy);
}

UnitaryOp simulate_pulse(const ShapedPulse& pulse, const SystemParams& p,
                         const GridPolicy& policy) {
  return simulate_drive(compile_to_channel(pulse, p), p, policy);
}

}  // namespace nvqc
