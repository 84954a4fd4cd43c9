#ifndef NVQC_PULSE_PULSES_HPP
#define NVQC_PULSE_PULSES_HPP

#include <span>
#include <vector>

#include "core/rng.hpp"
#include "model/system.hpp"

// The two pulse families: constant rotations used for state preparation and
// readout, and the shaped microwave pulse with flat-top envelope and
// random-basis trigonometric modulation.

namespace nvqc {

struct ConstantPulse {
  Transition transition = Transition::E01_11;
  double theta = 0.0;     // signed rotation angle, rad
  double phi = 0.0;       // rotation-axis phase, rad (0 -> x, pi/2 -> y)
  double duration = 0.0;  // us

  double amplitude() const { return theta / duration; }  // rad/us
  void validate() const;  // positive duration, channel amplitude bound
};

struct EnvelopeSpec {
  double rise_fraction = 0.1;  // t_r = rise_fraction * T
  double sigma_ratio = 0.25;   // sigma = sigma_ratio * t_r

  double rise_time(double total) const { return rise_fraction * total; }
  double sigma(double total) const { return sigma_ratio * rise_time(total); }
  double alpha(double total) const;
};

// flat-top with Gaussian flanks; 0 at both ends, 1 on the plateau
double envelope_value(const EnvelopeSpec& env, double total, double t);

struct DcrabTerm {
  double a = 0.0;      // sin coefficient
  double b = 0.0;      // cos coefficient
  double omega = 0.0;  // rad/us
};

struct DcrabBasis {
  int super_iteration = 0;
  std::vector<DcrabTerm> terms;
};

// sum over all super-iterations of a_k sin(w_k t) + b_k cos(w_k t)
double modulation_value(std::span<const DcrabBasis> basis, double t);

struct ShapedPulse {
  double omega0 = 0.0;    // constant amplitude prefactor, rad/us
  double carrier = 0.0;   // rad/us, lab frequency
  double phase = 0.0;     // rad
  double duration = 0.0;  // us
  EnvelopeSpec envelope;
  std::vector<DcrabBasis> modulation;

  double max_modulation_omega() const;  // rad/us, 0 when unmodulated
};

// omega0 * g(t) * f(t), hard-clipped to the microwave channel bound
double shaped_amplitude(const ShapedPulse& p, double t);

// one frequency per basis index k = 1..n_basis, uniform in
// [2pi(k-1)/T, 2pi k/T]; deterministic given the generator state
std::vector<double> draw_random_frequencies(double total, int n_basis, Rng& rng);

ChannelDrive compile_to_channel(const ConstantPulse& pulse, const SystemParams& p);
ChannelDrive compile_to_channel(const ShapedPulse& pulse, const SystemParams& p);

// analytic rotation the pulse would realize on its own transition block with
// perfect selectivity and no cross-talk (E_NONSEL rotates both blocks)
UnitaryOp ideal_unitary(const ConstantPulse& pulse);

// full rotating-frame simulation over the pulse's own time window [0, T]
UnitaryOp simulate_pulse(const ConstantPulse& pulse, const SystemParams& p,
                         const GridPolicy& policy);
UnitaryOp simulate_pulse(const ShapedPulse& pulse, const SystemParams& p,
                         const GridPolicy& policy);

}  // namespace nvqc

#endif
