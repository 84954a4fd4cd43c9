#include "model/system.hpp"

#include <cmath>
#include <stdexcept>

namespace nvqc {

double SystemParams::dressed_splitting() const {
  const double wn = omega_n();
  return std::sqrt((wn + a_zz) * (wn + a_zz) + a_zx * a_zx + a_zy * a_zy);
}

double SystemParams::t_hf() const {
  return 2.0 * kTwoPi / std::sqrt(a_zx * a_zx + a_zz * a_zz + a_zy * a_zy);
}

void SystemParams::validate() const {
  if (!(zero_field_splitting > 0.0)) throw std::invalid_argument("D must be positive");
  if (!(b0 > 0.0)) throw std::invalid_argument("B0 must be positive");
  if (!(gamma_e > 0.0)) throw std::invalid_argument("gamma_e must be positive");
  if (!(gamma_n > 0.0)) throw std::invalid_argument("gamma_n must be positive");
}

std::pair<double, double> rotate_hyperfine_frame(double a_zx, double a_zy) {
  return {std::sqrt(a_zx * a_zx + a_zy * a_zy), 0.0};
}

SystemParams rotate_hyperfine_frame(SystemParams p) {
  const auto [azx, azy] = rotate_hyperfine_frame(p.a_zx, p.a_zy);
  p.a_zx = azx;
  p.a_zy = azy;
  return p;
}

Channel transition_channel(Transition t) {
  switch (t) {
    case Transition::N00_01:
    case Transition::N10_11:
      return Channel::RF;
    default:
      return Channel::MW;
  }
}

std::string transition_name(Transition t) {
  switch (t) {
    case Transition::N00_01: return "n_00_01";
    case Transition::N10_11: return "n_10_11";
    case Transition::E00_10: return "e_00_10";
    case Transition::E01_11: return "e_01_11";
    case Transition::E_NONSEL: return "e_nonselective";
  }
  return "unknown";
}

double channel_amplitude_bound(Channel c) {
  return c == Channel::MW ? mhz_to_rad_us(30.0) : mhz_to_rad_us(0.040);
}

DriftFrequencies drift_frequencies(const SystemParams& p) {
  const double d = p.zero_field_splitting;
  const double ze = p.gamma_e * p.b0;
  const double zn = p.gamma_n * p.b0;
  DriftFrequencies w;
  w.w00 = -2.0 / 3.0 * d - 0.5 * zn;
  w.w01 = -2.0 / 3.0 * d + 0.5 * zn;
  w.w10 = d / 3.0 - ze - 0.5 * zn;
  w.w11 = d / 3.0 - ze + 0.5 * zn;
  return w;
}

EnergySpectrum eigen_energies(const SystemParams& p) {
  const DriftFrequencies w = drift_frequencies(p);
  const double center = p.zero_field_splitting / 3.0 - p.gamma_e * p.b0;
  const double half_split = 0.5 * p.dressed_splitting();
  EnergySpectrum e;
  e.w00 = w.w00;
  e.w01 = w.w01;
  e.w10 = center - half_split;
  e.w11 = center + half_split;
  return e;
}

double level_splitting(const SystemParams& p, int upper, int lower) {
  const EnergySpectrum e = eigen_energies(p);
  const double levels[4] = {e.w00, e.w01, e.w10, e.w11};
  if (upper < 0 || upper > 3 || lower < 0 || lower > 3) {
    throw std::invalid_argument("level index out of range");
  }
  return levels[upper] - levels[lower];
}

double transition_frequency(const SystemParams& p, Transition t) {
  switch (t) {
    case Transition::N00_01: return level_splitting(p, 1, 0);
    case Transition::N10_11: return level_splitting(p, 3, 2);
    case Transition::E00_10: return level_splitting(p, 2, 0);
    case Transition::E01_11: return level_splitting(p, 3, 1);
    case Transition::E_NONSEL:
      return 0.5 * (level_splitting(p, 2, 0) + level_splitting(p, 3, 1));
  }
  throw std::invalid_argument("unknown transition");
}

Matrix4 hf_rotating(const SystemParams& p, double t) {
  Matrix4 h = Matrix4::Zero();
  const double wn = p.omega_n();
  const Complex phase(std::cos(wn * t), -std::sin(wn * t));
  const Complex coupling = -0.5 * Complex(p.a_zx, -p.a_zy) * phase;
  h(2, 2) = -0.5 * p.a_zz;
  h(3, 3) = 0.5 * p.a_zz;
  h(2, 3) = coupling;
  h(3, 2) = std::conj(coupling);
  return h;
}

namespace {

void check_amplitude_bound(const ChannelDrive& d) {
  const double bound = channel_amplitude_bound(d.channel);
  if (d.max_abs_amplitude > bound * (1.0 + 1e-12)) {
    throw std::invalid_argument("drive amplitude " + std::to_string(d.max_abs_amplitude) +
                                " rad/us exceeds channel bound " + std::to_string(bound));
  }
}

}  // namespace

Matrix4 control_rotating(const SystemParams& p, std::span<const ChannelDrive> drives,
                         double t) {
  Matrix4 h = Matrix4::Zero();
  for (const ChannelDrive& d : drives) {
    check_amplitude_bound(d);
    const double omega = d.amplitude ? d.amplitude(t) : 0.0;
    if (omega == 0.0) continue;
    const double arg = -(d.detuning(p) * t + d.phase);
    const Complex entry = 0.5 * omega * Complex(std::cos(arg), std::sin(arg));
    if (d.channel == Channel::MW) {
      h(0, 2) += entry;
      h(1, 3) += entry;
      h(2, 0) += std::conj(entry);
      h(3, 1) += std::conj(entry);
    } else {
      h(0, 1) += entry;
      h(2, 3) += entry;
      h(1, 0) += std::conj(entry);
      h(3, 2) += std::conj(entry);
    }
  }
  return h;
}

Matrix4 total_hamiltonian(const SystemParams& p, std::span<const ChannelDrive> drives,
                          double t) {
  return hf_rotating(p, t) + control_rotating(p, drives, t);
}

Matrix4 control_no_rwa(const SystemParams& p, std::span<const ChannelDrive> drives,
                       double t) {
  Matrix4 h = Matrix4::Zero();
  for (const ChannelDrive& d : drives) {
    check_amplitude_bound(d);
    const double omega = d.amplitude ? d.amplitude(t) : 0.0;
    if (omega == 0.0) continue;
    // carrier cos(w_c t - phi) retained in full; averaging the co-rotating
    // term reproduces the RWA entry with its e^{-i phi} convention
    const double wave = omega * std::cos(d.carrier * t - d.phase);
    const double frame = d.channel == Channel::MW ? p.omega_e() : p.omega_n();
    const Complex entry = wave * Complex(std::cos(frame * t), -std::sin(frame * t));
    if (d.channel == Channel::MW) {
      h(0, 2) += entry;
      h(1, 3) += entry;
      h(2, 0) += std::conj(entry);
      h(3, 1) += std::conj(entry);
    } else {
      h(0, 1) += entry;
      h(2, 3) += entry;
      h(1, 0) += std::conj(entry);
      h(3, 2) += std::conj(entry);
    }
  }
  return h;
}

TimeGrid GridPolicy::make(double duration, double f_max_linear_mhz) const {
  TimeGrid grid;
  grid.total_time = duration;
  const double wanted = duration * steps_per_period * f_max_linear_mhz;
  grid.n_steps = static_cast<long>(std::ceil(wanted));
  if (grid.n_steps < min_steps) grid.n_steps = min_steps;
  return grid;
}

double max_content_frequency(const SystemParams& p, std::span<const ChannelDrive> drives,
                             bool no_rwa) {
  double w_max = p.omega_n();
  for (const ChannelDrive& d : drives) {
    w_max = std::max(w_max, std::abs(d.detuning(p)));
    w_max = std::max(w_max, d.max_modulation_freq);
    w_max = std::max(w_max, d.max_abs_amplitude);
    if (no_rwa) {
      const double frame = d.channel == Channel::MW ? p.omega_e() : p.omega_n();
      w_max = std::max(w_max, frame + d.carrier);
    }
  }
  return rad_us_to_mhz(w_max);
}

}  // namespace nvqc
