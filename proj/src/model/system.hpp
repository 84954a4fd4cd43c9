#ifndef NVQC_MODEL_SYSTEM_HPP
#define NVQC_MODEL_SYSTEM_HPP

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "core/algebra.hpp"
#include "core/units.hpp"

// NV-13C physics: parameters, drift spectrum, hyperfine-dressed eigenenergies
// and the time-dependent rotating-frame Hamiltonian, plus the pre-RWA control
// form used to validate the rotating-wave approximation.
//
// Basis ordering |m_s m_I> = {|00>, |01>, |10>, |11>}, electron index first
// (0 = m_s=0, 1 = m_s=-1; 0 = m_I=+1/2, 1 = m_I=-1/2).

namespace nvqc {

struct SystemParams {
  double zero_field_splitting = mhz_to_rad_us(2870.0);  // D, rad/us
  double b0 = 600.0;                                    // Gauss
  double gamma_e = mhz_to_rad_us(2.8025);               // rad/us/G (inferred constant)
  double gamma_n = mhz_to_rad_us(1.0705e-3);            // rad/us/G (inferred constant)
  double a_zz = mhz_to_rad_us(2.281);                   // rad/us
  double a_zx = mhz_to_rad_us(0.339);                   // rad/us
  double a_zy = 0.0;                                    // rad/us

  static SystemParams nominal() { return SystemParams{}; }

  double omega_e() const { return zero_field_splitting - gamma_e * b0; }
  double omega_n() const { return gamma_n * b0; }

  // sqrt((omega_n + A_zz)^2 + A_zx^2 + A_zy^2), the dressed m_s=-1 splitting
  double dressed_splitting() const;

  // characteristic hyperfine duration 2*2pi/sqrt(A_zx^2 + A_zz^2), us
  double t_hf() const;

  void validate() const;  // throws on non-positive D, B0, gammas
};

// rotates the transverse hyperfine components into the x axis;
// returns (sqrt(A_zx^2 + A_zy^2), 0)
std::pair<double, double> rotate_hyperfine_frame(double a_zx, double a_zy);
SystemParams rotate_hyperfine_frame(SystemParams p);

enum class Transition { N00_01, N10_11, E00_10, E01_11, E_NONSEL };
enum class Channel { MW, RF };

Channel transition_channel(Transition t);
std::string transition_name(Transition t);

// realistic drive-strength limits, rad/us
double channel_amplitude_bound(Channel c);

struct DriftFrequencies {
  double w00, w01, w10, w11;  // rad/us
};

struct EnergySpectrum {
  double w00, w01, w10, w11;  // rad/us, hyperfine-dressed
};

DriftFrequencies drift_frequencies(const SystemParams& p);
EnergySpectrum eigen_energies(const SystemParams& p);

// energy difference of the named transition (upper minus lower level);
// E_NONSEL resolves to the mean of the two electron transitions
double transition_frequency(const SystemParams& p, Transition t);

// signed level-pair difference, levels indexed 0..3 in basis order
double level_splitting(const SystemParams& p, int upper, int lower);

// one active drive as seen by the control Hamiltonian; amplitude is a real
// profile over local pulse time [0, duration]
struct ChannelDrive {
  Channel channel = Channel::MW;
  std::function<double(double)> amplitude;  // rad/us
  double phase = 0.0;                       // rad
  double carrier = 0.0;                     // rad/us, lab frequency
  double duration = 0.0;                    // us
  double max_abs_amplitude = 0.0;           // rad/us, for bounds and grids
  double max_modulation_freq = 0.0;         // rad/us, highest envelope content

  double detuning(const SystemParams& p) const {
    return channel == Channel::MW ? p.omega_e() - carrier : p.omega_n() - carrier;
  }
};

Matrix4 hf_rotating(const SystemParams& p, double t);
Matrix4 control_rotating(const SystemParams& p, std::span<const ChannelDrive> drives,
                         double t);
Matrix4 total_hamiltonian(const SystemParams& p, std::span<const ChannelDrive> drives,
                          double t);

// pre-RWA control in the rotating frame (full cosine carrier retained on the
// channel's own entries); combined with hf_rotating for RWA validation runs
Matrix4 control_no_rwa(const SystemParams& p, std::span<const ChannelDrive> drives,
                       double t);

struct GridPolicy {
  double steps_per_period = 200.0;
  long min_steps = 32;

  TimeGrid make(double duration, double f_max_linear_mhz) const;
};

// largest oscillation frequency present in the rotating-frame Hamiltonian for
// the given drives (detunings, omega_n, modulation content; the peak Rabi rate
// is folded in as a conservative floor), linear MHz
double max_content_frequency(const SystemParams& p, std::span<const ChannelDrive> drives,
                             bool no_rwa = false);

}  // namespace nvqc

#endif
