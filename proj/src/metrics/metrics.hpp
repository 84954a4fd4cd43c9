#ifndef NVQC_METRICS_METRICS_HPP
#define NVQC_METRICS_METRICS_HPP

#include <array>
#include <cmath>
#include <functional>

#include "core/algebra.hpp"

// Figures of merit: the reference gate fidelity, the reduced two-state figure
// of merit (ideal-channel variant), and the readout contrast of the selective
// pi pulse, together with the fixed target gate and probe states.

namespace nvqc {

using Channel4 = std::function<DensityMatrix(const DensityMatrix&)>;

// conditional electron flip with the -i phase convention:
// identity on |00>,|10>, -i swap on |01> <-> |11>
UnitaryOp target_gate();

// diagonal probe populations and their target-gate image (second and fourth
// entries swapped)
constexpr std::array<double, 4> kRho1Diagonal = {0.23, 0.56, 0.06, 0.15};
constexpr std::array<double, 4> kRho1DiagonalSwapped = {0.23, 0.15, 0.06, 0.56};

inline double rho1_diagonal_norm() {
  double s = 0.0;
  for (double lam : kRho1Diagonal) s += lam * lam;
  return s;
}

DensityMatrix probe_rho1();  // diag(0.23, 0.56, 0.06, 0.15)
DensityMatrix probe_rho2();  // uniform 1/4 matrix

struct FomReport {
  double f_sm = std::nan("");  // reference gate fidelity when available
  double term_rho1 = 0.0;
  double term_rho2 = 0.0;
  double f_j_raw = 0.0;         // term_rho1 + term_rho2
  double f_j_normalized = 0.0;  // (term_rho1 / sum lambda^2 + term_rho2) / 2
};

FomReport make_fom_report(double term_rho1, double term_rho2);

// |Tr(target† U)|^2 / 16
double gate_fidelity_sm(const UnitaryOp& u, const UnitaryOp& target);

// two-state figure of merit evaluated directly on the channel with exact
// probes; this is the noiseless reference for the measured pipeline
FomReport fj_ideal(const Channel4& channel);

// population-difference merit of a candidate selective pi pulse on 01<->11
double readout_contrast(const UnitaryOp& pi_pulse);

}  // namespace nvqc

#endif
