#include "metrics/metrics.hpp"

#include <cmath>

namespace nvqc {

UnitaryOp target_gate() {
  Matrix4 u = Matrix4::Zero();
  const Complex mi(0.0, -1.0);
  u(0, 0) = 1.0;
  u(2, 2) = 1.0;
  u(1, 3) = mi;
  u(3, 1) = mi;
  return UnitaryOp(u);
}

DensityMatrix probe_rho1() {
  DensityMatrix rho;
  rho.mat = Matrix4::Zero();
  for (int i = 0; i < 4; ++i) rho.mat(i, i) = kRho1Diagonal[static_cast<std::size_t>(i)];
  return rho;
}

DensityMatrix probe_rho2() {
  DensityMatrix rho;
  rho.mat = Matrix4::Constant(0.25);
  return rho;
}

FomReport make_fom_report(double term_rho1, double term_rho2) {
  FomReport r;
  r.term_rho1 = term_rho1;
  r.term_rho2 = term_rho2;
  r.f_j_raw = term_rho1 + term_rho2;
  r.f_j_normalized = 0.5 * (term_rho1 / rho1_diagonal_norm() + term_rho2);
  return r;
}

double gate_fidelity_sm(const UnitaryOp& u, const UnitaryOp& target) {
  const Complex overlap = (target.mat.adjoint() * u.mat).trace();
  return std::norm(overlap) / 16.0;
}

FomReport fj_ideal(const Channel4& channel) {
  const UnitaryOp targ = target_gate();
  const DensityMatrix rho1 = probe_rho1();
  const DensityMatrix rho2 = probe_rho2();
  const Matrix4 targ_rho1 = targ.mat * rho1.mat * targ.mat.adjoint();
  const Matrix4 targ_rho2 = targ.mat * rho2.mat * targ.mat.adjoint();
  const double term1 = (targ_rho1 * channel(rho1).mat).trace().real();
  const double term2 = (targ_rho2 * channel(rho2).mat).trace().real();
  return make_fom_report(term1, term2);
}

namespace {

double electron_ground_population(const Matrix4& rho) {
  return rho(0, 0).real() + rho(1, 1).real();
}

}  // namespace

double readout_contrast(const UnitaryOp& pi_pulse) {
  const DensityMatrix from00 = apply_channel(pi_pulse, DensityMatrix::basis_state(0));
  const DensityMatrix from01 = apply_channel(pi_pulse, DensityMatrix::basis_state(1));
  return std::abs(electron_ground_population(from00.mat) -
                  electron_ground_population(from01.mat));
}

}  // namespace nvqc
