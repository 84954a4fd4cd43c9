#ifndef NVQC_CORE_ALGEBRA_HPP
#define NVQC_CORE_ALGEBRA_HPP

#include <Eigen/Dense>
#include <complex>
#include <functional>

// Dense complex linear algebra on the 4-dimensional computational space:
// states, propagators, Hermitian matrix exponentials, piecewise-constant
// time evolution and the Uhlmann state fidelity.

namespace nvqc {

using Matrix4 = Eigen::Matrix4cd;
using Vector4 = Eigen::Vector4cd;
using Complex = std::complex<double>;

// max-norm of the anti-Hermitian part, used for precondition checks
double hermiticity_residual(const Matrix4& m);

// max-norm of U†U - I
double unitarity_residual(const Matrix4& u);

struct DensityMatrix {
  Matrix4 mat = Matrix4::Zero();

  static DensityMatrix pure(const Vector4& psi);
  static DensityMatrix basis_state(int index);
  static DensityMatrix maximally_mixed();

  double population(int index) const { return mat(index, index).real(); }
  double purity() const { return (mat * mat).trace().real(); }

  // throws std::invalid_argument when Hermiticity/trace/PSD tolerances are violated
  void validate(double herm_tol = 1e-12, double trace_tol = 1e-12,
                double psd_tol = 1e-10) const;
};

struct UnitaryOp {
  Matrix4 mat = Matrix4::Identity();

  UnitaryOp() = default;
  explicit UnitaryOp(const Matrix4& m) : mat(m) {}

  UnitaryOp adjoint() const { return UnitaryOp(mat.adjoint()); }
  void validate(double tol = 1e-10) const;
};

inline UnitaryOp operator*(const UnitaryOp& a, const UnitaryOp& b) {
  return UnitaryOp(a.mat * b.mat);
}

struct TimeGrid {
  double total_time = 0.0;  // us
  long n_steps = 1;

  double step() const { return total_time / static_cast<double>(n_steps); }
  void validate() const;  // n_steps >= 1, step > 0
};

using HamiltonianSampler = std::function<Matrix4(double)>;

// exp(-i H dt) through Hermitian eigendecomposition; rejects non-Hermitian input
UnitaryOp hermitian_expm(const Matrix4& h, double dt, double herm_tol = 1e-10);

// ordered product of step propagators, H sampled at step midpoints
UnitaryOp propagate(const HamiltonianSampler& h_of_t, const TimeGrid& grid);

// U rho U†, re-symmetrized against roundoff
DensityMatrix apply_channel(const UnitaryOp& u, const DensityMatrix& rho);

// canonical state fidelity [Tr sqrt(sqrt(rho) sigma sqrt(rho))]^2,
// eigenvalues below psd_clip treated as zero before square roots
double uhlmann_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma,
                        double psd_clip = 1e-10);

}  // namespace nvqc

#endif
