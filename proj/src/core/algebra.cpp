#include "core/algebra.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace nvqc {

double hermiticity_residual(const Matrix4& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_residual(const Matrix4& u) {
  return (u.adjoint() * u - Matrix4::Identity()).cwiseAbs().maxCoeff();
}

DensityMatrix DensityMatrix::pure(const Vector4& psi) {
  const Vector4 n = psi / psi.norm();
  DensityMatrix rho;
  rho.mat = n * n.adjoint();
  return rho;
}

DensityMatrix DensityMatrix::basis_state(int index) {
  Vector4 psi = Vector4::Zero();
  psi(index) = 1.0;
  return pure(psi);
}

DensityMatrix DensityMatrix::maximally_mixed() {
  DensityMatrix rho;
  rho.mat = 0.25 * Matrix4::Identity();
  return rho;
}

void DensityMatrix::validate(double herm_tol, double trace_tol, double psd_tol) const {
  const double herm = hermiticity_residual(mat);
  if (herm > herm_tol) {
    std::ostringstream msg;
    msg << "density matrix not Hermitian, residual " << herm;
    throw std::invalid_argument(msg.str());
  }
  const double trace_err = std::abs(mat.trace().real() - 1.0) + std::abs(mat.trace().imag());
  if (trace_err > trace_tol) {
    std::ostringstream msg;
    msg << "density matrix trace differs from 1 by " << trace_err;
    throw std::invalid_argument(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<Matrix4> es(0.5 * (mat + mat.adjoint()),
                                            Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -psd_tol) {
    std::ostringstream msg;
    msg << "density matrix not PSD, min eigenvalue " << es.eigenvalues().minCoeff();
    throw std::invalid_argument(msg.str());
  }
}

void UnitaryOp::validate(double tol) const {
  const double r = unitarity_residual(mat);
  if (r > tol) {
    std::ostringstream msg;
    msg << "operator not unitary, residual " << r;
    throw std::invalid_argument(msg.str());
  }
}

void TimeGrid::validate() const {
  if (n_steps < 1) throw std::invalid_argument("time grid needs n_steps >= 1");
  if (!(step() > 0.0)) throw std::invalid_argument("time grid needs positive step");
}

UnitaryOp hermitian_expm(const Matrix4& h, double dt, double herm_tol) {
  const double herm = hermiticity_residual(h);
  if (herm > herm_tol) {
    std::ostringstream msg;
    msg << "hermitian_expm: generator not Hermitian, residual " << herm;
    throw std::invalid_argument(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<Matrix4> es(0.5 * (h + h.adjoint()));
  Vector4 phases;
  for (int i = 0; i < 4; ++i) {
    const double angle = -es.eigenvalues()(i) * dt;
    phases(i) = Complex(std::cos(angle), std::sin(angle));
  }
  UnitaryOp u;
  u.mat = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
  return u;
}

UnitaryOp propagate(const HamiltonianSampler& h_of_t, const TimeGrid& grid) {
  grid.validate();
  const double dt = grid.step();
  Matrix4 u = Matrix4::Identity();
  for (long k = 0; k < grid.n_steps; ++k) {
    const double t_mid = (static_cast<double>(k) + 0.5) * dt;
    const Matrix4 h = h_of_t(t_mid);
    u = hermitian_expm(h, dt).mat * u;
  }
  return UnitaryOp(u);
}

DensityMatrix apply_channel(const UnitaryOp& u, const DensityMatrix& rho) {
  DensityMatrix out;
  const Matrix4 m = u.mat * rho.mat * u.mat.adjoint();
  out.mat = 0.5 * (m + m.adjoint());
  return out;
}

namespace {

Matrix4 psd_sqrt(const Matrix4& m, double psd_clip) {
  Eigen::SelfAdjointEigenSolver<Matrix4> es(0.5 * (m + m.adjoint()));
  Vector4 roots;
  for (int i = 0; i < 4; ++i) {
    const double lam = es.eigenvalues()(i);
    roots(i) = lam > psd_clip ? std::sqrt(lam) : 0.0;
  }
  return es.eigenvectors() * roots.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

double uhlmann_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma,
                        double psd_clip) {
  const Matrix4 sqrt_rho = psd_sqrt(rho.mat, psd_clip);
  const Matrix4 inner = sqrt_rho * sigma.mat * sqrt_rho;
  Eigen::SelfAdjointEigenSolver<Matrix4> es(0.5 * (inner + inner.adjoint()),
                                            Eigen::EigenvaluesOnly);
  double trace_sqrt = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double lam = es.eigenvalues()(i);
    if (lam > 0.0) trace_sqrt += std::sqrt(lam);
  }
  const double f = trace_sqrt * trace_sqrt;
  return f < 1.0 ? f : 1.0;
}

}  // namespace nvqc
