#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <cmath>
#include <string>
#include <vector>

#include "beamsym/beam.hpp"
#include "beamsym/errors.hpp"
#include "beamsym/symmetry.hpp"

namespace beamsym {

enum class BoundaryCondition { clamped_clamped };

/// Clamped-clamped pencil K phi = omega^2 M phi on N uniform intervals. The
/// unknowns are the N-1 interior nodal values; phi = 0 at both ends and the
/// slope condition enters through the ghost value phi_{-1} = phi_1.
///
/// K = D2^T W F D2 with D2 the second difference on all N+1 nodes, F = diag(f)
/// and W the trapezoid weights, so phi^T K phi approximates the bending energy
/// integral of f phi''^2 (divided by h).
template <typename Scalar = double>
struct Discretization {
  using Sparse = Eigen::SparseMatrix<Scalar>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  int N = 0;
  Interval domain;
  BoundaryCondition bc = BoundaryCondition::clamped_clamped;
  Scalar h{0};
  Vector nodes;       // all N+1 nodes
  Vector stiffness;   // f at all nodes
  Vector mass;        // m at the interior nodes: the diagonal of M
  Sparse d2;          // (N+1) x (N-1)
  Vector weights;     // trapezoid weights on all nodes
  Sparse K;           // (N-1) x (N-1), pentadiagonal

  Eigen::Index unknowns() const { return N - 1; }

  /// phi^T K psi evaluated through the factored form, which avoids the
  /// cancellation of the assembled fourth difference.
  template <typename A, typename B>
  auto energy(const Eigen::MatrixBase<A>& phi, const Eigen::MatrixBase<B>& psi) const {
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a = d2 * phi, b = d2 * psi;
    return (a.transpose() * (weights.cwiseProduct(stiffness)).asDiagonal() * b).eval();
  }
};

template <typename Scalar = double>
Discretization<Scalar> assemble(const BeamProfile& beam, int N,
                                BoundaryCondition bc = BoundaryCondition::clamped_clamped) {
  if (N < 64) throw ValidationError("grid size N must be at least 64");
  Discretization<Scalar> d;
  d.N = N;
  d.domain = beam.domain();
  d.bc = bc;
  const Scalar a = d.domain.a, b = d.domain.b;
  d.h = (b - a) / Scalar(N);
  d.nodes.resize(N + 1);
  d.stiffness.resize(N + 1);
  d.weights.setOnes(N + 1);
  d.weights[0] = d.weights[N] = Scalar(0.5);
  d.mass.resize(N - 1);
  for (int i = 0; i <= N; ++i) {
    d.nodes[i] = a + d.h * Scalar(i);
    const double x = static_cast<double>(d.nodes[i]);
    const double f = beam.f_value(x);
    if (!(f > 0.0)) throw DomainError("flexural rigidity must be positive on the grid", x);
    d.stiffness[i] = Scalar(f);
    if (i > 0 && i < N) {
      const double m = beam.m_value(x);
      if (!(m > 0.0)) throw DomainError("mass density must be positive on the grid", x);
      d.mass[i - 1] = Scalar(m);
    }
  }

  const Scalar inv_h2 = Scalar(1) / (d.h * d.h);
  std::vector<Eigen::Triplet<Scalar>> t;
  t.reserve(3 * static_cast<std::size_t>(N));
  // Row i is phi'' at node i; column j is interior unknown j+1.
  auto put = [&](int row, int node, Scalar v) {
    if (node >= 1 && node <= N - 1) t.emplace_back(row, node - 1, v * inv_h2);
  };
  put(0, 1, Scalar(2));
  put(N, N - 1, Scalar(2));
  for (int i = 1; i < N; ++i) {
    put(i, i - 1, Scalar(1));
    put(i, i, Scalar(-2));
    put(i, i + 1, Scalar(1));
  }
  d.d2.resize(N + 1, N - 1);
  d.d2.setFromTriplets(t.begin(), t.end());
  const typename Discretization<Scalar>::Vector wf = d.weights.cwiseProduct(d.stiffness);
  d.K = (d.d2.transpose() * wf.asDiagonal() * d.d2).pruned();
  d.K.makeCompressed();
  return d;
}

struct Spectrum {
  int N = 0;
  Interval domain;
  std::vector<double> omega;      // ascending
  std::vector<double> residual;   // ||K x - w^2 M x|| / (w^2 ||M x||) per mode
  Eigen::MatrixXd modes;          // (N+1) x n, zero at the ends, unit max norm
  int iterations = 0;
};

/// Smallest n_modes eigenpairs by subspace inverse iteration (sigma = 0) with
/// Rayleigh-Ritz on the energy form. Deterministic: sine start block, fixed caps.
template <typename Scalar = double>
Spectrum solve_spectrum(const Discretization<Scalar>& d, int n_modes);

/// omega_k = (beta_k / length)^2 with cos(beta) cosh(beta) = 1.
std::vector<double> uniform_frequencies(int n, double length);
/// The k-th positive root beta_k (k >= 1) of cos(beta) cosh(beta) = 1.
double clamped_root(int k);
/// Clamped-clamped mode shape of the uniform beam of length L at X in [0, L].
double clamped_mode_shape(int k, double X, double length);

/// Spectra at N/4, N/2 and N with per-mode self-convergence data.
struct ConvergenceStudy {
  std::vector<int> levels;                 // N/4, N/2, N
  std::vector<Spectrum> spectra;           // one per level
  std::vector<double> richardson;          // omega_N + (omega_N - omega_{N/2})/3
  std::vector<double> observed_order;      // log2 of successive-difference ratio
  std::vector<double> error_estimate;      // |omega_N - richardson|
};

ConvergenceStudy convergence_study(const BeamProfile& beam, int N, int n_modes);

struct IsospectralMode {
  int index = 0;
  double omega = 0.0, reference = 0.0, deviation = 0.0;
  double richardson = 0.0, richardson_deviation = 0.0;
  double observed_order = 0.0;
  double order_coarse = 0.0, order_fine = 0.0;  // log2(err ratio) vs the reference
  double shape_deviation = 0.0;                 // mapped eigenfunction vs uniform mode
  double shape_estimate = 0.0;                  // N vs N/2 difference of the mapped eigenfunction
  bool within_tol = false;
};

struct IsospectralReport {
  std::string beam;
  int N = 0;
  double tol = 0.0;
  double length = 0.0;  // g(b) - g(a)
  std::vector<int> levels;
  std::vector<IsospectralMode> modes;
  bool passed = false;
};

/// Raised when the profile is not in the uniform beam's class.
class IsospectralRefusal : public ValidationError {
 public:
  IsospectralRefusal(const std::string& what, Classification cls)
      : ValidationError(what), classification_(std::move(cls)) {}
  const Classification& classification() const { return classification_; }

 private:
  Classification classification_;
};

IsospectralReport isospectral_check(const BeamProfile& beam, int n_modes, int N, double tol);

}  // namespace beamsym
