#include "beamsym/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SparseCholesky>

#include <algorithm>
#include <numbers>
#include <sstream>

#include "beamsym/equivalence.hpp"

namespace beamsym {

template <typename Scalar>
Spectrum solve_spectrum(const Discretization<Scalar>& d, int n_modes) {
  using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index n = d.unknowns();
  if (n_modes < 1) throw ValidationError("n_modes must be positive");
  if (n_modes > d.N / 4) throw ValidationError("n_modes must not exceed N/4");
  const Eigen::Index block = std::min<Eigen::Index>(n, std::max(2 * n_modes, n_modes + 8));

  Eigen::SimplicialLDLT<typename Discretization<Scalar>::Sparse> solver(d.K);
  if (solver.info() != Eigen::Success) throw ConvergenceError("stiffness factorization failed");

  Dense X(n, block);
  for (Eigen::Index j = 0; j < block; ++j)
    for (Eigen::Index i = 0; i < n; ++i)
      X(i, j) = std::sin(std::numbers::pi_v<Scalar> * Scalar(j + 1) * Scalar(i + 1) / Scalar(d.N));

  constexpr int max_iterations = 400;
  // Ritz values settle onto a rounding floor near 1e-13; discretization error is far above.
  const Scalar tol = Scalar(1e-11);
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> lambda, previous;
  int it = 0;
  bool converged = false;
  for (; it < max_iterations && !converged; ++it) {
    const Dense Y = solver.solve(d.mass.asDiagonal() * X);
    Dense Kr = d.energy(Y, Y);
    Dense Mr = Y.transpose() * d.mass.asDiagonal() * Y;
    Kr = (Kr + Kr.transpose()).eval() / Scalar(2);
    Mr = (Mr + Mr.transpose()).eval() / Scalar(2);
    Eigen::GeneralizedSelfAdjointEigenSolver<Dense> ritz(Kr, Mr);
    if (ritz.info() != Eigen::Success) throw ConvergenceError("Rayleigh-Ritz step failed");
    X = Y * ritz.eigenvectors();
    lambda = ritz.eigenvalues().head(n_modes);
    if (it > 0) {
      const Scalar change = ((lambda - previous).cwiseAbs().array() / lambda.array()).maxCoeff();
      converged = change <= tol;
    }
    previous = lambda;
  }

  Spectrum s;
  s.N = d.N;
  s.domain = d.domain;
  s.iterations = it;
  s.modes = Eigen::MatrixXd::Zero(d.N + 1, n_modes);
  for (int k = 0; k < n_modes; ++k) {
    const auto x = X.col(k);
    const auto mx = (d.mass.asDiagonal() * x).eval();
    const Scalar r = (d.K * x - lambda[k] * mx).norm() / (lambda[k] * mx.norm());
    s.residual.push_back(static_cast<double>(r));
    s.omega.push_back(static_cast<double>(std::sqrt(lambda[k])));
    Eigen::Index peak = 0;
    x.cwiseAbs().maxCoeff(&peak);
    const Scalar scale = x[peak];
    for (Eigen::Index i = 0; i < n; ++i) s.modes(i + 1, k) = static_cast<double>(x[i] / scale);
  }
  const bool ordered = std::adjacent_find(s.omega.begin(), s.omega.end(), std::greater_equal<>()) == s.omega.end();
  if (!converged || !ordered) {
    std::ostringstream msg;
    msg.precision(3);
    msg << "eigensolver did not converge after " << it << " iterations; residual norms:";
    for (double r : s.residual) msg << ' ' << r;
    throw ConvergenceError(msg.str());
  }
  return s;
}

template Spectrum solve_spectrum<double>(const Discretization<double>&, int);
template Spectrum solve_spectrum<long double>(const Discretization<long double>&, int);

// ---------------------------------------------------------------------------
// Uniform-beam reference

double clamped_root(int k) {
  if (k < 1) throw ValidationError("mode index must be at least 1");
  // cos(b) - sech(b) = 0 is cos(b) cosh(b) = 1 without overflow; one root per
  // [k pi, (k+1) pi].
  auto h = [](double b) { return std::cos(b) - 1.0 / std::cosh(b); };
  auto dh = [](double b) { return -std::sin(b) + std::tanh(b) / std::cosh(b); };
  double lo = k * std::numbers::pi, hi = (k + 1) * std::numbers::pi;
  const bool rising = h(lo) < 0.0;
  for (int i = 0; i < 40; ++i) {
    const double mid = 0.5 * (lo + hi);
    ((h(mid) < 0.0) == rising ? lo : hi) = mid;
  }
  double b = 0.5 * (lo + hi);
  for (int i = 0; i < 8; ++i) {
    const double step = h(b) / dh(b);
    b -= step;
    if (std::abs(step) <= 1e-16 * b) break;
  }
  return b;
}

std::vector<double> uniform_frequencies(int n, double length) {
  if (n < 1) throw ValidationError("n must be at least 1");
  if (!(length > 0.0)) throw ValidationError("length must be positive");
  std::vector<double> out;
  for (int k = 1; k <= n; ++k) {
    const double b = clamped_root(k) / length;
    out.push_back(b * b);
  }
  return out;
}

double clamped_mode_shape(int k, double X, double length) {
  const double b = clamped_root(k);
  const double s = b * X / length;
  const double sigma = (std::cosh(b) - std::cos(b)) / (std::sinh(b) - std::sin(b));
  return std::cosh(s) - std::cos(s) - sigma * (std::sinh(s) - std::sin(s));
}

// ---------------------------------------------------------------------------
// Convergence and iso-spectrality

ConvergenceStudy convergence_study(const BeamProfile& beam, int N, int n_modes) {
  if (N % 4 != 0) throw ValidationError("N must be divisible by 4 for the N/4, N/2, N study");
  ConvergenceStudy c;
  c.levels = {N / 4, N / 2, N};
  for (int level : c.levels) c.spectra.push_back(solve_spectrum(assemble(beam, level), n_modes));
  for (int k = 0; k < n_modes; ++k) {
    const double w0 = c.spectra[0].omega[k], w1 = c.spectra[1].omega[k], w2 = c.spectra[2].omega[k];
    const double r = w2 + (w2 - w1) / 3.0;
    c.richardson.push_back(r);
    c.error_estimate.push_back(std::abs(w2 - r));
    c.observed_order.push_back(std::log2(std::abs(w0 - w1) / std::abs(w1 - w2)));
  }
  return c;
}

namespace {

// Mapped eigenfunction U = weight * phi at X = g(x), rescaled by least squares
// onto the uniform clamped mode.
std::vector<double> mapped_mode(const PointTransform& tr, const Spectrum& s, int k, double length) {
  const int N = s.N;
  const double h = s.domain.length() / N;
  std::vector<double> U(N + 1), Phi(N + 1);
  double uphi = 0.0, phiphi = 0.0;
  for (int i = 0; i <= N; ++i) {
    const double x = std::min(s.domain.a + h * i, s.domain.b);
    U[i] = tr.weight_jet<0>(x).value() * s.modes(i, k);
    Phi[i] = clamped_mode_shape(k + 1, tr.beam().g(x), length);
    uphi += U[i] * Phi[i];
    phiphi += Phi[i] * Phi[i];
  }
  const double alpha = uphi / phiphi;
  for (double& u : U) u /= alpha;
  return U;
}

}  // namespace

IsospectralReport isospectral_check(const BeamProfile& beam, int n_modes, int N, double tol) {
  const Classification cls = classify(beam);
  if (cls.label != SymmetryLabel::class1)
    throw IsospectralRefusal("profile '" + beam.name() + "' classifies " + std::string(label_name(cls.label)) +
                                 ", not A3,3⊕A1: no uniform-beam spectrum to compare against",
                             cls);
  IsospectralReport rep;
  rep.beam = beam.name();
  rep.N = N;
  rep.tol = tol;
  rep.length = beam.g_function().total();
  const auto study = convergence_study(beam, N, n_modes);
  rep.levels = study.levels;
  const auto reference = uniform_frequencies(n_modes, rep.length);
  const PointTransform tr(beam, SymmetryLabel::class1);

  rep.passed = true;
  for (int k = 0; k < n_modes; ++k) {
    IsospectralMode m;
    m.index = k + 1;
    m.reference = reference[k];
    m.omega = study.spectra[2].omega[k];
    m.deviation = std::abs(m.omega - m.reference) / m.reference;
    m.richardson = study.richardson[k];
    m.richardson_deviation = std::abs(m.richardson - m.reference) / m.reference;
    m.observed_order = study.observed_order[k];
    const double e0 = std::abs(study.spectra[0].omega[k] - m.reference);
    const double e1 = std::abs(study.spectra[1].omega[k] - m.reference);
    const double e2 = std::abs(m.omega - m.reference);
    m.order_coarse = std::log2(e0 / e1);
    m.order_fine = std::log2(e1 / e2);

    const auto fine = mapped_mode(tr, study.spectra[2], k, rep.length);
    const auto coarse = mapped_mode(tr, study.spectra[1], k, rep.length);
    const double h = beam.domain().length() / N;
    double peak = 0.0;
    for (int i = 0; i <= N; ++i) {
      const double x = std::min(beam.domain().a + h * i, beam.domain().b);
      const double phi = clamped_mode_shape(k + 1, beam.g(x), rep.length);
      peak = std::max(peak, std::abs(phi));
      m.shape_deviation = std::max(m.shape_deviation, std::abs(fine[i] - phi));
      if (i % 2 == 0) m.shape_estimate = std::max(m.shape_estimate, std::abs(fine[i] - coarse[i / 2]));
    }
    m.shape_deviation /= peak;
    m.shape_estimate /= peak;
    m.within_tol = m.deviation < tol;
    rep.passed = rep.passed && m.within_tol;
    rep.modes.push_back(m);
  }
  return rep;
}

}  // namespace beamsym
