#pragma once

#include <array>
#include <string>
#include <vector>

#include "beamsym/beam.hpp"
#include "beamsym/rational.hpp"
#include "beamsym/term_sum.hpp"

namespace beamsym {

/// f, f', f'', f''', f'''' at x.
struct FourJet {
  double x = 0.0;
  std::array<double, 5> f{};
};

/// Residual of f'''' = f'f'''/f + (11/10) f''^2/f - (12/5) f'^2 f''/f^2 + (9/10) f'^4/f^3.
TermSum<double> d12_residual(const std::array<double, 5>& f);

/// The fourth derivative that d12 assigns to (f, f', f'', f''').
double d12_fourth_derivative(double f, double f1, double f2, double f3);

/// Integrates d12 as a first-order system from `initial` (f .. f''' at x0) to
/// each node; f'''' is filled in from the equation.
std::vector<FourJet> integrate_d12(double x0, const std::array<double, 4>& initial, const std::vector<double>& nodes);

/// Image of a d12 solution under f -> lambda f(mu x): f^(k) -> lambda mu^k f^(k).
std::array<double, 5> scale_solution(const std::array<double, 5>& f, double lambda, double mu);

struct Stage1Sample {
  double t = 0.0, y = 0.0, yd = 0.0, ydd = 0.0, yddd = 0.0;  // dots: d/dt
  TermSum<double> derived, printed;
};

struct Stage2Sample {
  double t = 0.0, z = 0.0, zd = 0.0, zdd = 0.0;
  TermSum<double> derived, printed;
};

struct Stage3Sample {
  double t = 0.0, u = 0.0, v = 0.0, dvdu = 0.0;
  bool equilibrium = false;  // v = 0: u is stationary and dv/du undefined
  TermSum<double> derived, printed;
};

struct ReductionState {
  int stage = 0;
  std::vector<FourJet> source;
  std::vector<Stage1Sample> stage1;
  std::vector<Stage2Sample> stage2;
  std::vector<Stage3Sample> stage3;
};

/// Stage 1: (t, y) = (f, f'). Requires f to satisfy d12 (normalized residual
/// below `d12_tol`) and f' of one sign.
ReductionState reduce_stage1(const Expr& f, Interval domain, int samples, double d12_tol = 1e-10);
ReductionState reduce_stage1(std::vector<FourJet> source);
/// Stage 2: z = y'/y.
ReductionState reduce_stage2(ReductionState state);
/// Stage 3: u = t z, v = t z + t^2 z'.
ReductionState reduce_stage3(ReductionState state);

Stage1Sample stage1_sample(const std::array<double, 5>& f);
Stage2Sample stage2_sample(const Stage1Sample& s);
Stage3Sample stage3_sample(const Stage2Sample& s);

/// dv/du of the derived first-order relation:
/// 4 - 7u - (120u^3 - 202u^2 + 108u - 18)/(20 v).
double stage3_derived_slope(double u, double v);
/// The commonly printed variant: 5 - 7u - (320u^3 - 181u^2 + 108u - 18)/(20 v).
double stage3_printed_slope(double u, double v);

/// The d12 jet (f .. f''') at a point whose stage variables are (t, y) and
/// whose stage-3 invariants are (u, v).
std::array<double, 4> jet_through(double u, double v, double t, double y);

/// Two-trajectory test of the stage-3 relation: at every non-equilibrium sample
/// a second d12 solution is started through the same (u, v) from an unrelated
/// (t, y) drawn from `seed`; the two slopes dv/du must agree.
struct WellDefinedness {
  std::size_t pairs = 0;
  double max_difference = 0.0;  // |dv/du_1 - dv/du_2| / max(1, |dv/du_1|)
};

WellDefinedness check_well_definedness(const ReductionState& state, std::uint64_t seed);

/// A d12 trajectory near f: the jet of f at the midpoint of `domain` with f'''
/// scaled by (1 + perturbation), integrated to `samples` Chebyshev nodes.
std::vector<FourJet> perturbed_trajectory(const Expr& f, Interval domain, int samples, double perturbation);

/// One monomial of a reduced equation with its coefficient in the printed and
/// in the derived form (0 where the monomial does not occur).
struct CoefficientRow {
  int stage;
  std::string monomial;
  Rational printed;
  Rational derived;
};

std::vector<CoefficientRow> coefficient_comparison();

}  // namespace beamsym
