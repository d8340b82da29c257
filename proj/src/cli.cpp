#include "beamsym/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "beamsym/quadrature.hpp"
#include "beamsym/reduction.hpp"
#include "beamsym/symmetry.hpp"

namespace beamsym {

namespace {

std::string interval_text(Interval i) { return format_number(i.a) + " " + format_number(i.b); }

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : " ") + p;
  return s;
}

void add_beam(Report& r, const BeamProfile& beam) {
  r.add("beam.name", beam.name());
  r.add("beam.f", unparse(beam.f()));
  r.add("beam.m", unparse(beam.m()));
  r.add("beam.domain", interval_text(beam.domain()));
}

// Uniform doubles from a 64-bit engine; the bit recipe is fixed so reports do
// not depend on the standard library's distribution implementation.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  double operator()(double lo, double hi) { return lo + (hi - lo) * static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 rng_;
};

std::vector<double> parse_list(const std::string& text, std::size_t count, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || !std::isfinite(v))
      throw ValidationError(what + ": '" + item + "' is not a finite number");
    out.push_back(v);
  }
  if (out.size() != count)
    throw ValidationError(what + " expects " + std::to_string(count) + " comma-separated numbers");
  return out;
}

struct NamedGenerator {
  std::string name;
  Generator gen;
};

std::vector<NamedGenerator> class_generators(const Classification& cls) {
  std::vector<NamedGenerator> g{{"X1", Generator::X1()}, {"X2", Generator::X2()}};
  switch (cls.label) {
    case SymmetryLabel::class1:
      g.push_back({"X3", Generator::X3()});
      g.push_back({"X4", Generator::X4()});
      break;
    case SymmetryLabel::class2:
      g.push_back({"X3", Generator::X3() + cls.g_offset * Generator::X4()});
      break;
    case SymmetryLabel::class3:
      g.push_back({"X4", Generator::X4()});
      break;
    case SymmetryLabel::generic:
      break;
  }
  return g;
}

std::string constant_names(SymmetryLabel label) {
  switch (label) {
    case SymmetryLabel::class1:
      return "k1 k2 k3";
    case SymmetryLabel::class2:
      return "l1 l2 l3";
    case SymmetryLabel::class3:
      return "m1 m2 m3";
    case SymmetryLabel::generic:
      break;
  }
  return "none";
}

std::vector<std::string> map_text(SymmetryLabel label) {
  switch (label) {
    case SymmetryLabel::class1:
      return {"t + k1", "G + k2", "k3 u sqrt(f g'^3)"};
    case SymmetryLabel::class2:
      return {"t + l1 G^2", "2 l2 G", "l3 u sqrt(f g'^3 / |G|)"};
    case SymmetryLabel::class3:
      return {"t + m1", "m2 exp(G)", "m3 u sqrt(f g'^3 exp(3 G))"};
    case SymmetryLabel::generic:
      break;
  }
  return {"none", "none", "none"};
}

}  // namespace

// ---------------------------------------------------------------------------
// classify

Report classify_report(const BeamProfile& beam, int samples, double tol) {
  const Classification cls = classify(beam, samples, tol);
  Report r("classify");
  add_beam(r, beam);
  r.add("classifier.samples", samples);
  r.add("classifier.tol", tol);
  r.add("label", std::string(label_name(cls.label)));
  r.add("g_offset", cls.g_offset);
  r.add("residual.class1", cls.class1_residual);
  r.add("residual.class2", cls.class2_residual);
  r.add("residual.class3", cls.class3_residual);
  static constexpr const char* h_names[] = {"H11", "H12", "H21", "H22"};
  for (std::size_t i = 0; i < 4; ++i) r.add(std::string("h.") + h_names[i], cls.h_max[i]);
  for (std::size_t i = 0; i < kReducedResidualNames.size(); ++i)
    r.add("reduced." + std::string(kReducedResidualNames[i]), cls.r_max[i]);
  r.add("reduced.excluded_samples", cls.excluded_samples);

  const auto gens = class_generators(cls);
  std::vector<std::string> names;
  for (const auto& g : gens) names.push_back(g.name);
  r.add("generators", join(names));

  // Nonzero brackets of the class, checked at fixed interior points.
  struct Bracket {
    std::string a, b, expect;
    Generator ga, gb, gc;
    double factor;
  };
  std::vector<Bracket> brackets;
  if (cls.label == SymmetryLabel::class1) {
    brackets.push_back({"X1", "X3", "4 X1", Generator::X1(), Generator::X3(), Generator::X1(), 4.0});
    brackets.push_back({"X3", "X4", "-2 X4", Generator::X3(), Generator::X4(), Generator::X4(), -2.0});
  } else if (cls.label == SymmetryLabel::class2) {
    brackets.push_back({"X1", "X3", "4 X1", Generator::X1(), gens[2].gen, Generator::X1(), 4.0});
  }
  const Interval d = beam.domain();
  for (const auto& br : brackets) {
    const auto A = vector_field(beam, br.ga, 0.0);
    const auto B = vector_field(beam, br.gb, 0.0);
    const auto C = vector_field(beam, br.gc, 0.0);
    double err = 0.0;
    for (double x : chebyshev_nodes(5, d.a, d.b)) {
      const Point3<double> p{0.5, x, 1.25};
      const auto lhs = lie_bracket(A, B, p);
      const auto rhs = evaluate_field(C, p);
      for (std::size_t i = 0; i < 3; ++i)
        err = std::max(err, std::abs(lhs[i] - br.factor * rhs[i]) / std::max(1.0, std::abs(br.factor * rhs[i])));
    }
    r.add("commutator.[" + br.a + "," + br.b + "]", br.expect);
    r.add("commutator.[" + br.a + "," + br.b + "].error", err);
  }

  r.add("table.columns", std::string("x H11 H12 H21 H22 H11_shifted H21_shifted R1 R2 R3 R3_printed R4 R5 R6 excluded"));
  for (std::size_t i = 0; i < cls.samples.size(); ++i) {
    const auto& s = cls.samples[i];
    std::vector<double> row{s.x};
    row.insert(row.end(), s.h.begin(), s.h.end());
    row.insert(row.end(), s.h_shifted.begin(), s.h_shifted.end());
    row.insert(row.end(), s.r.begin(), s.r.end());
    row.push_back(s.shifted_g_excluded ? 1.0 : 0.0);
    r.add("table.row." + std::to_string(i), row);
  }
  return r;
}

// ---------------------------------------------------------------------------
// canonicalize

Report canonicalize_report(const BeamProfile& beam, int samples, double tol,
                           std::optional<TransformConstants> constants, std::uint64_t seed) {
  const Classification cls = classify(beam, samples, tol);
  if (cls.label == SymmetryLabel::generic)
    throw ValidationError("unsupported: profile '" + beam.name() +
                          "' classifies 2A1, which has no canonical transformation");
  const PointTransform tr = build_transform(beam, cls, constants);
  const auto& k = tr.constants();

  Report r("canonicalize");
  add_beam(r, beam);
  r.add("label", std::string(label_name(cls.label)));
  r.add("g_offset", cls.g_offset);
  r.add("canonical.form", tr.canonical().form());
  r.add("canonical.kappa", tr.canonical().kappa);
  r.add("transform.constant_names", constant_names(cls.label));
  r.add("transform.constants", std::vector<double>{k.c1, k.c2, k.c3});
  const auto maps = map_text(cls.label);
  r.add("transform.G", std::string("g + g_offset"));
  r.add("transform.T", maps[0]);
  r.add("transform.X", maps[1]);
  r.add("transform.U", maps[2]);
  r.add("transform.valid_domain", interval_text(tr.valid_domain()));

  const Interval v = tr.valid_domain();
  double round_trip = 0.0;
  const auto xs = chebyshev_nodes(5, v.a, v.b);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const auto q = tr.push(0.5, xs[i], 1.0);
    r.add("point." + std::to_string(i), std::vector<double>{0.5, xs[i], 1.0, q[0], q[1], q[2]});
    const auto back = tr.inverse(q[0], q[1], q[2]);
    round_trip = std::max({round_trip, std::abs(back[0] - 0.5), std::abs(back[1] - xs[i]), std::abs(back[2] - 1.0)});
  }
  r.add("point.columns", std::string("t x u T X U"));
  r.add("point.round_trip_error", round_trip);

  Draw draw(seed);
  std::vector<Point3<double>> pts;
  for (int i = 0; i < 20; ++i) {
    const double t = draw(0.0, 1.0);
    const double x = draw(v.a + 0.01 * v.length(), v.b - 0.01 * v.length());
    const double u = draw(0.5, 2.0);
    pts.push_back({t, x, u});
  }
  r.add("generator.seed", std::to_string(seed));
  for (const auto& img : check_pushforward(tr, pts)) {
    r.add("generator." + img.source + ".image", img.target);
    r.add("generator." + img.source + ".error", img.max_error);
  }
  r.add("generator.note", std::string("X2 = u du maps to Y2 = U dU in every class"));

  const auto modes = default_modes(tr);
  for (std::size_t i = 0; i < modes.size(); ++i) {
    const std::string key = "pullback." + std::to_string(i);
    r.add(key + ".mode", modes[i].name);
    r.add(key + ".omega", modes[i].omega);
    r.add(key + ".grid", std::string("16x16"));
    r.add(key + ".max_residual", pullback_grid_residual(tr, modes[i]));
  }
  return r;
}

// ---------------------------------------------------------------------------
// gottlieb

Report gottlieb_report(const GottliebParams& p, int samples) {
  const BeamProfile beam = make_gottlieb(p);
  const Expr g = gottlieb_g(p);
  Report r("gottlieb");
  r.add("params.exponent", p.exponent.str());
  r.add("params.K", p.K);
  r.add("params.A", p.A);
  r.add("params.B", p.B);
  r.add("params.mobius", std::vector<double>{p.L, p.M, p.P, p.Q});
  r.add("params.interval", interval_text(p.domain));
  add_beam(r, beam);
  r.add("g.closed_form", unparse(g));

  const Classification cls = classify(beam);
  r.add("label", std::string(label_name(cls.label)));
  r.add("residual.class1", cls.class1_residual);

  const auto nodes = chebyshev_nodes(samples, p.domain.a, p.domain.b);
  const auto ode = solve_normal_ode(beam.f(), p.domain, nodes);
  const auto gs = g_from_solutions(ode);
  double drift = 0.0, ode_err = 0.0, closed_err = 0.0;
  std::vector<double> closed;
  for (std::size_t i = 0; i < nodes.size(); ++i) drift = std::max(drift, std::abs(ode.wronskian(i) - 1.0));
  for (std::size_t i = 0; i < gs.nodes.size(); ++i) {
    const double target = 2.0 * normal_form_potential(beam.f(), gs.nodes[i]);
    const double scale = std::max(1.0, std::abs(target));
    ode_err = std::max(ode_err, std::abs(gs.schwarzian[i] - target) / scale);
    const auto gj = eval_jet<3>(g, gs.nodes[i]);
    closed_err = std::max(closed_err, std::abs(schwarzian(gj) - target) / scale);
    closed.push_back(gj.value());
  }
  r.add("schwarzian.nodes", gs.nodes.size());
  r.add("schwarzian.valid_interval", interval_text(gs.valid));
  r.add("schwarzian.wronskian_drift", drift);
  r.add("schwarzian.ode_error", ode_err);
  r.add("schwarzian.closed_form_error", closed_err);
  const auto fit = fit_mobius(gs.g, closed);
  r.add("schwarzian.mobius_fit", std::vector<double>(fit.coefficients.begin(), fit.coefficients.end()));
  r.add("schwarzian.mobius_residual", fit.max_residual);
  return r;
}

// ---------------------------------------------------------------------------
// spectrum

Report spectrum_report(const BeamProfile& beam, int N, int n_modes) {
  const auto study = convergence_study(beam, N, n_modes);
  const Spectrum& fine = study.spectra.back();
  Report r("spectrum");
  add_beam(r, beam);
  r.add("grid.N", N);
  r.add("grid.levels", std::to_string(study.levels[0]) + " " + std::to_string(study.levels[1]) + " " +
                           std::to_string(study.levels[2]));
  r.add("grid.boundary", std::string("clamped-clamped"));
  r.add("mode.columns", std::string("index omega omega_reference relative_deviation observed_order error_estimate"));
  for (int k = 0; k < n_modes; ++k) {
    const double w = fine.omega[k], ref = study.richardson[k];
    r.add("mode." + std::to_string(k + 1),
          std::vector<double>{double(k + 1), w, ref, std::abs(w - ref) / ref, study.observed_order[k],
                              study.error_estimate[k]});
  }
  r.add("mode.reference", std::string("richardson extrapolation from N/2 and N"));
  const int stride = std::max(1, N / 64);
  std::string cols = "x";
  for (int k = 0; k < n_modes; ++k) cols += " phi" + std::to_string(k + 1);
  r.add("shape.columns", cols);
  const double h = beam.domain().length() / N;
  int row = 0;
  for (int i = 0; i <= N; i += stride) {
    std::vector<double> values{std::min(beam.domain().a + h * i, beam.domain().b)};
    for (int k = 0; k < n_modes; ++k) values.push_back(fine.modes(i, k));
    r.add("shape.row." + std::to_string(row++), values);
    if (i != N && i + stride > N) i = N - stride;
  }
  return r;
}

// ---------------------------------------------------------------------------
// isospectral-check

Report isospectral_report(const BeamProfile& beam, int n_modes, int N, double tol) {
  const auto rep = isospectral_check(beam, n_modes, N, tol);
  Report r("isospectral-check");
  add_beam(r, beam);
  r.add("status", std::string(rep.passed ? "passed" : "failed"));
  r.add("label", std::string(label_name(SymmetryLabel::class1)));
  r.add("transform.constants", std::vector<double>{0.0, 0.0, 1.0});
  r.add("grid.N", N);
  r.add("grid.levels", std::to_string(rep.levels[0]) + " " + std::to_string(rep.levels[1]) + " " +
                           std::to_string(rep.levels[2]));
  r.add("tol", tol);
  r.add("reference.length", rep.length);
  r.add("mode.columns",
        std::string("index omega omega_reference relative_deviation richardson richardson_deviation observed_order "
                    "order_coarse order_fine shape_deviation shape_estimate within_tol"));
  for (const auto& m : rep.modes)
    r.add("mode." + std::to_string(m.index),
          std::vector<double>{double(m.index), m.omega, m.reference, m.deviation, m.richardson,
                              m.richardson_deviation, m.observed_order, m.order_coarse, m.order_fine,
                              m.shape_deviation, m.shape_estimate, m.within_tol ? 1.0 : 0.0});
  return r;
}

// ---------------------------------------------------------------------------
// reduce

Report reduce_report(const Expr& f, Interval domain, int samples, std::uint64_t seed) {
  const auto st = reduce_stage3(reduce_stage2(reduce_stage1(f, domain, samples)));
  Report r("reduce");
  r.add("f", unparse(f));
  r.add("interval", interval_text(domain));
  r.add("samples", samples);

  auto summarize = [&r](const std::string& prefix, const ReductionState& s) {
    double d1 = 0, p1 = 0, d2 = 0, p2 = 0, d3 = 0, p3 = 0;
    for (const auto& x : s.stage1) d1 = std::max(d1, x.derived.normalized()), p1 = std::max(p1, x.printed.normalized());
    for (const auto& x : s.stage2) d2 = std::max(d2, x.derived.normalized()), p2 = std::max(p2, x.printed.normalized());
    std::size_t equilibria = 0;
    for (const auto& x : s.stage3) {
      if (x.equilibrium) {
        ++equilibria;
        continue;
      }
      d3 = std::max(d3, x.derived.normalized());
      p3 = std::max(p3, x.printed.normalized());
    }
    r.add(prefix + "stage1.derived_residual", d1);
    r.add(prefix + "stage1.printed_residual", p1);
    r.add(prefix + "stage2.derived_residual", d2);
    r.add(prefix + "stage2.printed_residual", p2);
    r.add(prefix + "stage3.equilibria", equilibria);
    r.add(prefix + "stage3.derived_residual", d3);
    r.add(prefix + "stage3.printed_residual", p3);
  };
  summarize("", st);
  if (std::all_of(st.stage3.begin(), st.stage3.end(), [](const auto& s) { return s.equilibrium; }))
    r.add("stage3.equilibrium_u", st.stage3.front().u);

  r.add("table.stage1.columns", std::string("x t y yd ydd yddd derived printed"));
  for (std::size_t i = 0; i < st.stage1.size(); ++i) {
    const auto& s = st.stage1[i];
    r.add("table.stage1.row." + std::to_string(i), std::vector<double>{st.source[i].x, s.t, s.y, s.yd, s.ydd, s.yddd,
                                                                       s.derived.normalized(), s.printed.normalized()});
  }
  r.add("table.stage2.columns", std::string("t z zd zdd derived printed"));
  for (std::size_t i = 0; i < st.stage2.size(); ++i) {
    const auto& s = st.stage2[i];
    r.add("table.stage2.row." + std::to_string(i),
          std::vector<double>{s.t, s.z, s.zd, s.zdd, s.derived.normalized(), s.printed.normalized()});
  }
  r.add("table.stage3.columns", std::string("t u v dvdu equilibrium derived printed"));
  for (std::size_t i = 0; i < st.stage3.size(); ++i) {
    const auto& s = st.stage3[i];
    r.add("table.stage3.row." + std::to_string(i),
          std::vector<double>{s.t, s.u, s.v, s.dvdu, s.equilibrium ? 1.0 : 0.0, s.derived.normalized(),
                              s.printed.normalized()});
  }

  // A nearby d12 solution leaves the equilibrium and exercises stage 3.
  Draw draw(seed);
  const double perturbation = draw(0.05, 0.15) * (draw(0.0, 1.0) < 0.5 ? -1.0 : 1.0);
  const auto nearby = reduce_stage3(reduce_stage2(reduce_stage1(perturbed_trajectory(f, domain, samples, perturbation))));
  r.add("perturbed.seed", std::to_string(seed));
  r.add("perturbed.f3_factor", 1.0 + perturbation);
  summarize("perturbed.", nearby);
  const auto wd = check_well_definedness(nearby, seed);
  r.add("well_definedness.pairs", wd.pairs);
  r.add("well_definedness.max_difference", wd.max_difference);

  r.add("coefficient.columns", std::string("stage monomial printed derived agree"));
  int row = 0;
  for (const auto& c : coefficient_comparison())
    r.add("coefficient." + std::to_string(row++), std::to_string(c.stage) + " " + c.monomial + " " + c.printed.str() +
                                                      " " + c.derived.str() + " " + (c.printed == c.derived ? "yes" : "no"));
  return r;
}

// ---------------------------------------------------------------------------
// Command line

namespace {

struct RunConfig {
  std::string beam;
  int samples = 33;
  double tol = 1e-9;
  int N = 2000;
  int n_modes = 3;
  std::string format = "structured";
  std::string out;
  std::uint64_t seed = kDefaultSeed;
  std::string constants;
  std::string exponent = "3/2";
  double A = 1.0, B = 1.0, K = 1.0;
  std::string mobius = "0,1,1,0";
  std::vector<double> interval;
  std::string f;
  std::optional<double> iso_tol;
};

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ValidationError("cannot write '" + path + "'");
  file << text;
}

Interval interval_option(const RunConfig& cfg) {
  if (cfg.interval.size() != 2) throw ValidationError("--interval expects two numbers a b");
  if (!(cfg.interval[0] < cfg.interval[1])) throw ValidationError("--interval must satisfy a < b");
  return {cfg.interval[0], cfg.interval[1]};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Lie point symmetry classification and equivalence toolkit for Euler-Bernoulli beams", "beamsym"};
  app.require_subcommand(1);
  app.fallthrough(false);

  auto common = [&cfg](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "report format")
        ->check(CLI::IsMember({"structured", "human"}))
        ->capture_default_str();
    sub->add_option("--out", cfg.out, "write the report to this path instead of stdout");
  };
  auto beam_option = [&cfg](CLI::App* sub) { sub->add_option("--beam", cfg.beam, "beam-spec file")->required(); };
  auto sample_options = [&cfg](CLI::App* sub) {
    sub->add_option("--samples", cfg.samples, "Chebyshev samples")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--tol", cfg.tol, "normalized residual tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };
  auto grid_options = [&cfg](CLI::App* sub) {
    sub->add_option("--N", cfg.N, "finest grid size (multiple of 4)")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--n-modes", cfg.n_modes, "number of modes")->check(CLI::PositiveNumber)->capture_default_str();
  };
  auto seed_option = [&cfg](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "seed for sampled test points")->capture_default_str();
  };

  auto* classify_cmd = app.add_subcommand("classify", "assign the quotient symmetry algebra of a beam");
  beam_option(classify_cmd);
  sample_options(classify_cmd);
  common(classify_cmd);

  auto* canon_cmd = app.add_subcommand("canonicalize", "build the point map onto the class representative");
  beam_option(canon_cmd);
  sample_options(canon_cmd);
  canon_cmd->add_option("--constants", cfg.constants, "free transform constants c1,c2,c3");
  seed_option(canon_cmd);
  common(canon_cmd);

  auto* gott_cmd = app.add_subcommand("gottlieb", "generate a power-law beam with a Moebius g");
  gott_cmd->add_option("--exponent", cfg.exponent, "exponent m as p/q")->capture_default_str();
  gott_cmd->add_option("--A", cfg.A, "A in Ax+B")->capture_default_str();
  gott_cmd->add_option("--B", cfg.B, "B in Ax+B")->capture_default_str();
  gott_cmd->add_option("--K", cfg.K, "K > 0")->check(CLI::PositiveNumber)->capture_default_str();
  gott_cmd->add_option("--mobius", cfg.mobius, "L,M,P,Q")->capture_default_str();
  gott_cmd->add_option("--interval", cfg.interval, "a b")->expected(2)->required();
  gott_cmd->add_option("--samples", cfg.samples, "Schwarzian check nodes")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  gott_cmd->add_option("--out", cfg.out, "write the beam-spec file here (the report goes to stdout)");
  gott_cmd->add_option("--format", cfg.format, "report format")
      ->check(CLI::IsMember({"structured", "human"}))
      ->capture_default_str();

  auto* spec_cmd = app.add_subcommand("spectrum", "clamped-clamped spectrum with a convergence study");
  beam_option(spec_cmd);
  grid_options(spec_cmd);
  common(spec_cmd);

  auto* iso_cmd = app.add_subcommand("isospectral-check", "compare a class-I beam with the uniform spectrum");
  beam_option(iso_cmd);
  grid_options(iso_cmd);
  iso_cmd->add_option("--tol", cfg.iso_tol, "relative frequency tolerance (default 5e-3)")->check(CLI::PositiveNumber);
  common(iso_cmd);

  auto* reduce_cmd = app.add_subcommand("reduce", "order reduction of the class-I rigidity equation");
  auto* f_opt = reduce_cmd->add_option("--f", cfg.f, "rigidity expression in x");
  reduce_cmd->add_option("--beam", cfg.beam, "take f and the interval from a beam-spec file")->excludes(f_opt);
  reduce_cmd->add_option("--interval", cfg.interval, "a b")->expected(2);
  reduce_cmd->add_option("--samples", cfg.samples, "Chebyshev samples")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  seed_option(reduce_cmd);
  common(reduce_cmd);

  std::vector<const char*> argv{"beamsym"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return 2;
  }

  try {
    const ReportFormat format = parse_report_format(cfg.format);
    if (classify_cmd->parsed()) {
      write_output(classify_report(load_beam_file(cfg.beam), cfg.samples, cfg.tol).render(format), cfg.out, out);
    } else if (canon_cmd->parsed()) {
      std::optional<TransformConstants> k;
      if (!cfg.constants.empty()) {
        const auto c = parse_list(cfg.constants, 3, "--constants");
        k = TransformConstants{c[0], c[1], c[2]};
      }
      write_output(canonicalize_report(load_beam_file(cfg.beam), cfg.samples, cfg.tol, k, cfg.seed).render(format),
                   cfg.out, out);
    } else if (gott_cmd->parsed()) {
      GottliebParams p;
      p.exponent = Rational::parse(cfg.exponent);
      p.A = cfg.A;
      p.B = cfg.B;
      p.K = cfg.K;
      const auto m = parse_list(cfg.mobius, 4, "--mobius");
      p.L = m[0];
      p.M = m[1];
      p.P = m[2];
      p.Q = m[3];
      p.domain = interval_option(cfg);
      const Report report = gottlieb_report(p, cfg.samples);
      if (!cfg.out.empty()) save_beam_file(make_gottlieb(p), cfg.out);
      out << report.render(format);
    } else if (spec_cmd->parsed()) {
      write_output(spectrum_report(load_beam_file(cfg.beam), cfg.N, cfg.n_modes).render(format), cfg.out, out);
    } else if (iso_cmd->parsed()) {
      const BeamProfile beam = load_beam_file(cfg.beam);
      try {
        write_output(isospectral_report(beam, cfg.n_modes, cfg.N, cfg.iso_tol.value_or(5e-3)).render(format), cfg.out,
                     out);
      } catch (const IsospectralRefusal& refusal) {
        Report r("isospectral-check");
        r.add("status", std::string("refused"));
        r.add("reason", std::string(refusal.what()));
        r.merge("classifier", classify_report(beam));
        write_output(r.render(format), cfg.out, out);
        err << "error: " << refusal.what() << '\n';
        return 1;
      }
    } else if (reduce_cmd->parsed()) {
      Expr f;
      Interval domain;
      if (!cfg.beam.empty()) {
        const BeamProfile beam = load_beam_file(cfg.beam);
        f = beam.f();
        domain = cfg.interval.empty() ? beam.domain() : interval_option(cfg);
      } else {
        if (cfg.f.empty()) throw ValidationError("reduce needs --f or --beam");
        f = parse_expr(cfg.f);
        domain = interval_option(cfg);
      }
      write_output(reduce_report(f, domain, cfg.samples, cfg.seed).render(format), cfg.out, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace beamsym
