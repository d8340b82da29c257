#include "beamsym/symmetry.hpp"

#include <algorithm>
#include <cmath>

#include "beamsym/quadrature.hpp"

namespace beamsym {

std::string_view label_name(SymmetryLabel label) {
  switch (label) {
    case SymmetryLabel::generic:
      return "2A1";
    case SymmetryLabel::class3:
      return "3A1";
    case SymmetryLabel::class2:
      return "A1⊕A2";
    case SymmetryLabel::class1:
      return "A3,3⊕A1";
  }
  return "?";
}

namespace {

ProfileDerivatives<double> shifted(ProfileDerivatives<double> d, double offset) {
  d.g[0] += offset;
  return d;
}

// One weighted least-squares correction of the offset c in
// H11(g + c) = H21(g + c) = 0; uses H11(g + c + e) = H11(g + c) + e H12.
double refine_offset(const std::vector<ProfileDerivatives<double>>& d, double c) {
  double num = 0.0, den = 0.0;
  for (const auto& di : d) {
    const auto h = h_functions(shifted(di, c));
    const double w1 = h.h11.scale > 0.0 ? 1.0 / h.h11.scale : 0.0;
    const double w2 = h.h21.scale > 0.0 ? 1.0 / h.h21.scale : 0.0;
    num += w1 * w1 * h.h11.value * h.h12.value + w2 * w2 * h.h21.value * h.h22.value;
    den += w1 * w1 * h.h12.value * h.h12.value + w2 * w2 * h.h22.value * h.h22.value;
  }
  return den > 0.0 ? c - num / den : c;
}

}  // namespace

Classification classify(const BeamProfile& beam, int samples, double tol) {
  if (samples < 8) throw ValidationError("classification needs at least 8 samples");
  if (!(tol > 0.0)) throw ValidationError("classification tolerance must be positive");

  Classification out;
  out.tol = tol;
  const auto nodes = chebyshev_nodes(samples, beam.domain().a, beam.domain().b);

  std::vector<ProfileDerivatives<double>> derivs;
  derivs.reserve(nodes.size());
  for (double x : nodes)
    derivs.push_back(ProfileDerivatives<double>::from_jets(beam.f_jet<6>(x), beam.g_jet<6>(x)));

  out.samples.resize(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    auto& row = out.samples[i];
    row.x = nodes[i];
    row.h = h_functions(derivs[i]).normalized();
    for (int k = 0; k < 4; ++k) out.h_max[static_cast<std::size_t>(k)] = std::max(out.h_max[static_cast<std::size_t>(k)], row.h[static_cast<std::size_t>(k)]);
  }
  out.class1_residual = *std::max_element(out.h_max.begin(), out.h_max.end());
  out.class3_residual = std::max(out.h_max[1], out.h_max[3]);

  // With H12 = H22 = 0 the offset is indeterminate and irrelevant.
  if (out.class3_residual >= tol) out.g_offset = refine_offset(derivs, refine_offset(derivs, 0.0));

  const double g_span = std::abs(beam.g_function().total()) + std::abs(out.g_offset);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    auto& row = out.samples[i];
    const auto sd = shifted(derivs[i], out.g_offset);
    const auto hs = h_functions(sd).normalized();
    row.h_shifted = {hs[0], hs[2]};
    out.class2_residual = std::max({out.class2_residual, hs[0], hs[2]});

    const auto c1 = residual_class1(derivs[i]);
    const auto c3 = residual_class3(derivs[i]);
    row.r[0] = c1.r1.normalized();
    row.r[1] = c1.r2.normalized();
    row.r[5] = c3.r5.normalized();
    row.r[6] = c3.r6.normalized();
    if (std::abs(sd.g[0]) <= 1e-8 * g_span) {
      row.shifted_g_excluded = true;
      ++out.excluded_samples;
    } else {
      const auto c2 = residual_class2(sd);
      row.r[2] = c2.r3.normalized();
      row.r[3] = c2.r3_printed.normalized();
      row.r[4] = c2.r4.normalized();
    }
    for (std::size_t k = 0; k < row.r.size(); ++k) out.r_max[k] = std::max(out.r_max[k], row.r[k]);
  }

  if (out.class1_residual < tol) {
    out.label = SymmetryLabel::class1;
  } else if (out.class2_residual < tol) {
    out.label = SymmetryLabel::class2;
  } else if (out.class3_residual < tol) {
    out.label = SymmetryLabel::class3;
  } else {
    out.label = SymmetryLabel::generic;
  }
  return out;
}

VectorField vector_field(const BeamProfile& beam, const Generator& gen, double g_offset) {
  return [beam, gen, g_offset](const Point3<Jet1>& p) { return generator_at(gen, beam, p[0], p[1], p[2], g_offset); };
}

Point3<double> evaluate_field(const VectorField& F, const Point3<double>& p) {
  const auto v = F({Jet1::constant(p[0]), Jet1::constant(p[1]), Jet1::constant(p[2])});
  return {v[0].value(), v[1].value(), v[2].value()};
}

namespace {

// Derivative of B at p in the direction dir.
Point3<double> directional(const VectorField& B, const Point3<double>& p, const Point3<double>& dir) {
  Point3<Jet1> q;
  for (std::size_t i = 0; i < 3; ++i) {
    Jet1::Coefficients c;
    c << p[i], dir[i];
    q[i] = Jet1(c);
  }
  const auto v = B(q);
  return {v[0].coefficient(1), v[1].coefficient(1), v[2].coefficient(1)};
}

}  // namespace

Point3<double> lie_bracket(const VectorField& A, const VectorField& B, const Point3<double>& p) {
  const auto ab = directional(B, p, evaluate_field(A, p));
  const auto ba = directional(A, p, evaluate_field(B, p));
  return {ab[0] - ba[0], ab[1] - ba[1], ab[2] - ba[2]};
}

}  // namespace beamsym
