#include "beamsym/beam.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "beamsym/quadrature.hpp"

namespace beamsym {

// ---------------------------------------------------------------------------
// GFunction

GFunction::GFunction(Derivative gprime, Interval domain, int nodes)
    : gprime_(std::move(gprime)), domain_(domain), nodes_(chebyshev_lobatto_nodes(nodes, domain.a, domain.b)) {
  values_.assign(nodes_.size(), 0.0);
  for (std::size_t i = 1; i < nodes_.size(); ++i)
    values_[i] = values_[i - 1] + integrate(gprime_, nodes_[i - 1], nodes_[i]);
}

double GFunction::operator()(double x) const {
  const double slack = 1e-12 * domain_.length();
  if (!domain_.contains(x, slack)) throw DomainError("g evaluated outside the beam domain", x);
  x = std::clamp(x, domain_.a, domain_.b);
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), x);
  std::size_t i = static_cast<std::size_t>(it - nodes_.begin());
  if (i == nodes_.size() || (i > 0 && x - nodes_[i - 1] < nodes_[i] - x)) --i;
  return values_[i] + integrate(gprime_, nodes_[i], x);
}

double GFunction::inverse(double value) const {
  const double slack = 1e-12 * std::max(1.0, std::abs(total()));
  if (value < -slack || value > total() + slack) throw DomainError("g inverse requested outside the range of g");
  auto it = std::upper_bound(values_.begin(), values_.end(), value);
  std::size_t hi = std::clamp<std::size_t>(static_cast<std::size_t>(it - values_.begin()), 1, values_.size() - 1);
  double lo_x = nodes_[hi - 1], hi_x = nodes_[hi];
  const double t = (value - values_[hi - 1]) / (values_[hi] - values_[hi - 1]);
  double x = lo_x + std::clamp(t, 0.0, 1.0) * (hi_x - lo_x);
  for (int iter = 0; iter < 60; ++iter) {
    const double r = (*this)(x) - value;
    if (r > 0.0) hi_x = x;
    if (r < 0.0) lo_x = x;
    double next = x - r / gprime_(x);
    if (!(next > lo_x && next < hi_x)) next = 0.5 * (lo_x + hi_x);
    if (std::abs(next - x) <= 4e-16 * std::max(std::abs(x), domain_.length())) return next;
    x = next;
  }
  return x;
}

// ---------------------------------------------------------------------------
// BeamProfile

namespace {

void probe_positive(const Expr& e, const char* label, const Interval& dom) {
  std::size_t bad = 0;
  double first_x = 0.0, first_v = 0.0;
  for (int i = 0; i < BeamProfile::kProbeNodes; ++i) {
    const double x = dom.a + dom.length() * i / (BeamProfile::kProbeNodes - 1);
    double v = 0.0;
    try {
      v = eval_value(e, x);
    } catch (const DomainError&) {
      v = std::nan("");
    }
    if (!(v > 0.0) || !std::isfinite(v)) {
      if (bad++ == 0) {
        first_x = x;
        first_v = v;
      }
    }
  }
  if (bad == 0) return;
  std::ostringstream msg;
  msg.precision(17);
  msg << label << " is not positive at " << bad << " of " << BeamProfile::kProbeNodes
      << " probe nodes; first offending node x = " << first_x << " with value " << first_v;
  throw DomainError(msg.str());
}

}  // namespace

BeamProfile::BeamProfile(std::string name, Expr f, Expr m, Interval domain)
    : name_(std::move(name)), f_(std::move(f)), m_(std::move(m)), domain_(domain) {
  if (!std::isfinite(domain_.a) || !std::isfinite(domain_.b) || !(domain_.a < domain_.b))
    throw ValidationError("beam domain must be a finite interval [a, b] with a < b");
  probe_positive(f_, "f", domain_);
  probe_positive(m_, "m", domain_);
  g_ = std::make_shared<const GFunction>(
      [f = f_, m = m_](double x) { return std::pow(eval_value(m, x) / eval_value(f, x), 0.25); }, domain_);
}

// ---------------------------------------------------------------------------
// Residual of the beam equation

TermSum<double> pde_residual(const BeamProfile& beam, const FieldSample& field, double x0) {
  const auto fj = beam.f_jet<2>(x0);
  const double m = beam.m_value(x0);
  TermSum<double> r;
  r += fj.derivative(2) * field.u.derivative(2);
  r += 2.0 * fj.derivative(1) * field.u.derivative(3);
  r += fj.derivative(0) * field.u.derivative(4);
  r += m * field.u_tt;
  return r;
}

TermSum<double> pde_residual(const BeamProfile& beam, const Field& field, double t, double x0) {
  return pde_residual(beam, field(t, x0), x0);
}

// ---------------------------------------------------------------------------
// Beam-spec documents

namespace {

Expr expression_field(const nlohmann::json& doc, const char* key) {
  const auto& v = doc.at(key);
  if (!v.is_string()) throw ValidationError(std::string("beam spec field '") + key + "' must be a string");
  try {
    return parse_expr(v.get<std::string>());
  } catch (const ParseError& e) {
    throw ValidationError(std::string("beam spec field '") + key + "': " + e.what());
  }
}

}  // namespace

BeamProfile load_beam_spec(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("malformed beam spec: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("malformed beam spec: top level must be an object");
  for (const auto& [key, _] : doc.items())
    if (key != "name" && key != "f" && key != "m" && key != "domain")
      throw ValidationError("malformed beam spec: unknown key '" + key + "'");
  for (const char* key : {"name", "f", "m", "domain"})
    if (!doc.contains(key)) throw ValidationError(std::string("malformed beam spec: missing key '") + key + "'");
  if (!doc["name"].is_string()) throw ValidationError("beam spec field 'name' must be a string");
  const auto& dom = doc["domain"];
  if (!dom.is_array() || dom.size() != 2 || !dom[0].is_number() || !dom[1].is_number())
    throw ValidationError("beam spec field 'domain' must be an array of two numbers");
  const Interval interval{dom[0].get<double>(), dom[1].get<double>()};
  if (!(interval.a < interval.b)) throw ValidationError("beam spec domain must satisfy a < b");
  return {doc["name"].get<std::string>(), expression_field(doc, "f"), expression_field(doc, "m"), interval};
}

BeamProfile load_beam_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open beam file '" + path.string() + "': file not found or unreadable");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_beam_spec(buf.str());
}

std::string save_beam_spec(const BeamProfile& beam) {
  nlohmann::ordered_json doc;
  doc["name"] = beam.name();
  doc["f"] = unparse(beam.f());
  doc["m"] = unparse(beam.m());
  doc["domain"] = {beam.domain().a, beam.domain().b};
  return doc.dump(2) + "\n";
}

void save_beam_file(const BeamProfile& beam, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write beam file '" + path.string() + "'");
  out << save_beam_spec(beam);
}

}  // namespace beamsym
