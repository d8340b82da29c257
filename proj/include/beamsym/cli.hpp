#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "beamsym/beam.hpp"
#include "beamsym/equivalence.hpp"
#include "beamsym/gottlieb.hpp"
#include "beamsym/report.hpp"
#include "beamsym/spectral.hpp"

namespace beamsym {

inline constexpr std::uint64_t kDefaultSeed = 1;

/// Report builders behind each subcommand. The CLI is a thin adapter over these.
Report classify_report(const BeamProfile& beam, int samples = 33, double tol = 1e-9);
Report canonicalize_report(const BeamProfile& beam, int samples = 33, double tol = 1e-9,
                           std::optional<TransformConstants> constants = {}, std::uint64_t seed = kDefaultSeed);
Report gottlieb_report(const GottliebParams& params, int samples = 33);
Report spectrum_report(const BeamProfile& beam, int N = 2000, int n_modes = 3);
Report isospectral_report(const BeamProfile& beam, int n_modes = 3, int N = 2000, double tol = 5e-3);
Report reduce_report(const Expr& f, Interval domain, int samples = 33, std::uint64_t seed = kDefaultSeed);

/// Exit codes: 0 success, 1 domain/validation/file error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace beamsym
