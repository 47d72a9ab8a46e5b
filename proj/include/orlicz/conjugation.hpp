#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "orlicz/young.hpp"

namespace orlicz {

struct OminusOptions {
  double v_min = 1e-9;
  double v_max = 1e9;
  std::size_t points = 20001;
  int extension_decades = 2;
  std::size_t points_per_extension = 1200;
  // Declare +inf when the running max grows by more than this over the extensions.
  double divergence_factor = 1e3;
  double overflow_cap = 1e300;
  std::size_t refine_candidates = 8;
  // Suprema below snap_factor * eps * (phi(uv*) + phi1(v*)) are rounding noise and snap to 0.
  double snap_factor = 64.0;
};

struct OminusEvidence {
  ExtReal value;
  double maximizer = 0.0;  // 0 means the limit v -> 0+ was the best value
  bool infinite_point = false;  // phi(uv) = inf for some v with phi1(v) finite
  bool divergent = false;       // growth across the decade extensions
  double grid_max = 0.0;
  std::vector<double> extension_max;
  std::size_t refinements = 0;
  bool snapped = false;
};

// sup_{v > 0} [phi(uv) - phi1(v)]; pairs with both b finite are rejected.
OminusEvidence ominus_detail(const YoungFunction& phi, const YoungFunction& phi1, double u,
                             const OminusOptions& opts = {});
ExtReal ominus(const YoungFunction& phi, const YoungFunction& phi1, double u, const OminusOptions& opts = {});

// Same supremum restricted to v in (0, 1].
OminusEvidence ominus_zero_detail(const YoungFunction& phi, const YoungFunction& phi1, double u,
                                  const OminusOptions& opts = {});
ExtReal ominus_zero(const YoungFunction& phi, const YoungFunction& phi1, double u, const OminusOptions& opts = {});

struct ConjugationRow {
  double u = 0.0;
  ExtReal value;
  double maximizer = 0.0;
};

struct ConjugationResult {
  std::vector<ConjugationRow> rows;
  std::optional<YoungFunction> closed_form;
  bool zero_variant = false;
  bool monotone = true;
  bool convex = true;
};

ConjugationResult tabulate(const YoungFunction& phi, const YoungFunction& phi1, const std::vector<double>& us,
                           bool zero_variant = false, const OminusOptions& opts = {});

std::optional<YoungFunction> catalog_closed_form(const YoungFunction& phi, const YoungFunction& phi1);
std::optional<YoungFunction> catalog_closed_form_zero(const YoungFunction& phi, const YoungFunction& phi1);

// Piecewise-linear Young function through (u_i, values_i), with (0, 0) prepended;
// infinite beyond the last finite sample when the samples end in +inf.
YoungFunction tabulated_function(const std::vector<double>& us, const std::vector<ExtReal>& values);

// phi (-) phi1 as a Young function: closed form when catalogued, else tabulated on `us`.
std::pair<YoungFunction, bool> ominus_function(const YoungFunction& phi, const YoungFunction& phi1,
                                               const std::vector<double>& us, const OminusOptions& opts = {});

struct DoubleOminusReport {
  std::vector<double> u;
  std::vector<ExtReal> iterate;  // phi (-) (phi (-) phi1)
  std::vector<ExtReal> target;   // phi1
  std::vector<bool> agree;
  // Maximal runs of agreeing grid points as [first, last].
  std::vector<std::pair<double, double>> agreement;
  std::optional<double> first_disagreement;
  bool inner_exact = false;
  double rtol = 1e-6;
};

DoubleOminusReport double_ominus_check(const YoungFunction& phi, const YoungFunction& phi1, const std::vector<double>& us,
                                       double rtol = 1e-6, const OminusOptions& opts = {});

// |a - b| <= rtol * max(|a|, |b|) with +inf == +inf and an absolute floor for zeros.
bool close_rel(ExtReal a, ExtReal b, double rtol, double atol = 1e-12);

}  // namespace orlicz
