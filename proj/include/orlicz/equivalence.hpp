#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orlicz/grid.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

// left:  C phi1^-1 phi2^-1 <= phi^-1
// right: phi^-1 <= D phi1^-1 phi2^-1
enum class Direction { left, right };
std::string direction_name(Direction d);

enum class Verdict { holds, refuted, inconclusive };
std::string verdict_name(Verdict v);

// Exact divergence evidence produced outside the grid search.
struct ExternalRefutation {
  Direction direction = Direction::right;
  RangeKind range = RangeKind::large;
  std::string source;
  // (u, ratio phi^-1 / (phi1^-1 phi2^-1)) along a diverging subsequence.
  std::vector<std::pair<double, double>> witnesses;
};

struct EquivOptions {
  std::size_t points = 10001;
  double span_hi = 1e6;
  double span_lo = 1e-6;
  int extension_decades = 2;
  double refute_factor = 1e2;
  double drift_factor = 1.05;
  double skip_cap = 0.01;
  std::vector<double> extra_points;
  std::optional<ExternalRefutation> certificate;
};

struct RelationResult {
  Direction direction = Direction::left;
  ArgRange range;
  Verdict verdict = Verdict::inconclusive;
  // inf of the ratio (left) or sup (right) over the base span; +inf or 0 when degenerate.
  double constant = 0.0;
  double sampled_min_ratio = 0.0;
  double sampled_max_ratio = 0.0;
  GridDescriptor grid;
  // Extremal ratio on the base span and after each decade extension.
  std::vector<double> extremal;
  std::vector<double> skipped;  // 0/0 points
  // Diverging subsequence for refutations, record points otherwise.
  std::vector<std::pair<double, double>> witnesses;
  std::string source = "grid";
};

// phi^-1(u) / (phi1^-1(u) phi2^-1(u)); nullopt for 0/0, +inf for x/0.
std::optional<double> product_ratio(const YoungFunction& phi1, const YoungFunction& phi2, const YoungFunction& phi,
                                    double u);

RelationResult check_product_relation(const YoungFunction& phi1, const YoungFunction& phi2, const YoungFunction& phi,
                                      Direction direction, ArgRange range, const EquivOptions& opts = {});

// Constants valid down to (large) or up to (small) new_threshold, from a bridge grid of 1001 points.
RelationResult extend_constants(const YoungFunction& phi1, const YoungFunction& phi2, const YoungFunction& phi,
                                const RelationResult& witness, double new_threshold);

struct LinkCheck {
  std::string name;
  bool lhs = false;
  bool rhs = false;
  bool consistent = true;
};

struct DegeneracyReport {
  RangeKind claimed = RangeKind::large;
  std::vector<LinkCheck> checks;
  bool consistent = true;
};

// b_phi < inf <=> (b_phi1 < inf and b_phi2 < inf) for large-argument equivalence;
// a_phi = 0 <=> (a_phi1 = 0 or a_phi2 = 0) for small-argument equivalence.
DegeneracyReport degeneracy_links(const YoungFunction& phi1, const YoungFunction& phi2, const YoungFunction& phi,
                                  RangeKind claimed);

struct BridgeReport {
  double C = 1.0;
  bool sum_holds = true;
  // (u, v, phi(Cuv), phi1(u) + phi2(v))
  std::optional<std::vector<double>> sum_counterexample;
  std::size_t sum_points = 0;
  bool product_holds = true;
  // (w, C/2 phi1^-1 phi2^-1, phi^-1)
  std::optional<std::vector<double>> product_counterexample;
  double final_constant = 0.0;
};

BridgeReport bridge_product_sum(const YoungFunction& phi1, const YoungFunction& phi2, const YoungFunction& phi,
                                double C, ArgRange range, std::size_t uv_points = 201, std::size_t w_points = 2001);

// How L^inf sits inside the base space; decides the argument range that matters.
enum class EmbeddingKind { function_finite_measure, function_infinite_measure, sequence };
RangeKind required_range(EmbeddingKind e);

enum class Inclusion { equality, inclusion, reverse_inclusion, neither, inconclusive };
std::string inclusion_name(Inclusion i);

struct InclusionVerdict {
  ArgRange range;
  RelationResult left, right;
  // inclusion: E_phi2 into M(E_phi1, E_phi); reverse the other way.
  Inclusion classification = Inclusion::inconclusive;
};

InclusionVerdict multiplier_inclusion_predicate(EmbeddingKind e, const YoungFunction& phi1, const YoungFunction& phi2,
                                                const YoungFunction& phi, const EquivOptions& opts = {});

}  // namespace orlicz
