#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperspec/hypergraph.hpp"
#include "hyperspec/spectral.hpp"
#include "hyperspec/tensor.hpp"

namespace hyperspec {

// Closed-form degree bounds. rho(A) abbreviates the adjacency spectral
// radius, rho(Q) the signless Laplacian one, d1 >= d2 the two largest
// degrees.

// rho(A) <= d1 (max degree).
double adj_upper_maxdeg(const Hypergraph& h);

// rho(A) <= d1^(1/k) d2^(1-1/k); never worse than the max-degree bound, and
// attained exactly on regular hypergraphs and blow-ups of regular
// hypergraphs. Requires n >= 2.
double adj_upper_d1d2(const Hypergraph& h);

// All unordered vertex pairs that co-occur in at least one edge, sorted.
std::vector<std::pair<int, int>> coedge_pairs(const Hypergraph& h);

// b'_p = b_p^-(k-1) * sum over edges at p of the product of the other
// members' weights. With unit weights b' is the degree vector; with degree
// weights it is the m-value vector.
std::vector<double> b_prime(const Hypergraph& h, const WeightVector& b);

namespace detail {
// As b_prime, but any intermediate product whose magnitude leaves
// [1/guard, guard] reroutes that vertex through log-domain accumulation
// (log-sum-exp). Exposed so tests can force the log path with a tiny guard.
std::vector<double> b_prime_guarded(const Hypergraph& h, const WeightVector& b,
                                    double guard);
}  // namespace detail

// rho(Q) <= max over coedge pairs {i,j} of
//   (d_i + d_j + sqrt((d_i - d_j)^2 + 4 b'_i b'_j)) / 2,
// for any strictly positive weights b. Stated for connected input; the
// formula is still evaluated for disconnected input and flagged
// non-applicable in reports. Requires at least one edge.
double q_upper_weighted(const Hypergraph& h, const WeightVector& b);

// d1 <= rho(Q).
double q_lower_d1(const Hypergraph& h);
// rho(Q) <= d1 + d1^(1/k) d2^(1-1/k); equality exactly for regular input.
double q_upper_d1d2(const Hypergraph& h);

// Specializations of the weighted bound: unit weights and degree weights.
double q_upper_pairdeg(const Hypergraph& h);  // max (d_i + d_j) over coedge pairs
double q_upper_m(const Hypergraph& h);        // with b'_i = m_i

// rho(A) <= max sqrt(d_i d_j) and rho(A) <= max sqrt(m_i m_j) over coedge
// pairs.
double adj_upper_sqrt_dd(const Hypergraph& h);
double adj_upper_sqrt_mm(const Hypergraph& h);

// Equality-case classification with the exact spectral radii it pins down.
struct Classification {
  enum class Kind { Regular, BlowupOfRegular, General };
  Kind kind = Kind::General;
  int degree = 0;       // Regular: the common degree
  int apex = 0;         // BlowupOfRegular: the apex vertex
  int base_degree = 0;  // BlowupOfRegular: the base's common degree
  std::optional<double> predicted_adj;  // exact rho(A) when known
  std::optional<double> predicted_q;    // exact rho(Q) when known
};

const char* to_string(Classification::Kind kind);

// Regular(d) when every degree is d; else BlowupOfRegular when an apex vertex
// plus regular base is detected; else General. Regular pins rho(A) = d and
// rho(Q) = 2d; a blow-up pins rho(A) = d1^(1/k) d2^(1-1/k).
Classification classify_equality(const Hypergraph& h);

// How the per-bound weight vectors are chosen in a report.
struct WeightSpec {
  enum class Kind { Uniform, Degree, Explicit };
  Kind kind = Kind::Uniform;
  std::string label = "uniform";
  std::vector<double> values;  // Explicit only

  static WeightSpec uniform();
  static WeightSpec degree();
  static WeightSpec explicit_values(std::string label, std::vector<double> values);
};

struct BoundEntry {
  std::string name;
  double value = 0.0;
  bool applicable = false;
  bool predicted_equality = false;
  // bound - estimate for upper bounds, estimate - bound for the lower bound;
  // present when the matching spectral estimate is available.
  std::optional<double> slack;
  // Max of the bound over components, reported alongside when the whole-graph
  // hypothesis (connectivity) fails but the per-component form still holds.
  std::optional<double> per_component_value;
  // Vertex or pair attaining the bound's max, for diagnostics.
  std::string witness;
  std::optional<std::string> error;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Everything the verifier needs for one hypergraph: both spectral estimates,
// every bound with applicability and slack, the equality classification, and
// the pass/fail list of all asserted inequalities and equality cases.
struct BoundReport {
  int k = 0;
  int n = 0;
  int m = 0;
  bool connected = false;
  Classification classification;
  std::optional<SpectralEstimate> spectral_adj;
  std::optional<SpectralEstimate> spectral_q;
  std::optional<std::string> adj_error;
  std::optional<std::string> q_error;
  std::vector<BoundEntry> entries;
  std::vector<CheckResult> checks;
  SolverOptions options;

  bool numeric_failure() const;
  bool all_checks_pass() const;
  const BoundEntry* entry(const std::string& name) const;
};

// Tolerances pinned for the report's pass/fail checks.
inline constexpr double kSlackTolerance = 1e-9;        // bound vs certified bracket
inline constexpr double kAdjEqualityTolerance = 1e-8;  // predicted rho(A) equality
inline constexpr double kQEqualityTolerance = 1e-7;    // predicted rho(Q) equality
inline constexpr double kDominanceTolerance = 1e-12;   // d1d2 bound <= max degree
inline constexpr double kReductionTolerance = 1e-12;   // weighted-bound specializations
inline constexpr double kResidualFactor = 10.0;        // residual <= factor * tolerance

// Computes spectral estimates (per component when needed), all bounds for the
// requested weight choices, slacks, classification, and the check list.
// Solver failures are recorded per entry; the report itself always completes.
BoundReport full_report(const Hypergraph& h, const SolverOptions& opts = {},
                        const std::vector<WeightSpec>& weight_choices = {
                            WeightSpec::uniform(), WeightSpec::degree()});

}  // namespace hyperspec
