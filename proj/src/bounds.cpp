#include "hyperspec/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hyperspec/detail/products.hpp"

namespace hyperspec {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

double d1d2_power(int d1, int d2, int k) {
  return std::pow(static_cast<double>(d1), 1.0 / k) *
         std::pow(static_cast<double>(d2), 1.0 - 1.0 / k);
}

std::string pair_label(int i, int j) {
  return "pair {" + std::to_string(i) + "," + std::to_string(j) + "}";
}

struct PairMax {
  double value = -kInf;
  int i = 0;
  int j = 0;
};

// Max of f(i, j) over all pairs co-occurring in an edge. Repeated pairs do
// not change the max, so no dedup; ties keep the first pair in canonical
// order.
template <typename F>
PairMax max_over_pairs(const Hypergraph& h, F&& f) {
  if (h.edge_count() == 0) {
    throw std::invalid_argument("pair bound needs at least one edge");
  }
  PairMax best;
  for (const auto& e : h.edges()) {
    for (std::size_t a = 0; a < e.size(); ++a) {
      for (std::size_t b = a + 1; b < e.size(); ++b) {
        const double value = f(e[a], e[b]);
        if (value > best.value) best = PairMax{value, e[a], e[b]};
      }
    }
  }
  return best;
}

// One-pass m-values: sum over incident edges of the product of the other
// members' degrees, then divide by d^(k-1). NaN where the degree is 0
// (such vertices never occur in a coedge pair).
std::vector<double> all_m_values(const Hypergraph& h, const DegreeProfile& profile) {
  std::vector<double> weights(profile.degree.begin(), profile.degree.end());
  std::vector<double> sums(weights.size(), 0.0);
  std::vector<double> partial(static_cast<std::size_t>(h.uniformity()));
  for (const auto& e : h.edges()) {
    detail::leave_one_out_products(e, weights, partial);
    for (std::size_t p = 0; p < e.size(); ++p) {
      sums[static_cast<std::size_t>(e[p]) - 1] += partial[p];
    }
  }
  std::vector<double> m(sums.size(), kNaN);
  for (std::size_t i = 0; i < sums.size(); ++i) {
    if (profile.degree[i] >= 1) {
      m[i] = sums[i] / std::pow(static_cast<double>(profile.degree[i]),
                                h.uniformity() - 1);
    }
  }
  return m;
}

}  // namespace

double adj_upper_maxdeg(const Hypergraph& h) {
  return static_cast<double>(degrees(h).max());
}

double adj_upper_d1d2(const Hypergraph& h) {
  if (h.vertex_count() < 2) {
    throw std::invalid_argument("two-degree bound needs at least two vertices");
  }
  const auto profile = degrees(h);
  return d1d2_power(profile.max(), profile.second(), h.uniformity());
}

std::vector<std::pair<int, int>> coedge_pairs(const Hypergraph& h) {
  std::set<std::pair<int, int>> pairs;
  for (const auto& e : h.edges()) {
    for (std::size_t a = 0; a < e.size(); ++a) {
      for (std::size_t b = a + 1; b < e.size(); ++b) {
        pairs.emplace(e[a], e[b]);
      }
    }
  }
  return {pairs.begin(), pairs.end()};
}

namespace detail {

std::vector<double> b_prime_guarded(const Hypergraph& h, const WeightVector& b,
                                    double guard) {
  if (b.size() != h.vertex_count()) {
    throw std::invalid_argument("weight length does not match vertex count");
  }
  const int k = h.uniformity();
  const auto& weights = b.values();
  const double lo_guard = 1.0 / guard;

  std::vector<double> sums(weights.size(), 0.0);
  std::vector<bool> needs_log(weights.size(), false);
  std::vector<double> partial(static_cast<std::size_t>(k));
  for (const auto& e : h.edges()) {
    leave_one_out_products(e, weights, partial);
    bool in_range = true;
    for (std::size_t p = 0; p < e.size(); ++p) {
      if (partial[p] < lo_guard || partial[p] > guard) in_range = false;
    }
    for (std::size_t p = 0; p < e.size(); ++p) {
      const auto i = static_cast<std::size_t>(e[p]) - 1;
      sums[i] += partial[p];
      if (!in_range) needs_log[i] = true;
    }
  }

  std::vector<double> result(weights.size(), 0.0);
  const auto profile = degrees(h);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (profile.degree[i] == 0) continue;  // empty sum
    const double denom = std::pow(weights[i], k - 1);
    if (denom < lo_guard || denom > guard || sums[i] > guard) needs_log[i] = true;
    if (!needs_log[i]) {
      result[i] = sums[i] / denom;
      continue;
    }
    // Log-domain accumulation: log-sum-exp over the per-edge product terms,
    // then shift by -(k-1) log b_i.
    std::vector<double> terms;
    for (const auto& e : h.edges()) {
      if (!std::binary_search(e.begin(), e.end(), static_cast<int>(i) + 1)) continue;
      double log_term = 0.0;
      for (int u : e) {
        if (u != static_cast<int>(i) + 1) {
          log_term += std::log(weights[static_cast<std::size_t>(u) - 1]);
        }
      }
      terms.push_back(log_term);
    }
    const double peak = *std::max_element(terms.begin(), terms.end());
    double acc = 0.0;
    for (double t : terms) acc += std::exp(t - peak);
    result[i] = std::exp(peak + std::log(acc) - (k - 1) * std::log(weights[i]));
  }
  return result;
}

}  // namespace detail

std::vector<double> b_prime(const Hypergraph& h, const WeightVector& b) {
  return detail::b_prime_guarded(h, b, 1e300);
}

double q_upper_weighted(const Hypergraph& h, const WeightVector& b) {
  const auto bp = b_prime(h, b);
  const auto profile = degrees(h);
  return max_over_pairs(h, [&](int i, int j) {
           const double di = profile.of(i);
           const double dj = profile.of(j);
           return 0.5 * (di + dj +
                         std::sqrt((di - dj) * (di - dj) +
                                   4.0 * bp[static_cast<std::size_t>(i) - 1] *
                                       bp[static_cast<std::size_t>(j) - 1]));
         })
      .value;
}

double q_lower_d1(const Hypergraph& h) {
  return static_cast<double>(degrees(h).max());
}

double q_upper_d1d2(const Hypergraph& h) {
  const auto profile = degrees(h);
  return profile.max() + d1d2_power(profile.max(), profile.second(), h.uniformity());
}

double q_upper_pairdeg(const Hypergraph& h) {
  const auto profile = degrees(h);
  return max_over_pairs(h, [&](int i, int j) {
           return static_cast<double>(profile.of(i) + profile.of(j));
         })
      .value;
}

double q_upper_m(const Hypergraph& h) {
  const auto profile = degrees(h);
  const auto m = all_m_values(h, profile);
  return max_over_pairs(h, [&](int i, int j) {
           const double di = profile.of(i);
           const double dj = profile.of(j);
           return 0.5 * (di + dj +
                         std::sqrt((di - dj) * (di - dj) +
                                   4.0 * m[static_cast<std::size_t>(i) - 1] *
                                       m[static_cast<std::size_t>(j) - 1]));
         })
      .value;
}

double adj_upper_sqrt_dd(const Hypergraph& h) {
  const auto profile = degrees(h);
  return max_over_pairs(h, [&](int i, int j) {
           return std::sqrt(static_cast<double>(profile.of(i)) * profile.of(j));
         })
      .value;
}

double adj_upper_sqrt_mm(const Hypergraph& h) {
  const auto profile = degrees(h);
  const auto m = all_m_values(h, profile);
  return max_over_pairs(h, [&](int i, int j) {
           return std::sqrt(m[static_cast<std::size_t>(i) - 1] *
                            m[static_cast<std::size_t>(j) - 1]);
         })
      .value;
}

const char* to_string(Classification::Kind kind) {
  switch (kind) {
    case Classification::Kind::Regular: return "Regular";
    case Classification::Kind::BlowupOfRegular: return "BlowupOfRegular";
    default: return "General";
  }
}

Classification classify_equality(const Hypergraph& h) {
  Classification c;
  if (const auto d = is_regular(h)) {
    c.kind = Classification::Kind::Regular;
    c.degree = *d;
    c.predicted_adj = static_cast<double>(*d);
    c.predicted_q = 2.0 * *d;
    return c;
  }
  if (const auto blowup = detect_blowup(h)) {
    const auto profile = degrees(h);
    c.kind = Classification::Kind::BlowupOfRegular;
    c.apex = blowup->apex;
    c.base_degree = blowup->base_degree;
    c.predicted_adj = d1d2_power(profile.max(), profile.second(), h.uniformity());
    return c;
  }
  return c;
}

WeightSpec WeightSpec::uniform() { return WeightSpec{Kind::Uniform, "uniform", {}}; }

WeightSpec WeightSpec::degree() { return WeightSpec{Kind::Degree, "degree", {}}; }

WeightSpec WeightSpec::explicit_values(std::string label, std::vector<double> values) {
  return WeightSpec{Kind::Explicit, std::move(label), std::move(values)};
}

bool BoundReport::numeric_failure() const {
  if (adj_error || q_error) return true;
  if (spectral_adj && !spectral_adj->converged) return true;
  if (spectral_q && !spectral_q->converged) return true;
  return false;
}

bool BoundReport::all_checks_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

const BoundEntry* BoundReport::entry(const std::string& name) const {
  for (const auto& e : entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

namespace {

std::string format_double(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

std::optional<WeightVector> make_weights(const WeightSpec& spec, const Hypergraph& h,
                                         std::string* error) {
  try {
    switch (spec.kind) {
      case WeightSpec::Kind::Uniform:
        return WeightVector::uniform(h.vertex_count());
      case WeightSpec::Kind::Degree:
        return WeightVector::from_degrees(h);
      case WeightSpec::Kind::Explicit: {
        if (static_cast<int>(spec.values.size()) != h.vertex_count()) {
          throw std::invalid_argument("weight file has " +
                                      std::to_string(spec.values.size()) +
                                      " entries, expected " +
                                      std::to_string(h.vertex_count()));
        }
        return WeightVector(spec.values);
      }
    }
  } catch (const std::exception& e) {
    if (error) *error = e.what();
    return std::nullopt;
  }
  return std::nullopt;
}

// Restrict an explicit weight spec to one component.
WeightSpec restrict_weights(const WeightSpec& spec, const Component& comp) {
  if (spec.kind != WeightSpec::Kind::Explicit) return spec;
  std::vector<double> values;
  values.reserve(comp.original_vertex.size());
  for (int v : comp.original_vertex) {
    values.push_back(spec.values[static_cast<std::size_t>(v) - 1]);
  }
  return WeightSpec::explicit_values(spec.label, std::move(values));
}

class ReportBuilder {
 public:
  ReportBuilder(const Hypergraph& h, const SolverOptions& opts,
                const std::vector<WeightSpec>& weight_choices)
      : h_(h), profile_(degrees(h)), weight_choices_(weight_choices) {
    report_.k = h.uniformity();
    report_.n = h.vertex_count();
    report_.m = h.edge_count();
    report_.connected = is_connected(h);
    report_.classification = classify_equality(h);
    report_.options = opts;
    report_.options.per_component = true;  // reports never refuse disconnected input
    if (!report_.connected && report_.m >= 1) {
      components_ = components(h);
    }
  }

  BoundReport build() {
    solve();
    add_adjacency_entries();
    add_laplacian_entries();
    add_bound_checks();
    add_equality_checks();
    add_identity_checks();
    add_ordering_checks();
    add_residual_checks();
    return std::move(report_);
  }

 private:
  using Kind = Classification::Kind;

  void solve() {
    try {
      report_.spectral_adj = spectral_radius(h_, TensorKind::Adjacency, report_.options);
    } catch (const std::exception& e) {
      report_.adj_error = e.what();
    }
    try {
      report_.spectral_q =
          spectral_radius(h_, TensorKind::SignlessLaplacian, report_.options);
    } catch (const std::exception& e) {
      report_.q_error = e.what();
    }
  }

  // Max of a per-component bound over the components that have edges.
  template <typename F>
  std::optional<double> per_component_max(F&& bound) {
    if (components_.empty()) return std::nullopt;
    double best = -kInf;
    bool any = false;
    for (const auto& comp : components_) {
      if (comp.graph.edge_count() == 0) continue;
      best = std::max(best, bound(comp));
      any = true;
    }
    if (!any) return std::nullopt;
    return best;
  }

  BoundEntry& push_entry(std::string name, bool applicable) {
    report_.entries.push_back(BoundEntry{});
    auto& entry = report_.entries.back();
    entry.name = std::move(name);
    entry.applicable = applicable;
    entry.value = kNaN;
    return entry;
  }

  void set_upper_slack(BoundEntry& entry, const std::optional<SpectralEstimate>& est) {
    if (est && std::isfinite(entry.value)) {
      entry.slack = entry.value - est->estimate;
    }
  }

  void add_adjacency_entries() {
    const bool pairs_ok = report_.connected && report_.m >= 1;

    auto& maxdeg = push_entry("adj_maxdeg", true);
    maxdeg.value = adj_upper_maxdeg(h_);
    maxdeg.witness = "vertex " + std::to_string(argmax_degree());
    maxdeg.predicted_equality = report_.classification.kind == Kind::Regular;
    set_upper_slack(maxdeg, report_.spectral_adj);

    auto& d1d2 = push_entry("adj_d1d2", report_.n >= 2);
    if (report_.n >= 2) {
      d1d2.value = adj_upper_d1d2(h_);
      d1d2.predicted_equality = report_.classification.kind != Kind::General;
      set_upper_slack(d1d2, report_.spectral_adj);
    } else {
      d1d2.error = "needs at least two vertices";
    }

    add_pair_entry("adj_sqrt_dd", pairs_ok, report_.spectral_adj,
                   [](const Hypergraph& g) { return adj_upper_sqrt_dd(g); });
    add_pair_entry("adj_sqrt_mm", pairs_ok, report_.spectral_adj,
                   [](const Hypergraph& g) { return adj_upper_sqrt_mm(g); });
  }

  void add_laplacian_entries() {
    const bool pairs_ok = report_.connected && report_.m >= 1;

    auto& lower = push_entry("q_lower_d1", report_.connected);
    lower.value = q_lower_d1(h_);
    lower.witness = "vertex " + std::to_string(argmax_degree());
    if (report_.spectral_q) lower.slack = report_.spectral_q->estimate - lower.value;
    if (!report_.connected) lower.per_component_value = lower.value;

    auto& upper = push_entry("q_upper_d1d2", report_.connected);
    if (report_.n >= 2) {
      upper.value = q_upper_d1d2(h_);
      upper.predicted_equality = report_.classification.kind == Kind::Regular;
      set_upper_slack(upper, report_.spectral_q);
      if (!report_.connected) {
        upper.per_component_value =
            per_component_max([](const Component& c) { return q_upper_d1d2(c.graph); });
      }
    } else {
      // Single vertex: d1 = 0 and the bound is 0, matching rho(Q) = 0.
      upper.value = 0.0;
      set_upper_slack(upper, report_.spectral_q);
    }

    for (const auto& spec : weight_choices_) {
      add_weighted_entry(spec);
    }

    add_pair_entry("q_upper_pairdeg", pairs_ok, report_.spectral_q,
                   [](const Hypergraph& g) { return q_upper_pairdeg(g); });
    add_pair_entry("q_upper_m", pairs_ok, report_.spectral_q,
                   [](const Hypergraph& g) { return q_upper_m(g); });
  }

  template <typename F>
  void add_pair_entry(std::string name, bool applicable,
                      const std::optional<SpectralEstimate>& est, F&& bound) {
    auto& entry = push_entry(std::move(name), applicable);
    if (report_.m < 1) {
      entry.error = "no edges";
      return;
    }
    entry.value = bound(h_);
    entry.witness = pair_witness(entry.name);
    set_upper_slack(entry, est);
    if (!report_.connected) {
      entry.per_component_value =
          per_component_max([&](const Component& c) { return bound(c.graph); });
    }
  }

  void add_weighted_entry(const WeightSpec& spec) {
    std::string error;
    const auto weights = make_weights(spec, h_, &error);
    const bool applicable =
        report_.connected && report_.m >= 1 && weights.has_value();
    auto& entry = push_entry("q_upper_weighted(" + spec.label + ")", applicable);
    if (!weights) {
      entry.error = error;
      return;
    }
    if (report_.m < 1) {
      entry.error = "no edges";
      return;
    }
    entry.value = q_upper_weighted(h_, *weights);
    set_upper_slack(entry, report_.spectral_q);
    if (!report_.connected) {
      entry.per_component_value = per_component_max([&](const Component& c) {
        const auto comp_spec = restrict_weights(spec, c);
        std::string comp_error;
        const auto comp_weights = make_weights(comp_spec, c.graph, &comp_error);
        return comp_weights ? q_upper_weighted(c.graph, *comp_weights) : kNaN;
      });
      if (entry.per_component_value && !std::isfinite(*entry.per_component_value)) {
        entry.per_component_value.reset();
      }
    }
  }

  int argmax_degree() const {
    int best = 1;
    for (int v = 2; v <= report_.n; ++v) {
      if (profile_.of(v) > profile_.of(best)) best = v;
    }
    return best;
  }

  std::string pair_witness(const std::string& name) {
    const auto m = all_m_values(h_, profile_);
    auto f = [&](int i, int j) -> double {
      const double di = profile_.of(i);
      const double dj = profile_.of(j);
      const double mi = m[static_cast<std::size_t>(i) - 1];
      const double mj = m[static_cast<std::size_t>(j) - 1];
      if (name == "adj_sqrt_dd") return std::sqrt(di * dj);
      if (name == "adj_sqrt_mm") return std::sqrt(mi * mj);
      if (name == "q_upper_pairdeg") return di + dj;
      return 0.5 * (di + dj + std::sqrt((di - dj) * (di - dj) + 4.0 * mi * mj));
    };
    const auto best = max_over_pairs(h_, f);
    return pair_label(best.i, best.j);
  }

  void add_check(std::string name, bool pass, std::string detail) {
    report_.checks.push_back(CheckResult{std::move(name), pass, std::move(detail)});
  }

  void add_bound_checks() {
    for (const auto& entry : report_.entries) {
      const bool is_lower = entry.name == "q_lower_d1";
      const auto& est = entry.name.rfind("adj_", 0) == 0 ? report_.spectral_adj
                                                         : report_.spectral_q;
      if (!est || !std::isfinite(entry.value)) continue;
      if (entry.applicable) {
        bool pass;
        std::string detail;
        if (is_lower) {
          pass = entry.value <= est->hi + kSlackTolerance;
          detail = format_double(entry.value) + " <= rho_hi " + format_double(est->hi);
        } else {
          pass = entry.value >= est->lo - kSlackTolerance;
          detail = "rho_lo " + format_double(est->lo) + " <= " +
                   format_double(entry.value);
        }
        if (!pass && !entry.witness.empty()) detail += " at " + entry.witness;
        add_check(entry.name, pass, std::move(detail));
      }
      if (entry.per_component_value) {
        const bool pass = is_lower
                              ? *entry.per_component_value <= est->hi + kSlackTolerance
                              : *entry.per_component_value >= est->lo - kSlackTolerance;
        add_check(entry.name + ":per_component", pass,
                  "component max " + format_double(*entry.per_component_value));
      }
    }
  }

  void add_equality_checks() {
    const auto& cls = report_.classification;
    if (cls.predicted_adj && report_.spectral_adj && report_.spectral_adj->converged) {
      const double gap = std::abs(report_.spectral_adj->estimate - *cls.predicted_adj);
      add_check("equality_rho_adj", gap <= kAdjEqualityTolerance,
                "|rho(A) - " + format_double(*cls.predicted_adj) + "| = " +
                    format_double(gap));
    }
    if (cls.predicted_q && report_.spectral_q && report_.spectral_q->converged) {
      const double gap = std::abs(report_.spectral_q->estimate - *cls.predicted_q);
      add_check("equality_rho_q", gap <= kQEqualityTolerance,
                "|rho(Q) - " + format_double(*cls.predicted_q) + "| = " +
                    format_double(gap));
    }
    for (const auto& entry : report_.entries) {
      if (!entry.predicted_equality || !entry.applicable) continue;
      const auto& est = entry.name.rfind("adj_", 0) == 0 ? report_.spectral_adj
                                                         : report_.spectral_q;
      const double tol = entry.name.rfind("adj_", 0) == 0 ? kAdjEqualityTolerance
                                                          : kQEqualityTolerance;
      if (!est || !est->converged || !std::isfinite(entry.value)) continue;
      const double gap = std::abs(est->estimate - entry.value);
      add_check(entry.name + ":equality", gap <= tol,
                "|rho - bound| = " + format_double(gap));
    }
  }

  void add_identity_checks() {
    if (report_.n >= 2) {
      const auto* d1d2 = report_.entry("adj_d1d2");
      const auto* maxdeg = report_.entry("adj_maxdeg");
      if (d1d2 && maxdeg && std::isfinite(d1d2->value)) {
        add_check("dominance_d1d2_le_maxdeg",
                  d1d2->value <= maxdeg->value + kDominanceTolerance,
                  format_double(d1d2->value) + " <= " + format_double(maxdeg->value));
      }
    }
    if (report_.m < 1) return;
    const auto* pairdeg = report_.entry("q_upper_pairdeg");
    const auto* uniform = report_.entry("q_upper_weighted(uniform)");
    if (pairdeg && uniform && std::isfinite(pairdeg->value) &&
        std::isfinite(uniform->value)) {
      const double gap = std::abs(pairdeg->value - uniform->value);
      add_check("reduction_uniform_weights", gap <= kReductionTolerance,
                "|" + format_double(uniform->value) + " - " +
                    format_double(pairdeg->value) + "| = " + format_double(gap));
    }
    const auto* m_entry = report_.entry("q_upper_m");
    const auto* degree = report_.entry("q_upper_weighted(degree)");
    if (m_entry && degree && std::isfinite(m_entry->value) &&
        std::isfinite(degree->value)) {
      const double gap = std::abs(m_entry->value - degree->value);
      add_check("reduction_degree_weights", gap <= kReductionTolerance,
                "|" + format_double(degree->value) + " - " +
                    format_double(m_entry->value) + "| = " + format_double(gap));
    }
  }

  void add_ordering_checks() {
    if (report_.spectral_adj && report_.spectral_q) {
      add_check("adj_le_q",
                report_.spectral_adj->estimate <=
                    report_.spectral_q->estimate + kSlackTolerance,
                "rho(A) " + format_double(report_.spectral_adj->estimate) +
                    " <= rho(Q) " + format_double(report_.spectral_q->estimate));
    }
    if (report_.spectral_q) {
      const double d1 = profile_.max();
      add_check("d1_le_q", d1 <= report_.spectral_q->hi + kSlackTolerance,
                "d1 " + format_double(d1) + " <= rho(Q) hi " +
                    format_double(report_.spectral_q->hi));
    }
  }

  void add_residual_checks() {
    const double cap = kResidualFactor * report_.options.tolerance;
    if (report_.spectral_adj && report_.spectral_adj->converged) {
      add_check("residual_adj", report_.spectral_adj->residual <= cap,
                format_double(report_.spectral_adj->residual) + " <= " +
                    format_double(cap));
    }
    if (report_.spectral_q && report_.spectral_q->converged) {
      add_check("residual_q", report_.spectral_q->residual <= cap,
                format_double(report_.spectral_q->residual) + " <= " +
                    format_double(cap));
    }
  }

  const Hypergraph& h_;
  DegreeProfile profile_;
  const std::vector<WeightSpec>& weight_choices_;
  std::vector<Component> components_;
  BoundReport report_;
};

}  // namespace

BoundReport full_report(const Hypergraph& h, const SolverOptions& opts,
                        const std::vector<WeightSpec>& weight_choices) {
  return ReportBuilder(h, opts, weight_choices).build();
}

}  // namespace hyperspec
