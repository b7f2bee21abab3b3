#include "hyperspec/json_report.hpp"

#include <cmath>

namespace hyperspec {

namespace {

// Non-finite doubles have no JSON representation; emit null explicitly.
Json number_or_null(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

}  // namespace

Json to_json(const SolverOptions& opts) {
  Json j;
  j["tolerance"] = opts.tolerance;
  j["max_iterations"] = opts.max_iterations;
  j["shift"] = opts.shift;
  j["per_component"] = opts.per_component;
  return j;
}

Json to_json(const SpectralEstimate& est) {
  Json j;
  j["lo"] = number_or_null(est.lo);
  j["hi"] = number_or_null(est.hi);
  j["estimate"] = number_or_null(est.estimate);
  j["iterations"] = est.iterations;
  j["converged"] = est.converged;
  j["residual"] = number_or_null(est.residual);
  j["connected_input"] = est.connected_input;
  j["eigenvector"] = est.eigenvector;
  return j;
}

Json to_json(const Classification& c) {
  Json j;
  j["kind"] = to_string(c.kind);
  if (c.kind == Classification::Kind::Regular) j["degree"] = c.degree;
  if (c.kind == Classification::Kind::BlowupOfRegular) {
    j["apex"] = c.apex;
    j["base_degree"] = c.base_degree;
  }
  if (c.predicted_adj) j["predicted_adj"] = number_or_null(*c.predicted_adj);
  if (c.predicted_q) j["predicted_q"] = number_or_null(*c.predicted_q);
  return j;
}

Json to_json(const BoundEntry& entry) {
  Json j;
  j["name"] = entry.name;
  j["value"] = number_or_null(entry.value);
  j["applicable"] = entry.applicable;
  j["predicted_equality"] = entry.predicted_equality;
  if (entry.slack) j["slack"] = number_or_null(*entry.slack);
  if (entry.per_component_value) {
    j["per_component_value"] = number_or_null(*entry.per_component_value);
  }
  if (!entry.witness.empty()) j["witness"] = entry.witness;
  if (entry.error) j["error"] = *entry.error;
  return j;
}

Json to_json(const CheckResult& check) {
  Json j;
  j["name"] = check.name;
  j["pass"] = check.pass;
  j["detail"] = check.detail;
  return j;
}

Json to_json(const BoundReport& report) {
  Json j;
  j["k"] = report.k;
  j["n"] = report.n;
  j["m"] = report.m;
  j["connected"] = report.connected;
  j["classification"] = to_json(report.classification);
  j["spectral_adj"] = report.spectral_adj ? to_json(*report.spectral_adj) : Json(nullptr);
  if (report.adj_error) j["adj_error"] = *report.adj_error;
  j["spectral_q"] = report.spectral_q ? to_json(*report.spectral_q) : Json(nullptr);
  if (report.q_error) j["q_error"] = *report.q_error;
  j["entries"] = Json::array();
  for (const auto& entry : report.entries) j["entries"].push_back(to_json(entry));
  j["checks"] = Json::array();
  for (const auto& check : report.checks) j["checks"].push_back(to_json(check));
  j["options"] = to_json(report.options);
  return j;
}

Json to_json(const SuiteSummary& summary) {
  Json j;
  j["cases"] = summary.cases;
  j["passed"] = summary.passed;
  j["worst_slack"] = Json::object();
  for (const auto& [name, slack] : summary.worst_slack) {
    j["worst_slack"][name] = number_or_null(slack);
  }
  j["results"] = Json::array();
  for (const auto& r : summary.results) {
    Json c;
    c["index"] = r.index;
    c["k"] = r.k;
    c["n"] = r.n;
    c["m"] = r.m;
    c["pass"] = r.pass;
    c["failures"] = r.failures;
    j["results"].push_back(std::move(c));
  }
  return j;
}

}  // namespace hyperspec
