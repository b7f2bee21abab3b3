#include "hyperspec/suite.hpp"

#include <algorithm>
#include <stdexcept>

#include "hyperspec/detail/rng.hpp"

namespace hyperspec {

namespace {

int min_edges_for_connectivity(int n, int k) {
  return (n - 1 + (k - 2)) / (k - 1);
}

Hypergraph random_connected(std::mt19937_64& rng, const SuiteRanges& ranges) {
  for (int attempt = 0; attempt < 4000; ++attempt) {
    const int k = detail::draw_int(rng, ranges.k_min, ranges.k_max);
    const int n = detail::draw_int(rng, k, ranges.n_max);
    const int lo = std::min(min_edges_for_connectivity(n, k),
                            static_cast<int>(binomial(n, k)));
    const int hi = static_cast<int>(
        std::min<std::uint64_t>(binomial(n, k), ranges.m_max));
    const int m = detail::draw_int(rng, std::min(lo, hi), hi);
    auto h = gen_random(n, m, k, rng());
    if (is_connected(h)) return h;
  }
  throw std::runtime_error("could not draw a connected random instance");
}

Hypergraph random_regular_connected(std::mt19937_64& rng, const SuiteRanges& ranges) {
  for (int attempt = 0; attempt < 4000; ++attempt) {
    const int k = detail::draw_int(rng, ranges.k_min, ranges.k_max);
    const int n = detail::draw_int(rng, k + 1, ranges.n_max);
    const int d_cap = static_cast<int>(
        std::min<std::uint64_t>(binomial(n - 1, k - 1), 6));
    const int d = detail::draw_int(rng, 1, std::max(1, d_cap));
    if ((static_cast<long long>(n) * d) % k != 0) continue;
    if (static_cast<long long>(n) * d / k > ranges.m_max) continue;
    try {
      auto h = gen_random_regular(n, d, k, rng());
      if (is_connected(h)) return h;
    } catch (const std::runtime_error&) {
      continue;  // sampler budget exhausted, redraw parameters
    }
  }
  throw std::runtime_error("could not draw a connected regular instance");
}

Hypergraph random_hyperstar(std::mt19937_64& rng, const SuiteRanges& ranges) {
  const int k = detail::draw_int(rng, ranges.k_min, ranges.k_max);
  const int t_cap = std::min((ranges.n_max - 1) / (k - 1), ranges.m_max);
  const int t = detail::draw_int(rng, 2, std::max(2, t_cap));
  return gen_hyperstar(t, k);
}

Hypergraph random_blowup(std::mt19937_64& rng, const SuiteRanges& ranges) {
  for (int attempt = 0; attempt < 4000; ++attempt) {
    const int k = detail::draw_int(rng, std::max(2, ranges.k_min), ranges.k_max);
    const int r = k - 1;
    if (r == 1) {
      // 1-uniform bases are 1-regular block unions; their blow-ups are stars.
      const int t = detail::draw_int(rng, 2, std::max(2, ranges.n_max - 1));
      return blow_up(gen_disjoint_blocks(t, 1));
    }
    const int n0 = detail::draw_int(rng, r, ranges.n_max - 1);
    const int d_cap = static_cast<int>(
        std::min<std::uint64_t>(binomial(n0 - 1, r - 1), 4));
    const int d = detail::draw_int(rng, 1, std::max(1, d_cap));
    if ((static_cast<long long>(n0) * d) % r != 0) continue;
    if (static_cast<long long>(n0) * d / r > ranges.m_max) continue;
    try {
      return blow_up(gen_random_regular(n0, d, r, rng()));
    } catch (const std::runtime_error&) {
      continue;
    }
  }
  throw std::runtime_error("could not draw a blow-up instance");
}

}  // namespace

std::vector<Hypergraph> suite_instances(int count, std::uint64_t seed,
                                        const SuiteRanges& ranges) {
  if (count < 1) throw std::invalid_argument("need at least one case");
  if (ranges.k_min < 2 || ranges.k_max < ranges.k_min) {
    throw std::invalid_argument("invalid uniformity range");
  }
  if (ranges.n_max < ranges.k_max + 1) {
    throw std::invalid_argument("vertex cap too small for the uniformity range");
  }
  std::mt19937_64 rng(seed);
  std::vector<Hypergraph> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    switch (i % 4) {
      case 0: out.push_back(random_connected(rng, ranges)); break;
      case 1: out.push_back(random_regular_connected(rng, ranges)); break;
      case 2: out.push_back(random_hyperstar(rng, ranges)); break;
      default: out.push_back(random_blowup(rng, ranges)); break;
    }
  }
  return out;
}

SuiteSummary run_suite(const std::vector<Hypergraph>& instances,
                       const SolverOptions& opts) {
  SuiteSummary summary;
  summary.cases = static_cast<int>(instances.size());
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& h = instances[i];
    SuiteCaseResult result;
    result.index = static_cast<int>(i);
    result.k = h.uniformity();
    result.n = h.vertex_count();
    result.m = h.edge_count();

    const auto report = full_report(h, opts);
    result.pass = !report.numeric_failure();
    if (report.adj_error) result.failures.push_back("adjacency solve: " + *report.adj_error);
    if (report.q_error) result.failures.push_back("laplacian solve: " + *report.q_error);
    if (report.spectral_adj && !report.spectral_adj->converged) {
      result.failures.push_back("adjacency solve did not converge");
    }
    if (report.spectral_q && !report.spectral_q->converged) {
      result.failures.push_back("laplacian solve did not converge");
    }
    for (const auto& check : report.checks) {
      if (!check.pass) {
        result.pass = false;
        result.failures.push_back(check.name + ": " + check.detail);
      }
    }
    for (const auto& entry : report.entries) {
      if (entry.applicable && entry.slack) {
        const auto [it, inserted] =
            summary.worst_slack.try_emplace(entry.name, *entry.slack);
        if (!inserted) it->second = std::min(it->second, *entry.slack);
      }
    }
    if (result.pass) ++summary.passed;
    summary.results.push_back(std::move(result));
  }
  return summary;
}

}  // namespace hyperspec
