#include "hyperspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>

#include "hyperspec/detail/rng.hpp"

namespace hyperspec {

double residual(const Hypergraph& h, TensorKind kind, double lambda,
                std::span<const double> x) {
  const int k = h.uniformity();
  bool nonzero = false;
  for (double v : x) nonzero = nonzero || v != 0.0;
  if (!nonzero) throw std::invalid_argument("residual needs a nonzero vector");
  const auto y = apply(h, kind, x);
  double worst = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    worst = std::max(worst, std::abs(y[i] - lambda * std::pow(x[i], k - 1)));
  }
  return worst;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using ApplyFn = std::function<std::vector<double>(std::span<const double>)>;

// Iterations between stall checks, and the relative shrinkage below which the
// bracket counts as stalled.
constexpr long kStallWindow = 1000;
constexpr double kStallShrinkage = 1e-15;

SpectralEstimate solve_connected(int n, int k, const ApplyFn& apply_fn,
                                 const SolverOptions& opts) {
  if (opts.tolerance <= 0.0) throw std::invalid_argument("tolerance must be positive");
  if (opts.max_iterations < 1) throw std::invalid_argument("need at least one iteration");
  if (opts.shift < 0.0) throw std::invalid_argument("shift must be nonnegative");

  const double c = opts.shift;
  const double inv_power = 1.0 / (k - 1);
  std::vector<double> x(static_cast<std::size_t>(n), 1.0);
  std::vector<double> shifted(static_cast<std::size_t>(n));

  SpectralEstimate result;
  double running_lo = -kInf;
  double running_hi = kInf;
  double window_width = kInf;
  bool restarted = false;
  std::vector<double> y;

  for (long it = 1; it <= opts.max_iterations; ++it) {
    y = apply_fn(x);
    double lo = kInf;
    double hi = -kInf;
    for (std::size_t i = 0; i < y.size(); ++i) {
      const double xpow = std::pow(x[i], k - 1);
      shifted[i] = y[i] + c * xpow;
      const double ratio = shifted[i] / xpow;
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
      throw std::runtime_error("spectral iteration produced a non-finite value");
    }
    running_lo = std::max(running_lo, lo);
    running_hi = std::min(running_hi, hi);
    result.iterations = it;

    if (hi - lo <= opts.tolerance) {
      result.converged = true;
      break;
    }
    if (it == opts.max_iterations) break;  // keep x paired with y for reporting

    bool reseeded = false;
    if (it % kStallWindow == 0) {
      const double width = hi - lo;
      if (window_width - width < kStallShrinkage * window_width) {
        if (restarted) break;  // stalled twice: stop with the bracket we have
        restarted = true;
        reseeded = true;
        std::mt19937_64 rng(0x5eedbeefULL);
        for (auto& v : x) v = detail::draw_real(rng, 0.5, 1.5);
      }
      window_width = width;
    }

    double max_entry = 0.0;
    if (!reseeded) {
      for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = std::pow(shifted[i], inv_power);
      }
    }
    for (double v : x) max_entry = std::max(max_entry, v);
    if (!(max_entry > 0.0) || !std::isfinite(max_entry)) {
      throw std::runtime_error("spectral iterate lost positivity");
    }
    for (auto& v : x) v /= max_entry;
  }

  result.lo = running_lo - c;
  result.hi = running_hi - c;
  result.estimate = 0.5 * (result.lo + result.hi);
  result.eigenvector = std::move(x);
  // Residual of the reported pair, straight from the last evaluation.
  double worst = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double xpow = std::pow(result.eigenvector[i], k - 1);
    worst = std::max(worst, std::abs(y[i] - result.estimate * xpow));
  }
  result.residual = worst;
  return result;
}

SpectralEstimate trivial_estimate(int n) {
  SpectralEstimate result;
  result.converged = true;
  result.eigenvector.assign(static_cast<std::size_t>(n), 1.0);
  return result;
}

SpectralEstimate solve_plain(const Hypergraph& h, TensorKind kind,
                             const SolverOptions& opts) {
  if (h.edge_count() == 0) return trivial_estimate(h.vertex_count());
  return solve_connected(
      h.vertex_count(), h.uniformity(),
      [&](std::span<const double> x) { return apply(h, kind, x); }, opts);
}

}  // namespace

SpectralEstimate spectral_radius(const Hypergraph& h, TensorKind kind,
                                 const SolverOptions& opts) {
  if (is_connected(h)) return solve_plain(h, kind, opts);
  if (!opts.per_component) {
    throw std::invalid_argument("disconnected input requires per_component solving");
  }

  // rho of a direct sum is the max over blocks: solve each component, keep
  // the intersection-style bracket [max lo_c, max hi_c], and embed the
  // dominant component's eigenvector at its original vertex ids.
  SpectralEstimate best;
  std::vector<double> embedded(static_cast<std::size_t>(h.vertex_count()), 0.0);
  long iterations = 0;
  bool converged = true;
  double lo = -kInf;
  double hi = -kInf;
  bool first = true;
  for (const auto& comp : components(h)) {
    auto est = solve_plain(comp.graph, kind, opts);
    iterations += est.iterations;
    converged = converged && est.converged;
    lo = first ? est.lo : std::max(lo, est.lo);
    hi = first ? est.hi : std::max(hi, est.hi);
    if (first || est.estimate > best.estimate) {
      best = est;
      std::fill(embedded.begin(), embedded.end(), 0.0);
      for (std::size_t v = 0; v < comp.original_vertex.size(); ++v) {
        embedded[static_cast<std::size_t>(comp.original_vertex[v]) - 1] =
            est.eigenvector[v];
      }
    }
    first = false;
  }
  best.lo = lo;
  best.hi = hi;
  best.estimate = 0.5 * (lo + hi);
  best.eigenvector = std::move(embedded);
  best.iterations = iterations;
  best.converged = converged;
  best.connected_input = false;
  best.residual = residual(h, kind, best.estimate, best.eigenvector);
  return best;
}

SimilarityCheck similarity_invariance_check(const Hypergraph& h, TensorKind kind,
                                            const WeightVector& b,
                                            const SolverOptions& opts) {
  if (!is_connected(h)) {
    throw std::invalid_argument("similarity check requires connected input");
  }
  const auto plain = solve_plain(h, kind, opts);
  SpectralEstimate similar;
  if (h.edge_count() == 0) {
    similar = plain;
  } else {
    similar = solve_connected(
        h.vertex_count(), h.uniformity(),
        [&](std::span<const double> x) { return apply_similar(h, kind, b, x); },
        opts);
  }
  return SimilarityCheck{plain.estimate, similar.estimate};
}

}  // namespace hyperspec
