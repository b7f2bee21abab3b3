#pragma once

#include <span>
#include <vector>

#include "hyperspec/hypergraph.hpp"
#include "hyperspec/tensor.hpp"

namespace hyperspec {

struct SolverOptions {
  double tolerance = 1e-10;
  long max_iterations = 200000;
  // Positive diagonal shift c: the iteration runs on T x + c x^[k-1], whose
  // eigenvalues are those of T translated by c, and converges even where the
  // unshifted map would cycle.
  double shift = 1.0;
  // Solve disconnected input per component and take the maximum. With this
  // off, disconnected input is an error.
  bool per_component = true;
};

// Certified bracket for the spectral radius. lo <= estimate <= hi always;
// hi - lo <= tolerance when converged. For a connected solve the eigenvector
// is strictly positive with max entry 1; for a per-component solve it is the
// dominant component's eigenvector embedded at its original vertex ids, zero
// elsewhere (still an eigenvector of the whole tensor).
struct SpectralEstimate {
  double lo = 0.0;
  double hi = 0.0;
  double estimate = 0.0;
  std::vector<double> eigenvector;
  long iterations = 0;
  bool converged = false;
  double residual = 0.0;
  // False when the input was disconnected and solved per component; the
  // sharpness statements verified elsewhere assume a connected input.
  bool connected_input = true;
};

// Power iteration on the shifted map with a monotone Collatz-Wielandt
// bracket; stops when the instantaneous bracket width drops below the
// tolerance. Reported lo never decreases and hi never increases across
// iterations, so the final interval is the intersection of every certificate
// seen.
SpectralEstimate spectral_radius(const Hypergraph& h, TensorKind kind,
                                 const SolverOptions& opts = {});

// max_i |apply(h, kind, x)_i - lambda * x_i^(k-1)|. Requires x != 0.
double residual(const Hypergraph& h, TensorKind kind, double lambda,
                std::span<const double> x);

struct SimilarityCheck {
  double rho_plain;
  double rho_similar;
};

// Solves once on the plain map and once on the diagonal-similar map with
// weights b. The two spectra coincide, so the estimates must agree to within
// the combined certificate widths; the caller asserts that. Requires
// connected input.
SimilarityCheck similarity_invariance_check(const Hypergraph& h, TensorKind kind,
                                            const WeightVector& b,
                                            const SolverOptions& opts = {});

}  // namespace hyperspec
