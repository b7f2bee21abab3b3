#pragma once

#include <span>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

enum class TensorKind {
  Adjacency,
  SignlessLaplacian,
};

const char* to_string(TensorKind kind);

// Strictly positive per-vertex weights, the diagonal of the similarity matrix
// B. Entries are validated to be finite and > 0 at construction.
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> values);

  static WeightVector uniform(int n);
  // Weights b_i = d_i; requires every degree >= 1.
  static WeightVector from_degrees(const Hypergraph& h);

  double of(int vertex) const { return values_[static_cast<std::size_t>(vertex) - 1]; }
  int size() const { return static_cast<int>(values_.size()); }
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> values_;
};

// The tensor-times-vector map, evaluated from the edge list without
// materializing the n^k tensor. The adjacency tensor puts weight 1/(k-1)! on
// every index tuple that permutes an edge, so the i-th component sums that
// weight over all (k-1)! orderings of e \ {i} for each incident edge e; the
// factorials cancel and the component reduces to
//   (A x)_i = sum over edges e containing i of prod_{u in e, u != i} x_u.
// The signless Laplacian adds the diagonal degree term d_i x_i^(k-1).
// Zero entries in x are allowed.
std::vector<double> apply(const Hypergraph& h, TensorKind kind,
                          std::span<const double> x);

// Row sums: d_i for the adjacency tensor, 2 d_i for the signless Laplacian.
// Agrees exactly with apply() at the all-ones vector.
std::vector<double> row_sums(const Hypergraph& h, TensorKind kind);

// The diagonal-similar map (B^-(k-1) T B) x, evaluated implicitly as
// b_i^-(k-1) * apply(h, kind, b ⊙ x)_i. Similar tensors share their spectra,
// which the spectral module exploits and tests.
std::vector<double> apply_similar(const Hypergraph& h, TensorKind kind,
                                  const WeightVector& b,
                                  std::span<const double> x);

struct Interval {
  double lo;
  double hi;
};

// Collatz-Wielandt envelope at a strictly positive x:
//   [min_i (T x)_i / x_i^(k-1), max_i (T x)_i / x_i^(k-1)],
// which brackets the spectral radius for connected input. At the all-ones
// vector this is exactly (min row sum, max row sum).
Interval rayleigh_interval(const Hypergraph& h, TensorKind kind,
                           std::span<const double> x);

}  // namespace hyperspec
