#include "hyperspec/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hyperspec/detail/products.hpp"

namespace hyperspec {

const char* to_string(TensorKind kind) {
  return kind == TensorKind::Adjacency ? "adjacency" : "signless_laplacian";
}

WeightVector::WeightVector(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("weights must be nonempty");
  for (double b : values_) {
    if (!std::isfinite(b) || b <= 0.0) {
      throw std::invalid_argument("weights must be finite and strictly positive");
    }
  }
}

WeightVector WeightVector::uniform(int n) {
  return WeightVector(std::vector<double>(static_cast<std::size_t>(n), 1.0));
}

WeightVector WeightVector::from_degrees(const Hypergraph& h) {
  const auto profile = degrees(h);
  if (profile.min() < 1) {
    throw std::invalid_argument("degree weights need every degree >= 1");
  }
  return WeightVector(std::vector<double>(profile.degree.begin(), profile.degree.end()));
}

namespace {

void check_vector(const Hypergraph& h, std::span<const double> x) {
  if (static_cast<int>(x.size()) != h.vertex_count()) {
    throw std::invalid_argument("vector length " + std::to_string(x.size()) +
                                " does not match vertex count " +
                                std::to_string(h.vertex_count()));
  }
  for (double v : x) {
    if (!std::isfinite(v)) throw std::invalid_argument("vector entry not finite");
  }
}

}  // namespace

std::vector<double> apply(const Hypergraph& h, TensorKind kind,
                          std::span<const double> x) {
  check_vector(h, x);
  const int k = h.uniformity();
  std::vector<double> y(x.size(), 0.0);
  std::vector<double> partial(static_cast<std::size_t>(k));
  for (const auto& e : h.edges()) {
    detail::leave_one_out_products(e, x, partial);
    for (std::size_t p = 0; p < e.size(); ++p) {
      y[static_cast<std::size_t>(e[p]) - 1] += partial[p];
    }
  }
  if (kind == TensorKind::SignlessLaplacian) {
    const auto profile = degrees(h);
    for (std::size_t i = 0; i < y.size(); ++i) {
      y[i] += profile.degree[i] * std::pow(x[i], k - 1);
    }
  }
  return y;
}

std::vector<double> row_sums(const Hypergraph& h, TensorKind kind) {
  const auto profile = degrees(h);
  std::vector<double> r(profile.degree.size());
  const double factor = kind == TensorKind::Adjacency ? 1.0 : 2.0;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = factor * profile.degree[i];
  return r;
}

std::vector<double> apply_similar(const Hypergraph& h, TensorKind kind,
                                  const WeightVector& b,
                                  std::span<const double> x) {
  check_vector(h, x);
  if (b.size() != h.vertex_count()) {
    throw std::invalid_argument("weight length does not match vertex count");
  }
  const int k = h.uniformity();
  std::vector<double> scaled(x.size());
  for (std::size_t i = 0; i < scaled.size(); ++i) {
    scaled[i] = b.values()[i] * x[i];
  }
  auto y = apply(h, kind, scaled);
  for (std::size_t i = 0; i < y.size(); ++i) {
    y[i] *= std::pow(b.values()[i], -(k - 1));
  }
  return y;
}

Interval rayleigh_interval(const Hypergraph& h, TensorKind kind,
                           std::span<const double> x) {
  check_vector(h, x);
  for (double v : x) {
    if (v <= 0.0) {
      throw std::invalid_argument("rayleigh_interval needs a strictly positive vector");
    }
  }
  const int k = h.uniformity();
  const auto y = apply(h, kind, x);
  Interval interval{std::numeric_limits<double>::infinity(),
                    -std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double ratio = y[i] / std::pow(x[i], k - 1);
    interval.lo = std::min(interval.lo, ratio);
    interval.hi = std::max(interval.hi, ratio);
  }
  return interval;
}

}  // namespace hyperspec
