#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "ghsimplex/errors.hpp"

namespace ghsimplex {

/// Extended-real positive infinity. Used as the empty-min sentinel; IEEE
/// max/min/compare semantics make it safe inside the distance formulas.
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Triangle-inequality slack accepted at validation time. Relative-absolute
/// hybrid so user-entered decimals validate bit-exactly while parse noise is
/// absorbed. Matrices are stored verbatim, never clamped.
inline double validation_tolerance(double diam) { return 1e-9 * (1.0 + diam); }

/// An n-point metric space given by its full distance matrix.
/// Immutable after construction; construction validates all metric axioms.
class FiniteMetricSpace {
 public:
  /// Validates and wraps a square matrix. Throws MetricError naming the
  /// first offending entry: zero diagonal, positivity, symmetry, then the
  /// triangle inequality (within validation_tolerance).
  static FiniteMetricSpace from_matrix(const std::vector<std::vector<double>>& m,
                                       std::string label = {}) {
    const std::size_t n = m.size();
    std::vector<double> flat;
    flat.reserve(n * n);
    for (const auto& row : m) {
      if (row.size() != n)
        throw PreconditionError(Fail::DimensionMismatch, "matrix is not square");
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return from_flat(static_cast<int>(n), std::move(flat), std::move(label));
  }

  static FiniteMetricSpace from_flat(int n, std::vector<double> flat,
                                     std::string label = {}) {
    if (n < 1 || flat.size() != static_cast<std::size_t>(n) * n)
      throw PreconditionError(Fail::DimensionMismatch, "matrix is not square");
    validate(n, flat);
    return FiniteMetricSpace(n, std::move(flat), std::move(label));
  }

  int size() const { return n_; }

  double operator()(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }

  const std::string& label() const { return label_; }

  const std::vector<double>& flat() const { return d_; }

  std::vector<std::vector<double>> rows() const {
    std::vector<std::vector<double>> out(n_);
    for (int i = 0; i < n_; ++i)
      out[i].assign(d_.begin() + static_cast<std::ptrdiff_t>(i) * n_,
                    d_.begin() + static_cast<std::ptrdiff_t>(i + 1) * n_);
    return out;
  }

  friend bool operator==(const FiniteMetricSpace& a, const FiniteMetricSpace& b) {
    return a.n_ == b.n_ && a.d_ == b.d_;
  }

 private:
  FiniteMetricSpace(int n, std::vector<double> d, std::string label)
      : n_(n), d_(std::move(d)), label_(std::move(label)) {}

  static void validate(int n, const std::vector<double>& d) {
    auto at = [&](int i, int j) { return d[static_cast<std::size_t>(i) * n + j]; };
    double diam = 0.0;
    for (int i = 0; i < n; ++i) {
      if (at(i, i) != 0.0)
        throw MetricError(MetricFault::NonzeroDiagonal, i, i, -1,
                          "dist[" + std::to_string(i) + "][" + std::to_string(i) +
                              "] must be 0");
      for (int j = 0; j < n; ++j) {
        if (i != j && !(at(i, j) > 0.0))
          throw MetricError(MetricFault::NegativeDistance, i, j, -1,
                            "dist[" + std::to_string(i) + "][" + std::to_string(j) +
                                "] must be positive");
        if (j > i && at(i, j) != at(j, i))
          throw MetricError(MetricFault::AsymmetricMatrix, i, j, -1,
                            "dist[" + std::to_string(i) + "][" + std::to_string(j) +
                                "] != dist[" + std::to_string(j) + "][" +
                                std::to_string(i) + "]");
        diam = std::max(diam, at(i, j));
      }
    }
    const double tol = validation_tolerance(diam);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (at(i, k) > at(i, j) + at(j, k) + tol)
            throw MetricError(MetricFault::TriangleViolation, i, j, k,
                              "dist[" + std::to_string(i) + "][" + std::to_string(k) +
                                  "] > dist[" + std::to_string(i) + "][" +
                                  std::to_string(j) + "] + dist[" + std::to_string(j) +
                                  "][" + std::to_string(k) + "]");
  }

  int n_;
  std::vector<double> d_;
  std::string label_;
};

/// build_space: the validating factory under its spec name.
inline FiniteMetricSpace build_space(const std::vector<std::vector<double>>& m,
                                     std::string label = {}) {
  return FiniteMetricSpace::from_matrix(m, std::move(label));
}

/// The simplex lambda*Delta_m: m points, every nonzero distance equal to lambda.
inline FiniteMetricSpace simplex_space(int m, double lambda, std::string label = {}) {
  if (m < 1) throw PreconditionError(Fail::MOutOfRange, "simplex needs m >= 1");
  if (!(lambda > 0.0))
    throw PreconditionError(Fail::NonpositiveScale, "simplex edge length must be positive");
  std::vector<double> flat(static_cast<std::size_t>(m) * m, lambda);
  for (int i = 0; i < m; ++i) flat[static_cast<std::size_t>(i) * m + i] = 0.0;
  return FiniteMetricSpace::from_flat(m, std::move(flat), std::move(label));
}

inline double diameter(const FiniteMetricSpace& x) {
  double best = 0.0;
  for (int i = 0; i < x.size(); ++i)
    for (int j = i + 1; j < x.size(); ++j) best = std::max(best, x(i, j));
  return best;
}

/// Smallest nonzero distance, eps(X). Equals sigma_{n-1} of the mst-spectrum.
inline double min_positive_distance(const FiniteMetricSpace& x) {
  if (x.size() < 2)
    throw PreconditionError(Fail::SinglePointSpace,
                            "min_positive_distance needs at least two points");
  double best = kInfinity;
  for (int i = 0; i < x.size(); ++i)
    for (int j = i + 1; j < x.size(); ++j) best = std::min(best, x(i, j));
  return best;
}

inline FiniteMetricSpace scale(const FiniteMetricSpace& x, double lambda) {
  if (!(lambda > 0.0))
    throw PreconditionError(Fail::NonpositiveScale, "scale factor must be positive");
  std::vector<double> flat = x.flat();
  for (double& v : flat) v *= lambda;
  return FiniteMetricSpace::from_flat(x.size(), std::move(flat), x.label());
}

/// The dual space d-X: rho(x,y) = d - |xy| for x != y. A metric whenever
/// d >= 2*diam X; swaps minimum and maximum spanning structures.
inline FiniteMetricSpace dual_space(const FiniteMetricSpace& x, double d) {
  if (x.size() < 2)
    throw PreconditionError(Fail::SinglePointSpace, "dual_space needs at least two points");
  if (d < 2.0 * diameter(x))
    throw PreconditionError(Fail::DTooSmall,
                            "dual_space requires d >= 2*diam(X); triangle inequality "
                            "is not guaranteed below that");
  const int n = x.size();
  std::vector<double> flat(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) flat[static_cast<std::size_t>(i) * n + j] = d - x(i, j);
  return FiniteMetricSpace::from_flat(n, std::move(flat), x.label());
}

/// Nonempty set of point indices of one space.
class PointSet {
 public:
  PointSet(std::initializer_list<int> idx) : PointSet(std::vector<int>(idx)) {}

  explicit PointSet(std::vector<int> idx) : idx_(std::move(idx)) {
    std::sort(idx_.begin(), idx_.end());
    idx_.erase(std::unique(idx_.begin(), idx_.end()), idx_.end());
    if (idx_.empty()) throw PreconditionError(Fail::EmptySet, "point set must be nonempty");
    if (idx_.front() < 0)
      throw PreconditionError(Fail::EmptySet, "point indices must be nonnegative");
  }

  const std::vector<int>& members() const { return idx_; }
  int smallest() const { return idx_.front(); }
  std::size_t size() const { return idx_.size(); }

  friend bool operator==(const PointSet& a, const PointSet& b) { return a.idx_ == b.idx_; }

 private:
  std::vector<int> idx_;
};

namespace detail {
inline void check_indices(const FiniteMetricSpace& x, const PointSet& a) {
  if (a.members().back() >= x.size())
    throw PreconditionError(Fail::PartitionMismatch, "point index out of range");
}
}  // namespace detail

/// |AB| = min over pairs; 0 when the sets intersect.
inline double set_distance_inf(const FiniteMetricSpace& x, const PointSet& a,
                               const PointSet& b) {
  detail::check_indices(x, a);
  detail::check_indices(x, b);
  double best = kInfinity;
  for (int i : a.members())
    for (int j : b.members()) best = std::min(best, x(i, j));
  return best;
}

/// |AB|' = max over pairs.
inline double set_distance_sup(const FiniteMetricSpace& x, const PointSet& a,
                               const PointSet& b) {
  detail::check_indices(x, a);
  detail::check_indices(x, b);
  double best = 0.0;
  for (int i : a.members())
    for (int j : b.members()) best = std::max(best, x(i, j));
  return best;
}

/// Hausdorff distance between two subsets: max{ max_a |aB|, max_b |Ab| }.
inline double hausdorff_distance(const FiniteMetricSpace& x, const PointSet& a,
                                 const PointSet& b) {
  detail::check_indices(x, a);
  detail::check_indices(x, b);
  double best = 0.0;
  for (int i : a.members()) {
    double toB = kInfinity;
    for (int j : b.members()) toB = std::min(toB, x(i, j));
    best = std::max(best, toB);
  }
  for (int j : b.members()) {
    double toA = kInfinity;
    for (int i : a.members()) toA = std::min(toA, x(i, j));
    best = std::max(best, toA);
  }
  return best;
}

}  // namespace ghsimplex
