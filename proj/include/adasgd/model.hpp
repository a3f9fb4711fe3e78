#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <span>
#include <vector>

#include "adasgd/dataset.hpp"

namespace adasgd {

using Vector = Eigen::VectorXd;

// Parameter vector plus L2 weight for the regularized logistic objective
//   F(x) = (1/|S|) sum_i log(1 + exp(-y_i (x . z_i))) + (lambda/2) ||x||^2.
struct ModelState {
  Vector x;
  double lambda = 0;
};

// Curvature bounds backing the strong-convexity / smoothness assumptions.
// m_lower = lambda; M_upper bounds the mean Hessian, M_per_sample bounds each
// per-sample Hessian. gamma is a gradient-norm bound measured along a run.
struct ProblemConstants {
  double m_lower = 0;
  double M_upper = 0;
  double M_per_sample = 0;
  double gamma = 0;
  double kappa = 1;
};

// Stable scalar kernels (safe for |t| up to ~1e4 and far beyond).
double sigmoid(double t);           // 1 / (1 + e^-t)
double log1p_exp(double t);         // log(1 + e^t)

// Per-sample gradients in factored form, grad_i = coeff_i * z_i + lambda * x,
// so batch statistics stay O(nnz) instead of O(|S| * d).
class PerSampleGrads {
 public:
  PerSampleGrads(const ModelState& state, const SparseDataset& data,
                 std::span<const std::int64_t> subset);

  std::int64_t size() const { return static_cast<std::int64_t>(ids_.size()); }
  std::int64_t sample_id(std::int64_t i) const { return ids_[static_cast<std::size_t>(i)]; }
  double coeff(std::int64_t i) const { return coeffs_[static_cast<std::size_t>(i)]; }

  Vector dense(std::int64_t i) const;  // materializes grad_i
  Vector mean() const;                 // equals grad() over the subset

  // grad_i . w for every i in the subset; one sparse pass over the rows.
  std::vector<double> dots(const Vector& w) const;
  std::vector<double> squared_norms() const;

 private:
  const SparseDataset* data_;
  double lambda_;
  Vector reg_term_;                 // lambda * x
  double reg_sq_;                   // ||lambda * x||^2
  std::vector<std::int64_t> ids_;
  std::vector<double> coeffs_;      // -y_iسigma(-margin_i)
  std::vector<double> row_dot_x_;   // z_i . x
  std::vector<double> row_sq_;      // ||z_i||^2
};

double loss(const ModelState& state, const SparseDataset& data,
            std::span<const std::int64_t> subset);
Vector grad(const ModelState& state, const SparseDataset& data,
            std::span<const std::int64_t> subset);
PerSampleGrads per_sample_grads(const ModelState& state, const SparseDataset& data,
                                std::span<const std::int64_t> subset);

// Exact subset-Hessian product: H_S v = (1/|S|) sum_i sigma'(m_i)(z_i.v) z_i + lambda v.
// One pass over the subset rows, same cost contract as one gradient.
Vector hvp(const ModelState& state, const SparseDataset& data,
           std::span<const std::int64_t> subset, const Vector& v);

// Entry i: v . (H_i) v = sigma'(m_i) (z_i.v)^2 + lambda ||v||^2.
std::vector<double> per_sample_curvature(const ModelState& state,
                                         const SparseDataset& data,
                                         std::span<const std::int64_t> subset,
                                         const Vector& v);

// m = lambda, M_upper = lambda + (1/(4N)) sum ||z_i||^2,
// M_per_sample = lambda + max ||z_i||^2 / 4. Requires lambda > 0.
ProblemConstants estimate_constants(const SparseDataset& data, double lambda);

}  // namespace adasgd
