#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "ppg/types.hpp"

namespace ppg {

enum class ProxKind { weighted_l1, nuclear_norm, separable_sum };

/// A proper closed convex function P with computable value and proximal
/// mapping of tau*P. Instances are immutable and thread-safe.
class Proximable {
 public:
  virtual ~Proximable() = default;

  virtual ProxKind kind() const = 0;
  virtual Index dim() const = 0;
  virtual double value(const Vec& u) const = 0;

  /// argmin_v P(v) + ||v - u||^2 / (2 tau), tau > 0.
  virtual Vec prox(double tau, const Vec& u) const = 0;
};

/// Coordinatewise soft-thresholding: output_i = sign(u_i) max(|u_i| - tau w_i, 0).
Vec prox_weighted_l1(const Vec& weights, double tau, const Vec& u);

/// Singular-value soft-thresholding: shrinks each singular value of u by
/// tau*lambda, flooring at zero.
Mat prox_nuclear(double lambda, double tau, const Mat& u);

/// Clips the singular values of y at lambda (projection onto the
/// operator-norm ball of radius lambda). Returns y unchanged when already
/// feasible.
Mat project_spectral_ball(const Mat& y, double lambda);

/// prox_{tau^-1 P*}(u), computed without materializing the conjugate:
/// u - prox_{tau P}(tau u) / tau.
Vec conjugate_prox(const Proximable& P, double tau, const Vec& u);

class WeightedL1 final : public Proximable {
 public:
  explicit WeightedL1(Vec weights);
  /// Uniform weight lambda on every coordinate.
  WeightedL1(double lambda, Index dim);

  ProxKind kind() const override { return ProxKind::weighted_l1; }
  Index dim() const override { return weights_.size(); }
  double value(const Vec& u) const override;
  Vec prox(double tau, const Vec& u) const override;

  const Vec& weights() const { return weights_; }

 private:
  Vec weights_;
};

class NuclearNorm final : public Proximable {
 public:
  NuclearNorm(double lambda, Index rows, Index cols);

  ProxKind kind() const override { return ProxKind::nuclear_norm; }
  Index dim() const override { return rows_ * cols_; }
  double value(const Vec& u) const override;
  Vec prox(double tau, const Vec& u) const override;

  double lambda() const { return lambda_; }
  Index rows() const { return rows_; }
  Index cols() const { return cols_; }

 private:
  double lambda_;
  Index rows_, cols_;
};

/// P(u_1, ..., u_s) = sum_i P_i(u_i) over consecutive segments; value and
/// prox both act segment by segment.
class SeparableSum final : public Proximable {
 public:
  explicit SeparableSum(std::vector<std::shared_ptr<const Proximable>> parts);

  ProxKind kind() const override { return ProxKind::separable_sum; }
  Index dim() const override { return dim_; }
  double value(const Vec& u) const override;
  Vec prox(double tau, const Vec& u) const override;

 private:
  std::vector<std::shared_ptr<const Proximable>> parts_;
  std::vector<Index> offsets_;
  Index dim_;
};

}  // namespace ppg
