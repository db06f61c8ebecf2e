#pragma once

#include "ppg/types.hpp"

namespace ppg {

enum class SmoothKind { masked_quadratic, logistic_affine, half_sq_dist };

/// Differentiable convex function h with a Lipschitz-continuous gradient.
/// The lipschitz() bound is safe to use in stepsize rules.
class Smooth {
 public:
  virtual ~Smooth() = default;

  virtual SmoothKind kind() const = 0;
  virtual Index dim() const = 0;
  virtual double value(const Vec& z) const = 0;
  virtual void gradient(const Vec& z, Vec& grad) const = 0;
  /// Value and gradient in one pass.
  virtual double eval(const Vec& z, Vec& grad) const {
    gradient(z, grad);
    return value(z);
  }
  virtual double lipschitz() const = 0;
};

/// h(z) = 1/2 || mask o (z - data) ||^2 with a 0/1 mask; L = 1.
class MaskedQuadratic final : public Smooth {
 public:
  MaskedQuadratic(Vec mask, Vec data);

  SmoothKind kind() const override { return SmoothKind::masked_quadratic; }
  Index dim() const override { return data_.size(); }
  double value(const Vec& z) const override;
  void gradient(const Vec& z, Vec& grad) const override;
  double lipschitz() const override { return 1.0; }

 private:
  Vec mask_, data_;
};

/// h(z) = sum_i log(1 + exp((A z)_i)), evaluated with overflow-safe
/// branching; L = 0.25 * lambda_max(A^T A), estimated once at construction.
class LogisticAffine final : public Smooth {
 public:
  explicit LogisticAffine(Mat A);

  SmoothKind kind() const override { return SmoothKind::logistic_affine; }
  Index dim() const override { return A_.cols(); }
  double value(const Vec& z) const override;
  void gradient(const Vec& z, Vec& grad) const override;
  double eval(const Vec& z, Vec& grad) const override;
  double lipschitz() const override { return lipschitz_; }

  const Mat& matrix() const { return A_; }

 private:
  Mat A_;
  double lipschitz_;
};

/// h(z) = 1/2 || z - anchor ||^2; L = 1.
class HalfSqDist final : public Smooth {
 public:
  explicit HalfSqDist(Vec anchor);

  SmoothKind kind() const override { return SmoothKind::half_sq_dist; }
  Index dim() const override { return anchor_.size(); }
  double value(const Vec& z) const override;
  void gradient(const Vec& z, Vec& grad) const override;
  double lipschitz() const override { return 1.0; }

 private:
  Vec anchor_;
};

/// Negative entropy of the logistic dual: sum_i nu_i log nu_i +
/// (1 - nu_i) log(1 - nu_i), with 0 log 0 := 0. Throws std::domain_error
/// when a component leaves [0, 1].
double logistic_dual_value(const Vec& nu);

/// 1/2 ||nu||^2 + <masked_data, nu> where masked_data = mask o data.
double sysreal_dual_value(const Vec& nu, const Vec& mask, const Vec& data);

}  // namespace ppg
