#pragma once

#include <functional>
#include <memory>

#include "ppg/types.hpp"

namespace ppg {

enum class MapKind { identity, dense, hankel, fused_diff_stack, replication };

/// A linear map M between two finite-dimensional spaces, represented on
/// flattened (column-major) coordinates. Implementations are immutable
/// after construction; apply/adjoint are pure and thread-safe.
class LinearMap {
 public:
  virtual ~LinearMap() = default;

  virtual MapKind kind() const = 0;
  virtual Index in_dim() const = 0;
  virtual Index out_dim() const = 0;

  /// out = M z. Resizes out; throws std::invalid_argument on a shape mismatch.
  virtual void apply_into(const Vec& z, Vec& out) const = 0;
  /// out = M* y.
  virtual void adjoint_into(const Vec& y, Vec& out) const = 0;

  /// Certified upper bound on the operator norm of M*M.
  virtual double gram_norm_bound() const = 0;

  Vec apply(const Vec& z) const {
    Vec out;
    apply_into(z, out);
    return out;
  }
  Vec adjoint(const Vec& y) const {
    Vec out;
    adjoint_into(y, out);
    return out;
  }

 protected:
  void check_in(const Vec& z) const;
  void check_out(const Vec& y) const;
};

class IdentityMap final : public LinearMap {
 public:
  explicit IdentityMap(Index dim);

  MapKind kind() const override { return MapKind::identity; }
  Index in_dim() const override { return dim_; }
  Index out_dim() const override { return dim_; }
  void apply_into(const Vec& z, Vec& out) const override;
  void adjoint_into(const Vec& y, Vec& out) const override;
  double gram_norm_bound() const override { return 1.0; }

 private:
  Index dim_;
};

/// Dense matrix map. The gram-norm bound is estimated once at construction
/// by power iteration on A^T A and inflated by (1 + tol).
class DenseMap final : public LinearMap {
 public:
  explicit DenseMap(Mat matrix);

  MapKind kind() const override { return MapKind::dense; }
  Index in_dim() const override { return matrix_.cols(); }
  Index out_dim() const override { return matrix_.rows(); }
  void apply_into(const Vec& z, Vec& out) const override;
  void adjoint_into(const Vec& y, Vec& out) const override;
  double gram_norm_bound() const override { return gram_bound_; }

  const Mat& matrix() const { return matrix_; }

 private:
  Mat matrix_;
  double gram_bound_;
};

/// Block sizes of the block-Hankel map: blocks are m x n, arranged in a
/// j x k grid. Domain elements are m x n(j+k-1) matrices, codomain
/// elements mj x nk matrices (both flattened column-major).
struct HankelShape {
  int m = 1;
  int n = 1;
  int j = 1;
  int k = 1;

  Index domain_rows() const { return m; }
  Index domain_cols() const { return static_cast<Index>(n) * (j + k - 1); }
  Index codomain_rows() const { return static_cast<Index>(m) * j; }
  Index codomain_cols() const { return static_cast<Index>(n) * k; }
};

/// Places block z_{p+q} at grid position (p, q); the adjoint sums each
/// codomain block back onto its anti-diagonal. Both directions are
/// index arithmetic on the flattened storage; the map is never
/// materialized as a matrix.
class HankelMap final : public LinearMap {
 public:
  explicit HankelMap(HankelShape shape);

  MapKind kind() const override { return MapKind::hankel; }
  Index in_dim() const override {
    return shape_.domain_rows() * shape_.domain_cols();
  }
  Index out_dim() const override {
    return shape_.codomain_rows() * shape_.codomain_cols();
  }
  void apply_into(const Vec& z, Vec& out) const override;
  void adjoint_into(const Vec& y, Vec& out) const override;
  double gram_norm_bound() const override {
    return std::min(shape_.j, shape_.k);
  }

  const HankelShape& shape() const { return shape_; }

 private:
  HankelShape shape_;
};

/// Stacks a copy of the first n-1 coordinates on top of the n-2 successive
/// differences z_i - z_{i+1}; the last coordinate of the domain is unused
/// by the difference rows. Codomain dimension is 2n-3.
class FusedDiffStackMap final : public LinearMap {
 public:
  explicit FusedDiffStackMap(Index n);

  MapKind kind() const override { return MapKind::fused_diff_stack; }
  Index in_dim() const override { return n_; }
  Index out_dim() const override { return 2 * n_ - 3; }
  void apply_into(const Vec& z, Vec& out) const override;
  void adjoint_into(const Vec& y, Vec& out) const override;
  double gram_norm_bound() const override { return 5.0; }

 private:
  Index n_;
};

/// M z = (z, z, ..., z), m copies; the adjoint sums the segments.
class ReplicationMap final : public LinearMap {
 public:
  ReplicationMap(Index block_dim, int copies);

  MapKind kind() const override { return MapKind::replication; }
  Index in_dim() const override { return block_dim_; }
  Index out_dim() const override { return block_dim_ * copies_; }
  void apply_into(const Vec& z, Vec& out) const override;
  void adjoint_into(const Vec& y, Vec& out) const override;
  double gram_norm_bound() const override {
    return static_cast<double>(copies_);
  }

 private:
  Index block_dim_;
  int copies_;
};

/// Largest eigenvalue of a symmetric PSD operator by power iteration.
///
/// Deterministic: starts from the normalized all-ones vector and stops when
/// the relative Rayleigh-quotient change drops below tol. Throws
/// NumericalError (carrying the last estimate) if the cap is hit first.
double max_eigenvalue(const std::function<void(const Vec&, Vec&)>& apply_sym,
                      Index dim, double tol, int max_iter = 10000);

/// Dense symmetric PSD overload.
double max_eigenvalue(const Mat& sym, double tol, int max_iter = 10000);

/// Power-iteration estimate of the operator norm of M*M.
double gram_max_eigenvalue(const LinearMap& map, double tol,
                           int max_iter = 10000);

}  // namespace ppg
