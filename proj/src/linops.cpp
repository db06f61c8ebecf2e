#include "ppg/linops.hpp"

#include <cmath>
#include <sstream>

namespace ppg {

namespace {

[[noreturn]] void throw_dim(const char* what, Index got, Index want) {
  std::ostringstream os;
  os << what << ": got length " << got << ", expected " << want;
  throw std::invalid_argument(os.str());
}

}  // namespace

void LinearMap::check_in(const Vec& z) const {
  if (z.size() != in_dim()) throw_dim("apply: domain shape mismatch", z.size(), in_dim());
}

void LinearMap::check_out(const Vec& y) const {
  if (y.size() != out_dim()) throw_dim("adjoint: codomain shape mismatch", y.size(), out_dim());
}

IdentityMap::IdentityMap(Index dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("IdentityMap: dim must be positive");
}

void IdentityMap::apply_into(const Vec& z, Vec& out) const {
  check_in(z);
  out = z;
}

void IdentityMap::adjoint_into(const Vec& y, Vec& out) const {
  check_out(y);
  out = y;
}

DenseMap::DenseMap(Mat matrix) : matrix_(std::move(matrix)) {
  if (matrix_.size() == 0) throw std::invalid_argument("DenseMap: empty matrix");
  const double tol = 1e-10;
  Mat gram = matrix_.transpose() * matrix_;
  gram_bound_ = max_eigenvalue(gram, tol) * (1.0 + tol);
}

void DenseMap::apply_into(const Vec& z, Vec& out) const {
  check_in(z);
  out.noalias() = matrix_ * z;
}

void DenseMap::adjoint_into(const Vec& y, Vec& out) const {
  check_out(y);
  out.noalias() = matrix_.transpose() * y;
}

HankelMap::HankelMap(HankelShape shape) : shape_(shape) {
  if (shape.m < 1 || shape.n < 1 || shape.j < 1 || shape.k < 1)
    throw std::invalid_argument("HankelMap: all block counts must be >= 1");
}

void HankelMap::apply_into(const Vec& z, Vec& out) const {
  check_in(z);
  const int m = shape_.m, n = shape_.n, j = shape_.j, k = shape_.k;
  Eigen::Map<const Mat> Z(z.data(), shape_.domain_rows(), shape_.domain_cols());
  out.resize(out_dim());
  Eigen::Map<Mat> Y(out.data(), shape_.codomain_rows(), shape_.codomain_cols());
  for (int q = 0; q < k; ++q)
    for (int p = 0; p < j; ++p)
      Y.block(p * m, q * n, m, n) = Z.middleCols(static_cast<Index>(p + q) * n, n);
}

void HankelMap::adjoint_into(const Vec& y, Vec& out) const {
  check_out(y);
  const int m = shape_.m, n = shape_.n, j = shape_.j, k = shape_.k;
  Eigen::Map<const Mat> Y(y.data(), shape_.codomain_rows(), shape_.codomain_cols());
  out.setZero(in_dim());
  Eigen::Map<Mat> Z(out.data(), shape_.domain_rows(), shape_.domain_cols());
  for (int q = 0; q < k; ++q)
    for (int p = 0; p < j; ++p)
      Z.middleCols(static_cast<Index>(p + q) * n, n) += Y.block(p * m, q * n, m, n);
}

FusedDiffStackMap::FusedDiffStackMap(Index n) : n_(n) {
  if (n < 2) throw std::invalid_argument("FusedDiffStackMap: need n >= 2");
}

void FusedDiffStackMap::apply_into(const Vec& z, Vec& out) const {
  check_in(z);
  out.resize(out_dim());
  out.head(n_ - 1) = z.head(n_ - 1);
  for (Index i = 0; i + 2 < n_; ++i) out[n_ - 1 + i] = z[i] - z[i + 1];
}

void FusedDiffStackMap::adjoint_into(const Vec& y, Vec& out) const {
  check_out(y);
  out.setZero(n_);
  out.head(n_ - 1) = y.head(n_ - 1);
  // Difference row i touches z_i with +1 and z_{i+1} with -1.
  for (Index i = 0; i + 2 < n_; ++i) {
    out[i] += y[n_ - 1 + i];
    out[i + 1] -= y[n_ - 1 + i];
  }
}

ReplicationMap::ReplicationMap(Index block_dim, int copies)
    : block_dim_(block_dim), copies_(copies) {
  if (block_dim < 1 || copies < 1)
    throw std::invalid_argument("ReplicationMap: block_dim and copies must be >= 1");
}

void ReplicationMap::apply_into(const Vec& z, Vec& out) const {
  check_in(z);
  out.resize(out_dim());
  for (int i = 0; i < copies_; ++i) out.segment(i * block_dim_, block_dim_) = z;
}

void ReplicationMap::adjoint_into(const Vec& y, Vec& out) const {
  check_out(y);
  out.setZero(block_dim_);
  for (int i = 0; i < copies_; ++i) out += y.segment(i * block_dim_, block_dim_);
}

double max_eigenvalue(const std::function<void(const Vec&, Vec&)>& apply_sym,
                      Index dim, double tol, int max_iter) {
  if (tol <= 0) throw std::invalid_argument("max_eigenvalue: tol must be positive");
  if (dim < 1) throw std::invalid_argument("max_eigenvalue: empty operator");

  Vec v = Vec::Ones(dim) / std::sqrt(static_cast<double>(dim));
  Vec w(dim);
  double lambda = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    apply_sym(v, w);
    double rayleigh = v.dot(w);
    double norm = w.norm();
    if (norm == 0.0) return 0.0;  // start vector lies in the kernel
    v = w / norm;
    if (it > 0 && std::abs(rayleigh - lambda) <= tol * std::max(std::abs(rayleigh), 1e-300)) {
      return rayleigh;
    }
    lambda = rayleigh;
  }
  throw NumericalError("max_eigenvalue: power iteration hit the iteration cap", lambda);
}

double max_eigenvalue(const Mat& sym, double tol, int max_iter) {
  return max_eigenvalue(
      [&sym](const Vec& v, Vec& out) { out.noalias() = sym * v; }, sym.rows(),
      tol, max_iter);
}

double gram_max_eigenvalue(const LinearMap& map, double tol, int max_iter) {
  Vec mid;
  return max_eigenvalue(
      [&map, &mid](const Vec& v, Vec& out) {
        map.apply_into(v, mid);
        map.adjoint_into(mid, out);
      },
      map.in_dim(), tol, max_iter);
}

}  // namespace ppg
