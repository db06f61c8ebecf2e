#include "ppg/smooth.hpp"

#include <cmath>

#include "ppg/linops.hpp"

namespace ppg {

namespace {

void check_same_size(const Vec& a, const Vec& b, const char* what) {
  if (a.size() != b.size()) throw std::invalid_argument(std::string(what) + ": size mismatch");
}

// log(1 + exp(v)) without overflow for large |v|.
double log1pexp(double v) {
  if (v > 0) return v + std::log1p(std::exp(-v));
  return std::log1p(std::exp(v));
}

double sigmoid(double v) {
  if (v >= 0) return 1.0 / (1.0 + std::exp(-v));
  double e = std::exp(v);
  return e / (1.0 + e);
}

}  // namespace

MaskedQuadratic::MaskedQuadratic(Vec mask, Vec data)
    : mask_(std::move(mask)), data_(std::move(data)) {
  check_same_size(mask_, data_, "MaskedQuadratic");
  for (Index i = 0; i < mask_.size(); ++i)
    if (mask_[i] != 0.0 && mask_[i] != 1.0)
      throw std::invalid_argument("MaskedQuadratic: mask entries must be 0 or 1");
}

double MaskedQuadratic::value(const Vec& z) const {
  check_same_size(z, data_, "MaskedQuadratic::value");
  return 0.5 * (mask_.array() * (z - data_).array()).matrix().squaredNorm();
}

void MaskedQuadratic::gradient(const Vec& z, Vec& grad) const {
  check_same_size(z, data_, "MaskedQuadratic::gradient");
  grad = (mask_.array() * (z - data_).array()).matrix();
}

LogisticAffine::LogisticAffine(Mat A) : A_(std::move(A)) {
  if (A_.rows() < 1) throw std::invalid_argument("LogisticAffine: need at least one row");
  const double tol = 1e-10;
  // lambda_max(A^T A) without forming the Gram matrix; the factor-of-four
  // curvature bound of the scalar logistic gives L.
  Vec mid;
  double lam = max_eigenvalue(
      [this, &mid](const Vec& v, Vec& out) {
        mid.noalias() = A_ * v;
        out.noalias() = A_.transpose() * mid;
      },
      A_.cols(), tol);
  lipschitz_ = 0.25 * lam * (1.0 + tol);
}

double LogisticAffine::value(const Vec& z) const {
  if (z.size() != A_.cols()) throw std::invalid_argument("LogisticAffine::value: size mismatch");
  Vec v = A_ * z;
  double total = 0.0;
  for (Index i = 0; i < v.size(); ++i) total += log1pexp(v[i]);
  return total;
}

void LogisticAffine::gradient(const Vec& z, Vec& grad) const {
  if (z.size() != A_.cols())
    throw std::invalid_argument("LogisticAffine::gradient: size mismatch");
  Vec v = A_ * z;
  for (Index i = 0; i < v.size(); ++i) v[i] = sigmoid(v[i]);
  grad.noalias() = A_.transpose() * v;
}

double LogisticAffine::eval(const Vec& z, Vec& grad) const {
  if (z.size() != A_.cols()) throw std::invalid_argument("LogisticAffine::eval: size mismatch");
  Vec v = A_ * z;
  double total = 0.0;
  for (Index i = 0; i < v.size(); ++i) {
    total += log1pexp(v[i]);
    v[i] = sigmoid(v[i]);
  }
  grad.noalias() = A_.transpose() * v;
  return total;
}

HalfSqDist::HalfSqDist(Vec anchor) : anchor_(std::move(anchor)) {
  if (anchor_.size() == 0) throw std::invalid_argument("HalfSqDist: empty anchor");
}

double HalfSqDist::value(const Vec& z) const {
  check_same_size(z, anchor_, "HalfSqDist::value");
  return 0.5 * (z - anchor_).squaredNorm();
}

void HalfSqDist::gradient(const Vec& z, Vec& grad) const {
  check_same_size(z, anchor_, "HalfSqDist::gradient");
  grad = z - anchor_;
}

double logistic_dual_value(const Vec& nu) {
  double total = 0.0;
  for (Index i = 0; i < nu.size(); ++i) {
    double p = nu[i];
    if (p < 0.0 || p > 1.0)
      throw std::domain_error("logistic_dual_value: component outside [0, 1]");
    if (p > 0.0) total += p * std::log(p);
    if (p < 1.0) total += (1.0 - p) * std::log(1.0 - p);
  }
  return total;
}

double sysreal_dual_value(const Vec& nu, const Vec& mask, const Vec& data) {
  check_same_size(nu, mask, "sysreal_dual_value");
  check_same_size(nu, data, "sysreal_dual_value");
  return 0.5 * nu.squaredNorm() + (mask.array() * data.array() * nu.array()).sum();
}

}  // namespace ppg
