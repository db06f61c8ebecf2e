#include "ppg/prox.hpp"

#include <Eigen/SVD>

#include <cmath>

namespace ppg {

namespace {

void check_tau(double tau) {
  if (!(tau > 0)) throw std::invalid_argument("prox: tau must be positive");
}

void check_same_size(const Vec& a, const Vec& b, const char* what) {
  if (a.size() != b.size()) throw std::invalid_argument(std::string(what) + ": size mismatch");
}

Eigen::BDCSVD<Mat> thin_svd(const Mat& u) {
  Eigen::BDCSVD<Mat> svd(u, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.info() != Eigen::Success)
    throw NumericalError("thin SVD did not converge", 0.0);
  return svd;
}

}  // namespace

Vec prox_weighted_l1(const Vec& weights, double tau, const Vec& u) {
  check_tau(tau);
  check_same_size(weights, u, "prox_weighted_l1");
  if ((weights.array() < 0).any())
    throw std::invalid_argument("prox_weighted_l1: weights must be nonnegative");
  Vec out(u.size());
  for (Index i = 0; i < u.size(); ++i) {
    double shrink = std::abs(u[i]) - tau * weights[i];
    out[i] = shrink > 0 ? (u[i] > 0 ? shrink : -shrink) : 0.0;
  }
  return out;
}

Mat prox_nuclear(double lambda, double tau, const Mat& u) {
  check_tau(tau);
  if (!(lambda > 0)) throw std::invalid_argument("prox_nuclear: lambda must be positive");
  auto svd = thin_svd(u);
  Vec sigma = (svd.singularValues().array() - tau * lambda).max(0.0);
  return svd.matrixU() * sigma.asDiagonal() * svd.matrixV().transpose();
}

Mat project_spectral_ball(const Mat& y, double lambda) {
  if (!(lambda > 0))
    throw std::invalid_argument("project_spectral_ball: lambda must be positive");
  auto svd = thin_svd(y);
  if (svd.singularValues().size() == 0 || svd.singularValues()[0] <= lambda) return y;
  Vec sigma = svd.singularValues().array().min(lambda);
  return svd.matrixU() * sigma.asDiagonal() * svd.matrixV().transpose();
}

Vec conjugate_prox(const Proximable& P, double tau, const Vec& u) {
  check_tau(tau);
  return u - P.prox(tau, tau * u) / tau;
}

WeightedL1::WeightedL1(Vec weights) : weights_(std::move(weights)) {
  if (weights_.size() == 0) throw std::invalid_argument("WeightedL1: empty weights");
  if ((weights_.array() < 0).any())
    throw std::invalid_argument("WeightedL1: weights must be nonnegative");
}

WeightedL1::WeightedL1(double lambda, Index dim)
    : WeightedL1(Vec::Constant(dim, lambda)) {}

double WeightedL1::value(const Vec& u) const {
  check_same_size(weights_, u, "WeightedL1::value");
  return weights_.dot(u.cwiseAbs());
}

Vec WeightedL1::prox(double tau, const Vec& u) const {
  return prox_weighted_l1(weights_, tau, u);
}

NuclearNorm::NuclearNorm(double lambda, Index rows, Index cols)
    : lambda_(lambda), rows_(rows), cols_(cols) {
  if (!(lambda > 0)) throw std::invalid_argument("NuclearNorm: lambda must be positive");
  if (rows < 1 || cols < 1) throw std::invalid_argument("NuclearNorm: empty shape");
}

double NuclearNorm::value(const Vec& u) const {
  if (u.size() != dim()) throw std::invalid_argument("NuclearNorm::value: size mismatch");
  Eigen::Map<const Mat> U(u.data(), rows_, cols_);
  Eigen::BDCSVD<Mat> svd(U);
  if (svd.info() != Eigen::Success)
    throw NumericalError("NuclearNorm::value: SVD did not converge", 0.0);
  return lambda_ * svd.singularValues().sum();
}

Vec NuclearNorm::prox(double tau, const Vec& u) const {
  check_tau(tau);
  if (u.size() != dim()) throw std::invalid_argument("NuclearNorm::prox: size mismatch");
  Eigen::Map<const Mat> U(u.data(), rows_, cols_);
  Mat shrunk = prox_nuclear(lambda_, tau, U);
  return Eigen::Map<const Vec>(shrunk.data(), shrunk.size());
}

SeparableSum::SeparableSum(std::vector<std::shared_ptr<const Proximable>> parts)
    : parts_(std::move(parts)), dim_(0) {
  if (parts_.empty()) throw std::invalid_argument("SeparableSum: no parts");
  offsets_.reserve(parts_.size());
  for (const auto& p : parts_) {
    offsets_.push_back(dim_);
    dim_ += p->dim();
  }
}

double SeparableSum::value(const Vec& u) const {
  if (u.size() != dim_) throw std::invalid_argument("SeparableSum::value: size mismatch");
  double total = 0.0;
  for (std::size_t i = 0; i < parts_.size(); ++i)
    total += parts_[i]->value(u.segment(offsets_[i], parts_[i]->dim()));
  return total;
}

Vec SeparableSum::prox(double tau, const Vec& u) const {
  check_tau(tau);
  if (u.size() != dim_) throw std::invalid_argument("SeparableSum::prox: size mismatch");
  Vec out(dim_);
  for (std::size_t i = 0; i < parts_.size(); ++i)
    out.segment(offsets_[i], parts_[i]->dim()) =
        parts_[i]->prox(tau, u.segment(offsets_[i], parts_[i]->dim()));
  return out;
}

}  // namespace ppg
