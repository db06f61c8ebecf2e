#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace ppg {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Thrown when an iterative numerical routine fails to reach its target
/// accuracy. Carries the last estimate so callers can still inspect it.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& msg, double estimate)
      : std::runtime_error(msg), estimate(estimate) {}
  double estimate;
};

}  // namespace ppg
