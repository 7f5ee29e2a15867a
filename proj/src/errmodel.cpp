#include "rfanom/errmodel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rfanom {

void ErrorModel::factor() {
  const ErrMat reg = cov_ + ridge_ * ErrMat::Identity();
  llt_.compute(reg);
  if (llt_.info() != Eigen::Success) {
    throw std::runtime_error("degenerate error distribution");
  }
  logdet_ = 0.0;
  const auto& L = llt_.matrixLLT();
  for (int i = 0; i < kErrDim; ++i) logdet_ += 2.0 * std::log(L(i, i));
}

ErrorModel ErrorModel::fit(std::span<const ErrVec> errors, double ridge) {
  if (errors.size() < 2) throw std::invalid_argument("need at least 2 error vectors");
  if (ridge < 0.0) throw std::invalid_argument("ridge must be nonnegative");
  const double n = static_cast<double>(errors.size());

  ErrVec mu = ErrVec::Zero();
  for (const ErrVec& e : errors) mu += e;
  mu /= n;

  ErrMat cov = ErrMat::Zero();
  for (const ErrVec& e : errors) {
    const ErrVec d = e - mu;
    cov.noalias() += d * d.transpose();
  }
  cov /= (n - 1.0);

  ErrorModel m;
  m.mean_ = mu;
  m.cov_ = cov;
  m.ridge_ = ridge;
  m.factor();
  return m;
}

ErrorModel ErrorModel::fit(std::span<const ErrVec> errors) {
  if (errors.size() < 2) throw std::invalid_argument("need at least 2 error vectors");
  const double n = static_cast<double>(errors.size());
  ErrVec mu = ErrVec::Zero();
  for (const ErrVec& e : errors) mu += e;
  mu /= n;
  double trace = 0.0;
  for (const ErrVec& e : errors) trace += (e - mu).squaredNorm();
  trace /= (n - 1.0);
  return fit(errors, 1e-6 * trace / kErrDim);
}

ErrorModel ErrorModel::from_moments(const ErrVec& mean, const ErrMat& sample_cov, double ridge) {
  ErrorModel m;
  m.mean_ = mean;
  m.cov_ = sample_cov;
  m.ridge_ = ridge;
  m.factor();
  return m;
}

double ErrorModel::log_pdf(const ErrVec& e) const {
  const ErrVec d = e - mean_;
  const ErrVec w = llt_.solve(d);
  const double quad = d.dot(w);
  return -0.5 * (kErrDim * std::log(2.0 * std::numbers::pi) + logdet_ + quad);
}

std::vector<double> aggregate(std::span<const double> ll, int V) {
  if (V < 1) throw std::invalid_argument("V must be >= 1");
  if (static_cast<std::size_t>(V) > ll.size()) return {};
  constexpr double kToDb = 10.0 / std::numbers::ln10;
  const std::size_t n = ll.size() - static_cast<std::size_t>(V) + 1;
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int v = 0; v < V; ++v) acc += ll[i + static_cast<std::size_t>(v)];
    out[i] = kToDb * acc;
  }
  return out;
}

}  // namespace rfanom
