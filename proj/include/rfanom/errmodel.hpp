#ifndef RFANOM_ERRMODEL_HPP
#define RFANOM_ERRMODEL_HPP

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <span>
#include <vector>

namespace rfanom {

/// Prediction errors are 4 complex samples flattened to 8 reals,
/// interleaved (re0, im0, re1, im1, ...).
inline constexpr int kErrDim = 8;
using ErrVec = Eigen::Matrix<double, kErrDim, 1>;
using ErrMat = Eigen::Matrix<double, kErrDim, kErrDim>;

/// Gaussian model of the prediction-error vector. Immutable once fitted;
/// log_pdf goes through a cached Cholesky factor (solve, never invert).
class ErrorModel {
 public:
  ErrorModel() = default;

  /// Sample mean and unbiased sample covariance of >= 2 error vectors,
  /// with ridge * I added to the covariance before factoring.
  static ErrorModel fit(std::span<const ErrVec> errors, double ridge);

  /// Same, with the default ridge 1e-6 * trace(cov) / 8.
  static ErrorModel fit(std::span<const ErrVec> errors);

  /// Builds a model from explicit moments (deserialization, tests).
  static ErrorModel from_moments(const ErrVec& mean, const ErrMat& sample_cov, double ridge);

  /// ln N(e; mean, cov + ridge*I).
  double log_pdf(const ErrVec& e) const;

  const ErrVec& mean() const { return mean_; }
  const ErrMat& sample_cov() const { return cov_; }
  ErrMat covariance() const { return cov_ + ridge_ * ErrMat::Identity(); }
  double ridge() const { return ridge_; }
  double log_det() const { return logdet_; }

 private:
  void factor();

  ErrVec mean_ = ErrVec::Zero();
  ErrMat cov_ = ErrMat::Identity();
  double ridge_ = 0.0;
  Eigen::LLT<ErrMat> llt_;
  double logdet_ = 0.0;
};

/// Sliding sum of V consecutive log-likelihoods on the decibel-like scale:
/// out[i] = (10 / ln 10) * sum_{v=0..V-1} ll[i+v]. Output length is
/// len(ll) - V + 1; V larger than the input yields an empty vector.
std::vector<double> aggregate(std::span<const double> ll, int V);

}  // namespace rfanom

#endif
