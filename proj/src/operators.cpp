#include "orlicz/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace orlicz {

namespace {

void require_finite(const Eigen::MatrixXcd& m) {
  if (!m.allFinite())
    throw std::invalid_argument("operator entries must be finite");
}

constexpr double kGroupRelTol = 1e-8;

} // namespace

DenseOperator::DenseOperator(int rows, int cols,
                             const std::vector<Complex>& row_major) {
  if (rows <= 0 || cols <= 0)
    throw std::invalid_argument("operator dimensions must be positive");
  if (static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols) !=
      row_major.size())
    throw std::invalid_argument("entry count does not match dimensions");
  m_.resize(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m_(i, j) = row_major[static_cast<std::size_t>(i) * cols + j];
  require_finite(m_);
}

DenseOperator::DenseOperator(Eigen::MatrixXcd m) : m_(std::move(m)) {
  if (m_.rows() == 0 || m_.cols() == 0)
    throw std::invalid_argument("operator dimensions must be positive");
  require_finite(m_);
}

DenseOperator DenseOperator::identity(int n) {
  return DenseOperator(Eigen::MatrixXcd::Identity(n, n));
}

DenseOperator DenseOperator::zero(int rows, int cols) {
  return DenseOperator(Eigen::MatrixXcd::Zero(rows, cols));
}

DenseOperator adjoint(const DenseOperator& x) {
  return DenseOperator(x.matrix().adjoint().eval());
}

DenseOperator compose(const DenseOperator& a, const DenseOperator& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("dimension mismatch in operator product");
  return DenseOperator((a.matrix() * b.matrix()).eval());
}

Complex trace(const DenseOperator& x) {
  if (x.rows() != x.cols())
    throw std::invalid_argument("trace requires a square operator");
  return x.matrix().trace();
}

DenseOperator operator+(const DenseOperator& a, const DenseOperator& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("dimension mismatch in operator sum");
  return DenseOperator((a.matrix() + b.matrix()).eval());
}

DenseOperator operator-(const DenseOperator& a, const DenseOperator& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("dimension mismatch in operator difference");
  return DenseOperator((a.matrix() - b.matrix()).eval());
}

DenseOperator operator*(Complex c, const DenseOperator& x) {
  return DenseOperator((c * x.matrix()).eval());
}

DiagonalOperator::DiagonalOperator(std::vector<Complex> diag)
    : diag_(std::move(diag)) {
  for (const auto& a : diag_)
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw std::invalid_argument("operator entries must be finite");
}

DiagonalOperator::DiagonalOperator(const std::vector<double>& diag)
    : DiagonalOperator(std::vector<Complex>(diag.begin(), diag.end())) {}

DenseOperator DiagonalOperator::to_dense() const {
  const int n = static_cast<int>(diag_.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = diag_[static_cast<std::size_t>(i)];
  return DenseOperator(std::move(m));
}

RankOneOperator::RankOneOperator(Eigen::VectorXcd e, Eigen::VectorXcd h)
    : e_(std::move(e)), h_(std::move(h)) {
  if (e_.size() == 0 || e_.size() != h_.size())
    throw std::invalid_argument("rank-one vectors must be nonempty and of equal dimension");
  if (std::abs(e_.norm() - 1.0) > 1e-8 || std::abs(h_.norm() - 1.0) > 1e-8)
    throw std::invalid_argument("rank-one vectors must be unit vectors");
}

RankOneOperator RankOneOperator::from_unnormalized(Eigen::VectorXcd e,
                                                   Eigen::VectorXcd h) {
  const double ne = e.norm(), nh = h.norm();
  if (ne == 0.0 || nh == 0.0)
    throw std::invalid_argument("cannot normalize a zero vector");
  return RankOneOperator(e / ne, h / nh);
}

DenseOperator RankOneOperator::to_dense() const {
  return DenseOperator((e_ * h_.adjoint()).eval());
}

std::size_t SingularSpectrum::count() const {
  std::size_t n = 0;
  for (int m : multiplicities) n += static_cast<std::size_t>(m);
  return n;
}

std::vector<double> SingularSpectrum::expanded() const {
  std::vector<double> out;
  out.reserve(count());
  for (std::size_t i = 0; i < values.size(); ++i)
    out.insert(out.end(), static_cast<std::size_t>(multiplicities[i]), values[i]);
  return out;
}

SingularSpectrum group_spectrum(std::vector<double> sorted) {
  SingularSpectrum sp;
  std::size_t i = 0;
  while (i < sorted.size()) {
    const double lead = sorted[i];
    std::size_t j = i + 1;
    while (j < sorted.size() && lead - sorted[j] <= kGroupRelTol * lead) ++j;
    sp.values.push_back(lead);
    sp.multiplicities.push_back(static_cast<int>(j - i));
    i = j;
  }
  return sp;
}

namespace {

std::vector<double> dense_singular_values(const DenseOperator& x) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(x.matrix());
  const auto& sv = svd.singularValues();
  return {sv.data(), sv.data() + sv.size()};
}

std::vector<double> sorted_abs(const std::vector<Complex>& diag) {
  std::vector<double> v;
  v.reserve(diag.size());
  for (const auto& a : diag) v.push_back(std::abs(a));
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

} // namespace

SingularSpectrum singular_values(const CompactOperator& op,
                                 std::int64_t max_terms) {
  if (max_terms < 1)
    throw std::invalid_argument("max_terms must be at least 1");
  return std::visit(
      [&](const auto& o) -> SingularSpectrum {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, DenseOperator>) {
          return group_spectrum(dense_singular_values(o));
        } else if constexpr (std::is_same_v<T, DiagonalOperator>) {
          return group_spectrum(sorted_abs(o.diag()));
        } else if constexpr (std::is_same_v<T, RankOneOperator>) {
          return group_spectrum({o.e().norm() * o.h().norm()});
        } else {
          std::vector<double> vals;
          vals.reserve(static_cast<std::size_t>(max_terms));
          double prev = std::numeric_limits<double>::infinity();
          for (std::int64_t n = 0; n < max_terms; ++n) {
            const double v = o.s(n);
            if (!(v >= 0.0) || v > prev)
              throw std::invalid_argument(
                  "analytic singular values must be nonnegative and nonincreasing");
            vals.push_back(v);
            prev = v;
          }
          SingularSpectrum sp = group_spectrum(std::move(vals));
          sp.truncated_at = max_terms;
          return sp;
        }
      },
      op);
}

double operator_norm(const CompactOperator& op) {
  return std::visit(
      [](const auto& o) -> double {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, DenseOperator>) {
          Eigen::JacobiSVD<Eigen::MatrixXcd> svd(o.matrix());
          return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
        } else if constexpr (std::is_same_v<T, DiagonalOperator>) {
          double m = 0.0;
          for (const auto& a : o.diag()) m = std::max(m, std::abs(a));
          return m;
        } else if constexpr (std::is_same_v<T, RankOneOperator>) {
          return o.e().norm() * o.h().norm();
        } else {
          return o.s(0);
        }
      },
      op);
}

SvdResult svd(const DenseOperator& x) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> dec(
      x.matrix(), Eigen::ComputeThinU | Eigen::ComputeThinV);
  SvdResult r;
  const auto& sv = dec.singularValues();
  r.values.assign(sv.data(), sv.data() + sv.size());
  r.u = dec.matrixU();
  r.v = dec.matrixV();
  return r;
}

DenseOperator abs_operator(const DenseOperator& x) {
  if (x.rows() != x.cols())
    throw std::invalid_argument("|x| requires a square operator");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
      (x.matrix().adjoint() * x.matrix()).eval());
  Eigen::VectorXd roots = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return DenseOperator(
      (es.eigenvectors() * roots.asDiagonal() * es.eigenvectors().adjoint())
          .eval());
}

DenseOperator apply_function(const DenseOperator& positive,
                             const std::function<double(double)>& f) {
  if (positive.rows() != positive.cols())
    throw std::invalid_argument("matrix function requires a square operator");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(positive.matrix());
  if (es.eigenvalues().minCoeff() < -1e-10 * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff()))
    throw std::invalid_argument("matrix function requires a positive operator");
  Eigen::VectorXd mapped(es.eigenvalues().size());
  for (Eigen::Index i = 0; i < mapped.size(); ++i)
    mapped(i) = f(std::max(0.0, es.eigenvalues()(i)));
  return DenseOperator(
      (es.eigenvectors() * mapped.asDiagonal() * es.eigenvectors().adjoint())
          .eval());
}

} // namespace orlicz
