#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "orlicz/orlicz_function.hpp"

namespace orlicz {

using Complex = std::complex<double>;

/// Finite matrix on C^cols -> C^rows, entries row-major.
class DenseOperator {
public:
  DenseOperator(int rows, int cols, const std::vector<Complex>& row_major);
  explicit DenseOperator(Eigen::MatrixXcd m);

  static DenseOperator identity(int n);
  static DenseOperator zero(int rows, int cols);

  int rows() const { return static_cast<int>(m_.rows()); }
  int cols() const { return static_cast<int>(m_.cols()); }
  const Eigen::MatrixXcd& matrix() const { return m_; }

private:
  Eigen::MatrixXcd m_;
};

DenseOperator adjoint(const DenseOperator& x);
DenseOperator compose(const DenseOperator& a, const DenseOperator& b);
Complex trace(const DenseOperator& x);
DenseOperator operator+(const DenseOperator& a, const DenseOperator& b);
DenseOperator operator-(const DenseOperator& a, const DenseOperator& b);
DenseOperator operator*(Complex c, const DenseOperator& x);

/// x e_n = a_n e_n.
class DiagonalOperator {
public:
  explicit DiagonalOperator(std::vector<Complex> diag);
  explicit DiagonalOperator(const std::vector<double>& diag);

  const std::vector<Complex>& diag() const { return diag_; }
  DenseOperator to_dense() const;

private:
  std::vector<Complex> diag_;
};

/// xi |-> <h, xi> e with unit e, h (checked to 1e-8).
class RankOneOperator {
public:
  RankOneOperator(Eigen::VectorXcd e, Eigen::VectorXcd h);

  /// Normalizes both vectors first; handy for building test inputs.
  static RankOneOperator from_unnormalized(Eigen::VectorXcd e, Eigen::VectorXcd h);

  const Eigen::VectorXcd& e() const { return e_; }
  const Eigen::VectorXcd& h() const { return h_; }
  DenseOperator to_dense() const; // the matrix e h^*

private:
  Eigen::VectorXcd e_, h_;
};

/// Operator given by a singular-value formula s(n), n >= 0, nonincreasing.
///
/// tail_upper(start, c, phi) must bound sum_{n >= start} phi(c s(n)) from
/// above; tail_lower, when present, bounds it from below (it defaults to 0,
/// which is always valid but can make tight truncations unreachable).
/// block_sum, when present, computes sum_{n in [n0, n1)} phi(c s(n)) in bulk
/// and is the hook for the OpenMP kernels.
struct AnalyticOperator {
  std::function<double(std::int64_t)> s;
  std::function<double(std::int64_t, double, const OrliczFunction&)> tail_upper;
  std::function<double(std::int64_t, double, const OrliczFunction&)> tail_lower;
  std::function<double(std::int64_t, std::int64_t, double, const OrliczFunction&)>
      block_sum;
  std::string name;
};

using CompactOperator =
    std::variant<DenseOperator, DiagonalOperator, AnalyticOperator, RankOneOperator>;

/// Nonincreasing singular values grouped by multiplicity. `values` holds the
/// distinct representatives (strictly decreasing); truncated_at is set when
/// the underlying spectrum is infinite.
struct SingularSpectrum {
  std::vector<double> values;
  std::vector<int> multiplicities;
  std::optional<std::int64_t> truncated_at;

  std::size_t count() const;
  double largest() const { return values.empty() ? 0.0 : values.front(); }
  std::vector<double> expanded() const;
};

/// Groups a nonincreasing value list at relative tolerance 1e-8, greedily
/// from the largest value down.
SingularSpectrum group_spectrum(std::vector<double> sorted_nonincreasing);

SingularSpectrum singular_values(const CompactOperator& op,
                                 std::int64_t max_terms = 64);

double operator_norm(const CompactOperator& op);

/// Full decomposition x = U diag(values) V^*; values nonincreasing.
struct SvdResult {
  std::vector<double> values;
  Eigen::MatrixXcd u;
  Eigen::MatrixXcd v;
};
SvdResult svd(const DenseOperator& x);

/// |x| = (x^* x)^(1/2) for square x, via the Hermitian eigensolver.
DenseOperator abs_operator(const DenseOperator& x);

/// f applied to a positive semidefinite operator through its spectrum.
DenseOperator apply_function(const DenseOperator& positive,
                             const std::function<double(double)>& f);

} // namespace orlicz
