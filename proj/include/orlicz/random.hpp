#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "orlicz/operators.hpp"

namespace orlicz {

/// Seeded generator for the randomized suites. mt19937_64 is fully specified
/// by the standard and the transforms below avoid std::*_distribution, so a
/// seed produces the same stream on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  std::uint64_t uniform_int(std::uint64_t bound) { return eng_() % bound; }

  /// Standard normal via Box-Muller.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * M_PI * u2);
    have_spare_ = true;
    return r * std::cos(2.0 * M_PI * u2);
  }

  Complex cnormal() { return {normal(), normal()}; }

  /// Ginibre matrix: independent standard normal real and imaginary parts.
  DenseOperator ginibre(int rows, int cols) {
    Eigen::MatrixXcd m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = cnormal();
    return DenseOperator(std::move(m));
  }

  /// Haar-ish unitary from the QR factorization of a Ginibre matrix.
  DenseOperator unitary(int n) {
    const Eigen::MatrixXcd g = ginibre(n, n).matrix();
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    return DenseOperator(std::move(q));
  }

  /// Positive semidefinite a^* a.
  DenseOperator positive(int n) {
    const DenseOperator a = ginibre(n, n);
    return compose(adjoint(a), a);
  }

  Eigen::VectorXcd unit_vector(int n) {
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i) v(i) = cnormal();
    return v / v.norm();
  }

private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

} // namespace orlicz
