#pragma once

#include "qudalg/linalg.hpp"

#include <random>

namespace qudalg::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20240601);
  return engine;
}

inline Complex random_complex(double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  return {g(rng()), g(rng())};
}

inline Complex random_in_disc() {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(std::sqrt(u(rng())), 2.0 * kPi * u(rng()));
}

inline Matrix random_matrix(Index d, double scale = 1.0) {
  Matrix m(d, d);
  for (Index i = 0; i < m.size(); ++i) m.data()[i] = random_complex(scale);
  return m;
}

inline Matrix random_antihermitian(Index d, double scale = 1.0) {
  const Matrix m = random_matrix(d, scale);
  return (m - m.adjoint()) / 2.0;
}

inline Matrix random_unitary(Index d) {
  Eigen::HouseholderQR<Matrix> qr(random_matrix(d));
  return qr.householderQ() * Matrix::Identity(d, d);
}

inline Matrix mat2(Complex a, Complex b, Complex c, Complex d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

inline const Complex I{0.0, 1.0};

}  // namespace qudalg::testing
