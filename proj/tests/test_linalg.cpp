#include "qudalg/clifford.hpp"
#include "qudalg/linalg.hpp"
#include "qudalg/weyl.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace qudalg;
using namespace qudalg::testing;

namespace {

// Plain Taylor partial sums, no scaling; oracle for small-norm inputs.
Matrix series_exp_oracle(const Matrix& a) {
  Matrix sum = Matrix::Identity(a.rows(), a.cols());
  Matrix term = sum;
  for (int k = 1; k < 80; ++k) {
    term = term * a / static_cast<double>(k);
    sum += term;
  }
  return sum;
}

double relative_error(const Matrix& got, const Matrix& want) {
  return max_abs_diff(got, want) / std::max(1.0, max_abs(want));
}

}  // namespace

TEST_CASE("mat_mul") {
  const Matrix id = Matrix::Identity(2, 2);
  CHECK(mat_mul(id, id) == id);
  CHECK(max_abs_diff(mat_mul(pauli(1), pauli(1)), id) == 0.0);
  CHECK(mat_mul(pauli(1), pauli(3)) == mat2(0, -1, 1, 0));
  CHECK_THROWS_AS(mat_mul(Matrix::Identity(2, 2), Matrix::Identity(3, 3)), DimensionMismatch);
}

TEST_CASE("tensor_product") {
  CHECK(tensor_product(Matrix::Identity(2, 2), Matrix::Identity(2, 2)) == Matrix::Identity(4, 4));

  Matrix block_diag = Matrix::Zero(4, 4);
  block_diag.topLeftCorner(2, 2) = pauli(1);
  block_diag.bottomRightCorner(2, 2) = pauli(1);
  CHECK(tensor_product(pauli(0), pauli(1)) == block_diag);

  Matrix anti = Matrix::Zero(4, 4);
  anti.topRightCorner(2, 2) = Matrix::Identity(2, 2);
  anti.bottomLeftCorner(2, 2) = Matrix::Identity(2, 2);
  CHECK(tensor_product(pauli(1), pauli(0)) == anti);

  SUBCASE("associative") {
    // Gaussian-integer entries multiply exactly, so equality is exact
    std::uniform_int_distribution<int> small(-4, 4);
    auto gaussian = [&](Index d) {
      Matrix m(d, d);
      for (Index i = 0; i < m.size(); ++i) m.data()[i] = Complex(small(rng()), small(rng()));
      return m;
    };
    for (int t = 0; t < 10; ++t) {
      const Matrix a = gaussian(2);
      const Matrix b = gaussian(3);
      const Matrix c = gaussian(2);
      CHECK(tensor_product(tensor_product(a, b), c) == tensor_product(a, tensor_product(b, c)));
    }
    for (int t = 0; t < 10; ++t) {
      const Matrix a = random_matrix(2);
      const Matrix b = random_matrix(3);
      const Matrix c = random_matrix(2);
      CHECK(max_abs_diff(tensor_product(tensor_product(a, b), c), tensor_product(a, tensor_product(b, c))) <= 1e-14);
    }
  }

  SUBCASE("sequence form") {
    const std::vector<Matrix> fs{pauli(1), pauli(3), pauli(0)};
    CHECK(tensor_product(fs) == tensor_product(tensor_product(pauli(1), pauli(3)), pauli(0)));
  }
}

TEST_CASE("dagger") {
  CHECK(dagger(pauli(2)) == pauli(2));
  const Matrix u = shift_matrix(3);
  CHECK(dagger(u) == u * u);
  CHECK(dagger(Matrix(I * Matrix::Identity(2, 2))) == Matrix(-I * Matrix::Identity(2, 2)));

  for (int t = 0; t < 20; ++t) {
    const Matrix a = random_matrix(4);
    const Matrix b = random_matrix(4);
    CHECK(max_abs_diff(dagger(Matrix(a * b)), Matrix(dagger(b) * dagger(a))) <= 1e-14);
  }
}

TEST_CASE("hs_inner") {
  const auto per3 = InnerProductConvention::per_dimension(3);
  CHECK(std::abs(hs_inner(Matrix::Identity(3, 3), Matrix::Identity(3, 3), per3) - Complex(1.0)) <= 1e-15);
  CHECK(std::abs(hs_inner(shift_matrix(3), clock_matrix(3), per3)) <= 1e-15);
  CHECK(std::abs(hs_inner(pauli(1), pauli(1), InnerProductConvention(2.0)) - Complex(1.0)) <= 1e-15);
  CHECK_THROWS_AS(hs_inner(pauli(1), Matrix::Identity(3, 3), per3), DimensionMismatch);
  CHECK_THROWS_AS(InnerProductConvention(0.0), std::invalid_argument);

  SUBCASE("positive definite") {
    for (int t = 0; t < 20; ++t) {
      const Matrix a = random_matrix(3);
      const Complex v = hs_inner(a, a, InnerProductConvention::raw());
      CHECK(std::abs(v.imag()) <= 1e-13);
      CHECK(v.real() > 0.0);
    }
    CHECK(hs_inner(Matrix::Zero(3, 3), Matrix::Zero(3, 3), per3) == Complex(0.0));
  }

  SUBCASE("matches the trace definition") {
    const Matrix a = random_matrix(4);
    const Matrix b = random_matrix(4);
    const Complex direct = (a * b.adjoint()).trace() / 4.0;
    CHECK(std::abs(hs_inner(a, b, InnerProductConvention::per_dimension(4)) - direct) <= 1e-13);
  }
}

TEST_CASE("matrix_exp examples") {
  CHECK(max_abs_diff(matrix_exp(Matrix::Zero(3, 3)), Matrix::Identity(3, 3)) <= 1e-15);
  CHECK(max_abs_diff(matrix_exp(Matrix(I * pauli(1) * (kPi / 2))), Matrix(I * pauli(1))) <= 1e-12);

  const double tau = 0.7;
  const Matrix diag = mat2(std::exp(I * tau), 0, 0, std::exp(-I * tau));
  CHECK(max_abs_diff(matrix_exp(Matrix(I * pauli(3) * tau)), diag) <= 1e-14);

  Matrix bad = Matrix::Zero(2, 2);
  bad(0, 0) = std::nan("");
  CHECK_THROWS_AS(matrix_exp(bad), std::invalid_argument);
}

TEST_CASE("matrix_exp closed form exp(i sigma_k tau) = cos tau + i sigma_k sin tau") {
  for (int k = 1; k <= 3; ++k) {
    for (int step = -20; step <= 20; ++step) {
      const double tau = step * 0.25;
      const Matrix want = std::cos(tau) * Matrix::Identity(2, 2) + I * std::sin(tau) * pauli(k);
      CHECK(max_abs_diff(matrix_exp(Matrix(I * tau * pauli(k))), want) <= 1e-12);
    }
  }
}

TEST_CASE("matrix_exp against the defining series") {
  for (int t = 0; t < 10; ++t) {
    const Matrix normal = random_antihermitian(4, 0.4);
    CHECK(relative_error(matrix_exp(normal), series_exp_oracle(normal)) <= 1e-12);

    // upper-triangular plus noise is far from normal, exercising the series path
    Matrix skew = random_matrix(4, 0.3);
    skew(0, 3) += 2.0;
    REQUIRE_FALSE(is_normal(skew));
    CHECK(relative_error(matrix_exp(skew), series_exp_oracle(skew)) <= 1e-12);
    CHECK(relative_error(matrix_exp_series(normal), series_exp_oracle(normal)) <= 1e-12);
  }
}

TEST_CASE("matrix_exp of anti-Hermitian input is unitary") {
  for (int t = 0; t < 20; ++t) {
    const Matrix x = random_antihermitian(6, 2.0);
    const Matrix u = matrix_exp(x);
    CHECK(max_abs_diff(Matrix(u * u.adjoint()), Matrix::Identity(6, 6)) <= 1e-11);
  }
}

TEST_CASE("matrix_exp_series reports non-convergence") {
  const Matrix a = random_matrix(3);
  CHECK_THROWS_AS(matrix_exp_series(a, 2), NonConvergence);
}

TEST_CASE("matrix_power") {
  const Matrix u = shift_matrix(5);
  CHECK(max_abs_diff(matrix_power(u, 5), Matrix::Identity(5, 5)) == 0.0);
  CHECK(matrix_power(u, 0) == Matrix::Identity(5, 5));
  CHECK(max_abs_diff(matrix_power(u, 7), Matrix(u * u)) == 0.0);
  CHECK_THROWS_AS(matrix_power(u, -1), std::invalid_argument);
}

TEST_CASE("orthonormal_extend examples") {
  const std::vector<Matrix> sigma1{pauli(1)};

  auto same = orthonormal_extend(sigma1, pauli(1));
  CHECK_FALSE(same.accepted);
  CHECK(same.residual_norm <= 1e-15);
  CHECK_FALSE(same.element.has_value());

  auto scaled = orthonormal_extend({}, Matrix(2.0 * pauli(1)));
  REQUIRE(scaled.accepted);
  CHECK(max_abs_diff(*scaled.element, pauli(1)) <= 1e-15);

  auto mixed = orthonormal_extend(sigma1, Matrix(pauli(1) + pauli(3)));
  REQUIRE(mixed.accepted);
  CHECK(max_abs_diff(*mixed.element, pauli(3)) <= 1e-15);
  CHECK(std::abs(mixed.residual_norm - 1.0) <= 1e-15);

  auto zero = orthonormal_extend(sigma1, Matrix::Zero(2, 2));
  CHECK_FALSE(zero.accepted);
}

TEST_CASE("orthonormal_extend keeps a random basis orthonormal") {
  const auto raw = InnerProductConvention::raw();
  std::vector<Matrix> basis;
  ExtendOptions opts;
  opts.convention = raw;
  for (int t = 0; t < 40; ++t) {
    // more candidates than the 16-dimensional space admits
    auto r = orthonormal_extend(basis, random_matrix(4), opts);
    if (r.accepted) basis.push_back(*r.element);
  }
  CHECK(basis.size() == 16);
  CHECK(max_abs_diff(gram_matrix(basis, raw), Matrix::Identity(16, 16)) <= 1e-12);
}

TEST_CASE("orthonormal_extend over the reals stays anti-Hermitian") {
  ExtendOptions opts;
  opts.field = Field::real;
  opts.convention = InnerProductConvention::raw();
  std::vector<Matrix> basis;
  for (int t = 0; t < 30; ++t) {
    auto r = orthonormal_extend(basis, random_antihermitian(3), opts);
    if (r.accepted) basis.push_back(*r.element);
  }
  CHECK(basis.size() == 9);  // real dimension of u(3)
  for (const auto& b : basis) CHECK(max_abs(Matrix(b + b.adjoint())) <= 1e-13);
}

TEST_CASE("orthonormal_extend rejects relative to the candidate norm") {
  const std::vector<Matrix> sigma1{pauli(1)};
  const Matrix candidate = 1e6 * pauli(1) + 1e-6 * pauli(3);
  CHECK_FALSE(orthonormal_extend(sigma1, candidate).accepted);
  ExtendOptions loose;
  loose.tolerance = 1e-13;
  CHECK(orthonormal_extend(sigma1, candidate, loose).accepted);
}
