#include "qudalg/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace qudalg {

InnerProductConvention::InnerProductConvention(double normalizer) : normalizer_(normalizer) {
  if (!(normalizer > 0.0) || !std::isfinite(normalizer)) {
    throw std::invalid_argument("inner product normalizer must be positive and finite");
  }
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("mat_mul: inner dimensions differ");
  }
  return a * b;
}

Matrix tensor_product(std::span<const Matrix> factors) {
  Matrix out = Matrix::Identity(1, 1);
  for (const auto& f : factors) {
    out = tensor_product(out, f);
  }
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b, "commutator");
  return a * b - b * a;
}

Complex hs_inner(const Matrix& a, const Matrix& b, InnerProductConvention conv) {
  require_same_dim(a, b, "hs_inner");
  // Tr(A B^dagger) = sum_ij A_ij conj(B_ij)
  return (a.array() * b.array().conjugate()).sum() / conv.normalizer();
}

double hs_norm(const Matrix& a, InnerProductConvention conv) {
  return std::sqrt(a.squaredNorm() / conv.normalizer());
}

Matrix matrix_power(const Matrix& a, long exponent) {
  require_square(a, "matrix_power");
  if (exponent < 0) {
    throw std::invalid_argument("matrix_power: negative exponent");
  }
  Matrix result = Matrix::Identity(a.rows(), a.cols());
  Matrix base = a;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

bool is_normal(const Matrix& a, double tol) {
  const Matrix ah = a.adjoint();
  const double scale = std::max(1.0, max_abs(a) * max_abs(a));
  return max_abs(Matrix(a * ah - ah * a)) <= tol * scale;
}

namespace {

Matrix exp_hermitian(const Matrix& h, Complex factor) {
  // exp(factor * h) for Hermitian h
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  if (es.info() != Eigen::Success) {
    throw NonConvergence("matrix_exp: Hermitian eigendecomposition failed");
  }
  const Vector phases = (factor * es.eigenvalues().cast<Complex>()).array().exp();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

Matrix matrix_exp_series(const Matrix& a, int max_terms) {
  require_square(a, "matrix_exp");
  if (!a.allFinite()) {
    throw std::invalid_argument("matrix_exp: non-finite entries");
  }
  const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm1 > 0.5) {
    squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
  }
  const Matrix scaled = a / std::ldexp(1.0, squarings);

  Matrix sum = Matrix::Identity(a.rows(), a.cols());
  Matrix term = sum;
  bool converged = false;
  for (int k = 1; k <= max_terms; ++k) {
    term = term * scaled / static_cast<double>(k);
    sum += term;
    if (max_abs(term) <= 1e-17 * std::max(1.0, max_abs(sum))) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw NonConvergence("matrix_exp: Taylor series did not converge");
  }
  for (int s = 0; s < squarings; ++s) {
    sum = sum * sum;
  }
  return sum;
}

Matrix matrix_exp(const Matrix& a) {
  require_square(a, "matrix_exp");
  if (!a.allFinite()) {
    throw std::invalid_argument("matrix_exp: non-finite entries");
  }
  if (!is_normal(a)) {
    return matrix_exp_series(a);
  }
  // For normal A the parts H = (A + A^dagger)/2 and K = (A - A^dagger)/2
  // commute, so exp(A) = exp(H) exp(K) with K = i S, S Hermitian.
  const Matrix h = (a + a.adjoint()) / 2.0;
  const Matrix s = (a - a.adjoint()) / Complex(0.0, 2.0);
  return exp_hermitian(h, 1.0) * exp_hermitian(s, Complex(0.0, 1.0));
}

ExtendResult orthonormal_extend(std::span<const Matrix> basis, const Matrix& candidate,
                                const ExtendOptions& options) {
  const auto conv = options.convention.value_or(InnerProductConvention::per_dimension(candidate.rows()));
  ExtendResult result;
  const double candidate_norm = hs_norm(candidate, conv);
  if (candidate_norm == 0.0) {
    return result;
  }

  Matrix residual = candidate;
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& b : basis) {
      Complex c = hs_inner(residual, b, conv);
      if (options.field == Field::real) c = c.real();
      residual -= c * b;
    }
  }

  result.residual_norm = hs_norm(residual, conv);
  if (result.residual_norm > options.tolerance * candidate_norm) {
    result.accepted = true;
    result.element = residual / result.residual_norm;
  }
  return result;
}

Matrix gram_matrix(std::span<const Matrix> basis, InnerProductConvention conv) {
  const auto n = static_cast<Index>(basis.size());
  Matrix g(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      g(i, j) = hs_inner(basis[i], basis[j], conv);
    }
  }
  return g;
}

}  // namespace qudalg
