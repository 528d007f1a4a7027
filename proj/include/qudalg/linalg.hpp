#pragma once

// Dense complex linear algebra kernel shared by every other module.
//
// Matrices are plain Eigen::MatrixXcd values. The free functions here accept
// any Eigen expression where that is cheap to support, and always return
// evaluated matrices so callers never hold dangling expression templates.

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qudalg {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

inline constexpr double kPi = 3.14159265358979323846;

/// Raised when two operands have incompatible shapes.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by iterative algorithms that hit their iteration cap.
class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Divisor applied to Tr(A B^dagger). A normalizer equal to the dimension
/// makes {U^a V^b} orthonormal; a normalizer of 1 is the raw trace form.
class InnerProductConvention {
 public:
  explicit InnerProductConvention(double normalizer);

  static InnerProductConvention raw() { return InnerProductConvention(1.0); }
  static InnerProductConvention per_dimension(Index dim) {
    return InnerProductConvention(static_cast<double>(dim));
  }

  double normalizer() const { return normalizer_; }

 private:
  double normalizer_;
};

/// Scalar field over which spans are taken. `real` restricts projection
/// coefficients to real numbers, which keeps anti-Hermitian inputs
/// anti-Hermitian.
enum class Field { complex, real };

inline void require_square(const Matrix& a, const char* what) {
  if (a.rows() != a.cols() || a.rows() < 1) {
    throw DimensionMismatch(std::string(what) + ": matrix must be square and non-empty");
  }
}

inline void require_same_dim(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch(std::string(what) + ": dimension mismatch (" +
                            std::to_string(a.rows()) + " vs " + std::to_string(b.rows()) + ")");
  }
}

/// Checked matrix product.
Matrix mat_mul(const Matrix& a, const Matrix& b);

/// Kronecker product; `a`'s indices are the most significant.
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> tensor_product(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Result = Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Index br = b.rows();
  const Index bc = b.cols();
  Result out(a.rows() * br, a.cols() * bc);
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * br, j * bc, br, bc) = a(i, j) * b;
    }
  }
  return out;
}

/// Kronecker product of a sequence, left to right.
Matrix tensor_product(std::span<const Matrix> factors);

template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> dagger(
    const Eigen::MatrixBase<Derived>& a) {
  return a.adjoint();
}

/// Commutator [a, b] = ab - ba.
Matrix commutator(const Matrix& a, const Matrix& b);

/// Tr(a b^dagger) / normalizer.
Complex hs_inner(const Matrix& a, const Matrix& b, InnerProductConvention conv);

/// sqrt(Re hs_inner(a, a)).
double hs_norm(const Matrix& a, InnerProductConvention conv);

/// Largest entry magnitude; the norm used for all identity residuals.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

template <typename DerivedA, typename DerivedB>
double max_abs_diff(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  return max_abs(a - b);
}

/// Non-negative integer power by repeated squaring.
Matrix matrix_power(const Matrix& a, long exponent);

bool is_normal(const Matrix& a, double tol = 1e-12);

/// Matrix exponential. Normal inputs go through Hermitian eigendecompositions
/// of the commuting Hermitian and anti-Hermitian parts; anything else uses
/// scaling and squaring around a truncated Taylor series.
Matrix matrix_exp(const Matrix& a);

/// Scaling-and-squaring Taylor exponential. Exposed so it can be tested on
/// its own; throws NonConvergence past `max_terms`.
Matrix matrix_exp_series(const Matrix& a, int max_terms = 200);

struct ExtendOptions {
  /// Acceptance threshold relative to the candidate's norm.
  double tolerance = 1e-9;
  /// Defaults to the per-dimension convention when empty.
  std::optional<InnerProductConvention> convention;
  Field field = Field::complex;
};

struct ExtendResult {
  bool accepted = false;
  double residual_norm = 0.0;
  std::optional<Matrix> element;
};

/// One modified Gram-Schmidt step with a re-orthogonalization pass: projects
/// `candidate` off span(basis) and, if what is left is larger than
/// tolerance * |candidate|, returns it normalized. `basis` must already be
/// orthonormal under the same convention.
ExtendResult orthonormal_extend(std::span<const Matrix> basis, const Matrix& candidate,
                                const ExtendOptions& options = {});

/// Gram matrix G(i, j) = hs_inner(basis[i], basis[j]).
Matrix gram_matrix(std::span<const Matrix> basis, InnerProductConvention conv);

}  // namespace qudalg
