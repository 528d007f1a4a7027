#pragma once

// Clock and shift operators, the Weyl operator basis {U^a V^b}, and the
// scalar / operator identities built on l-th roots of unity.

#include "qudalg/linalg.hpp"

#include <optional>

namespace qudalg {

/// zeta = exp(2 pi i / l) and its square root nu = exp(i pi / l).
struct RootOfUnity {
  int l;
  Complex zeta;
  Complex nu;

  explicit RootOfUnity(int l);

  /// zeta^k, evaluated from the reduced exponent k mod l.
  Complex zeta_pow(long k) const;
  /// nu^k, evaluated from the reduced exponent k mod 2l.
  Complex nu_pow(long k) const;
};

struct WeylIndex {
  int a = 0;  // power of the shift U
  int b = 0;  // power of the clock V

  friend bool operator==(const WeylIndex&, const WeylIndex&) = default;
};

/// Coefficients f(a, b) of sum_ab f(a, b) U^a V^b; `table(a, b)`.
struct WeylCoefficients {
  int l = 0;
  Matrix table;
};

/// Cyclic shift with ones on the superdiagonal and in the bottom-left
/// corner: U|k> = |k-1 mod l>. Together with clock_matrix this gives UV = zeta VU.
Matrix shift_matrix(int l);

/// diag(1, zeta, ..., zeta^(l-1)).
Matrix clock_matrix(int l);

/// U^a V^b.
Matrix weyl_element(int l, WeylIndex idx);

/// max |UV - zeta VU|.
double weyl_commutation_check(int l);

/// f(a, b) = Tr(m (U^a V^b)^dagger) / l.
WeylCoefficients weyl_decompose(const Matrix& m, int l);

Matrix weyl_reconstruct(const WeylCoefficients& c);

/// Xi|n> = |l - n - 1>.
Matrix reflection_matrix(int l);

/// nu^(kj) U^j V^k Xi.
Matrix rotated_basis_element(int l, int j, int k);

struct TauMatrices {
  Matrix tau1;  // U
  Matrix tau2;  // nu^(l-1) U V, so that tau2^l = 1
  Matrix tau3;  // V
};

TauMatrices tau_matrices(int l);

/// max |(aV + bU)^l - (a^l + b^l) I|.
double fermat_operator_check(int l, Complex a, Complex b);

struct ScalarFactorizationResidual {
  /// |prod_k (a + zeta^k b) - (a^l + b^l)|, defined for odd l only.
  std::optional<double> odd;
  /// |prod_k (a - nu^(2k+1) b) - (a^l + b^l)|, any l.
  double nu = 0.0;
};

ScalarFactorizationResidual scalar_factorization_check(int l, Complex a, Complex b);

struct WeylCommutator {
  Complex coefficient;
  WeylIndex result;
};

/// [U^a V^b, U^c V^d] = (zeta^(-bc) - zeta^(-ad)) U^(a+c) V^(b+d).
WeylCommutator weyl_commutator_coefficient(int l, WeylIndex p, WeylIndex q);

}  // namespace qudalg
