#include "qudalg/weyl.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace qudalg {

namespace {

void require_order(int l, const char* what) {
  if (l < 2) {
    throw std::invalid_argument(std::string(what) + ": l must be >= 2, got " + std::to_string(l));
  }
}

void require_index(int l, int v, const char* what) {
  if (v < 0 || v >= l) {
    throw std::out_of_range(std::string(what) + ": index " + std::to_string(v) +
                            " outside [0, " + std::to_string(l) + ")");
  }
}

long mod(long k, long m) {
  const long r = k % m;
  return r < 0 ? r + m : r;
}

// exp(2 pi i num / den), exact at multiples of pi/2 and conjugate-symmetric
Complex unit_root(long num, long den) {
  const long r = mod(num, den);
  if ((4 * r) % den == 0) {
    switch ((4 * r) / den) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  if (2 * r > den) return std::conj(unit_root(den - r, den));
  return std::polar(1.0, 2.0 * kPi * static_cast<double>(r) / static_cast<double>(den));
}

}  // namespace

RootOfUnity::RootOfUnity(int order) : l(order) {
  require_order(order, "RootOfUnity");
  zeta = zeta_pow(1);
  nu = nu_pow(1);
}

Complex RootOfUnity::zeta_pow(long k) const {
  return unit_root(k, l);
}

Complex RootOfUnity::nu_pow(long k) const {
  return unit_root(k, 2L * l);
}

Matrix shift_matrix(int l) {
  require_order(l, "shift_matrix");
  Matrix u = Matrix::Zero(l, l);
  for (int i = 0; i < l; ++i) u(i, (i + 1) % l) = 1.0;
  return u;
}

Matrix clock_matrix(int l) {
  require_order(l, "clock_matrix");
  const RootOfUnity root(l);
  Matrix v = Matrix::Zero(l, l);
  for (int k = 0; k < l; ++k) v(k, k) = root.zeta_pow(k);
  return v;
}

Matrix weyl_element(int l, WeylIndex idx) {
  require_order(l, "weyl_element");
  require_index(l, idx.a, "weyl_element");
  require_index(l, idx.b, "weyl_element");
  const RootOfUnity root(l);
  // (U^a)_{i, i+a} = 1, then V^b scales column c by zeta^(bc).
  Matrix m = Matrix::Zero(l, l);
  for (int i = 0; i < l; ++i) {
    const int c = (i + idx.a) % l;
    m(i, c) = root.zeta_pow(static_cast<long>(idx.b) * c);
  }
  return m;
}

double weyl_commutation_check(int l) {
  const RootOfUnity root(l);
  const Matrix u = shift_matrix(l);
  const Matrix v = clock_matrix(l);
  return max_abs_diff(u * v, root.zeta * (v * u));
}

WeylCoefficients weyl_decompose(const Matrix& m, int l) {
  require_order(l, "weyl_decompose");
  if (m.rows() != l || m.cols() != l) {
    throw DimensionMismatch("weyl_decompose: matrix dimension " + std::to_string(m.rows()) +
                            " does not match l = " + std::to_string(l));
  }
  const auto conv = InnerProductConvention::per_dimension(l);
  WeylCoefficients out{l, Matrix::Zero(l, l)};
  for (int a = 0; a < l; ++a) {
    for (int b = 0; b < l; ++b) {
      out.table(a, b) = hs_inner(m, weyl_element(l, {a, b}), conv);
    }
  }
  return out;
}

Matrix weyl_reconstruct(const WeylCoefficients& c) {
  require_order(c.l, "weyl_reconstruct");
  if (c.table.rows() != c.l || c.table.cols() != c.l) {
    throw DimensionMismatch("weyl_reconstruct: coefficient table must be l x l");
  }
  Matrix m = Matrix::Zero(c.l, c.l);
  for (int a = 0; a < c.l; ++a) {
    for (int b = 0; b < c.l; ++b) {
      if (c.table(a, b) != Complex(0.0)) m += c.table(a, b) * weyl_element(c.l, {a, b});
    }
  }
  return m;
}

Matrix reflection_matrix(int l) {
  require_order(l, "reflection_matrix");
  Matrix xi = Matrix::Zero(l, l);
  for (int n = 0; n < l; ++n) xi(l - n - 1, n) = 1.0;
  return xi;
}

Matrix rotated_basis_element(int l, int j, int k) {
  require_order(l, "rotated_basis_element");
  require_index(l, j, "rotated_basis_element");
  require_index(l, k, "rotated_basis_element");
  const RootOfUnity root(l);
  return root.nu_pow(static_cast<long>(k) * j) * weyl_element(l, {j, k}) * reflection_matrix(l);
}

TauMatrices tau_matrices(int l) {
  require_order(l, "tau_matrices");
  const RootOfUnity root(l);
  const Matrix u = shift_matrix(l);
  const Matrix v = clock_matrix(l);
  return {u, root.nu_pow(l - 1) * (u * v), v};
}

double fermat_operator_check(int l, Complex a, Complex b) {
  require_order(l, "fermat_operator_check");
  const Matrix sum = a * clock_matrix(l) + b * shift_matrix(l);
  const Matrix expected = (std::pow(a, l) + std::pow(b, l)) * Matrix::Identity(l, l);
  return max_abs_diff(matrix_power(sum, l), expected);
}

ScalarFactorizationResidual scalar_factorization_check(int l, Complex a, Complex b) {
  require_order(l, "scalar_factorization_check");
  // extended precision keeps the l-fold product within a few ulps of double
  using Wide = std::complex<long double>;
  const long double pi = std::acos(-1.0L);
  auto root = [&](long k, long den) { return std::polar(1.0L, 2.0L * pi * static_cast<long double>(k) / den); };
  const Wide wa(a);
  const Wide wb(b);
  Wide pa = 1.0L;
  Wide pb = 1.0L;
  for (int k = 0; k < l; ++k) {
    pa *= wa;
    pb *= wb;
  }
  const Wide target = pa + pb;

  ScalarFactorizationResidual out;
  if (l % 2 == 1) {
    Wide product = 1.0L;
    for (int k = 0; k < l; ++k) product *= wa + root(k, l) * wb;
    out.odd = static_cast<double>(std::abs(product - target));
  }
  Wide product = 1.0L;
  for (int k = 0; k < l; ++k) product *= wa - root(2L * k + 1, 2L * l) * wb;
  out.nu = static_cast<double>(std::abs(product - target));
  return out;
}

WeylCommutator weyl_commutator_coefficient(int l, WeylIndex p, WeylIndex q) {
  require_order(l, "weyl_commutator_coefficient");
  for (int v : {p.a, p.b, q.a, q.b}) require_index(l, v, "weyl_commutator_coefficient");
  const RootOfUnity root(l);
  const long bc = static_cast<long>(p.b) * q.a;
  const long ad = static_cast<long>(p.a) * q.b;
  // equal exponents mod l cancel exactly
  const Complex coefficient = mod(bc - ad, l) == 0 ? Complex(0.0)
                                                   : root.zeta_pow(-bc) - root.zeta_pow(-ad);
  return {coefficient, {(p.a + q.a) % l, (p.b + q.b) % l}};
}

}  // namespace qudalg
