#include "qudalg/clifford.hpp"
#include "qudalg/universality.hpp"
#include "qudalg/weyl.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <vector>

using namespace qudalg;
using namespace qudalg::testing;

namespace {

ClosureResult run_closure(const std::vector<Matrix>& mats, FieldMode mode = FieldMode::real_antihermitian) {
  return closure(make_generator_set("test", mats, mode));
}

void check_basis_invariants(const ClosureResult& r, bool real) {
  const Matrix g = gram_matrix(r.basis, InnerProductConvention::raw());
  CHECK(max_abs_diff(g, Matrix::Identity(g.rows(), g.cols())) <= 10 * r.tolerance_used);
  for (const auto& b : r.basis) {
    CHECK(std::abs(b.trace()) <= 1e-11);
    if (real) CHECK(max_abs(Matrix(b + b.adjoint())) <= 1e-11);
  }
  CHECK(r.universal == (r.achieved_dim == r.target_dim));
  CHECK(r.achieved_dim <= r.target_dim);
}

}  // namespace

TEST_CASE("traceless_project") {
  CHECK(max_abs(traceless_project(Matrix::Identity(3, 3))) == 0.0);
  CHECK(traceless_project(pauli(1)) == pauli(1));
  CHECK(traceless_project(mat2(2, 0, 0, 0)) == pauli(3));
  for (int t = 0; t < 10; ++t) CHECK(std::abs(traceless_project(random_matrix(5)).trace()) <= 1e-13);
}

TEST_CASE("hermitian_split") {
  const Matrix h = random_matrix(3) + random_matrix(3).adjoint();
  const Matrix hh = (h + h.adjoint()) / 2.0;
  auto [p, q] = hermitian_split(hh);
  CHECK(max_abs_diff(p, Matrix(2.0 * I * hh)) <= 1e-15);
  CHECK(max_abs(q) <= 1e-15);

  const Matrix ah = random_antihermitian(3);
  auto [p2, q2] = hermitian_split(ah);
  CHECK(max_abs(p2) <= 1e-15);
  CHECK(max_abs_diff(q2, Matrix(2.0 * ah)) <= 1e-15);

  const Matrix u = shift_matrix(3);
  auto [a, b] = hermitian_split(u);
  CHECK(max_abs(Matrix(a + a.adjoint())) <= 1e-14);
  CHECK(max_abs(Matrix(b + b.adjoint())) <= 1e-14);
  CHECK(max_abs_diff(Matrix((b - I * a) / 2.0), u) <= 1e-15);
}

TEST_CASE("make_generator_set") {
  const std::vector<Matrix> mats{Matrix::Identity(2, 2), pauli(1)};
  const auto real = make_generator_set("s", mats, FieldMode::real_antihermitian);
  CHECK(real.matrices.size() == 1);  // identity projects to zero, sigma1 only has a Hermitian part
  const auto complex = make_generator_set("s", mats, FieldMode::complex_traceless);
  CHECK(complex.matrices.size() == 1);
  CHECK_THROWS_AS(make_generator_set("s", {}, FieldMode::real_antihermitian), std::invalid_argument);
  const std::vector<Matrix> mixed{pauli(1), Matrix::Identity(3, 3)};
  CHECK_THROWS_AS(make_generator_set("s", mixed, FieldMode::complex_traceless), DimensionMismatch);
}

TEST_CASE("closure examples") {
  const auto r = run_closure({Matrix(I * pauli(1)), Matrix(I * pauli(3))});
  CHECK(r.achieved_dim == 3);
  CHECK(r.universal);
  check_basis_invariants(r, true);

  const auto e2 = clifford_generators(2).matrices;
  std::vector<Matrix> neighbours;
  for (int j = 0; j < 3; ++j) neighbours.push_back(commutator(e2[j], e2[j + 1]) / 2.0);
  const auto so4 = run_closure(neighbours);
  CHECK(so4.achieved_dim == 6);
  CHECK(so4.target_dim == 15);
  CHECK_FALSE(so4.universal);
  check_basis_invariants(so4, true);

  const auto aug = run_closure(universal_augmentation(clifford_generators(2)));
  CHECK(aug.achieved_dim == 15);
  CHECK(aug.universal);
  check_basis_invariants(aug, true);

  const auto qudit = run_closure(qudit_universal_set(3, 2));
  CHECK(qudit.achieved_dim == 80);
  CHECK(qudit.universal);
  check_basis_invariants(qudit, true);
}

TEST_CASE("closure dimensions") {
  CHECK(run_closure(biproducts(clifford_generators(2))).achieved_dim == 6);
  CHECK(run_closure(biproducts(clifford_generators(3))).achieved_dim == 15);
  CHECK(run_closure(universal_augmentation(clifford_generators(3))).achieved_dim == 63);
  CHECK(run_closure(qudit_universal_set(3, 1)).achieved_dim == 8);
  CHECK(run_closure(qudit_universal_set(5, 1)).achieved_dim == 24);
}

TEST_CASE("closure in complex mode") {
  const auto r = run_closure(qudit_universal_set(3, 1), FieldMode::complex_traceless);
  CHECK(r.achieved_dim == 8);
  CHECK(r.universal);
  check_basis_invariants(r, false);

  // a single diagonal generates a one-dimensional abelian algebra
  const auto v = run_closure({clock_matrix(3)}, FieldMode::complex_traceless);
  CHECK(v.achieved_dim == 1);
  CHECK_FALSE(v.universal);
}

TEST_CASE("closure is monotone in the input set") {
  const auto aug = universal_augmentation(clifford_generators(2));
  Index previous = 0;
  std::vector<Matrix> prefix;
  for (const auto& m : aug) {
    prefix.push_back(m);
    const Index dim = run_closure(prefix).achieved_dim;
    CHECK(dim >= previous);
    previous = dim;
  }
  CHECK(previous == 15);
}

TEST_CASE("closure is deterministic") {
  const auto a = run_closure(qudit_universal_set(3, 1));
  const auto b = run_closure(qudit_universal_set(3, 1));
  REQUIRE(a.achieved_dim == b.achieved_dim);
  for (std::size_t i = 0; i < a.basis.size(); ++i) CHECK(max_abs_diff(a.basis[i], b.basis[i]) <= 1e-13);
}

TEST_CASE("closure error paths") {
  GeneratorSet hermitian{"h", 2, {pauli(1)}, FieldMode::real_antihermitian};
  CHECK_THROWS_AS(closure(hermitian), std::invalid_argument);

  GeneratorSet empty{"e", 2, {}, FieldMode::complex_traceless};
  CHECK_THROWS_AS(closure(empty), std::invalid_argument);

  // two generators of su(4) need several rounds; one round is not enough
  const auto set = make_generator_set("aug", universal_augmentation(clifford_generators(2)),
                                      FieldMode::real_antihermitian);
  CHECK_THROWS_AS(closure(set, {1, 1e-9}), NonConvergence);
}

TEST_CASE("is_universal") {
  CHECK_FALSE(is_universal(std::vector<Matrix>{Matrix(I * pauli(1))}, 2, 1, FieldMode::real_antihermitian));
  CHECK(is_universal(std::vector<Matrix>{Matrix(I * pauli(1)), Matrix(I * pauli(2)), Matrix(I * pauli(3))}, 2, 1,
                     FieldMode::real_antihermitian));
  CHECK_FALSE(is_universal(biproducts(clifford_generators(3)), 2, 3, FieldMode::real_antihermitian));
  CHECK(is_universal(qudit_universal_set(3, 2), 3, 2, FieldMode::complex_traceless));
  CHECK_THROWS_AS(is_universal(std::vector<Matrix>{pauli(1)}, 3, 1, FieldMode::real_antihermitian),
                  DimensionMismatch);
}

TEST_CASE("gate_from_generator") {
  auto [g1, g2] = gate_from_generator(Matrix(pauli(1) / 2.0), kPi / 2);
  CHECK(max_abs_diff(g1, Matrix(I * pauli(1))) <= 1e-12);
  CHECK(max_abs_diff(g2, Matrix::Identity(2, 2)) <= 1e-12);

  auto [z1, z2] = gate_from_generator(random_matrix(3), 0.0);
  CHECK(max_abs_diff(z1, Matrix::Identity(3, 3)) <= 1e-15);
  CHECK(max_abs_diff(z2, Matrix::Identity(3, 3)) <= 1e-15);

  auto unitary = [](const Matrix& u) { return max_abs_diff(Matrix(u * u.adjoint()), Matrix::Identity(u.rows(), u.cols())); };
  auto [u1, u2] = gate_from_generator(shift_matrix(3), 0.3);
  CHECK(unitary(u1) <= 1e-12);
  CHECK(unitary(u2) <= 1e-12);

  for (int t = 0; t < 100; ++t) {
    auto [a, b] = gate_from_generator(random_matrix(4), 2.0 * random_complex().real());
    CHECK(unitary(a) <= 1e-11);
    CHECK(unitary(b) <= 1e-11);
  }
}
