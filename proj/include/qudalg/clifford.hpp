#pragma once

// Pauli matrices, Clifford generators over qubit arrays, their zeta-commuting
// generalization over qudit arrays, canonical clock/shift generators and the
// integer commutation matrices extracted from a family.
//
// Tensor layout is big-endian: the leftmost Kronecker factor is site 1. For
// the Clifford-type families generator 2k / 2k+1 carries its sigma1/sigma2
// (tau1/tau2) factor at position n-k-1 from the left, identities to its left
// and sigma3 (tau3) factors to its right.

#include "qudalg/linalg.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qudalg {

enum class FamilyKind { clifford, generalized, canonical };

struct GeneratorFamily {
  int l = 2;
  int n = 1;
  FamilyKind kind = FamilyKind::clifford;
  std::vector<Matrix> matrices;

  Index dim() const { return matrices.empty() ? 0 : matrices.front().rows(); }
};

/// Antisymmetric, zero diagonal, entries in {-1, 0, +1};
/// g_i g_j = zeta^c(i,j) g_j g_i.
using CommutationMatrix = Eigen::MatrixXi;

/// Some pair of a family is not zeta-power commuting.
class NoMatchingPower : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// sigma_0 = I, sigma_1, sigma_2, sigma_3.
Matrix pauli(int i);

/// e_0 ... e_{2n-1}; e_i e_j + e_j e_i = 2 delta_ij.
GeneratorFamily clifford_generators(int n);

/// f_0 ... f_{2n-1} over l-level sites; f_i f_j = zeta f_j f_i for i < j and f_i^l = 1.
GeneratorFamily generalized_generators(int l, int n);

/// (U_1, V_1, U_2, V_2, ...) with U_i, V_i the shift/clock on site i.
GeneratorFamily canonical_generators(int l, int n);

/// Extracts c(i, j) by trying every power of zeta. Throws NoMatchingPower if
/// a pair matches no power within `tol`, or only one outside {-1, 0, +1}.
CommutationMatrix commutation_matrix(const GeneratorFamily& fam, double tol = 1e-10);
CommutationMatrix commutation_matrix(std::span<const Matrix> generators, int l, double tol = 1e-10);

/// Block-diagonal symplectic form with [[0, 1], [-1, 0]] blocks.
CommutationMatrix canonical_form(int size);

/// +1 above the diagonal, -1 below.
CommutationMatrix clifford_form(int size);

/// All n(2n-1) products e_j e_k with j < k, in lexicographic order.
std::vector<Matrix> biproducts(const GeneratorFamily& fam);

/// [e_j, e_{j+1}]/2 for j = 0 .. 2n-2, followed by e_0 and e_0 e_1 e_2.
std::vector<Matrix> universal_augmentation(const GeneratorFamily& fam);

/// f_0 followed by f_k f_{k+1}^dagger for k = 0 .. 2n-2.
std::vector<Matrix> qudit_universal_set(int l, int n);

/// Names accepted by generator_set().
std::vector<std::string> generator_set_names();

/// Resolves "clifford", "generalized", "canonical", "biproducts",
/// "clifford-universal" or "qudit-universal". Clifford-based sets need l == 2.
std::vector<Matrix> generator_set(std::string_view name, int l, int n);

}  // namespace qudalg
