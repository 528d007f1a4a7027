#include "qudalg/clifford.hpp"

#include "qudalg/weyl.hpp"

#include <algorithm>
#include <string>

namespace qudalg {

namespace {

void require_sites(int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be >= 1");
}

void require_order(int l, const char* what) {
  if (l < 2) throw std::invalid_argument(std::string(what) + ": l must be >= 2");
}

// identity^(n-k-1) (x) head (x) tail^k
Matrix chain_element(const Matrix& identity, const Matrix& head, const Matrix& tail, int n, int k) {
  std::vector<Matrix> factors;
  factors.reserve(n);
  for (int i = 0; i < n - k - 1; ++i) factors.push_back(identity);
  factors.push_back(head);
  for (int i = 0; i < k; ++i) factors.push_back(tail);
  return tensor_product(factors);
}

GeneratorFamily chain_family(int l, int n, FamilyKind kind, const Matrix& g1, const Matrix& g2,
                             const Matrix& g3) {
  GeneratorFamily fam{l, n, kind, {}};
  const Matrix id = Matrix::Identity(g1.rows(), g1.cols());
  fam.matrices.reserve(2 * n);
  for (int k = 0; k < n; ++k) {
    fam.matrices.push_back(chain_element(id, g1, g3, n, k));
    fam.matrices.push_back(chain_element(id, g2, g3, n, k));
  }
  return fam;
}

Matrix on_site(const Matrix& op, int site, int n) {
  const Matrix id = Matrix::Identity(op.rows(), op.cols());
  std::vector<Matrix> factors(n, id);
  factors[site] = op;
  return tensor_product(factors);
}

}  // namespace

Matrix pauli(int i) {
  const Complex I(0.0, 1.0);
  Matrix s(2, 2);
  switch (i) {
    case 0: s << 1, 0, 0, 1; break;
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -I, I, 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default: throw std::out_of_range("pauli: index must be in [0, 3]");
  }
  return s;
}

GeneratorFamily clifford_generators(int n) {
  require_sites(n, "clifford_generators");
  return chain_family(2, n, FamilyKind::clifford, pauli(1), pauli(2), pauli(3));
}

GeneratorFamily generalized_generators(int l, int n) {
  require_order(l, "generalized_generators");
  require_sites(n, "generalized_generators");
  const auto tau = tau_matrices(l);
  return chain_family(l, n, FamilyKind::generalized, tau.tau1, tau.tau2, tau.tau3);
}

GeneratorFamily canonical_generators(int l, int n) {
  require_order(l, "canonical_generators");
  require_sites(n, "canonical_generators");
  GeneratorFamily fam{l, n, FamilyKind::canonical, {}};
  const Matrix u = shift_matrix(l);
  const Matrix v = clock_matrix(l);
  for (int site = 0; site < n; ++site) {
    fam.matrices.push_back(on_site(u, site, n));
    fam.matrices.push_back(on_site(v, site, n));
  }
  return fam;
}

CommutationMatrix commutation_matrix(std::span<const Matrix> generators, int l, double tol) {
  require_order(l, "commutation_matrix");
  const RootOfUnity root(l);
  const auto size = static_cast<Index>(generators.size());
  CommutationMatrix c = CommutationMatrix::Zero(size, size);

  for (Index i = 0; i < size; ++i) {
    for (Index j = i + 1; j < size; ++j) {
      const Matrix& gi = generators[i];
      const Matrix& gj = generators[j];
      require_same_dim(gi, gj, "commutation_matrix");
      const Matrix lhs = gi * gj;
      const Matrix rhs = gj * gi;
      const double scale = std::max(1.0, max_abs(lhs));

      int found = -1;
      int matches = 0;
      for (int p = 0; p < l; ++p) {
        if (max_abs_diff(lhs, root.zeta_pow(p) * rhs) <= tol * scale) {
          found = p;
          ++matches;
        }
      }
      if (matches != 1) {
        throw NoMatchingPower("commutation_matrix: generators " + std::to_string(i) + " and " +
                              std::to_string(j) + " are not zeta-power commuting");
      }
      // l = 2 has 1 == -1 mod 2; the upper triangle takes +1
      int rep;
      if (found == 0) {
        rep = 0;
      } else if (found == 1) {
        rep = 1;
      } else if (found == l - 1) {
        rep = -1;
      } else {
        throw NoMatchingPower("commutation_matrix: generators " + std::to_string(i) + " and " +
                              std::to_string(j) + " commute up to zeta^" + std::to_string(found) +
                              ", outside {-1, 0, +1}");
      }
      c(i, j) = rep;
      c(j, i) = -rep;
    }
  }
  return c;
}

CommutationMatrix commutation_matrix(const GeneratorFamily& fam, double tol) {
  return commutation_matrix(fam.matrices, fam.l, tol);
}

CommutationMatrix canonical_form(int size) {
  CommutationMatrix c = CommutationMatrix::Zero(size, size);
  for (int i = 0; i + 1 < size; i += 2) {
    c(i, i + 1) = 1;
    c(i + 1, i) = -1;
  }
  return c;
}

CommutationMatrix clifford_form(int size) {
  CommutationMatrix c = CommutationMatrix::Zero(size, size);
  for (int i = 0; i < size; ++i) {
    for (int j = i + 1; j < size; ++j) {
      c(i, j) = 1;
      c(j, i) = -1;
    }
  }
  return c;
}

std::vector<Matrix> biproducts(const GeneratorFamily& fam) {
  if (fam.kind != FamilyKind::clifford) {
    throw std::invalid_argument("biproducts: requires a Clifford family");
  }
  std::vector<Matrix> out;
  const auto& e = fam.matrices;
  for (std::size_t j = 0; j < e.size(); ++j) {
    for (std::size_t k = j + 1; k < e.size(); ++k) out.push_back(e[j] * e[k]);
  }
  return out;
}

std::vector<Matrix> universal_augmentation(const GeneratorFamily& fam) {
  if (fam.kind != FamilyKind::clifford) {
    throw std::invalid_argument("universal_augmentation: requires a Clifford family");
  }
  if (fam.n < 2) {
    throw std::invalid_argument("universal_augmentation: requires n >= 2");
  }
  const auto& e = fam.matrices;
  std::vector<Matrix> out;
  for (std::size_t j = 0; j + 1 < e.size(); ++j) out.push_back(commutator(e[j], e[j + 1]) / 2.0);
  out.push_back(e[0]);
  out.push_back(e[0] * e[1] * e[2]);
  return out;
}

std::vector<Matrix> qudit_universal_set(int l, int n) {
  const auto fam = generalized_generators(l, n);
  const auto& f = fam.matrices;
  std::vector<Matrix> out{f[0]};
  for (std::size_t k = 0; k + 1 < f.size(); ++k) out.push_back(f[k] * f[k + 1].adjoint());
  return out;
}

std::vector<std::string> generator_set_names() {
  return {"clifford", "generalized", "canonical", "biproducts", "clifford-universal", "qudit-universal"};
}

std::vector<Matrix> generator_set(std::string_view name, int l, int n) {
  auto need_qubits = [&] {
    if (l != 2) {
      throw std::invalid_argument("generator set '" + std::string(name) + "' requires l = 2");
    }
  };
  if (name == "clifford") {
    need_qubits();
    return clifford_generators(n).matrices;
  }
  if (name == "generalized") return generalized_generators(l, n).matrices;
  if (name == "canonical") return canonical_generators(l, n).matrices;
  if (name == "biproducts") {
    need_qubits();
    return biproducts(clifford_generators(n));
  }
  if (name == "clifford-universal") {
    need_qubits();
    return universal_augmentation(clifford_generators(n));
  }
  if (name == "qudit-universal") return qudit_universal_set(l, n);
  throw std::invalid_argument("unknown generator set '" + std::string(name) + "'");
}

}  // namespace qudalg
