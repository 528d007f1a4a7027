#pragma once

// n-qudit state vectors and gate application. Flat amplitude indices are
// big-endian mixed radix: site 1 is the most significant digit. Sites are
// 1-based everywhere in this interface.

#include "qudalg/linalg.hpp"

#include <span>
#include <vector>

namespace qudalg {

class QuditState {
 public:
  QuditState(int l, int n, Vector amplitudes);

  int l() const { return l_; }
  int n() const { return n_; }
  Index size() const { return amplitudes_.size(); }
  const Vector& amplitudes() const { return amplitudes_; }
  double norm() const { return amplitudes_.norm(); }

 private:
  int l_;
  int n_;
  Vector amplitudes_;
};

struct GateSpec {
  int l = 2;
  Matrix matrix;           // dimension l^k
  std::vector<int> sites;  // k distinct 1-based sites, in matrix-factor order

  int arity() const { return static_cast<int>(sites.size()); }
};

/// l^n, throwing on overflow past Index.
Index pow_dim(int l, int n);

QuditState basis_state(int l, int n, std::span<const int> digits);

QuditState apply_full(const Matrix& u, const QuditState& s);

/// Contracts the gate against the selected site indices only, by stride
/// arithmetic; never forms the l^n-dimensional operator.
QuditState apply_kgate(const GateSpec& g, const QuditState& s);

/// The l^n-dimensional operator acting as g on g.sites and as identity
/// elsewhere: g (x) I, conjugated by the permutation that moves g.sites to
/// the front.
Matrix embed_kgate(const GateSpec& g, int n);

/// F(k, j) = zeta^(kj), scaled by 1/sqrt(l) when normalized.
Matrix qft_matrix(int l, bool normalized);

/// sum_j zeta^(kj) |j> for k = 0 .. l-1, unnormalized.
std::vector<QuditState> momentum_basis(int l);

/// M_f = sum_k |f(k)><k|.
Matrix perm_from_function(std::span<const int> f, int l);

/// Permutation on pairs: |x>|y> -> |x>|f(x) + y mod l>, flat index x*l + y.
Matrix reversible_embedding(std::span<const int> f, int l);

}  // namespace qudalg
