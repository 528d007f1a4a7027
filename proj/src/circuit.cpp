#include "qudalg/circuit.hpp"

#include "qudalg/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace qudalg {

namespace {

void validate_gate(const GateSpec& g, int l, int n) {
  if (g.l != l) throw std::invalid_argument("gate level l does not match state");
  if (g.sites.empty()) throw std::invalid_argument("gate must act on at least one site");
  std::vector<int> seen;
  for (int site : g.sites) {
    if (site < 1 || site > n) {
      throw std::out_of_range("gate site " + std::to_string(site) + " outside [1, " +
                              std::to_string(n) + "]");
    }
    if (std::find(seen.begin(), seen.end(), site) != seen.end()) {
      throw std::invalid_argument("gate sites must be distinct");
    }
    seen.push_back(site);
  }
  const Index expected = pow_dim(l, g.arity());
  if (g.matrix.rows() != expected || g.matrix.cols() != expected) {
    throw DimensionMismatch("gate matrix dimension " + std::to_string(g.matrix.rows()) +
                            " does not match l^k = " + std::to_string(expected));
  }
}

void validate_table(std::span<const int> f, int l, const char* what) {
  if (l < 2) throw std::invalid_argument(std::string(what) + ": l must be >= 2");
  if (static_cast<int>(f.size()) != l) {
    throw std::invalid_argument(std::string(what) + ": function table must have l entries");
  }
  for (int v : f) {
    if (v < 0 || v >= l) {
      throw std::out_of_range(std::string(what) + ": function value " + std::to_string(v) +
                              " outside [0, " + std::to_string(l) + ")");
    }
  }
}

}  // namespace

Index pow_dim(int l, int n) {
  if (l < 1 || n < 0) throw std::invalid_argument("pow_dim: invalid arguments");
  Index out = 1;
  for (int i = 0; i < n; ++i) {
    if (out > std::numeric_limits<Index>::max() / l) throw std::overflow_error("l^n overflows");
    out *= l;
  }
  return out;
}

QuditState::QuditState(int l, int n, Vector amplitudes) : l_(l), n_(n), amplitudes_(std::move(amplitudes)) {
  if (l < 2) throw std::invalid_argument("QuditState: l must be >= 2");
  if (n < 1) throw std::invalid_argument("QuditState: n must be >= 1");
  if (amplitudes_.size() != pow_dim(l, n)) {
    throw DimensionMismatch("QuditState: expected " + std::to_string(pow_dim(l, n)) +
                            " amplitudes, got " + std::to_string(amplitudes_.size()));
  }
  if (!amplitudes_.allFinite()) throw std::invalid_argument("QuditState: non-finite amplitude");
}

QuditState basis_state(int l, int n, std::span<const int> digits) {
  if (static_cast<int>(digits.size()) != n) {
    throw std::invalid_argument("basis_state: expected " + std::to_string(n) + " digits");
  }
  Index flat = 0;
  for (int d : digits) {
    if (d < 0 || d >= l) throw std::out_of_range("basis_state: digit out of range");
    flat = flat * l + d;
  }
  Vector amps = Vector::Zero(pow_dim(l, n));
  amps(flat) = 1.0;
  return QuditState(l, n, std::move(amps));
}

QuditState apply_full(const Matrix& u, const QuditState& s) {
  if (u.rows() != s.size() || u.cols() != s.size()) {
    throw DimensionMismatch("apply_full: operator dimension " + std::to_string(u.rows()) +
                            " does not match state size " + std::to_string(s.size()));
  }
  return QuditState(s.l(), s.n(), u * s.amplitudes());
}

QuditState apply_kgate(const GateSpec& g, const QuditState& s) {
  validate_gate(g, s.l(), s.n());
  const int l = s.l();
  const int k = g.arity();
  const Index local_dim = g.matrix.rows();

  std::vector<Index> strides(k);
  for (int m = 0; m < k; ++m) strides[m] = pow_dim(l, s.n() - g.sites[m]);

  // offset of each local basis index; the first gate site is most significant
  std::vector<Index> offsets(local_dim);
  for (Index t = 0; t < local_dim; ++t) {
    Index rest = t;
    Index off = 0;
    for (int m = k - 1; m >= 0; --m) {
      off += (rest % l) * strides[m];
      rest /= l;
    }
    offsets[t] = off;
  }

  const Vector& in = s.amplitudes();
  Vector out = in;
  Vector gathered(local_dim);
  for (Index base = 0; base < in.size(); ++base) {
    bool is_block_start = true;
    for (int m = 0; m < k && is_block_start; ++m) {
      is_block_start = (base / strides[m]) % l == 0;
    }
    if (!is_block_start) continue;
    for (Index t = 0; t < local_dim; ++t) gathered(t) = in(base + offsets[t]);
    const Vector mixed = g.matrix * gathered;
    for (Index t = 0; t < local_dim; ++t) out(base + offsets[t]) = mixed(t);
  }
  return QuditState(l, s.n(), std::move(out));
}

Matrix embed_kgate(const GateSpec& g, int n) {
  if (n < 1) throw std::invalid_argument("embed_kgate: n must be >= 1");
  validate_gate(g, g.l, n);
  const int l = g.l;
  const int k = g.arity();

  // site order of the product g (x) I: gate sites first, then the others ascending
  std::vector<int> order(g.sites.begin(), g.sites.end());
  for (int site = 1; site <= n; ++site) {
    if (std::find(g.sites.begin(), g.sites.end(), site) == g.sites.end()) order.push_back(site);
  }
  const Matrix product = tensor_product(g.matrix, Matrix::Identity(pow_dim(l, n - k), pow_dim(l, n - k)));

  // perm maps a flat index in `order` layout to the natural layout
  const Index dim = pow_dim(l, n);
  std::vector<Index> perm(dim);
  std::vector<int> digits(n + 1);
  for (Index p = 0; p < dim; ++p) {
    Index rest = p;
    for (int pos = n - 1; pos >= 0; --pos) {
      digits[order[pos]] = static_cast<int>(rest % l);
      rest /= l;
    }
    Index natural = 0;
    for (int site = 1; site <= n; ++site) natural = natural * l + digits[site];
    perm[p] = natural;
  }
  Matrix out = Matrix::Zero(dim, dim);
  for (Index r = 0; r < dim; ++r) {
    for (Index c = 0; c < dim; ++c) out(perm[r], perm[c]) = product(r, c);
  }
  return out;
}

Matrix qft_matrix(int l, bool normalized) {
  if (l < 2) throw std::invalid_argument("qft_matrix: l must be >= 2");
  const RootOfUnity root(l);
  Matrix f(l, l);
  for (int k = 0; k < l; ++k) {
    for (int j = 0; j < l; ++j) f(k, j) = root.zeta_pow(static_cast<long>(k) * j);
  }
  if (normalized) f /= std::sqrt(static_cast<double>(l));
  return f;
}

std::vector<QuditState> momentum_basis(int l) {
  const Matrix f = qft_matrix(l, false);
  std::vector<QuditState> out;
  out.reserve(l);
  for (int k = 0; k < l; ++k) out.emplace_back(l, 1, f.col(k));
  return out;
}

Matrix perm_from_function(std::span<const int> f, int l) {
  validate_table(f, l, "perm_from_function");
  Matrix m = Matrix::Zero(l, l);
  for (int k = 0; k < l; ++k) m(f[k], k) = 1.0;
  return m;
}

Matrix reversible_embedding(std::span<const int> f, int l) {
  validate_table(f, l, "reversible_embedding");
  const Index dim = static_cast<Index>(l) * l;
  Matrix m = Matrix::Zero(dim, dim);
  for (int x = 0; x < l; ++x) {
    for (int y = 0; y < l; ++y) m(static_cast<Index>(x) * l + (f[x] + y) % l, static_cast<Index>(x) * l + y) = 1.0;
  }
  return m;
}

}  // namespace qudalg
