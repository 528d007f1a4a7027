#pragma once

// Lie-algebra closure: grows an orthonormal basis of the algebra generated by
// a set of matrices under linear combinations and commutators, and compares
// its dimension with that of su(d) / sl(d, C).

#include "qudalg/linalg.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qudalg {

enum class FieldMode {
  real_antihermitian,  // real spans of traceless anti-Hermitian matrices, su(d)
  complex_traceless,   // complex spans of traceless matrices, sl(d, C)
};

std::string to_string(FieldMode mode);
FieldMode field_mode_from_string(const std::string& text);

struct GeneratorSet {
  std::string name;
  Index dim = 0;
  std::vector<Matrix> matrices;
  FieldMode mode = FieldMode::real_antihermitian;
};

struct ClosureResult {
  Index achieved_dim = 0;
  Index target_dim = 0;
  std::vector<Matrix> basis;  // orthonormal under the raw trace form
  int rounds = 0;
  double tolerance_used = 0.0;
  bool universal = false;
};

/// m - (Tr m / d) I.
Matrix traceless_project(const Matrix& m);

/// (i(m + m^dagger), m - m^dagger): both anti-Hermitian, and
/// m = ((m - m^dagger) - i * i(m + m^dagger)) / 2.
std::pair<Matrix, Matrix> hermitian_split(const Matrix& m);

/// Builds a set whose stored matrices satisfy the mode invariant: traceless,
/// and split into anti-Hermitian pairs in real mode. Zero matrices are dropped.
GeneratorSet make_generator_set(std::string name, std::span<const Matrix> matrices, FieldMode mode);

struct ClosureOptions {
  int max_rounds = 100;
  double tolerance = 1e-9;
};

/// Breadth-first closure. Each round commutes every element added in the
/// previous round with every element present at the start of the round and
/// tries to extend the basis with the result, in a fixed order. Stops when a
/// round adds nothing or the basis reaches d^2 - 1 elements. Throws
/// NonConvergence if max_rounds rounds pass and the basis is still growing.
ClosureResult closure(const GeneratorSet& set, const ClosureOptions& options = {});

/// Preprocesses `matrices` (dimension l^n) in `mode` and reports universality.
bool is_universal(std::span<const Matrix> matrices, int l, int n, FieldMode mode,
                  const ClosureOptions& options = {});

/// (exp(i(m + m^dagger) tau), exp((m - m^dagger) tau)).
std::pair<Matrix, Matrix> gate_from_generator(const Matrix& m, double tau);

}  // namespace qudalg
