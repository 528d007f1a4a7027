#include "qudalg/universality.hpp"

#include <cmath>
#include <stdexcept>

namespace qudalg {

std::string to_string(FieldMode mode) {
  return mode == FieldMode::real_antihermitian ? "real-antihermitian" : "complex-traceless";
}

FieldMode field_mode_from_string(const std::string& text) {
  if (text == "real-antihermitian" || text == "real") return FieldMode::real_antihermitian;
  if (text == "complex-traceless" || text == "complex") return FieldMode::complex_traceless;
  throw std::invalid_argument("unknown field mode '" + text + "'");
}

Matrix traceless_project(const Matrix& m) {
  require_square(m, "traceless_project");
  const Complex shift = m.trace() / static_cast<double>(m.rows());
  Matrix out = m;
  out.diagonal().array() -= shift;
  return out;
}

std::pair<Matrix, Matrix> hermitian_split(const Matrix& m) {
  require_square(m, "hermitian_split");
  const Matrix md = m.adjoint();
  return {Complex(0.0, 1.0) * (m + md), m - md};
}

GeneratorSet make_generator_set(std::string name, std::span<const Matrix> matrices, FieldMode mode) {
  if (matrices.empty()) throw std::invalid_argument("generator set must be non-empty");
  GeneratorSet set{std::move(name), matrices.front().rows(), {}, mode};
  auto keep = [&](Matrix m) {
    if (max_abs(m) > 0.0) set.matrices.push_back(std::move(m));
  };
  for (const auto& m : matrices) {
    require_square(m, "make_generator_set");
    if (m.rows() != set.dim) throw DimensionMismatch("generator set: matrices differ in dimension");
    const Matrix t = traceless_project(m);
    if (mode == FieldMode::real_antihermitian) {
      auto [first, second] = hermitian_split(t);
      keep(std::move(first));
      keep(std::move(second));
    } else {
      keep(t);
    }
  }
  return set;
}

ClosureResult closure(const GeneratorSet& set, const ClosureOptions& options) {
  if (set.matrices.empty()) throw std::invalid_argument("closure: empty generator set");
  if (!(options.tolerance > 0.0)) throw std::invalid_argument("closure: tolerance must be positive");
  const Index d = set.dim;
  const bool real = set.mode == FieldMode::real_antihermitian;

  ClosureResult result;
  result.target_dim = d * d - 1;
  result.tolerance_used = options.tolerance;

  const ExtendOptions extend{options.tolerance, InnerProductConvention::raw(),
                             real ? Field::real : Field::complex};
  auto& basis = result.basis;
  auto try_add = [&](const Matrix& candidate) {
    if (static_cast<Index>(basis.size()) >= result.target_dim) return;
    auto r = orthonormal_extend(basis, candidate, extend);
    if (r.accepted) basis.push_back(std::move(*r.element));
  };

  for (const auto& m : set.matrices) {
    require_square(m, "closure");
    if (m.rows() != d) throw DimensionMismatch("closure: matrices differ in dimension");
    if (real && max_abs(Matrix(m + m.adjoint())) > 1e-11 * std::max(1.0, max_abs(m))) {
      throw std::invalid_argument("closure: real mode requires anti-Hermitian generators");
    }
    try_add(traceless_project(m));
  }

  std::size_t frontier_begin = 0;
  bool growing = true;
  while (growing && static_cast<Index>(basis.size()) < result.target_dim) {
    if (result.rounds == options.max_rounds) {
      throw NonConvergence("closure: basis still growing after " + std::to_string(options.max_rounds) +
                           " rounds (dimension " + std::to_string(basis.size()) + ")");
    }
    ++result.rounds;
    const std::size_t round_end = basis.size();
    for (std::size_t i = frontier_begin; i < round_end; ++i) {
      // pairs inside the frontier are visited once
      for (std::size_t j = 0; j < round_end; ++j) {
        if (j >= frontier_begin && j >= i) break;
        try_add(commutator(basis[i], basis[j]));
      }
    }
    growing = basis.size() > round_end;
    frontier_begin = round_end;
  }

  result.achieved_dim = static_cast<Index>(basis.size());
  result.universal = result.achieved_dim == result.target_dim;
  return result;
}

bool is_universal(std::span<const Matrix> matrices, int l, int n, FieldMode mode,
                  const ClosureOptions& options) {
  const double expected = std::pow(static_cast<double>(l), n);
  for (const auto& m : matrices) {
    if (static_cast<double>(m.rows()) != expected) {
      throw DimensionMismatch("is_universal: matrix dimension is not l^n");
    }
  }
  return closure(make_generator_set("input", matrices, mode), options).universal;
}

std::pair<Matrix, Matrix> gate_from_generator(const Matrix& m, double tau) {
  require_square(m, "gate_from_generator");
  if (!std::isfinite(tau)) throw std::invalid_argument("gate_from_generator: tau must be finite");
  const Matrix md = m.adjoint();
  return {matrix_exp(Complex(0.0, tau) * (m + md)), matrix_exp(tau * (m - md))};
}

}  // namespace qudalg
