#pragma once

// Text file formats. Every document is a JSON object; complex numbers are
// [re, im] pairs and every real is written with 17 significant digits.
//
//   matrix        {"dim": d, "entries": [[re, im], ...]}          d*d entries, row-major
//   state         {"l": l, "n": n, "amplitudes": [[re, im], ...]} l^n entries
//   function      {"l": l, "values": [v0, ..., v_{l-1}]}
//   generator set {"name": s, "mode": m, "matrices": [matrix, ...]}
//   coefficients  {"l": l, "coefficients": [[re, im], ...]}        l*l, row-major in (a, b)

#include "qudalg/circuit.hpp"
#include "qudalg/linalg.hpp"
#include "qudalg/universality.hpp"
#include "qudalg/weyl.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qudalg::io {

/// Malformed or inconsistent document.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// %.17g-equivalent: scientific with 16 digits after the point.
std::string format_real(double x);

std::string matrix_to_text(const Matrix& m);
Matrix matrix_from_text(std::string_view text);

std::string state_to_text(const QuditState& s);
QuditState state_from_text(std::string_view text);

std::vector<int> function_from_text(std::string_view text, int* l_out = nullptr);
std::string function_to_text(std::span<const int> values);

std::string generator_set_to_text(const GeneratorSet& set);
GeneratorSet generator_set_from_text(std::string_view text);

std::string coefficients_to_text(const WeylCoefficients& c);
WeylCoefficients coefficients_from_text(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace qudalg::io
