#include "qudalg/io.hpp"

#include <fmt/format.h>

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace qudalg::io {

using nlohmann::json;

namespace {

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("invalid document: ") + e.what());
  }
}

const json& field(const json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) {
    throw FormatError(std::string("missing field '") + name + "'");
  }
  return doc.at(name);
}

long integer_field(const json& doc, const char* name) {
  const json& v = field(doc, name);
  if (!v.is_number_integer()) throw FormatError(std::string("field '") + name + "' must be an integer");
  return v.get<long>();
}

double finite_number(const json& v) {
  if (!v.is_number()) throw FormatError("expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw FormatError("non-finite number");
  return x;
}

Vector complex_list(const json& list, Index expected, const char* name) {
  if (!list.is_array()) throw FormatError(std::string("field '") + name + "' must be a list");
  if (static_cast<Index>(list.size()) != expected) {
    throw FormatError(std::string("field '") + name + "' has " + std::to_string(list.size()) +
                      " entries, expected " + std::to_string(expected));
  }
  Vector out(expected);
  for (Index i = 0; i < expected; ++i) {
    const json& pair = list[static_cast<std::size_t>(i)];
    if (!pair.is_array() || pair.size() != 2) throw FormatError("complex entries must be [re, im] pairs");
    out(i) = Complex(finite_number(pair[0]), finite_number(pair[1]));
  }
  return out;
}

std::string complex_list_text(const Complex* data, Index count) {
  std::string out = "[";
  for (Index i = 0; i < count; ++i) {
    if (i) out += ", ";
    out += "[" + format_real(data[i].real()) + ", " + format_real(data[i].imag()) + "]";
  }
  out += "]";
  return out;
}

std::string row_major_list(const Matrix& m) {
  const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> rm = m;
  return complex_list_text(rm.data(), rm.size());
}

Matrix matrix_from_json(const json& doc) {
  const long dim = integer_field(doc, "dim");
  if (dim < 1) throw FormatError("field 'dim' must be positive");
  const Vector flat = complex_list(field(doc, "entries"), dim * dim, "entries");
  Matrix m(dim, dim);
  for (Index r = 0; r < dim; ++r) {
    for (Index c = 0; c < dim; ++c) m(r, c) = flat(r * dim + c);
  }
  return m;
}

}  // namespace

std::string format_real(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  return fmt::format("{:.16e}", x);
}

std::string matrix_to_text(const Matrix& m) {
  require_square(m, "matrix_to_text");
  return "{\"dim\": " + std::to_string(m.rows()) + ", \"entries\": " + row_major_list(m) + "}\n";
}

Matrix matrix_from_text(std::string_view text) { return matrix_from_json(parse(text)); }

std::string state_to_text(const QuditState& s) {
  return "{\"l\": " + std::to_string(s.l()) + ", \"n\": " + std::to_string(s.n()) +
         ", \"amplitudes\": " + complex_list_text(s.amplitudes().data(), s.size()) + "}\n";
}

QuditState state_from_text(std::string_view text) {
  const json doc = parse(text);
  const long l = integer_field(doc, "l");
  const long n = integer_field(doc, "n");
  if (l < 2 || n < 1 || n > 62) throw FormatError("state requires l >= 2 and n >= 1");
  Index size;
  try {
    size = pow_dim(static_cast<int>(l), static_cast<int>(n));
  } catch (const std::overflow_error&) {
    throw FormatError("state dimension l^n overflows");
  }
  return QuditState(static_cast<int>(l), static_cast<int>(n), complex_list(field(doc, "amplitudes"), size, "amplitudes"));
}

std::vector<int> function_from_text(std::string_view text, int* l_out) {
  const json doc = parse(text);
  const long l = integer_field(doc, "l");
  const json& values = field(doc, "values");
  if (l < 2) throw FormatError("function table requires l >= 2");
  if (!values.is_array() || static_cast<long>(values.size()) != l) {
    throw FormatError("field 'values' must list exactly l integers");
  }
  std::vector<int> out;
  for (const auto& v : values) {
    if (!v.is_number_integer()) throw FormatError("function values must be integers");
    const long x = v.get<long>();
    if (x < 0 || x >= l) throw FormatError("function value out of range [0, l)");
    out.push_back(static_cast<int>(x));
  }
  if (l_out) *l_out = static_cast<int>(l);
  return out;
}

std::string function_to_text(std::span<const int> values) {
  std::string out = "{\"l\": " + std::to_string(values.size()) + ", \"values\": [";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(values[i]);
  }
  return out + "]}\n";
}

std::string generator_set_to_text(const GeneratorSet& set) {
  std::string out = "{\"name\": " + json(set.name).dump() + ", \"mode\": \"" + to_string(set.mode) +
                    "\", \"matrices\": [";
  for (std::size_t i = 0; i < set.matrices.size(); ++i) {
    if (i) out += ",\n  ";
    out += "{\"dim\": " + std::to_string(set.matrices[i].rows()) +
           ", \"entries\": " + row_major_list(set.matrices[i]) + "}";
  }
  return out + "]}\n";
}

GeneratorSet generator_set_from_text(std::string_view text) {
  const json doc = parse(text);
  GeneratorSet set;
  set.name = doc.value("name", std::string("input"));
  try {
    set.mode = field_mode_from_string(doc.value("mode", std::string("real-antihermitian")));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  const json& list = field(doc, "matrices");
  if (!list.is_array() || list.empty()) throw FormatError("field 'matrices' must be a non-empty list");
  for (const auto& m : list) set.matrices.push_back(matrix_from_json(m));
  set.dim = set.matrices.front().rows();
  for (const auto& m : set.matrices) {
    if (m.rows() != set.dim) throw FormatError("generator matrices differ in dimension");
  }
  return set;
}

std::string coefficients_to_text(const WeylCoefficients& c) {
  return "{\"l\": " + std::to_string(c.l) + ", \"coefficients\": " + row_major_list(c.table) + "}\n";
}

WeylCoefficients coefficients_from_text(std::string_view text) {
  const json doc = parse(text);
  const long l = integer_field(doc, "l");
  if (l < 2) throw FormatError("coefficients require l >= 2");
  const Vector flat = complex_list(field(doc, "coefficients"), l * l, "coefficients");
  WeylCoefficients c{static_cast<int>(l), Matrix(l, l)};
  for (Index a = 0; a < l; ++a) {
    for (Index b = 0; b < l; ++b) c.table(a, b) = flat(a * l + b);
  }
  return c;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << contents;
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace qudalg::io
