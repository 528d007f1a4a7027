#include "qudalg/cli.hpp"

#include "qudalg/circuit.hpp"
#include "qudalg/clifford.hpp"
#include "qudalg/io.hpp"
#include "qudalg/universality.hpp"
#include "qudalg/weyl.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <limits>
#include <ostream>
#include <random>

namespace qudalg::cli {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Complex random_in_unit_disc(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double r = std::sqrt(unit(rng));
  return std::polar(r, 2.0 * kPi * unit(rng));
}

std::mt19937_64 seeded(int l, int n, int salt) {
  return std::mt19937_64(0x5eedULL + 1000003ULL * static_cast<unsigned>(l) + 7919ULL * static_cast<unsigned>(n) +
                         static_cast<unsigned>(salt));
}

double order_residual(std::span<const Matrix> gens, int l) {
  double worst = 0.0;
  for (const auto& g : gens) {
    worst = std::max(worst, max_abs_diff(matrix_power(g, l), Matrix::Identity(g.rows(), g.cols())));
  }
  return worst;
}

// max over i < j of |g_i g_j - zeta g_j g_i|
double zeta_commutation_residual(std::span<const Matrix> gens, int l) {
  const RootOfUnity root(l);
  double worst = 0.0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      worst = std::max(worst, max_abs_diff(gens[i] * gens[j], root.zeta * (gens[j] * gens[i])));
    }
  }
  return worst;
}

double multi_fermat_residual(std::span<const Matrix> gens, int l, std::mt19937_64& rng, int trials) {
  double worst = 0.0;
  const Index d = gens.front().rows();
  for (int t = 0; t < trials; ++t) {
    Matrix sum = Matrix::Zero(d, d);
    Complex powers = 0.0;
    for (const auto& g : gens) {
      const Complex a = random_in_unit_disc(rng);
      sum += a * g;
      powers += std::pow(a, l);
    }
    worst = std::max(worst, max_abs_diff(matrix_power(sum, l), powers * Matrix::Identity(d, d)));
  }
  return worst;
}

double form_residual(const std::function<CommutationMatrix()>& extract, const CommutationMatrix& expected) {
  try {
    const CommutationMatrix c = extract();
    return static_cast<double>((c - expected).cwiseAbs().maxCoeff());
  } catch (const NoMatchingPower&) {
    return kInf;
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw CLI::ValidationError("integer list", "'" + text + "' is not a comma-separated integer list");
    }
    if (used != item.size()) {
      throw CLI::ValidationError("integer list", "'" + text + "' is not a comma-separated integer list");
    }
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

double default_tolerance(const RunConfig& cfg, double fallback) {
  if (cfg.tolerance) return *cfg.tolerance;
  if (const char* env = std::getenv(kToleranceEnv)) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument(std::string(kToleranceEnv) + " must be a positive number");
    }
    return v;
  }
  return fallback;
}

int require_l(const RunConfig& cfg) {
  if (!cfg.l) throw std::invalid_argument("--dim is required");
  return *cfg.l;
}

int require_n(const RunConfig& cfg) { return cfg.n.value_or(1); }

// ---- generate ----------------------------------------------------------------

std::vector<Matrix> named_matrices(const RunConfig& cfg) {
  const int l = require_l(cfg);
  const int n = require_n(cfg);
  const std::string& name = cfg.set_name;
  if (name == "weyl-pair") return {shift_matrix(l), clock_matrix(l)};
  if (name == "qft") return {qft_matrix(l, cfg.normalized)};
  if (name == "tau") {
    auto t = tau_matrices(l);
    return {t.tau1, t.tau2, t.tau3};
  }
  return generator_set(name, l, n);
}

int cmd_generate(const RunConfig& cfg, std::ostream& out) {
  if (cfg.set_name.empty()) throw std::invalid_argument("generate: --set is required");
  const auto matrices = named_matrices(cfg);
  if (cfg.output_path.empty()) {
    for (const auto& m : matrices) out << io::matrix_to_text(m);
    return kExitOk;
  }
  const std::filesystem::path dir(cfg.output_path);
  std::filesystem::create_directories(dir);
  out << "set: " << cfg.set_name << "\n";
  out << "count: " << matrices.size() << "\n";
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    const auto file = dir / fmt::format("{}-{}.json", cfg.set_name, i);
    io::write_file(file, io::matrix_to_text(matrices[i]));
    out << fmt::format("{}\tdim={}\n", file.string(), matrices[i].rows());
  }
  return kExitOk;
}

// ---- verify ------------------------------------------------------------------

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const double tol = default_tolerance(cfg, 1e-10);
  const std::vector<int> ls = cfg.l ? std::vector<int>{*cfg.l} : std::vector<int>{2, 3, 4, 5};
  const std::vector<int> ns = cfg.n ? std::vector<int>{*cfg.n} : std::vector<int>{1, 2};
  for (int l : ls) {
    if (l < 2) throw std::invalid_argument("--dim must be >= 2");
  }
  for (int n : ns) {
    if (n < 1) throw std::invalid_argument("--sites must be >= 1");
  }
  const VerifyReport report = verify(ls, ns, tol);
  const std::string text = render(report, cfg.format);
  if (cfg.output_path.empty()) {
    out << text;
  } else {
    io::write_file(cfg.output_path, text);
    out << (report.pass ? "pass\n" : "fail\n");
  }
  return report.pass ? kExitOk : kExitFailed;
}

// ---- closure -----------------------------------------------------------------

std::string render_closure(const GeneratorSet& set, const ClosureResult& r, OutputFormat format) {
  if (format == OutputFormat::tabular) {
    return fmt::format("{:<20} {:<20} {:>6} {:>10} {:>10} {:>9} {:>6} {}\n", "name", "mode", "dim", "achieved",
                       "target", "universal", "rounds", "tolerance") +
           fmt::format("{:<20} {:<20} {:>6} {:>10} {:>10} {:>9} {:>6} {}\n", set.name, to_string(set.mode), set.dim,
                       r.achieved_dim, r.target_dim, r.universal ? "true" : "false", r.rounds,
                       io::format_real(r.tolerance_used));
  }
  return fmt::format(
      "{{\"name\": {}, \"mode\": \"{}\", \"dim\": {}, \"achieved_dim\": {}, \"target_dim\": {}, "
      "\"universal\": {}, \"rounds\": {}, \"tolerance\": {}}}\n",
      nlohmann::json(set.name).dump(), to_string(set.mode), set.dim, r.achieved_dim, r.target_dim,
      r.universal ? "true" : "false", r.rounds, io::format_real(r.tolerance_used));
}

int cmd_closure(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const double tol = default_tolerance(cfg, 1e-9);
  GeneratorSet set;
  if (!cfg.input_path.empty()) {
    const GeneratorSet raw = io::generator_set_from_text(io::read_file(cfg.input_path));
    set = make_generator_set(raw.name, raw.matrices, raw.mode);
  } else {
    if (cfg.set_name.empty()) throw std::invalid_argument("closure: --set or --input is required");
    const auto mats = generator_set(cfg.set_name, require_l(cfg), require_n(cfg));
    set = make_generator_set(cfg.set_name, mats, field_mode_from_string(cfg.mode));
  }
  if (set.matrices.empty()) throw std::invalid_argument("closure: generator set reduces to zero");
  if (set.dim > 32 && !cfg.allow_large) {
    throw std::invalid_argument(fmt::format("closure: dimension {} exceeds 32; pass --allow-large", set.dim));
  }

  ClosureResult result;
  try {
    result = closure(set, {cfg.max_rounds, tol});
  } catch (const NonConvergence& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  }

  const std::string text = render_closure(set, result, cfg.format);
  if (cfg.output_path.empty()) {
    out << text;
  } else {
    io::write_file(cfg.output_path, text);
  }
  if (!cfg.basis_out.empty()) {
    io::write_file(cfg.basis_out, io::generator_set_to_text({set.name + "-basis", set.dim, result.basis, set.mode}));
  }
  if (cfg.expect_universal && !result.universal) {
    err << fmt::format("expected a universal set: achieved {} of {}\n", result.achieved_dim, result.target_dim);
    return kExitFailed;
  }
  return kExitOk;
}

// ---- decompose ---------------------------------------------------------------

int cmd_decompose(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.input_path.empty()) throw std::invalid_argument("decompose: --input is required");
  const Matrix m = io::matrix_from_text(io::read_file(cfg.input_path));
  const int l = cfg.l.value_or(static_cast<int>(m.rows()));
  const WeylCoefficients c = weyl_decompose(m, l);
  const double residual = max_abs_diff(weyl_reconstruct(c), m);
  const std::string line = "reconstruction_residual: " + io::format_real(residual) + "\n";
  if (cfg.output_path.empty()) {
    out << io::coefficients_to_text(c);
    err << line;
  } else {
    io::write_file(cfg.output_path, io::coefficients_to_text(c));
    out << line;
  }
  return kExitOk;
}

// ---- qft ---------------------------------------------------------------------

int cmd_qft(const RunConfig& cfg, std::ostream& out) {
  const std::string text = io::matrix_to_text(qft_matrix(require_l(cfg), cfg.normalized));
  if (cfg.output_path.empty()) {
    out << text;
  } else {
    io::write_file(cfg.output_path, text);
  }
  return kExitOk;
}

// ---- apply -------------------------------------------------------------------

int cmd_apply(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::optional<QuditState> state;
  if (!cfg.input_path.empty()) {
    state = io::state_from_text(io::read_file(cfg.input_path));
  } else if (!cfg.basis_digits.empty()) {
    const int l = require_l(cfg);
    state = basis_state(l, cfg.n.value_or(static_cast<int>(cfg.basis_digits.size())), cfg.basis_digits);
  } else {
    throw std::invalid_argument("apply: --input or --basis is required");
  }

  Matrix gate;
  if (!cfg.gate_path.empty()) {
    gate = io::matrix_from_text(io::read_file(cfg.gate_path));
  } else if (cfg.set_name == "qft") {
    gate = qft_matrix(state->l(), cfg.normalized);
  } else if (cfg.set_name == "shift") {
    gate = shift_matrix(state->l());
  } else if (cfg.set_name == "clock") {
    gate = clock_matrix(state->l());
  } else {
    throw std::invalid_argument("apply: --gate or --set qft|shift|clock is required");
  }

  std::vector<int> sites = cfg.targets;
  if (sites.empty()) {
    if (gate.rows() != state->size()) {
      throw std::invalid_argument("apply: --targets is required unless the gate spans every site");
    }
    for (int s = 1; s <= state->n(); ++s) sites.push_back(s);
  }
  const QuditState result = apply_kgate({state->l(), gate, sites}, *state);

  const std::string norms =
      "norm_before: " + io::format_real(state->norm()) + "\nnorm_after: " + io::format_real(result.norm()) + "\n";
  if (cfg.output_path.empty()) {
    out << io::state_to_text(result);
    err << norms;
  } else {
    io::write_file(cfg.output_path, io::state_to_text(result));
    out << norms;
  }
  return kExitOk;
}

}  // namespace

VerifyReport verify(const std::vector<int>& ls, const std::vector<int>& ns, double tolerance) {
  VerifyReport report;
  auto add = [&](std::string name, std::string identity, int l, int n, double residual) {
    const bool pass = residual <= tolerance;
    report.checks.push_back({std::move(name), std::move(identity), l, n, residual, pass});
    report.pass = report.pass && pass;
  };

  for (int l : ls) {
    const Matrix u = shift_matrix(l);
    const Matrix v = clock_matrix(l);
    const Matrix id = Matrix::Identity(l, l);
    add("weyl-commutation", "U V = zeta V U, U^l = V^l = 1", l, 1,
        std::max({weyl_commutation_check(l), max_abs_diff(matrix_power(u, l), id),
                  max_abs_diff(matrix_power(v, l), id)}));

    const auto tau = tau_matrices(l);
    const std::vector<Matrix> taus{tau.tau1, tau.tau2, tau.tau3};
    add("tau-commutation", "tau_i tau_j = zeta tau_j tau_i (i < j), tau_j^l = 1", l, 1,
        std::max(zeta_commutation_residual(taus, l), order_residual(taus, l)));

    auto rng = seeded(l, 0, 1);
    double fermat = 0.0;
    for (int t = 0; t < 20; ++t) {
      const Complex a = random_in_unit_disc(rng);
      const Complex b = random_in_unit_disc(rng);
      fermat = std::max(fermat, fermat_operator_check(l, a, b));
    }
    add("operator-fermat", "(a V + b U)^l = a^l + b^l", l, 1, fermat);

    double scalar = 0.0;
    auto note_scalar = [&](Complex a, Complex b) {
      const auto r = scalar_factorization_check(l, a, b);
      scalar = std::max({scalar, r.nu, r.odd.value_or(0.0)});
    };
    note_scalar(2.0, 1.0);
    note_scalar(1.0, 1.0);
    note_scalar(1.0, 0.0);
    for (int t = 0; t < 20; ++t) note_scalar(random_in_unit_disc(rng), random_in_unit_disc(rng));
    add("scalar-factorization", "a^l + b^l = prod_k (a + zeta^k b) (odd l) = prod_k (a - nu^(2k+1) b)", l, 1,
        scalar);

    for (int n : ns) {
      const auto gen = generalized_generators(l, n);
      add("zeta-commutation", "f_i f_j = zeta f_j f_i (i < j), f_i^l = 1", l, n,
          std::max(zeta_commutation_residual(gen.matrices, l), order_residual(gen.matrices, l)));

      auto frng = seeded(l, n, 2);
      add("multi-term-fermat", "(sum_i a_i f_i)^l = sum_i a_i^l", l, n,
          multi_fermat_residual(gen.matrices, l, frng, 5));

      add("commutation-form-generalized", "c_ij = +1 for i < j (Clifford-type form)", l, n,
          form_residual([&] { return commutation_matrix(gen); }, clifford_form(2 * n)));
      add("commutation-form-canonical", "c = block-diagonal [[0, 1], [-1, 0]] (canonical form)", l, n,
          form_residual([&] { return commutation_matrix(canonical_generators(l, n)); }, canonical_form(2 * n)));

      if (l == 2) {
        const auto e = clifford_generators(n);
        double worst = 0.0;
        const Matrix eye = Matrix::Identity(e.dim(), e.dim());
        for (std::size_t i = 0; i < e.matrices.size(); ++i) {
          for (std::size_t j = 0; j < e.matrices.size(); ++j) {
            const Matrix anti = e.matrices[i] * e.matrices[j] + e.matrices[j] * e.matrices[i];
            worst = std::max(worst, max_abs_diff(anti, (i == j ? 2.0 : 0.0) * eye));
          }
        }
        add("clifford-anticommutation", "e_i e_j + e_j e_i = 2 delta_ij", l, n, worst);
      }
    }
  }
  return report;
}

std::string render(const VerifyReport& report, OutputFormat format) {
  std::string out;
  if (format == OutputFormat::tabular) {
    out += fmt::format("{:<30} {:>3} {:>3} {:>24} {:<5} {}\n", "check", "l", "n", "max_residual", "pass", "identity");
    for (const auto& c : report.checks) {
      out += fmt::format("{:<30} {:>3} {:>3} {:>24} {:<5} {}\n", c.name, c.l, c.n, io::format_real(c.max_residual),
                         c.pass ? "true" : "false", c.identity);
    }
    out += fmt::format("overall: {}\n", report.pass ? "pass" : "fail");
    return out;
  }
  out += fmt::format("{{\"pass\": {}, \"checks\": [\n", report.pass ? "true" : "false");
  for (std::size_t i = 0; i < report.checks.size(); ++i) {
    const auto& c = report.checks[i];
    // infinity is not valid JSON, so residuals are strings
    out += fmt::format("  {{\"name\": \"{}\", \"identity\": {}, \"l\": {}, \"n\": {}, \"max_residual\": \"{}\", "
                       "\"pass\": {}}}{}\n",
                       c.name, nlohmann::json(c.identity).dump(), c.l, c.n, io::format_real(c.max_residual),
                       c.pass ? "true" : "false", i + 1 < report.checks.size() ? "," : "");
  }
  out += "]}\n";
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Qudit operator algebra: Weyl and Clifford generators, identity checks, Lie closure, circuits",
               "qudalg"};
  app.require_subcommand(1);
  app.fallthrough();

  int l = 0;
  int n = 0;
  double tolerance = 0.0;
  std::string format = "structured-text";
  std::string targets;
  std::string basis;
  auto* dim_opt = app.add_option("--dim", l, "Levels per site (l >= 2)")->check(CLI::Range(2, 1 << 20));
  auto* sites_opt = app.add_option("--sites", n, "Number of sites (n >= 1)")->check(CLI::Range(1, 64));
  app.add_option("--set", cfg.set_name, "Named matrix or generator set");
  auto* tol_opt = app.add_option("--tolerance", tolerance, "Residual / acceptance tolerance")
                      ->check(CLI::PositiveNumber);
  app.add_option("--input", cfg.input_path, "Input file");
  app.add_option("--output", cfg.output_path, "Output file (directory for generate)");
  app.add_flag("--normalized", cfg.normalized, "Scale the Fourier matrix by 1/sqrt(l)");
  app.add_flag("--expect-universal", cfg.expect_universal, "closure: exit 1 unless universal");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"structured-text", "tabular"}));
  app.add_option("--mode", cfg.mode, "closure: field mode")
      ->check(CLI::IsMember({"real-antihermitian", "complex-traceless", "real", "complex"}));
  app.add_option("--max-rounds", cfg.max_rounds, "closure: round cap")->check(CLI::PositiveNumber);
  app.add_flag("--allow-large", cfg.allow_large, "closure: permit dimensions above 32");
  app.add_option("--basis-out", cfg.basis_out, "closure: write the basis to this file");
  app.add_option("--gate", cfg.gate_path, "apply: gate matrix file");
  app.add_option("--targets", targets, "apply: comma-separated 1-based sites");
  app.add_option("--basis", basis, "apply: comma-separated digits of a computational basis state");

  app.add_subcommand("generate", "Write a named matrix family");
  app.add_subcommand("verify", "Run the identity suites");
  app.add_subcommand("closure", "Lie-algebra closure of a generator set");
  app.add_subcommand("decompose", "Expand a matrix in the U^a V^b basis");
  app.add_subcommand("qft", "Write the discrete Fourier matrix");
  app.add_subcommand("apply", "Apply a gate to a state");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (!targets.empty()) cfg.targets = parse_int_list(targets);
    if (!basis.empty()) cfg.basis_digits = parse_int_list(basis);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (dim_opt->count()) cfg.l = l;
  if (sites_opt->count()) cfg.n = n;
  if (tol_opt->count()) cfg.tolerance = tolerance;
  cfg.format = format == "tabular" ? OutputFormat::tabular : OutputFormat::structured;
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    if (cfg.command == "generate") return cmd_generate(cfg, out);
    if (cfg.command == "verify") return cmd_verify(cfg, out);
    if (cfg.command == "closure") return cmd_closure(cfg, out, err);
    if (cfg.command == "decompose") return cmd_decompose(cfg, out, err);
    if (cfg.command == "qft") return cmd_qft(cfg, out);
    if (cfg.command == "apply") return cmd_apply(cfg, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qudalg::cli
