// Command-line front end: reads a matrix file, runs the modulus test with the
// translation fallback, optionally builds or re-checks a certificate, and
// renders text or JSON reports.
//
// Exit codes: 0 UECSM, 1 NOT_UECSM, 2 INAPPLICABLE, 3 parse/usage error,
// 4 internal numeric failure (eigensolver or certificate inconsistency).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "uecsm/uecsm.hpp"

namespace {

using nlohmann::json;
using namespace uecsm;

constexpr int kExitUecsm = 0;
constexpr int kExitNotUecsm = 1;
constexpr int kExitInapplicable = 2;
constexpr int kExitUsage = 3;
constexpr int kExitNumericFailure = 4;

int exit_code_for(Verdict v) {
  switch (v) {
    case Verdict::UECSM: return kExitUecsm;
    case Verdict::NOT_UECSM: return kExitNotUecsm;
    case Verdict::INAPPLICABLE: return kExitInapplicable;
  }
  return kExitNumericFailure;
}

struct Options {
  std::string input;
  std::string format = "text";
  std::string verify_path;
  double test_tol = Tolerances{}.test_tol;
  double gap_rel = Tolerances{}.gap_rel;
  std::size_t max_shifts = 16;
  std::size_t volterra_n = 6;

  Tolerances tolerances() const {
    Tolerances tol;
    tol.test_tol = test_tol;
    tol.gap_rel = gap_rel;
    try {
      tol.validate();
    } catch (const Error& e) {
      throw ParseError(e.what());  // a bad flag value is a usage problem
    }
    return tol;
  }
};

Matrix load_matrix(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  Matrix m = parse_matrix(text);
  if (!m.square()) throw ParseError("matrix must be square", 0, 0);
  return m;
}

// ---- JSON encoding: a complex number is [re, im], a matrix is rows of those.

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("expected a [re, im] pair in certificate JSON", 0, 0);
  return {j[0].get<double>(), j[1].get<double>()};
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("expected a matrix in certificate JSON", 0, 0);
  Matrix m(j.size(), j[0].size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!j[i].is_array() || j[i].size() != m.cols())
      throw ParseError("ragged matrix in certificate JSON", 0, 0);
    for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = complex_from_json(j[i][k]);
  }
  check_finite(m, "certificate JSON");
  return m;
}

json residuals_to_json(const CertificateResiduals& r) {
  return json{{"S_symmetric", r.s_symmetric}, {"S_unitary", r.s_unitary},
              {"alpha", r.alpha},             {"fixed", r.fixed_point},
              {"CTC", r.intertwining},        {"M_symmetric", r.m_symmetric},
              {"max", r.max()}};
}

json report_to_json(const TranslationResult& run, std::size_t n) {
  const ModulusReport& rep = run.report;
  json attempts = json::array();
  for (const ShiftAttempt& a : run.attempts)
    attempts.push_back(json{{"shift", to_json(a.shift)}, {"min_rel_gap", a.min_rel_gap}});
  json j{{"n", n},
         {"verdict", to_string(rep.verdict)},
         {"shift", to_json(run.shift)},
         {"min_rel_gap", rep.min_rel_gap},
         {"max_magnitude_residual", rep.max_magnitude_residual},
         {"max_cocycle_residual", rep.max_cocycle_residual},
         {"attempts", attempts}};
  j["worst_pair"] = rep.worst_pair ? json::array({rep.worst_pair->first, rep.worst_pair->second})
                                   : json(nullptr);
  j["worst_triple"] = rep.worst_triple ? json::array({(*rep.worst_triple)[0], (*rep.worst_triple)[1],
                                                      (*rep.worst_triple)[2]})
                                       : json(nullptr);
  return j;
}

// ---- text rendering: 6 significant digits for values, full scientific
// notation for residuals.

std::string fmt6(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

std::string fmt_residual(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.16e", x);
  return buf;
}

std::string fmt6(Complex z) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%.6g%+.6gi", z.real(), z.imag());
  return buf;
}

void print_matrix_text(std::ostream& out, const std::string& name, const Matrix& m) {
  out << name << ": " << m.rows() << "x" << m.cols() << "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << " ";
    for (std::size_t j = 0; j < m.cols(); ++j) out << " " << fmt6(m(i, j));
    out << "\n";
  }
}

void print_report_text(std::ostream& out, const TranslationResult& run, std::size_t n) {
  const ModulusReport& rep = run.report;
  out << "n: " << n << "\n";
  out << "verdict: " << to_string(rep.verdict) << "\n";
  out << "shift: " << fmt6(run.shift) << "\n";
  out << "min_rel_gap: " << fmt6(rep.min_rel_gap) << "\n";
  out << "max_magnitude_residual: " << fmt_residual(rep.max_magnitude_residual) << "\n";
  out << "max_cocycle_residual: " << fmt_residual(rep.max_cocycle_residual) << "\n";
  if (rep.worst_pair)
    out << "worst_pair: (" << rep.worst_pair->first << ", " << rep.worst_pair->second << ")\n";
  if (rep.worst_triple)
    out << "worst_triple: (" << (*rep.worst_triple)[0] << ", " << (*rep.worst_triple)[1] << ", "
        << (*rep.worst_triple)[2] << ")\n";
  out << "attempts:" << "\n";
  for (const ShiftAttempt& a : run.attempts)
    out << "  shift " << fmt6(a.shift) << "  min_rel_gap " << fmt6(a.min_rel_gap) << "\n";
}

void print_certificate_text(std::ostream& out, const Certificate& cert) {
  out << "alphas:";
  for (Complex a : cert.alphas) out << " " << fmt6(a);
  out << "\n";
  print_matrix_text(out, "S", cert.S);
  print_matrix_text(out, "Q", cert.Q);
  print_matrix_text(out, "M", cert.M);
  out << "residual_S_symmetric: " << fmt_residual(cert.residuals.s_symmetric) << "\n";
  out << "residual_S_unitary: " << fmt_residual(cert.residuals.s_unitary) << "\n";
  out << "residual_alpha: " << fmt_residual(cert.residuals.alpha) << "\n";
  out << "residual_fixed: " << fmt_residual(cert.residuals.fixed_point) << "\n";
  out << "residual_CTC: " << fmt_residual(cert.residuals.intertwining) << "\n";
  out << "residual_M_symmetric: " << fmt_residual(cert.residuals.m_symmetric) << "\n";
}

int run_test(const Options& opt) {
  const Tolerances tol = opt.tolerances();
  const Matrix t = load_matrix(opt.input);
  const TranslationResult run = translate_and_test(t, tol, opt.max_shifts);
  if (opt.format == "json") {
    json j = report_to_json(run, t.rows());
    j["command"] = "test";
    std::cout << j.dump(2) << "\n";
  } else {
    print_report_text(std::cout, run, t.rows());
  }
  return exit_code_for(run.report.verdict);
}

int run_verify(const Options& opt) {
  const Tolerances tol = opt.tolerances();
  const Matrix t = load_matrix(opt.input);

  std::ifstream in(opt.verify_path);
  if (!in) throw ParseError("cannot open '" + opt.verify_path + "'", 0, 0);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(std::string("certificate JSON: ") + e.what(), 0, 0);
  }
  if (!j.contains("alphas") || !j.contains("S") || !j.contains("Q") || !j.contains("M"))
    throw ParseError("certificate JSON must contain alphas, S, Q, M", 0, 0);

  Certificate cert;
  for (const json& a : j["alphas"]) cert.alphas.push_back(complex_from_json(a));
  cert.S = matrix_from_json(j["S"]);
  cert.Q = matrix_from_json(j["Q"]);
  cert.M = matrix_from_json(j["M"]);

  const double residual = verify_certificate(t, cert);
  const double threshold = 10.0 * tol.test_tol;
  const bool ok = residual <= threshold;
  if (opt.format == "json") {
    json out{{"command", "verify"},
             {"verdict", ok ? "UECSM" : "CERTIFICATE_INVALID"},
             {"max_residual", residual},
             {"threshold", threshold}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "verdict: " << (ok ? "UECSM" : "CERTIFICATE_INVALID") << "\n";
    std::cout << "max_residual: " << fmt_residual(residual) << "\n";
    std::cout << "threshold: " << fmt_residual(threshold) << "\n";
  }
  return ok ? kExitUecsm : kExitNumericFailure;
}

int run_certify(const Options& opt) {
  if (!opt.verify_path.empty()) return run_verify(opt);

  const Tolerances tol = opt.tolerances();
  const Matrix t = load_matrix(opt.input);
  const CertifiedRun run = certify_with_translation(t, tol, opt.max_shifts);
  if (opt.format == "json") {
    json j = report_to_json(run.translation, t.rows());
    j["command"] = "certify";
    if (run.certificate) {
      json alphas = json::array();
      for (Complex a : run.certificate->alphas) alphas.push_back(to_json(a));
      j["alphas"] = alphas;
      j["S"] = to_json(run.certificate->S);
      j["Q"] = to_json(run.certificate->Q);
      j["M"] = to_json(run.certificate->M);
      j["residuals"] = residuals_to_json(run.certificate->residuals);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    print_report_text(std::cout, run.translation, t.rows());
    if (run.certificate) print_certificate_text(std::cout, *run.certificate);
  }
  return exit_code_for(run.translation.report.verdict);
}

int run_volterra(const Options& opt) {
  const Tolerances tol = opt.tolerances();
  const std::size_t n = opt.volterra_n;
  if (n < 2) throw ParseError("volterra needs --n >= 2", 0, 0);

  const ModulusReport rep = volterra::modulus_check(n, tol);
  const PhaseVector alphas = volterra::alpha(n, tol);
  const Matrix fourier = volterra::fourier_matrix(n);

  if (opt.format == "json") {
    json eigenvalues = json::array();
    for (std::size_t k = 0; k < n; ++k) eigenvalues.push_back(volterra::eigenvalue(k));
    json alpha_json = json::array();
    for (Complex a : alphas) alpha_json.push_back(to_json(a));
    json j{{"command", "volterra"},
           {"n", n},
           {"verdict", to_string(rep.verdict)},
           {"min_rel_gap", rep.min_rel_gap},
           {"max_magnitude_residual", rep.max_magnitude_residual},
           {"max_cocycle_residual", rep.max_cocycle_residual},
           {"eigenvalues", eigenvalues},
           {"alphas", alpha_json},
           {"fourier_dim", 2 * n + 1},
           {"fourier_symmetry_residual", symmetry_residual(fourier)},
           {"fourier", to_json(fourier)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "n: " << n << "\n";
    std::cout << "verdict: " << to_string(rep.verdict) << "\n";
    std::cout << "min_rel_gap: " << fmt6(rep.min_rel_gap) << "\n";
    std::cout << "max_magnitude_residual: " << fmt_residual(rep.max_magnitude_residual) << "\n";
    std::cout << "max_cocycle_residual: " << fmt_residual(rep.max_cocycle_residual) << "\n";
    std::cout << "eigenvalues:";
    for (std::size_t k = 0; k < n; ++k) std::cout << " " << fmt6(volterra::eigenvalue(k));
    std::cout << "\nalphas:";
    for (Complex a : alphas) std::cout << " " << fmt6(a);
    std::cout << "\n";
    print_matrix_text(std::cout, "fourier", fourier);
    std::cout << "fourier_symmetry_residual: " << fmt_residual(symmetry_residual(fourier))
              << "\n";
  }
  return exit_code_for(rep.verdict);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decides whether a square complex matrix is unitarily equivalent to a complex\n"
               "symmetric matrix and can construct a verifiable certificate of the equivalence."};
  app.require_subcommand(1);

  Options opt;

  auto add_common = [&](CLI::App* cmd, bool with_input) {
    if (with_input)
      cmd->add_option("input", opt.input, "matrix file, or - for standard input")->required();
    cmd->add_option("--tol", opt.test_tol, "verdict threshold on the gram conditions");
    cmd->add_option("--gap", opt.gap_rel, "relative gap below which singular values repeat");
    cmd->add_option("--max-shifts", opt.max_shifts, "nonzero translation attempts");
    cmd->add_option("--format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* test_cmd = app.add_subcommand("test", "run the modulus test with translation fallback");
  add_common(test_cmd, true);

  CLI::App* certify_cmd =
      app.add_subcommand("certify", "additionally construct or re-check a certificate");
  add_common(certify_cmd, true);
  certify_cmd->add_option("--verify", opt.verify_path,
                          "re-check a previously emitted certificate JSON file");

  CLI::App* volterra_cmd =
      app.add_subcommand("volterra", "closed-form demonstration on the integration operator");
  add_common(volterra_cmd, false);
  volterra_cmd->add_option("--n", opt.volterra_n, "gram block size / half-width of the matrix");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (test_cmd->parsed()) return run_test(opt);
    if (certify_cmd->parsed()) return run_certify(opt);
    return run_volterra(opt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumericFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumericFailure;
  }
}
