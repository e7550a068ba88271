// Command-line front end: nilpotent certificates, Jacobian checks,
// realizations, minimality reports, N-J verification and parameter sweeps.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sap/charpoly.hpp"
#include "sap/errors.hpp"
#include "sap/io.hpp"
#include "sap/jacobian.hpp"
#include "sap/minimality.hpp"
#include "sap/nilpotent.hpp"
#include "sap/realize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCertification = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

int exit_code_for(sap::ErrorKind k) {
  using sap::ErrorKind;
  switch (k) {
    case ErrorKind::InvalidInput: return kExitUsage;
    case ErrorKind::DimensionError:
    case ErrorKind::SizeLimitExceeded:
    case ErrorKind::UnsupportedParams:
    case ErrorKind::ParseError: return kExitData;
    case ErrorKind::ConvergenceError:
    case ErrorKind::NoPositiveRoot:
    case ErrorKind::PreconditionViolated:
    case ErrorKind::CertificationFailed:
    case ErrorKind::RealizationFailed: return kExitCertification;
  }
  return kExitData;
}

struct Globals {
  std::string format;  // empty: the command's default
  std::uint64_t seed = 1;
  std::string precision = "double";

  sap::OutputFormat output(sap::OutputFormat fallback) const {
    return format.empty() ? fallback : sap::parse_output_format(format);
  }
  sap::Precision prec() const { return precision == "extended" ? sap::Precision::Extended : sap::Precision::Double; }
};

void emit(const sap::json& j, const Globals& g) { std::cout << sap::render(j, g.output(sap::OutputFormat::Json)); }

std::vector<sap::ExtraEntry> parse_extras(const std::vector<std::string>& specs) {
  std::vector<sap::ExtraEntry> out;
  for (const std::string& s : specs) {
    const std::size_t c1 = s.find(','), c2 = s.rfind(',');
    if (c1 == std::string::npos || c1 == c2 || c2 + 2 != s.size())
      throw sap::Error(sap::ErrorKind::InvalidInput, "extra entry must look like i,j,+ or i,j,-: '" + s + "'");
    const auto pos = sap::parse_positions(s.substr(0, c2));
    out.push_back({pos.at(0), sap::sign_from_char(s.back())});
  }
  return out;
}

int cmd_nilpotent(int n, int r, const Globals& g) {
  const auto cert = sap::nilpotent_realization(sap::KnrParams::make(n, r), g.prec());
  emit(sap::to_json(cert), g);
  return kExitOk;
}

int cmd_jacobian(int n, int r, const Globals& g) {
  const auto p = sap::KnrParams::make(n, r);
  if (p.r >= p.n) throw sap::Error(sap::ErrorKind::UnsupportedParams, "the Jacobian construction needs r < n");
  const auto cert = sap::nilpotent_realization(p, g.prec());
  const auto rep = sap::jacobian_det(cert.realization());
  emit(sap::to_json(rep), g);
  return rep.positive && rep.blocks_agree ? kExitOk : kExitCertification;
}

int cmd_realize(int n, int r, const std::string& monic, const std::string& eigs, const std::vector<std::string>& extra,
                const Globals& g) {
  const auto p = sap::KnrParams::make(n, r);
  sap::CoeffVector target;
  if (!monic.empty()) {
    target = sap::monic_to_coeffs(sap::parse_number_list(monic));
  } else {
    const sap::SpectrumList roots = sap::parse_complex_list(eigs);
    double scale = 1.0;
    for (const auto& z : roots) scale = std::max(scale, std::abs(z));
    if (!sap::is_self_conjugate(roots, 1e-12 * scale))
      throw sap::Error(sap::ErrorKind::ParseError, "eigenvalues are not closed under conjugation");
    target = sap::coeffs_from_spectrum(roots);
  }
  if (target.size() != static_cast<std::size_t>(n))
    throw sap::Error(sap::ErrorKind::DimensionError,
                     "expected " + std::to_string(n) + " coefficients, got " + std::to_string(target.size()));
  const auto extras = parse_extras(extra);
  const auto res = extras.empty() ? sap::realize(p, target) : sap::realize_superpattern(p, extras, target, g.prec());
  emit(sap::to_json(res, target), g);
  return kExitOk;
}

int cmd_msap(std::optional<int> n, std::optional<int> r, const std::string& pattern_file, int samples, const Globals& g) {
  if (!pattern_file.empty()) {
    const auto s = sap::parse_pattern(sap::read_text_file(pattern_file), pattern_file);
    const auto scan = sap::scan_minimality(s, g.seed, samples);
    emit(sap::to_json(scan), g);
    return scan.verdict ? kExitOk : kExitCertification;
  }
  if (!n || !r) throw sap::Error(sap::ErrorKind::InvalidInput, "msap needs --n and --r, or --pattern");
  const auto rep = sap::verify_msap(sap::KnrParams::make(*n, *r), g.seed, samples);
  emit(sap::to_json(rep), g);
  return rep.verdict ? kExitOk : kExitCertification;
}

int cmd_njverify(const std::string& pattern_file, const std::string& matrix_file, const std::string& positions,
                 const Globals& g) {
  const auto s = sap::parse_pattern(sap::read_text_file(pattern_file), pattern_file);
  const auto m = sap::parse_matrix(sap::read_text_file(matrix_file), matrix_file);
  const auto pos = sap::parse_positions(positions);
  const auto cert = sap::nj_verify(s, m, pos, g.prec());
  emit(sap::to_json(cert), g);
  return cert.conclusion == sap::NJConclusion::SapCertified ? kExitOk : kExitCertification;
}

int cmd_sweep(int n_max, int samples, const Globals& g) {
  if (n_max < 3) throw sap::Error(sap::ErrorKind::InvalidInput, "--n-max must be at least 3");
  std::vector<sap::json> rows;
  bool all_ok = true;
  for (int n = 3; n <= n_max; ++n) {
    for (int r = 2; r < n; ++r) {
      const auto p = sap::KnrParams::make(n, r);
      const auto cert = sap::nilpotent_realization(p, g.prec());
      const auto jac = sap::jacobian_det(cert.realization());
      const auto msap = sap::verify_msap(p, g.seed, samples);
      sap::json row;
      row["n"] = n;
      row["r"] = r;
      row["t_h"] = cert.t_h;
      row["nilpotent_residual"] = cert.residual;
      row["chain_verified"] = cert.chain_verified;
      row["positivity_certified"] = cert.positivity_certified;
      row["det_lu"] = jac.det_lu;
      row["det_blocks"] = jac.det_blocks;
      row["jacobian_positive"] = jac.positive;
      row["blocks_agree"] = jac.blocks_agree;
      row["msap_verdict"] = msap.verdict;
      all_ok = all_ok && cert.chain_verified && cert.positivity_certified && jac.positive && jac.blocks_agree &&
               msap.verdict;
      rows.push_back(std::move(row));
    }
  }
  switch (g.output(sap::OutputFormat::Csv)) {
    case sap::OutputFormat::Json: std::cout << sap::dump_json(sap::json(rows)); break;
    case sap::OutputFormat::Csv: std::cout << sap::render_csv_table(rows); break;
    case sap::OutputFormat::Text:
      for (const auto& row : rows) std::cout << sap::render(row, sap::OutputFormat::Text) << "\n";
      break;
  }
  return all_ok ? kExitOk : kExitCertification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certificates for the K_{n,r} spectrally arbitrary sign patterns"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", g.seed, "Seed for sampling checks");
  app.add_option("--precision", g.precision, "Arithmetic for floating-point stages")
      ->check(CLI::IsMember({"double", "extended"}));

  int n = 0, r = 0, n_max = 12, samples = sap::kDefaultSamples;
  std::string monic, eigs, pattern_file, matrix_file, positions;
  std::vector<std::string> extra;

  auto add_nr = [&](CLI::App* sub) {
    sub->add_option("--n", n, "Order of the pattern")->required();
    sub->add_option("--r", r, "Cycle length through the (n,n-r+1) entry")->required();
  };
  auto* nil = app.add_subcommand("nilpotent", "Certified nilpotent realization of K_{n,r}");
  add_nr(nil);
  auto* jac = app.add_subcommand("jacobian", "Jacobian determinant at the nilpotent realization");
  add_nr(jac);
  auto* rea = app.add_subcommand("realize", "Matrix in Q(K_{n,r}) with a prescribed characteristic polynomial");
  add_nr(rea);
  auto* o_monic = rea->add_option("--monic", monic, "c_1,...,c_n of x^n + c_1 x^{n-1} + ... + c_n");
  auto* o_eigs = rea->add_option("--eigs", eigs, "Eigenvalues, e.g. 1+2i,1-2i,-1");
  o_monic->excludes(o_eigs);
  rea->add_option("--extra", extra, "Extra entry i,j,sign of a superpattern (repeatable)");
  auto* ms = app.add_subcommand("msap", "Obstructions for every one-entry deletion");
  auto* o_n = ms->add_option("--n", n, "Order of the pattern");
  auto* o_r = ms->add_option("--r", r, "Cycle length");
  auto* o_pat = ms->add_option("--pattern", pattern_file, "Scan an arbitrary .sgn pattern instead");
  o_n->excludes(o_pat);
  o_r->excludes(o_pat);
  ms->add_option("--samples", samples, "Random draws per sampling check");
  auto* nj = app.add_subcommand("njverify", "Nilpotent-Jacobian check for a pattern and nilpotent matrix");
  nj->add_option("--pattern", pattern_file, ".sgn file")->required();
  nj->add_option("--matrix", matrix_file, ".mat file")->required();
  nj->add_option("--positions", positions, "1-based i1,j1,i2,j2,... of the n varied entries")->required();
  auto* sw = app.add_subcommand("sweep", "nilpotent + jacobian + msap for all 2 <= r < n <= n_max");
  sw->add_option("--n-max", n_max, "Largest order");
  sw->add_option("--samples", samples, "Random draws per sampling check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*nil) return cmd_nilpotent(n, r, g);
    if (*jac) return cmd_jacobian(n, r, g);
    if (*rea) {
      if (monic.empty() && eigs.empty()) throw sap::Error(sap::ErrorKind::InvalidInput, "realize needs --monic or --eigs");
      return cmd_realize(n, r, monic, eigs, extra, g);
    }
    if (*ms) {
      return cmd_msap(o_n->count() ? std::optional<int>(n) : std::nullopt,
                      o_r->count() ? std::optional<int>(r) : std::nullopt, pattern_file, samples, g);
    }
    if (*nj) return cmd_njverify(pattern_file, matrix_file, positions, g);
    if (*sw) return cmd_sweep(n_max, samples, g);
  } catch (const sap::Error& e) {
    std::cerr << "sapcert: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kExitUsage;
}
