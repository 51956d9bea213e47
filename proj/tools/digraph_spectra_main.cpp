// digraph-spectra: spectra of digraph matrices, digraph products, and a
// verification harness comparing closed-form predictions against the
// eigensolver.
//
// Exit codes: 0 ok/skip, 2 parse error, 3 hypothesis or connectivity error,
// 4 eigensolver non-convergence, 5 verification mismatch.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "digspec/dsrg.hpp"
#include "digspec/eigen.hpp"
#include "digspec/io.hpp"
#include "digspec/products.hpp"
#include "digspec/verify.hpp"

using json = nlohmann::ordered_json;
using namespace digspec;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitHypothesis = 3;
constexpr int kExitNumerics = 4;
constexpr int kExitMismatch = 5;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::ParseError:
    case Errc::InvalidArgument:
      return kExitParse;
    case Errc::NoConvergence:
      return kExitNumerics;
    default:
      return kExitHypothesis;
  }
}

json spectrum_json(const Spectrum& s) { return json::parse(spectrum_to_json(s)); }

double default_tolerance(double fallback) {
  if (const char* env = std::getenv("DIGRAPH_SPECTRA_TOL")) {
    try {
      return std::stod(env);
    } catch (...) {
      fail(Errc::ParseError, "DIGRAPH_SPECTRA_TOL is not a number");
    }
  }
  return fallback;
}

int cmd_spectrum(const std::string& path, const std::string& kind_name, double tol, const std::string& format) {
  Digraph g = read_digraph_file(path);
  MatrixKind kind = matrix_kind_from_name(kind_name);
  EigenOptions opts;
  opts.cluster_tol_factor = tol;
  Matrix m = digraph_matrix(g, kind);
  Spectrum s = eigenvalues(m, opts);
  if (format == "csv") {
    std::cout << spectrum_to_csv(s);
  } else {
    json out;
    out["matrix"] = kind_name;
    out["order"] = g.order();
    out["tolerance"] = tol;
    out["source"] = "eigensolver";
    out["spectrum"] = spectrum_json(s);
    std::cout << out.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_product(const std::string& path_g, const std::string& path_h, const std::string& kind_name,
                const std::string& out_path) {
  Digraph g = read_digraph_file(path_g);
  Digraph h = read_digraph_file(path_h);
  ProductKind kind = product_kind_from_name(kind_name);
  Digraph p = product(g, h, kind);
  std::string header = std::string(product_kind_name(kind)) + " product of " + std::to_string(g.order()) +
                       "-vertex and " + std::to_string(h.order()) +
                       "-vertex digraphs\nvertex map: (x, x') -> x*" + std::to_string(h.order()) + " + x'";
  write_digraph_file(out_path, p, header);
  std::cout << "wrote " << out_path << " (" << p.order() << " vertices, " << p.arc_count() << " arcs)\n";
  return kExitOk;
}

int cmd_verify(const std::string& theorem, const std::vector<std::string>& inputs, double tol, int power) {
  TheoremArity arity = theorem_arity(theorem);
  if (static_cast<int>(inputs.size()) != arity.digraphs + arity.matrices)
    fail(Errc::InvalidArgument, "theorem '" + theorem + "' takes " + std::to_string(arity.digraphs) +
                                    " digraph file(s) and " + std::to_string(arity.matrices) +
                                    " matrix file(s)");
  VerifyInputs in;
  in.tol = tol;
  in.power = power;
  for (int i = 0; i < arity.digraphs; ++i) in.digraphs.push_back(read_digraph_file(inputs[i]));
  for (int i = 0; i < arity.matrices; ++i) in.matrices.push_back(read_matrix_file(inputs[arity.digraphs + i]));

  VerifyResult r = verify_theorem(theorem, in);
  json out;
  out["theorem"] = r.theorem;
  out["verdict"] = r.verdict == VerifyResult::Verdict::Pass   ? "PASS"
                   : r.verdict == VerifyResult::Verdict::Fail ? "FAIL"
                                                              : "SKIP";
  out["tolerance"] = r.tolerance;
  out["worst_deviation"] = r.worst_deviation;
  out["max_residual"] = r.max_residual;
  if (!r.detail.empty()) out["detail"] = r.detail;
  if (!r.gmults.empty()) {
    json table = json::array();
    for (const auto& chk : r.gmults) {
      json e;
      e["re"] = chk.z.real();
      e["im"] = chk.z.imag();
      if (chk.gap_too_small) {
        e["skipped"] = "eigenvalue gap below 1e-3";
      } else {
        e["predicted"] = chk.predicted;
        e["numeric"] = chk.numeric;
      }
      table.push_back(std::move(e));
    }
    out["gmult"] = std::move(table);
  }
  if (!r.notes.empty()) out["notes"] = r.notes;
  std::cout << out.dump(2) << "\n";
  return r.verdict == VerifyResult::Verdict::Fail ? kExitMismatch : kExitOk;
}

int cmd_dsrg(long long n, long long k, long long s, long long a, long long c, bool use_paley, long long paley_p,
             bool use_figure2, int power, double tol, const std::string& format) {
  Digraph g = Digraph::from_arc_list(1, {});
  DsrgParams params;
  if (use_figure2) {
    g = figure2_dsrg();
    params = DsrgParams{8, 4, 3, 1, 3};
  } else if (use_paley) {
    g = paley_tournament(paley_p);
    auto inferred = infer_dsrg_params(g);
    if (!inferred) fail(Errc::HypothesisViolated, "paley tournament failed the DSRG identity");
    params = *inferred;
  } else {
    params = DsrgParams{n, k, s, a, c};
    g = Digraph::from_arc_list(static_cast<int>(params.n), {});
  }

  bool have_digraph = use_figure2 || use_paley;
  bool valid = have_digraph && validate_dsrg(g, params);
  DuvalSpectrum duval = duval_spectrum(params);

  json out;
  out["params"] = {{"n", params.n}, {"k", params.k}, {"s", params.s}, {"a", params.a}, {"c", params.c}};
  out["valid"] = have_digraph ? json(valid) : json("unchecked");
  {
    json dv;
    dv["theta"] = json::array({params.k, json::array({duval.theta2.real(), duval.theta2.imag()}),
                               json::array({duval.theta3.real(), duval.theta3.imag()})});
    dv["mult"] = json::array({1, duval.mult2.str(), duval.mult3.str()});
    out["duval"] = std::move(dv);
  }
  out["nonreal"] = nonreal_classification(params) == RealityClass::NonReal ? "NONREAL" : "ALL_RATIONAL";
  if (duval.mults_integral()) {
    out["spec_A"] = spectrum_json(duval.to_spectrum());
    out["spec_D"] = spectrum_json(dsrg_derived_spectrum(params, DsrgMatrix::D));
    out["spec_DL"] = spectrum_json(dsrg_derived_spectrum(params, DsrgMatrix::DL));
    out["spec_DQ"] = spectrum_json(dsrg_derived_spectrum(params, DsrgMatrix::DQ));
  }
  if (power > 1) {
    Spectrum d = dsrg_derived_spectrum(params, DsrgMatrix::D);
    // shape {t, partial2^m, 0^(n-1-m)}
    double t = 2.0 * params.n - 2.0 - params.k;
    Complex partial2{};
    long long m = 0;
    for (const auto& it : d.items) {
      if (std::abs(it.value - Complex(t, 0.0)) <= 1e-9 * (1 + t) && it.multiplicity == 1) continue;
      if (std::abs(it.value) <= 1e-9 * (1 + t)) continue;
      partial2 = it.value;
      m = it.multiplicity;
    }
    json pw;
    pw["ell"] = power;
    pw["spectrum"] = spectrum_json(cartesian_power_spectrum(t, partial2, m, params.n, power));
    out["power"] = std::move(pw);
  }
  if (have_digraph && valid) {
    EigenOptions opts;
    Spectrum oracle = eigenvalues(digraph_matrix(g, MatrixKind::A), opts);
    MatchReport rep = spectrum_match(duval.to_spectrum(), oracle, tol);
    out["oracle_match"] = rep.ok;
  }
  if (format == "csv" && duval.mults_integral()) {
    std::cout << spectrum_to_csv(dsrg_derived_spectrum(params, DsrgMatrix::D));
  } else {
    std::cout << out.dump(2) << "\n";
  }
  if (have_digraph && !valid) return kExitHypothesis;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectra of digraph products and their closed-form verification"};
  app.require_subcommand(1);

  std::string path, path2, kind = "A", out_path, format = "json", theorem;
  std::vector<std::string> inputs;
  double tol_spectrum = 1e-8;
  double tol_verify = 1e-7;
  int power = 1;
  long long pn = 0, pk = 0, ps = 0, pa = 0, pc = 0, paley_p = 0;

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of a digraph matrix");
  spectrum->add_option("file", path, "digraph file")->required();
  spectrum->add_option("--matrix", kind, "A|L|Q|D|DL|DQ")->required();
  spectrum->add_option("--tol", tol_spectrum, "relative clustering tolerance");
  spectrum->add_option("--format", format, "json|csv");

  auto* productc = app.add_subcommand("product", "build a digraph product");
  productc->add_option("fileG", path, "first factor")->required();
  productc->add_option("fileH", path2, "second factor")->required();
  std::string prod_kind;
  productc->add_option("--kind", prod_kind, "cartesian|lexicographic|direct|strong")->required();
  productc->add_option("--out", out_path, "output digraph file")->required();

  auto* verify = app.add_subcommand("verify", "closed-form prediction vs brute-force oracle");
  verify->add_option("--theorem", theorem, "theorem name (see --list)")->required();
  verify->add_option("inputs", inputs, "digraph / matrix files");
  verify->add_option("--tol", tol_verify, "match tolerance");
  verify->add_option("--power", power, "cartesian power (cartesian-power only)")->default_val(2);

  auto* list = app.add_subcommand("list-theorems", "print verify theorem names");

  auto* dsrg = app.add_subcommand("dsrg", "directed strongly regular graph report");
  auto* popt = dsrg->add_option("--params", "n k s a c");
  popt->expected(5);
  dsrg->add_option("--paley", paley_p, "Paley tournament order (prime, 3 mod 4)");
  auto* fig2 = dsrg->add_flag("--figure2", "the 8-vertex (8,4,3,1,3) fixture");
  dsrg->add_option("--power", power, "also report the Cartesian power family");
  dsrg->add_option("--tol", tol_verify, "oracle match tolerance");
  dsrg->add_option("--format", format, "json|csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParse;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(path, kind, default_tolerance(tol_spectrum), format);
    if (productc->parsed()) return cmd_product(path, path2, prod_kind, out_path);
    if (verify->parsed()) return cmd_verify(theorem, inputs, default_tolerance(tol_verify), power);
    if (list->parsed()) {
      for (const auto& name : verify_theorem_names()) std::cout << name << "\n";
      return kExitOk;
    }
    if (dsrg->parsed()) {
      if (*popt) {
        auto vals = popt->results();
        pn = std::stoll(vals[0]);
        pk = std::stoll(vals[1]);
        ps = std::stoll(vals[2]);
        pa = std::stoll(vals[3]);
        pc = std::stoll(vals[4]);
      } else if (paley_p == 0 && !*fig2) {
        fail(Errc::InvalidArgument, "dsrg needs --params, --paley or --figure2");
      }
      return cmd_dsrg(pn, pk, ps, pa, pc, paley_p != 0, paley_p, static_cast<bool>(*fig2), power,
                      default_tolerance(tol_verify), format);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
