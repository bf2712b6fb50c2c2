// Command-line front end: model selection, suite execution, table and report
// emission, convergence sweeps.
//
// Exit codes: 0 all checks pass, 1 at least one check failed, 2 invalid
// input.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "tbc/assembly.hpp"
#include "tbc/duality.hpp"
#include "tbc/harmonic.hpp"
#include "tbc/weitzenbock.hpp"

using namespace tbc;
using nlohmann::ordered_json;

namespace {

struct Options {
  std::string model = "carriere";
  int trace = 3;
  double c = 0.0;
  bool c_set = false;
  std::string p_file;
  int modes = 32;
  double tol_identity = 0.0;  // 0: representation default
  double tol_kernel = 1e-9;
  std::string flavor = "all";
  std::string format = "json";
  std::string out;
};

FourierScalar read_p_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidModel("cannot open p-file: " + path);
  std::vector<std::tuple<int, double, double>> triples;
  int k;
  double re, im;
  while (in >> k >> re >> im) triples.emplace_back(k, re, im);
  return FourierScalar::from_triples(triples);
}

ModelSpec model_from_json(const nlohmann::json& j);

ModelSpec suspension_from_json(const nlohmann::json& j) {
  double c = j.value("c", 0.0);
  FourierScalar p;
  if (j.contains("p")) {
    std::vector<std::tuple<int, double, double>> triples;
    for (const auto& t : j.at("p"))
      triples.emplace_back(t.at(0).get<int>(), t.at(1).get<double>(),
                           t.at(2).get<double>());
    p = FourierScalar::from_triples(triples);
  }
  return ModelSpec::suspension(c, p);
}

ModelSpec model_from_json(const nlohmann::json& j) {
  std::string variant = j.at("variant").get<std::string>();
  if (variant == "carriere") return ModelSpec::carriere(j.value("trace", 3));
  if (variant == "taut") return ModelSpec::taut();
  if (variant == "suspension") return suspension_from_json(j);
  if (variant == "product") {
    const auto& factors = j.at("factors");
    if (factors.size() < 2)
      throw InvalidModel("product: need at least two factors");
    ModelSpec m = model_from_json(factors[0]);
    for (size_t i = 1; i < factors.size(); ++i)
      m = ModelSpec::product(m, model_from_json(factors[i]));
    return m;
  }
  throw InvalidModel("unknown model variant: " + variant);
}

ModelSpec build_model(const Options& opt) {
  if (opt.model == "carriere") return ModelSpec::carriere(opt.trace);
  if (opt.model == "taut") return ModelSpec::taut();
  if (opt.model == "product-taut-taut")
    return ModelSpec::product(ModelSpec::taut(), ModelSpec::taut());
  if (opt.model == "suspension") {
    FourierScalar p;
    if (!opt.p_file.empty()) p = read_p_file(opt.p_file);
    return ModelSpec::suspension(opt.c_set ? opt.c : 0.0, p);
  }
  // Otherwise treat the selector as a config file path.
  std::ifstream in(opt.model);
  if (!in)
    throw InvalidModel("unknown model or unreadable file: " + opt.model);
  nlohmann::json j;
  in >> j;
  return model_from_json(j);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

std::vector<Flavor> flavors_of(const std::string& sel) {
  if (sel == "all") return {Flavor::B, Flavor::T, Flavor::kappa};
  Flavor f;
  if (!flavor_from_string(sel, f)) throw InvalidModel("unknown flavor: " + sel);
  return {f};
}

int run_table(const Options& opt) {
  BasicComplex ctx(build_model(opt), opt.modes);
  if (opt.tol_identity > 0) ctx.set_identity_tol(opt.tol_identity);
  bool ok = true;
  std::vector<CohomologyTable> tables;
  for (Flavor f : flavors_of(opt.flavor)) {
    tables.push_back(cohomology(ctx, f, opt.tol_kernel));
    if (tables.back().flavor == "kappa" && !tables.back().hodge_sum_ok)
      ok = false;
  }
  if (opt.format == "csv") {
    std::string out;
    for (size_t i = 0; i < tables.size(); ++i) {
      std::string csv = to_csv(tables[i]);
      if (i > 0) csv = csv.substr(csv.find('\n') + 1);  // drop repeated header
      out += csv;
    }
    emit(out, opt.out);
  } else {
    ordered_json j = ordered_json::array();
    for (const auto& t : tables) j.push_back(to_json(t));
    emit(j.dump(2) + "\n", opt.out);
  }
  return ok ? 0 : 1;
}

int run_report(const Options& opt, const CheckReport& rep) {
  if (opt.format == "csv")
    emit(to_csv(rep), opt.out);
  else
    emit(to_json(rep).dump(2) + "\n", opt.out);
  return rep.pass() ? 0 : 1;
}

CheckReport merged(const char* suite,
                   std::initializer_list<CheckReport> subs) {
  CheckReport rep;
  rep.suite = suite;
  bool first = true;
  for (const auto& sub : subs) {
    if (first) {
      rep.model_id = sub.model_id;
      rep.N = sub.N;
      rep.representation = sub.representation;
      first = false;
    }
    for (const auto& e : sub.entries) {
      rep.entries.push_back(e);
      if (sub.suite != suite)
        rep.entries.back().name = sub.suite + ": " + e.name;
    }
  }
  return rep;
}

int run_spectrum(const Options& opt, const std::string& op_name_str,
                 int degree, const std::string& bidegree, int count) {
  BasicComplex ctx(build_model(opt), opt.modes);
  Op op;
  if (!op_from_string(op_name_str, op))
    throw InvalidModel("unknown operator: " + op_name_str);
  if (!op_hermitian(op))
    throw InvalidModel("operator is not Hermitian: " + op_name_str);
  Slot slot = Slot::full();
  if (!bidegree.empty()) {
    int r, s;
    if (std::sscanf(bidegree.c_str(), "%d,%d", &r, &s) != 2)
      throw InvalidModel("bad bidegree (expected r,s): " + bidegree);
    slot = Slot::bidegree(r, s);
  } else if (degree >= 0) {
    slot = Slot::of_degree(degree);
  }
  auto eigs = spectrum(ctx, op, slot, count);
  if (opt.format == "csv") {
    std::string text = "model,modes,op,slot,index,eigenvalue\n";
    for (size_t i = 0; i < eigs.size(); ++i) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.12e", eigs[i]);
      text += ctx.model().id() + "," + std::to_string(opt.modes) + "," +
              op_name_str + "," + slot.str() + "," + std::to_string(i) + "," +
              buf + "\n";
    }
    emit(text, opt.out);
  } else {
    ordered_json j;
    j["report"] = "spectrum";
    j["model"] = ctx.model().id();
    j["modes"] = opt.modes;
    j["op"] = op_name_str;
    j["slot"] = slot.str();
    j["eigenvalues"] = eigs;
    emit(j.dump(2) + "\n", opt.out);
  }
  return 0;
}

int run_convergence(const Options& opt, std::vector<int> n_list) {
  if (n_list.empty()) throw InvalidModel("convergence: empty N list");
  for (size_t i = 1; i < n_list.size(); ++i)
    if (n_list[i] <= n_list[i - 1])
      throw InvalidModel("convergence: N list must be strictly ascending");
  ModelSpec model = build_model(opt);
  std::vector<ConvergenceRow> rows;
  std::vector<std::vector<int>> dim_signatures;
  for (int N : n_list) {
    BasicComplex ctx(model, N);
    if (opt.tol_identity > 0) ctx.set_identity_tol(opt.tol_identity);
    double residual_max = 0;
    for (const auto& e : identity_suite(ctx).entries)
      if (!std::isnan(e.residual))
        residual_max = std::max(residual_max, e.residual);
    std::vector<int> signature;
    for (Flavor f : flavors_of(opt.flavor)) {
      auto t = cohomology(ctx, f, opt.tol_kernel);
      double gap = std::isfinite(t.spectral_gap) ? t.spectral_gap : -1.0;
      for (int r = 0; r <= t.q; ++r) {
        rows.push_back(
            {t.model_id, N, t.flavor, r, -1, t.graded[r], gap, residual_max});
        signature.push_back(t.graded[r]);
      }
      for (int r = 0; r <= t.n; ++r)
        for (int s = 0; s <= t.n; ++s) {
          rows.push_back({t.model_id, N, t.flavor, r, s, t.bigraded[r][s],
                          gap, residual_max});
          signature.push_back(t.bigraded[r][s]);
        }
    }
    dim_signatures.push_back(std::move(signature));
  }
  // First N whose dimension signature persists through the end of the sweep.
  int stable_from = n_list.back();
  for (size_t i = 0; i < dim_signatures.size(); ++i) {
    bool stable = true;
    for (size_t j = i + 1; j < dim_signatures.size(); ++j)
      if (dim_signatures[j] != dim_signatures[i]) stable = false;
    if (stable) {
      stable_from = n_list[i];
      break;
    }
  }
  if (opt.format == "csv")
    emit(to_csv(rows), opt.out);
  else
    emit(to_json(rows, stable_from).dump(2) + "\n", opt.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Spectral calculus for twisted basic cohomology on model suspension "
      "flows"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* cmd, bool with_flavor = true) {
    cmd->add_option("--model", opt.model,
                    "carriere | taut | suspension | product-taut-taut | "
                    "path to a JSON model config");
    cmd->add_option("--trace", opt.trace, "trace of the holonomy matrix");
    cmd->add_option("--c", opt.c, "mean of h' for --model suspension")
        ->each([&](const std::string&) { opt.c_set = true; });
    cmd->add_option("--p-file", opt.p_file,
                    "text file of 'k re im' coefficient triples");
    cmd->add_option("--modes", opt.modes, "Fourier truncation order")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--tol-identity", opt.tol_identity,
                    "identity residual tolerance (default per "
                    "representation: 1e-10 exact, 1e-8 coupled)");
    cmd->add_option("--tol-kernel", opt.tol_kernel,
                    "relative kernel threshold (default 1e-9)")
        ->check(CLI::PositiveNumber);
    if (with_flavor)
      cmd->add_option("--flavor", opt.flavor, "B | T | kappa | all");
    cmd->add_option("--format", opt.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", opt.out, "output path (default stdout)");
  };

  auto* table = app.add_subcommand("table", "cohomology dimension tables");
  add_common(table);
  auto* identities =
      app.add_subcommand("identities", "operator identity residual suite");
  add_common(identities, false);
  auto* dualities =
      app.add_subcommand("dualities", "duality and decomposition checks");
  add_common(dualities, false);
  auto* weitzenbock = app.add_subcommand(
      "weitzenbock", "curvature decompositions and vanishing probe");
  add_common(weitzenbock, false);

  auto* spectrum_cmd =
      app.add_subcommand("spectrum", "lowest eigenvalues of an operator");
  add_common(spectrum_cmd, false);
  std::string spec_op = "Delta_kappa";
  int spec_degree = -1;
  std::string spec_bidegree;
  int spec_count = 8;
  spectrum_cmd->add_option("--op", spec_op, "operator name");
  spectrum_cmd->add_option("--degree", spec_degree, "restrict to a degree");
  spectrum_cmd->add_option("--bidegree", spec_bidegree,
                           "restrict to a bidegree r,s");
  spectrum_cmd->add_option("--count", spec_count, "number of eigenvalues");

  auto* convergence =
      app.add_subcommand("convergence", "dimension stability sweep over N");
  add_common(convergence);
  std::string n_list_str = "4,8,16,24,32";
  convergence->add_option("--n-list", n_list_str,
                          "ascending comma-separated truncation orders");

  auto* all = app.add_subcommand("all", "tables plus every check suite");
  add_common(all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (table->parsed()) return run_table(opt);
    if (identities->parsed()) {
      BasicComplex ctx(build_model(opt), opt.modes);
      if (opt.tol_identity > 0) ctx.set_identity_tol(opt.tol_identity);
      return run_report(opt, identity_suite(ctx));
    }
    if (dualities->parsed()) {
      BasicComplex ctx(build_model(opt), opt.modes);
      return run_report(opt, duality_suite(ctx, opt.tol_kernel));
    }
    if (weitzenbock->parsed()) {
      BasicComplex ctx(build_model(opt), opt.modes);
      if (opt.tol_identity > 0) ctx.set_identity_tol(opt.tol_identity);
      return run_report(
          opt, merged("weitzenbock", {weitzenbock_residuals(ctx),
                                      vanishing_probe(ctx, opt.tol_kernel)}));
    }
    if (spectrum_cmd->parsed())
      return run_spectrum(opt, spec_op, spec_degree, spec_bidegree,
                          spec_count);
    if (convergence->parsed()) {
      std::vector<int> n_list;
      std::stringstream ss(n_list_str);
      std::string tok;
      while (std::getline(ss, tok, ',')) n_list.push_back(std::stoi(tok));
      return run_convergence(opt, n_list);
    }
    if (all->parsed()) {
      BasicComplex ctx(build_model(opt), opt.modes);
      if (opt.tol_identity > 0) ctx.set_identity_tol(opt.tol_identity);
      ordered_json j = ordered_json::array();
      bool ok = true;
      std::string csv_text;
      for (Flavor f : flavors_of(opt.flavor)) {
        auto t = cohomology(ctx, f, opt.tol_kernel);
        if (t.flavor == "kappa" && !t.hodge_sum_ok) ok = false;
        j.push_back(to_json(t));
        csv_text += to_csv(t);
      }
      for (const CheckReport& rep :
           {identity_suite(ctx), duality_suite(ctx, opt.tol_kernel),
            merged("weitzenbock", {weitzenbock_residuals(ctx),
                                   vanishing_probe(ctx, opt.tol_kernel)}),
            hodge_decomposition_check(ctx, Flavor::kappa, opt.tol_kernel)}) {
        ok = ok && rep.pass();
        j.push_back(to_json(rep));
        csv_text += to_csv(rep);
      }
      if (opt.format == "csv")
        emit(csv_text, opt.out);
      else
        emit(j.dump(2) + "\n", opt.out);
      return ok ? 0 : 1;
    }
  } catch (const InvalidModel& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
