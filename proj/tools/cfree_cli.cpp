#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "cfree/cumulants.hpp"
#include "cfree/io.hpp"
#include "cfree/meixner.hpp"
#include "cfree/transforms.hpp"
#include "cfree/verify.hpp"

namespace {

using namespace cfree;

int max_truncation() {
  if (const char* env = std::getenv("CFREE_MAX_N")) {
    int value = std::atoi(env);
    if (value > 0) return value;
  }
  return 10;
}

void check_truncation(int n) {
  if (n > max_truncation())
    throw CLI::ValidationError(
        "N", "truncation degree exceeds CFREE_MAX_N (" +
                 std::to_string(max_truncation()) + ")");
}

Functional load_functional(const std::string& path) {
  StateDocument doc = load_state_document(path);
  check_truncation(doc.truncation);
  return functional_from_document(doc);
}

void emit(const nlohmann::json& j, const std::string& output) {
  if (output.empty())
    std::cout << j.dump(2) << "\n";
  else
    save_json(j, output);
}

std::vector<Rat> parse_rational_list(const std::string& text) {
  std::vector<Rat> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    out.push_back(rat_from_string(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "cfree: exact computation with joint distributions of non-commuting "
      "variables: cumulants, convolutions, composed-state maps, free "
      "Meixner machinery and operator-model verification"};
  app.require_subcommand(1);

  // ---- cumulants ----
  std::string cum_input, cum_psi, cum_output, cum_kind = "free";
  auto* cum = app.add_subcommand(
      "cumulants", "Convert a functional document to a cumulant series");
  cum->add_option("-i,--input", cum_input, "functional document (JSON)")
      ->required();
  cum->add_option("--kind", cum_kind, "boolean | free | two-state")
      ->check(CLI::IsMember({"boolean", "free", "two-state"}));
  cum->add_option("--psi", cum_psi, "second functional (two-state only)");
  cum->add_option("-o,--output", cum_output, "output path (default stdout)");
  cum->callback([&] {
    Functional f = load_functional(cum_input);
    NcSeries series(f.alphabet(), f.truncation());
    if (cum_kind == "boolean") {
      series = boolean_from_moments(f).series;
    } else if (cum_kind == "free") {
      series = free_from_moments(f).series;
    } else {
      if (cum_psi.empty())
        throw CLI::ValidationError("--psi",
                                   "two-state cumulants need a second state");
      series = two_state_from_pair(f, load_functional(cum_psi)).series;
    }
    emit(to_json(document_from_series(series, cum_kind + "-cumulants")),
         cum_output);
  });

  // ---- map ----
  std::string map_input, map_psi, map_rho, map_output, map_name;
  std::string map_a = "0", map_t = "1";
  auto* map_cmd =
      app.add_subcommand("map", "Apply a transformation to a functional");
  map_cmd
      ->add_option("--map", map_name,
                   "phi | b | fermi | boolean-power | free-power | "
                   "delta-shift")
      ->required()
      ->check(CLI::IsMember({"phi", "b", "fermi", "boolean-power",
                             "free-power", "delta-shift"}));
  map_cmd->add_option("-i,--input", map_input, "functional document (JSON)");
  map_cmd->add_option("--rho", map_rho, "first argument for phi");
  map_cmd->add_option("--psi", map_psi, "second argument for phi");
  map_cmd->add_option("--a", map_a, "shift vector, comma-separated rationals");
  map_cmd->add_option("--t", map_t, "rational time parameter");
  map_cmd->add_option("-o,--output", map_output, "output path");
  map_cmd->callback([&] {
    auto input = [&] {
      if (map_input.empty())
        throw CLI::ValidationError("--input", "this map needs an input");
      return load_functional(map_input);
    };
    Functional result = [&]() -> Functional {
      if (map_name == "phi") {
        Functional rho = map_rho.empty() ? input() : load_functional(map_rho);
        if (map_psi.empty())
          throw CLI::ValidationError("--psi", "phi needs a second argument");
        return phi_map(rho, load_functional(map_psi));
      }
      Functional f = input();
      if (map_name == "b") {
        Rat t = rat_from_string(map_t);
        if (t == -1)
          throw CLI::ValidationError("--t",
                                     "t = -1 is rejected; use --map phi with "
                                     "a point mass as the second argument");
        std::vector<Rat> a = parse_rational_list(map_a);
        if (static_cast<int>(a.size()) == 1 && f.alphabet() > 1)
          a.assign(f.alphabet(), a.front());
        return b_map(f, a, t);
      }
      if (map_name == "fermi") return fermi_image(f);
      if (map_name == "boolean-power")
        return boolean_power(f, rat_from_string(map_t));
      if (map_name == "free-power")
        return free_power(f, rat_from_string(map_t));
      // delta-shift: translate by the point mass at a
      std::vector<Rat> a = parse_rational_list(map_a);
      if (static_cast<int>(a.size()) == 1 && f.alphabet() > 1)
        a.assign(f.alphabet(), a.front());
      return free_convolve(f, delta_state(a, f.truncation()));
    }();
    emit(to_json(document_from_functional(result, map_name + "-image")),
         map_output);
  });

  // ---- verify ----
  std::string ver_suite = "all", ver_output;
  VerifyConfig config;
  bool exact_flag = false, float_flag = false;
  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("--suite", ver_suite, "suite name")
      ->check(CLI::IsMember(suite_names()));
  ver->add_option("--d", config.d, "number of variables");
  ver->add_option("--N", config.truncation, "truncation degree");
  ver->add_option("--trials", config.trials, "trial count");
  ver->add_option("--seed", config.seed, "base seed");
  ver->add_option("--tolerance", config.tolerance,
                  "float tolerance for operator checks");
  ver->add_flag("--exact", exact_flag, "exact mode for the fock suite");
  ver->add_flag("--float", float_flag, "float mode for the fock suite");
  ver->add_option("-o,--output", ver_output, "report path");
  ver->callback([&] {
    check_truncation(config.truncation);
    config.exact_fock = exact_flag && !float_flag;
    ReportDocument report = run_suite(ver_suite, config);
    emit(to_json(report), ver_output);
    int pass = 0, fail = 0;
    for (const auto& r : report.records)
      (r.verdict == "pass" ? pass : fail)++;
    std::cerr << report.suite << ": " << pass << " passed, " << fail
              << " failed\n";
    if (!report.all_pass()) std::exit(1);
  });

  // ---- jacobi ----
  std::string jac_input, jac_output;
  std::vector<std::string> jac_meixner, jac_shift;
  int jac_levels = 0, jac_n = 10;
  auto* jac = app.add_subcommand(
      "jacobi", "Orthogonal-polynomial recursion coefficients");
  jac->add_option("-i,--input", jac_input, "functional document (JSON)");
  jac->add_option("--meixner", jac_meixner,
                  "parameters b c of the free Meixner functional")
      ->expected(2);
  jac->add_option("--shift", jac_shift,
                  "alpha t: apply the Boolean head shift, emit the shifted "
                  "moments as well")
      ->expected(2);
  jac->add_option("--levels", jac_levels, "recursion levels (default N/2)");
  jac->add_option("--N", jac_n, "truncation degree for --meixner input");
  jac->add_option("-o,--output", jac_output, "output path");
  jac->callback([&] {
    check_truncation(jac_n);
    Functional f = [&]() -> Functional {
      if (!jac_meixner.empty())
        return meixner_functional(rat_from_string(jac_meixner[0]),
                                  rat_from_string(jac_meixner[1]), jac_n);
      if (jac_input.empty())
        throw CLI::ValidationError("--input",
                                   "need a document or --meixner b c");
      return load_functional(jac_input);
    }();
    const int levels = jac_levels > 0 ? jac_levels : f.truncation() / 2;
    JacobiParams params = jacobi_from_moments(f, levels);
    nlohmann::json j;
    nlohmann::json beta = nlohmann::json::array();
    for (const auto& x : params.beta) beta.push_back(rat_to_string(x));
    nlohmann::json gamma = nlohmann::json::array();
    for (const auto& x : params.gamma) gamma.push_back(rat_to_string(x));
    j["beta"] = std::move(beta);
    j["gamma"] = std::move(gamma);
    if (!jac_shift.empty()) {
      JacobiParams shifted = boolean_shift_jacobi(
          params, rat_from_string(jac_shift[0]), rat_from_string(jac_shift[1]));
      nlohmann::json sb = nlohmann::json::array();
      for (const auto& x : shifted.beta) sb.push_back(rat_to_string(x));
      nlohmann::json sg = nlohmann::json::array();
      for (const auto& x : shifted.gamma) sg.push_back(rat_to_string(x));
      j["shifted_beta"] = std::move(sb);
      j["shifted_gamma"] = std::move(sg);
      j["shifted_moments"] = to_json(document_from_functional(
          moments_from_jacobi(shifted, f.truncation()), "shifted"));
    }
    emit(j, jac_output);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit clean, bad config is 2
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
