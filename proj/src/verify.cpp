#include "cfree/verify.hpp"

#include <chrono>
#include <stdexcept>

#include "cfree/oracles.hpp"
#include "cfree/random.hpp"
#include "cfree/transforms.hpp"

namespace cfree {

namespace {

using Clock = std::chrono::steady_clock;

class Recorder {
 public:
  Recorder(ReportDocument& report, std::string id, std::string anchor,
           nlohmann::json params, uint64_t seed)
      : report_(report), start_(Clock::now()) {
    record_.id = std::move(id);
    record_.anchor = std::move(anchor);
    record_.params = std::move(params);
    record_.seed = seed;
  }

  void pass() { finish("pass"); }
  void fail(nlohmann::json witness) {
    record_.witness = std::move(witness);
    finish("fail");
  }
  void residual(double value) {
    record_.has_residual = true;
    record_.residual = value;
  }

 private:
  void finish(const char* verdict) {
    record_.verdict = verdict;
    record_.wall_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start_)
            .count();
    report_.records.push_back(std::move(record_));
  }

  ReportDocument& report_;
  CheckRecord record_;
  Clock::time_point start_;
};

nlohmann::json word_witness(const NcSeries& diff) {
  if (diff.is_zero()) return nullptr;
  const auto& [w, c] = *diff.terms().begin();
  return {{"word", w.letters()}, {"difference", rat_to_string(c)}};
}

void check_equal(Recorder&& rec, const Functional& a, const Functional& b) {
  NcSeries diff = a.moments() - b.moments();
  if (diff.is_zero())
    rec.pass();
  else
    rec.fail(word_witness(diff));
}

Rat pick_time(RatRng& rng) {
  // small rational times, never -1
  static const int nums[] = {1, 2, -2, 3, 1, -1, 2};
  static const int dens[] = {1, 1, 3, 2, 2, 2, 5};
  int k = rng.uniform_int(0, 6);
  Rat t(nums[k], dens[k]);
  t.canonicalize();
  return t;
}

void semigroup_suite(ReportDocument& report, const VerifyConfig& cfg) {
  for (int trial = 0; trial < cfg.trials; ++trial) {
    RatRng rng(cfg.seed + trial);
    Functional rho = random_functional(rng, cfg.d, cfg.truncation);
    auto a = random_point(rng, cfg.d);
    auto b = random_point(rng, cfg.d);
    Rat t = pick_time(rng);
    Rat s = pick_time(rng);
    if (Rat(1) + t + s == 0) s += 1;
    std::vector<Rat> ab(a);
    for (int i = 0; i < cfg.d; ++i) ab[i] += b[i];
    check_equal(
        Recorder(report, "semigroup/" + std::to_string(trial),
                 "B_{a,t} o B_{b,s} = B_{a+b,t+s}",
                 {{"t", rat_to_string(t)}, {"s", rat_to_string(s)}},
                 cfg.seed + trial),
        b_map(b_map(rho, b, s), a, t), b_map(rho, ab, t + s));

    // Boolean cumulants of the image against the direct partition sum.
    Functional image = b_map(rho, a, t);
    NcSeries eta = boolean_from_moments(image).series;
    bool oracle_ok = true;
    Word bad;
    for (int deg = 2; deg <= std::min(cfg.truncation, 5); ++deg) {
      for (Word w : words_of_degree(cfg.d, deg)) {
        if (eta.coeff(w) != b_t_eta_oracle(rho, a, t, w)) {
          oracle_ok = false;
          bad = w;
          break;
        }
      }
      if (!oracle_ok) break;
    }
    Recorder rec(report, "semigroup/eta-oracle/" + std::to_string(trial),
                 "eta of B_{a,t} image = endpoint-partition sum",
                 {{"t", rat_to_string(t)}}, cfg.seed + trial);
    if (oracle_ok)
      rec.pass();
    else
      rec.fail({{"word", bad.letters()}});
  }
}

void evolution_suite(ReportDocument& report, const VerifyConfig& cfg) {
  for (int trial = 0; trial < cfg.trials; ++trial) {
    RatRng rng(cfg.seed + trial);
    Functional sigma = random_functional(rng, cfg.d, cfg.truncation);
    Functional rho = bercovici_pata(sigma);
    Functional psi = random_functional(rng, cfg.d, cfg.truncation);
    std::vector<Rat> a = random_point(rng, cfg.d);
    Rat t = pick_time(rng);
    auto ev = evolution_check(rho, psi, a, t);
    Recorder rec(report, "evolution/" + std::to_string(trial),
                 "Phi[rho, psi boxplus rho_t boxplus delta_a] = "
                 "B_{a,t}[Phi[rho, psi]] and first-argument scaling",
                 {{"t", rat_to_string(t)}}, cfg.seed + trial);
    if (ev.ok())
      rec.pass();
    else
      rec.fail(word_witness(ev.evolution_diff.is_zero() ? ev.first_arg_diff
                                                        : ev.evolution_diff));
  }
}

void meixner_suite(ReportDocument& report, const VerifyConfig& cfg) {
  const int n = std::max(cfg.truncation, 8);
  for (int trial = 0; trial < cfg.trials; ++trial) {
    RatRng rng(cfg.seed + trial);
    Rat b = rng.coefficient();
    Rat c = rng.coefficient();
    Rat alpha = rng.coefficient();
    Rat t = pick_time(rng);
    if (Rat(1) + c + t == 0) t += 1;

    check_equal(Recorder(report, "meixner/orbit/" + std::to_string(trial),
                         "B_{alpha,t} maps mu_{b,c} to mu_{b+alpha,c+t}",
                         {{"b", rat_to_string(b)},
                          {"c", rat_to_string(c)},
                          {"alpha", rat_to_string(alpha)},
                          {"t", rat_to_string(t)}},
                         cfg.seed + trial),
                b_map(meixner_functional(b, c, n), {alpha}, t),
                meixner_functional(b + alpha, c + t, n));

    if (Rat(2) + c != 0) {
      check_equal(
          Recorder(report, "meixner/bernoulli/" + std::to_string(trial),
                   "mu_{b,c} = B_{b,1+c} applied to the symmetric Bernoulli",
                   {{"b", rat_to_string(b)}, {"c", rat_to_string(c)}},
                   cfg.seed + trial),
          b_map(meixner_functional(0, -1, n), {b}, Rat(1) + c),
          meixner_functional(b, c, n));
    }

    // Jacobi head shift against the series-level Boolean dressing.
    JacobiParams params;
    const int levels = n / 2 + 1;
    for (int k = 0; k < levels; ++k) params.beta.push_back(rng.coefficient());
    for (int k = 0; k + 1 < levels; ++k)
      params.gamma.push_back(rng.positive());
    Functional f = moments_from_jacobi(params, n);
    Rat tt = rng.positive();
    check_equal(
        Recorder(report, "meixner/jacobi-shift/" + std::to_string(trial),
                 "head shift of Jacobi parameters = delta_alpha uplus "
                 "mu^{uplus t}",
                 {{"alpha", rat_to_string(alpha)}, {"t", rat_to_string(tt)}},
                 cfg.seed + trial),
        moments_from_jacobi(boolean_shift_jacobi(params, alpha, tt), n),
        boolean_convolve(delta_state({alpha}, n), boolean_power(f, tt)));

    // Quadratic recursion residuals vanish exactly on the family.
    if (Rat(1) + c != 0) {
      auto pde = meixner_pde_check(meixner_functional(b, c, n), b, c);
      Recorder rec(report, "meixner/pde/" + std::to_string(trial),
                   "quadratic recursion residuals vanish on mu_{b,c}",
                   {{"b", rat_to_string(b)}, {"c", rat_to_string(c)}},
                   cfg.seed + trial);
      if (pde.ok())
        rec.pass();
      else
        rec.fail({{"degree", *pde.first_failing_degree()}});
    }
  }
}

void fock_suite(ReportDocument& report, const VerifyConfig& cfg) {
  struct Config {
    int d, dim_k, dim_h, degree, depth;
  };
  const Config configs[] = {{1, 1, 1, 6, 7}, {1, 2, 2, 5, 6}, {2, 2, 1, 5, 6}};
  for (int trial = 0; trial < std::min(cfg.trials, 3); ++trial) {
    const auto& c = configs[trial % 3];
    RatRng rng(cfg.seed + trial);
    auto psi_data = random_state_data(rng, c.d, c.dim_k);
    auto mu_data = random_free_data(rng, c.d, c.dim_h);
    auto result = evolution_operator_check(psi_data, mu_data, c.degree,
                                           c.depth);
    Recorder rec(report, "fock/evolution-operators/" + std::to_string(trial),
                 "operator replay: full-Fock image vs two-level model over "
                 "the convolved state, both against the series pipeline",
                 {{"d", c.d},
                  {"dim_K", c.dim_k},
                  {"dim_H", c.dim_h},
                  {"N", c.degree},
                  {"L", c.depth}},
                 cfg.seed + trial);
    rec.residual(
        std::max(result.side_difference, result.series_difference));
    if (result.ok(cfg.tolerance))
      rec.pass();
    else
      rec.fail({{"side_difference", result.side_difference},
                {"series_difference", result.series_difference}});
  }
  for (int trial = 0; trial < cfg.trials; ++trial) {
    RatRng rng(cfg.seed + 100 + trial);
    const int dim = 2;
    auto free_data = random_free_data(rng, cfg.d, dim);
    const int degree = std::min(cfg.truncation, 5);
    if (cfg.exact_fock) {
      FullFockModel<Rat> model(free_data, degree);
      auto table = model.vacuum_moments(degree);
      Functional expect = moments_from_free(CumulantSeries(
          CumulantKind::kFree,
          free_cumulant_series_from_data(free_data, degree)));
      bool ok = true;
      Word bad;
      for (const auto& [w, value] : table)
        if (value != expect.moment(w)) {
          ok = false;
          bad = w;
          break;
        }
      Recorder rec(report, "fock/full-exact/" + std::to_string(trial),
                   "full-Fock vacuum moments = free-cumulant series, exact",
                   {{"dim", dim}, {"N", degree}}, cfg.seed + 100 + trial);
      if (ok)
        rec.pass();
      else
        rec.fail({{"word", bad.letters()}});
    } else {
      FullFockModel<double> model(to_double(free_data), degree);
      auto table = model.vacuum_moments(degree);
      Functional expect = moments_from_free(CumulantSeries(
          CumulantKind::kFree,
          free_cumulant_series_from_data(free_data, degree)));
      double worst = 0;
      for (const auto& [w, value] : table)
        worst = std::max(worst,
                         std::abs(value - rat_to_double(expect.moment(w))));
      Recorder rec(report, "fock/full-float/" + std::to_string(trial),
                   "full-Fock vacuum moments = free-cumulant series",
                   {{"dim", dim}, {"N", degree}}, cfg.seed + 100 + trial);
      rec.residual(worst);
      if (worst < cfg.tolerance)
        rec.pass();
      else
        rec.fail({{"max_difference", worst}});
    }
  }
}

void positivity_suite(ReportDocument& report, const VerifyConfig& cfg) {
  for (int trial = 0; trial < cfg.trials; ++trial) {
    RatRng rng(cfg.seed + trial);
    auto psi_data = random_state_data(rng, cfg.d, 2);
    auto mu_data = random_free_data(rng, cfg.d, 2);
    auto tensor = tensor_eta_model(to_double(psi_data), to_double(mu_data));
    const int level = std::max(cfg.truncation / 2, 1);
    auto verdict = eta_conditional_psd(tensor, level, cfg.tolerance);
    Recorder rec(report, "positivity/eta-gram/" + std::to_string(trial),
                 "composed cumulant functional is conditionally PSD",
                 {{"level", level}}, cfg.seed + trial);
    rec.residual(verdict.min_eigenvalue);
    if (verdict.psd)
      rec.pass();
    else
      rec.fail({{"min_eigenvalue", verdict.min_eigenvalue}});

    // Composed functional of two single-variable states stays a state.
    const int n = std::max(cfg.truncation, 6);
    Functional sigma = random_jacobi_state(rng, n);
    Functional psi = random_jacobi_state(rng, n);
    Functional rho = bercovici_pata(sigma);
    Functional phi = phi_map(rho, psi);
    auto psd = psd_check(phi, 3, cfg.tolerance);
    Recorder rec2(report, "positivity/phi-map/" + std::to_string(trial),
                  "phi_map of an infinitely divisible state is PSD",
                  {{"level", 3}}, cfg.seed + trial);
    rec2.residual(psd.min_eigenvalue);
    if (psd.psd)
      rec2.pass();
    else
      rec2.fail({{"min_eigenvalue", psd.min_eigenvalue}});
  }
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"semigroup", "evolution", "meixner", "fock", "positivity", "all"};
}

ReportDocument run_suite(const std::string& name, const VerifyConfig& config) {
  ReportDocument report;
  report.suite = name;
  if (name == "semigroup") {
    semigroup_suite(report, config);
  } else if (name == "evolution") {
    evolution_suite(report, config);
  } else if (name == "meixner") {
    meixner_suite(report, config);
  } else if (name == "fock") {
    fock_suite(report, config);
  } else if (name == "positivity") {
    positivity_suite(report, config);
  } else if (name == "all") {
    semigroup_suite(report, config);
    evolution_suite(report, config);
    meixner_suite(report, config);
    fock_suite(report, config);
    positivity_suite(report, config);
  } else {
    throw std::invalid_argument("unknown suite: " + name);
  }
  return report;
}

}  // namespace cfree
