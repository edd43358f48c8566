// Acceptance suite: one check per line, exact identities verified in exact
// rational arithmetic, operator checks against stated float tolerances.
// Exit code 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cfree/fock.hpp"
#include "cfree/oracles.hpp"
#include "cfree/partition.hpp"
#include "cfree/random.hpp"
#include "cfree/transforms.hpp"

using namespace cfree;

namespace {

Rat q(long num, long den = 1) {
  Rat out(num, den);
  out.canonicalize();
  return out;
}

long catalan(int n) {
  long c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

struct Criterion {
  int number;
  std::string label;
  std::function<bool(std::string&)> run;
};

Functional origin(int d, int n) { return Functional(NcSeries::one(d, n)); }

bool criterion_cumulant_dual_path(std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  for (int trial = 0; trial < 50; ++trial) {
    RatRng rng(1000 + trial);
    const int d = 1 + trial % 3;
    Functional phi = random_functional(rng, d, 6);
    Functional psi = random_functional(rng, d, 6);
    if (!(boolean_from_moments(phi).series == oracles::boolean_cumulants(phi)))
      return false;
    if (!(free_from_moments(phi).series == oracles::free_cumulants(phi)))
      return false;
    if (!(two_state_from_pair(phi, psi).series ==
          oracles::two_state_cumulants(phi, psi)))
      return false;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  char buffer[96];
  std::snprintf(buffer, sizeof(buffer), "50 corpora, %.1f s", seconds);
  detail = buffer;
  return seconds < 60.0;
}

bool criterion_specializations(std::string&) {
  for (int trial = 0; trial < 50; ++trial) {
    RatRng rng(1000 + trial);
    const int d = 1 + trial % 3;
    Functional phi = random_functional(rng, d, 6);
    if (!(two_state_from_pair(phi, phi).series ==
          free_from_moments(phi).series))
      return false;
    if (!(two_state_from_pair(phi, origin(d, 6)).series ==
          boolean_from_moments(phi).series))
      return false;
  }
  return true;
}

bool criterion_semigroup(std::string&) {
  const Rat times[] = {q(1), q(1, 2), q(-1, 2), q(2), q(-2, 3),
                       q(3), q(1, 3), q(-3, 4), q(5, 2), q(-1, 4)};
  for (int trial = 0; trial < 20; ++trial) {
    RatRng rng(2000 + trial);
    Functional rho = random_functional(rng, 2, 5);
    auto a = random_point(rng, 2);
    auto b = random_point(rng, 2);
    Rat t = times[trial % 10];
    Rat s = times[(trial + 3) % 10];
    if (Rat(1) + t + s == 0) s += q(1, 5);
    std::vector<Rat> ab = {a[0] + b[0], a[1] + b[1]};
    if (!(b_map(b_map(rho, b, s), a, t) == b_map(rho, ab, t + s)))
      return false;
  }
  return true;
}

bool criterion_evolution(std::string&) {
  const Rat times[] = {q(1), q(2), q(1, 2), q(-1, 2), q(1, 3), q(3), q(-2)};
  for (int d = 1; d <= 2; ++d) {
    RatRng rng(3000 + d);
    Functional sigma = random_functional(rng, d, 6);
    Functional rho = bercovici_pata(sigma);
    Functional psi = random_functional(rng, d, 6);
    std::vector<Rat> a;
    for (int i = 0; i < d; ++i) a.push_back(i % 2 == 0 ? q(1) : q(-1));
    for (const Rat& t : times) {
      auto report = evolution_check(rho, psi, a, t);
      if (!report.ok()) return false;
    }
  }
  return true;
}

bool criterion_meixner_orbit(std::string&) {
  const Rat bs[] = {q(-1), q(0), q(1)};
  const Rat cs[] = {q(-1, 2), q(0), q(1)};
  const Rat alphas[] = {q(-1), q(0), q(2)};
  const Rat ts[] = {q(-1, 2), q(0), q(1)};
  for (const Rat& b : bs)
    for (const Rat& c : cs)
      for (const Rat& alpha : alphas)
        for (const Rat& t : ts) {
          if (!(b_map(meixner_functional(b, c, 10), {alpha}, t) ==
                meixner_functional(b + alpha, c + t, 10)))
            return false;
          if (Rat(2) + c != 0 &&
              !(b_map(meixner_functional(0, -1, 10), {b}, Rat(1) + c) ==
                meixner_functional(b, c, 10)))
            return false;
        }
  return true;
}

bool criterion_jacobi_shift(std::string&) {
  for (int trial = 0; trial < 20; ++trial) {
    RatRng rng(4000 + trial);
    JacobiParams params;
    for (int k = 0; k < 5; ++k) params.beta.push_back(rng.coefficient());
    for (int k = 0; k < 4; ++k) params.gamma.push_back(rng.positive());
    Rat alpha = rng.coefficient();
    Rat t = rng.positive();
    Functional f = moments_from_jacobi(params, 8);
    if (!(moments_from_jacobi(boolean_shift_jacobi(params, alpha, t), 8) ==
          boolean_convolve(delta_state({alpha}, 8), boolean_power(f, t))))
      return false;
  }
  return true;
}

bool criterion_fixed_points(std::string&) {
  for (int trial = 0; trial < 20; ++trial) {
    RatRng rng(5000 + trial);
    Functional rho_plain = random_functional(rng, 2, 5);
    if (!(phi_map(rho_plain, rho_plain) == rho_plain)) return false;

    // invertible covariance: retry deterministically on degenerate draws
    for (uint64_t bump = 0;; ++bump) {
      RatRng inner(6000 + 31 * trial + bump);
      Functional sigma = random_functional(inner, 2, 5);
      Functional rho = bercovici_pata(sigma);
      NcSeries r = free_from_moments(rho).series;
      Rat det = r.coeff(Word{1, 1}) * r.coeff(Word{2, 2}) -
                r.coeff(Word{1, 2}) * r.coeff(Word{2, 1});
      if (det == 0) continue;
      Functional psi = random_functional(inner, 2, 5);
      if (!(recover_psi(rho, phi_map(rho, psi)) == psi)) return false;

      auto a = random_point(inner, 2);
      Functional lhs = phi_map(rho, delta_state(a, 5));
      Functional rhs = b_map(bercovici_pata_inverse(rho), a, 0);
      if (!(lhs == rhs)) return false;
      break;
    }
  }
  return true;
}

bool criterion_monotone_orthogonal(std::string&) {
  for (int trial = 0; trial < 10; ++trial) {
    RatRng rng(7000 + trial);
    const int d = 1 + trial % 2;
    Functional psi = random_functional(rng, d, 6);
    Functional tau = random_functional(rng, d, 6);
    auto a = random_point(rng, d);
    if (!(monotone_convolve(delta_state(a, 6), psi) ==
          boolean_convolve(delta_state(a, 6), psi)))
      return false;
    if (!(phi_one_arg(monotone_convolve(tau, psi)) ==
          phi_map(bercovici_pata(phi_one_arg(tau)), psi)))
      return false;
    if (d == 1) {
      Rat b = rng.coefficient();
      if (!(orthogonal_convolve(tau, delta_state(a, 6)) == b_map(tau, a, 0)))
        return false;
      if (!(orthogonal_convolve(meixner_functional(b, -1, 6), psi) ==
            phi_one_arg(boolean_convolve(psi, delta_state({b}, 6)))))
        return false;
      if (!(phi_one_arg(free_convolve(psi, delta_state({b}, 6))) ==
            b_map(phi_one_arg(psi), {b}, 0)))
        return false;
      if (!(phi_one_arg(monotone_convolve(tau, psi)) ==
            orthogonal_convolve(phi_one_arg(tau), psi)))
        return false;
    }
  }
  return true;
}

bool criterion_positivity(std::string& detail) {
  double worst = 0;
  for (int trial = 0; trial < 20; ++trial) {
    RatRng rng(8000 + trial);
    auto psi_data = random_state_data(rng, 2, 2);
    auto mu_data = random_free_data(rng, 2, 2);
    auto tensor = tensor_eta_model(to_double(psi_data), to_double(mu_data));
    auto verdict = eta_conditional_psd(tensor, 3, 1e-9);  // level = N/2, N = 6
    if (!verdict.psd) return false;
    if (verdict.min_eigenvalue <
        -1e-9 * std::max(verdict.max_eigenvalue, 1e-300))
      return false;
    worst = std::min(worst, verdict.min_eigenvalue);

    Functional sigma = random_jacobi_state(rng, 6);
    Functional psi = random_jacobi_state(rng, 6);
    Functional phi = phi_map(bercovici_pata(sigma), psi);
    if (!psd_check(phi, 3).psd) return false;
  }
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "min eigenvalue %.2e", worst);
  detail = buffer;
  return true;
}

bool criterion_operator_replay(std::string& detail) {
  struct Config {
    int d, dim_k, dim_h, degree, depth;
    uint64_t seed;
  };
  const Config configs[] = {
      {1, 1, 1, 6, 7, 9001}, {1, 2, 2, 5, 6, 9002}, {2, 2, 1, 5, 6, 9003}};
  double worst = 0;
  for (const auto& c : configs) {
    RatRng rng(c.seed);
    auto psi_data = random_state_data(rng, c.d, c.dim_k);
    auto mu_data = random_free_data(rng, c.d, c.dim_h);
    auto report = evolution_operator_check(psi_data, mu_data, c.degree,
                                           c.depth);
    if (!report.ok(1e-9)) return false;
    worst = std::max(worst,
                     std::max(report.side_difference,
                              report.series_difference));
  }
  char buffer[96];
  std::snprintf(buffer, sizeof(buffer),
                "seeds 9001-9003, max residual %.2e", worst);
  detail = buffer;
  return true;
}

bool criterion_pde_residuals(std::string&) {
  const Rat grid[] = {q(-1), q(0), q(1, 2), q(1)};
  for (const Rat& b : grid) {
    for (const Rat& c : grid) {
      Functional mu = meixner_functional(b, c, 10);
      if (!meixner_pde_check(mu, b, c).ok()) return false;
      RatRng rng(9100);
      Functional psi = random_functional(rng, 1, 10);
      if (!two_state_pde_residual(mu, psi, b, c).is_zero()) return false;
    }
  }
  // negative control: drifting recursion coefficients leave the family
  JacobiParams drifting{{q(0), q(1), q(2), q(3), q(4), q(5)},
                        {q(1), q(2), q(3), q(4), q(5)}};
  auto control =
      meixner_pde_check(moments_from_jacobi(drifting, 10), q(1), q(1));
  return !control.ok() && control.first_failing_degree().has_value();
}

bool criterion_partition_counts(std::string&) {
  for (int n = 0; n <= 10; ++n) {
    auto nc = enumerate_nc(n);
    if (static_cast<long>(nc.size()) != catalan(n)) return false;
    long brute = 0;
    for (const auto& p : enumerate_all(n))
      if (is_noncrossing(p)) ++brute;
    if (static_cast<long>(nc.size()) != brute) return false;
    if (n >= 1 &&
        static_cast<long>(enumerate_nc_prime(n).size()) != catalan(n - 1))
      return false;
  }
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1,
       "cumulant dual-path: generating functions = partition sums, 50 seeded "
       "corpora, d in {1,2,3}, N=6, exact",
       criterion_cumulant_dual_path},
      {2,
       "specializations: pair cumulants collapse to free (psi = phi) and "
       "Boolean (psi = point mass at 0), exact",
       criterion_specializations},
      {3,
       "semigroup law: B_{a,t} o B_{b,s} = B_{a+b,t+s}, 20 seeded cases, "
       "d=2, N=5, negative times included, exact",
       criterion_semigroup},
      {4,
       "evolution identity, both parts, d in {1,2}, N=6, 7 rational times, "
       "a = (+-1,...), exact (N+1-point polynomial certificate)",
       criterion_evolution},
      {5,
       "Meixner orbit: B_{alpha,t}[mu_{b,c}] = mu_{b+alpha,c+t} on a 3^4 "
       "grid, N=10, plus generation from the two-point law, exact",
       criterion_meixner_orbit},
      {6,
       "Jacobi head shift = series-level Boolean dressing, 20 seeded cases, "
       "N=8, exact",
       criterion_jacobi_shift},
      {7,
       "fixed point and inverses: Phi[rho,rho] = rho; psi recovery round "
       "trip; Phi[rho, delta_a] via the inverse bijection, exact",
       criterion_fixed_points},
      {8,
       "monotone and orthogonal layer: point-mass monotone = Boolean; "
       "factorization through the composed map; single-variable orthogonal "
       "identities, exact",
       criterion_monotone_orthogonal},
      {9,
       "positivity: conditional Gram of composed cumulants at level N/2 on "
       "20 seeded float instances; composed state PSD at level 3",
       criterion_positivity},
      {10,
       "operator replay of the evolution identity on (d,dimK,dimH,N,L) = "
       "(1,1,1,6,7), (1,2,2,5,6), (2,2,1,5,6), residual < 1e-9",
       criterion_operator_replay},
      {11,
       "quadratic recursion residuals vanish to N=10 on the Meixner grid "
       "(single and two-state forms); drifting-parameter negative control",
       criterion_pde_residuals},
      {12,
       "partition counts vs brute-force filter: |NC(n)| = Catalan(n), "
       "|NC'(n)| = Catalan(n-1), n <= 10",
       criterion_partition_counts},
  };

  bool all_ok = true;
  for (auto& criterion : criteria) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    all_ok = all_ok && ok;
    std::printf("[%2d] %s  %s%s%s (%.2f s)\n", criterion.number,
                ok ? "PASS" : "FAIL", criterion.label.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str(), seconds);
    std::fflush(stdout);
  }
  std::printf("%s\n", all_ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED");
  return all_ok ? 0 : 1;
}
