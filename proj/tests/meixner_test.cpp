#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_util.hpp"

#include "cfree/meixner.hpp"

using namespace cfree;
using namespace cfree::testutil;

TEST_CASE("tridiagonal moments: two-point, semicircle, point mass") {
  Functional bern = moments_from_jacobi({{q(0), q(0)}, {q(1), q(0)}}, 8);
  for (int k = 1; k <= 8; ++k)
    CHECK(bern.moment(pow_word(1, k)) == (k % 2 == 0 ? 1 : 0));

  JacobiParams sc{{q(0), q(0), q(0), q(0), q(0), q(0)},
                  {q(1), q(1), q(1), q(1), q(1)}};
  Functional semi = moments_from_jacobi(sc, 10);
  for (int k = 1; k <= 5; ++k) {
    CHECK(semi.moment(pow_word(1, 2 * k)) == catalan(k));
    CHECK(semi.moment(pow_word(1, 2 * k - 1)) == 0);
  }

  Functional point = moments_from_jacobi({{q(5)}, {q(0)}}, 6);
  CHECK(point == delta_state({q(5)}, 6));

  CHECK_THROWS_AS(moments_from_jacobi({{q(0)}, {q(1)}}, 8),
                  std::invalid_argument);
}

TEST_CASE("orthogonalization recovers the constant Meixner parameters") {
  JacobiParams params = jacobi_from_moments(meixner_functional(1, 1, 10), 5);
  CHECK(params.beta == std::vector<Rat>{q(0), q(1), q(1), q(1), q(1)});
  CHECK(params.gamma == std::vector<Rat>{q(1), q(2), q(2), q(2), q(2)});
}

TEST_CASE("orthogonalization stops at finite support") {
  JacobiParams params = jacobi_from_moments(delta_state({q(3)}, 6), 3);
  CHECK(params.beta == std::vector<Rat>{q(3)});
  CHECK(params.gamma == std::vector<Rat>{q(0)});
}

TEST_CASE("orthogonalization round-trips random positive data") {
  RatRng rng(3);
  for (int trial = 0; trial < 4; ++trial) {
    JacobiParams params;
    for (int k = 0; k < 5; ++k) params.beta.push_back(rng.coefficient());
    for (int k = 0; k < 4; ++k) params.gamma.push_back(rng.positive());
    Functional f = moments_from_jacobi(params, 8);
    JacobiParams back = jacobi_from_moments(f, 4);
    for (int k = 0; k < 4; ++k) CHECK(back.beta[k] == params.beta[k]);
    for (int k = 0; k < 4; ++k) CHECK(back.gamma[k] == params.gamma[k]);
    CHECK(moments_from_jacobi(back, 8) == f);
  }
}

TEST_CASE("head shift of the recursion parameters") {
  JacobiParams meixner{{q(0), q(2), q(2)}, {q(1), q(3), q(3)}};
  JacobiParams shifted = boolean_shift_jacobi(meixner, q(5), q(1));
  CHECK(shifted.beta == std::vector<Rat>{q(5), q(2), q(2)});
  CHECK(shifted.gamma == std::vector<Rat>{q(1), q(3), q(3)});

  CHECK(boolean_shift_jacobi(meixner, 0, 1).beta == meixner.beta);
  CHECK(boolean_shift_jacobi(meixner, 0, 1).gamma == meixner.gamma);

  // dual path against the series-level Boolean dressing
  RatRng rng(5);
  for (int trial = 0; trial < 3; ++trial) {
    JacobiParams params;
    for (int k = 0; k < 5; ++k) params.beta.push_back(rng.coefficient());
    for (int k = 0; k < 4; ++k) params.gamma.push_back(rng.positive());
    Rat alpha = rng.coefficient();
    Rat t = rng.positive();
    Functional f = moments_from_jacobi(params, 8);
    CHECK(moments_from_jacobi(boolean_shift_jacobi(params, alpha, t), 8) ==
          boolean_convolve(delta_state({alpha}, 8), boolean_power(f, t)));
  }
}

TEST_CASE("named members of the Meixner family") {
  CHECK(meixner_functional(0, 0, 10) == semicircular(0, 1, 10));
  Functional bern = meixner_functional(0, -1, 10);
  for (int k = 1; k <= 10; ++k)
    CHECK(bern.moment(pow_word(1, k)) == (k % 2 == 0 ? 1 : 0));
  // generated from the two-point law by the shifted semigroup
  Rat b = q(3, 2), c = q(1, 2);
  CHECK(b_map(meixner_functional(0, -1, 9), {b}, Rat(1) + c) ==
        meixner_functional(b, c, 9));
}

TEST_CASE("semicircular recursion parameters are constant") {
  JacobiParams params = jacobi_from_moments(semicircular(q(2), q(3), 10), 5);
  for (const auto& beta : params.beta) CHECK(beta == 2);
  for (const auto& gamma : params.gamma) CHECK(gamma == 3);
}

TEST_CASE("quadratic recursion residuals vanish exactly on the family") {
  for (const auto& [b, c] :
       {std::pair{q(1), q(1)}, {q(0), q(0)}, {q(-2), q(1, 3)}}) {
    auto report = meixner_pde_check(meixner_functional(b, c, 10), b, c);
    CHECK(report.ok());
    CHECK_FALSE(report.first_failing_degree().has_value());
  }
}

TEST_CASE("quadratic recursion flags a non-member") {
  JacobiParams drifting{{q(0), q(1), q(2), q(3), q(4), q(5)},
                        {q(1), q(2), q(3), q(4), q(5)}};
  Functional f = moments_from_jacobi(drifting, 10);
  auto report = meixner_pde_check(f, q(1), q(1));
  CHECK_FALSE(report.ok());
  CHECK(report.first_failing_degree().has_value());
  CHECK(*report.first_failing_degree() >= 1);
}

TEST_CASE("quadratic recursion for the standard semicircle") {
  Functional sc = semicircular(0, 1, 10);
  auto r = free_from_moments(sc).series;
  auto d2r = left_derivative(left_derivative(r, 1), 1);
  CHECK(d2r.truncated(8) == NcSeries::one(1, 8));
  CHECK(meixner_pde_check(sc, 0, 0).ok());
}

TEST_CASE("multivariate residuals of the semicircular free product") {
  Functional gamma2 = semicircular_product(2, 6);
  std::vector<RatMatrix> b_tensor(2, RatMatrix(2, std::vector<Rat>(2, q(0))));
  RatMatrix c_matrix(2, std::vector<Rat>(2, q(0)));
  auto report = meixner_pde_check(gamma2, b_tensor, c_matrix);
  CHECK(report.ok());
  for (const auto& res : report.r_form) CHECK(res.is_zero());
  for (const auto& res : report.eta_form) CHECK(res.is_zero());
}

TEST_CASE("Meixner pair evolution stays in the dilated family") {
  // phi(t) built by composing the t-th free powers equals the dilated
  // family member with drifted parameters, and satisfies the rescaled
  // quadratic recursion with the drifted coefficients.
  const int n = 8;
  for (const auto& [b, c] : {std::pair{q(0), q(1)}, {q(1), q(0)}}) {
    const Rat alpha = q(1), s = q(1, 2);
    Functional mu = meixner_functional(b, c, n);
    Functional base_psi = free_convolve(free_power(mu, Rat(1) + s),
                                        delta_state({alpha}, n));
    for (const Rat& t : {q(1, 2), q(2), q(3)}) {
      Functional psi_t = free_power(base_psi, t);
      Functional phi_t = phi_map(free_power(mu, t), psi_t);
      CHECK(phi_t ==
            boolean_power(meixner_functional(b + alpha * t,
                                             c - 1 + (Rat(1) + s) * t, n),
                          t));

      // rescaled recursion: D^2 eta = t + b(t) D eta + c(t) (D eta)^2
      Rat bt = (b + alpha) + (t - 1) * alpha;
      Rat ct = (Rat(1) + c + s + (t - 1) * (Rat(1) + s)) / t;
      auto eta = boolean_from_moments(phi_t).series;
      auto de = left_derivative(eta, 1);
      auto residual = left_derivative(de, 1) - t - de.scaled(bt) -
                      (de * de).scaled(ct);
      CHECK(residual.truncated(n - 2).is_zero());
    }
  }
}

TEST_CASE("orbit images have the drifted recursion parameters") {
  Rat b = q(1), c = q(1, 2), alpha = q(-2), t = q(1, 3);
  Functional image = b_map(meixner_functional(b, c, 10), {alpha}, t);
  JacobiParams params = jacobi_from_moments(image, 5);
  CHECK(params.beta[0] == 0);
  CHECK(params.gamma[0] == 1);
  for (int k = 1; k < 5; ++k) CHECK(params.beta[k] == b + alpha);
  for (int k = 1; k < 5; ++k) CHECK(params.gamma[k] == Rat(1) + c + t);
}

TEST_CASE("un-normalized members dress the normalized one") {
  MeixnerParams p;
  p.b = q(1);
  p.c = q(1, 2);
  p.mean = q(2);
  p.variance = q(3);
  CHECK(meixner_functional(p, 8) ==
        free_convolve(free_power(meixner_functional(1, q(1, 2), 8), 3),
                      delta_state({q(2)}, 8)));
  p.dressing = MeixnerParams::Dressing::kBoolean;
  CHECK(meixner_functional(p, 8) ==
        boolean_convolve(boolean_power(meixner_functional(1, q(1, 2), 8), 3),
                         delta_state({q(2)}, 8)));
  MeixnerParams plain;
  plain.b = q(1);
  plain.c = q(1, 2);
  CHECK(meixner_functional(plain, 8) == meixner_functional(1, q(1, 2), 8));
}

TEST_CASE("members with 1 + c >= 0 are PSD at small levels") {
  for (const Rat& b : {q(-1), q(0), q(3, 2)})
    for (const Rat& c : {q(-1), q(-1, 2), q(0), q(1)})
      CHECK(psd_check(meixner_functional(b, c, 8), 4).psd);
}

TEST_CASE("PSD verdicts") {
  CHECK(psd_check(delta_state({q(2)}, 8), 4).psd);
  CHECK(psd_check_exact(delta_state({q(2)}, 8), 4));

  // 1 + c < 0 forces a negative direction
  auto bad = psd_check(meixner_functional(0, -2, 8), 3);
  CHECK_FALSE(bad.psd);
  CHECK(bad.min_eigenvalue < 0);
  CHECK_FALSE(psd_check_exact(meixner_functional(0, -2, 8), 3));

  // exact and float verdicts agree on rank-deficient two-point data
  Functional bern = meixner_functional(0, -1, 8);
  CHECK(psd_check(bern, 3).psd);
  CHECK(psd_check_exact(bern, 3));

  RatRng rng(7);
  Functional state = random_jacobi_state(rng, 8);
  CHECK(psd_check(state, 3).psd);
  CHECK(psd_check_exact(state, 3));

  CHECK_THROWS_AS(psd_check(bern, 5), std::invalid_argument);
}

TEST_CASE("composition of positive-definite sequences stays positive") {
  std::vector<Rat> cat;
  for (int k = 0; k <= 6; ++k)
    cat.push_back(k % 2 == 0 ? catalan(k / 2) : q(0));
  SUBCASE("catalan against itself") {
    CHECK(cpd_one_variable_check(cat, cat, 6).psd);
  }
  SUBCASE("unit second argument returns the first") {
    std::vector<Rat> unit = {q(1)};
    auto verdict = cpd_one_variable_check(cat, unit, 6);
    CHECK(verdict.psd);
  }
  SUBCASE("unit first argument returns the second") {
    std::vector<Rat> unit = {q(1)};
    CHECK(cpd_one_variable_check(unit, cat, 6).psd);
  }
}
