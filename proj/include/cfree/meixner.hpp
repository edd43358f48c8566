#pragma once

#include <optional>

#include "cfree/functional.hpp"

namespace cfree {

/// Recursion coefficients of the monic orthogonal polynomials:
/// x P_n = P_{n+1} + beta_n P_n + gamma_n P_{n-1}. For a positive measure
/// all gamma are >= 0; once some gamma_k = 0 the later parameters are
/// unused (finite support).
struct JacobiParams {
  std::vector<Rat> beta;   // beta_0, beta_1, ...
  std::vector<Rat> gamma;  // gamma_1, gamma_2, ...
};

/// Moments of the functional with the given Jacobi parameters: (0,0)
/// entries of powers of the tridiagonal recursion matrix (super-diagonal 1,
/// sub-diagonal gamma). Single variable. Needs floor(N/2)+1 levels of
/// parameters unless a zero gamma truncates earlier.
Functional moments_from_jacobi(const JacobiParams& params, int truncation);

/// Exact Gram-Schmidt orthogonalization of 1, x, x^2, ... against the
/// moment bilinear form <x^a, x^b> = m_{a+b}. Requests `levels` pairs
/// (beta_k, gamma_{k+1}); stops early, emitting a final zero gamma, at the
/// first level where the squared norm vanishes (finite support).
JacobiParams jacobi_from_moments(const Functional& f, int levels);

/// Head shift {(alpha + t beta_0, beta_1, ...), (t gamma_1, gamma_2, ...)}:
/// the Jacobi parameters of delta_alpha uplus mu^{uplus t}.
JacobiParams boolean_shift_jacobi(const JacobiParams& params, const Rat& alpha,
                                  const Rat& t);

/// Semicircular functional with the given mean and variance
/// (free cumulants mean*z + variance*z^2). Single variable.
Functional semicircular(const Rat& mean, const Rat& variance, int truncation);

/// Normalized free Meixner functional: Jacobi parameters
/// (0, b, b, ...), (1, 1+c, 1+c, ...). A state iff 1 + c >= 0; arbitrary
/// rational parameters are allowed at the functional level.
Functional meixner_functional(const Rat& b, const Rat& c, int truncation);

/// Parameters of a possibly un-normalized member: mean/variance request the
/// dressed functional mu^{t} shifted to the mean, with the power and shift
/// taken in the free or the Boolean sense.
struct MeixnerParams {
  Rat b{0};
  Rat c{0};
  std::optional<Rat> mean;
  std::optional<Rat> variance;
  enum class Dressing { kFree, kBoolean };
  Dressing dressing = Dressing::kFree;
};
Functional meixner_functional(const MeixnerParams& params, int truncation);

struct PdeReport {
  NcSeries r_form_residual;
  NcSeries eta_form_residual;

  bool ok() const {
    return r_form_residual.is_zero() && eta_form_residual.is_zero();
  }
  std::optional<int> first_failing_degree() const;
};

/// Residuals of the one-variable quadratic recursions
///   D^2 R - (1 + b DR + c (DR)^2)
///   D^2 eta - (1 + b Deta + (1+c) (Deta)^2)
/// which vanish exactly on the free Meixner family with parameters (b, c).
PdeReport meixner_pde_check(const Functional& f, const Rat& b, const Rat& c);

using RatMatrix = std::vector<std::vector<Rat>>;

/// Multivariate residuals with coefficient data B[k][i][j] (weight of D_k
/// in the (i,j) relation) and C[i][j]; the R-form carries C, the eta-form
/// 1 + C. Residual series are indexed row-major by (i, j).
struct MultiPdeReport {
  std::vector<NcSeries> r_form;
  std::vector<NcSeries> eta_form;
  bool ok() const;
};
MultiPdeReport meixner_pde_check(const Functional& f,
                                 const std::vector<RatMatrix>& b_tensor,
                                 const RatMatrix& c_matrix);

/// Residual of the pair-cumulant quadratic relation for a free Meixner
/// first component with parameters (b, c) against an arbitrary psi
/// (single variable):
///   D^2 Rp - (1 + b DRp + (1+c)(DRp)^2 - DR^psi DRp).
NcSeries two_state_pde_residual(const Functional& phi, const Functional& psi,
                                const Rat& b, const Rat& c);

struct PsdReport {
  double min_eigenvalue = 0;
  double max_eigenvalue = 0;
  bool psd = false;
  bool exact_confirmed = false;  // rational fallback ran and agreed
};

/// Positive-semidefiniteness of the moment Gram matrix
/// G[u][v] = f[reverse(u) v] over words of degree <= level (degree in
/// [1, level] for the conditional variant). Float eigenvalues with
/// relative tolerance eps; borderline verdicts on small matrices are
/// settled by the exact rational factorization.
PsdReport psd_check(const Functional& f, int level, double eps = 1e-9,
                    bool conditional = false);

/// Exact PSD test of the same Gram matrix by pivoted rational LDL^T.
bool psd_check_exact(const Functional& f, int level, bool conditional = false);

/// Exact composition h = f(z g(z)) g(z) of one-variable coefficient
/// sequences, then a PSD check of the Hankel matrix of h.
PsdReport cpd_one_variable_check(const std::vector<Rat>& f_seq,
                                 const std::vector<Rat>& g_seq, int truncation,
                                 double eps = 1e-9);

}  // namespace cfree
