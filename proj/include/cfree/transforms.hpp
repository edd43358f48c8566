#pragma once

#include <optional>

#include "cfree/cumulants.hpp"

namespace cfree {

std::vector<Rat> zero_vector(int d);

/// Point evaluation x_i -> a_i: the multiplicative functional with moments
/// delta_a[x_u] = prod a_{u(k)}. The alphabet size is a.size().
Functional delta_state(const std::vector<Rat>& a, int truncation);

/// Free convolution: addition of free cumulant series.
Functional free_convolve(const Functional& a, const Functional& b);

/// Boolean convolution: addition of Boolean cumulant series.
Functional boolean_convolve(const Functional& a, const Functional& b);

/// Free convolution power (R scaled by t); defined for any rational t at
/// the functional level.
Functional free_power(const Functional& a, const Rat& t);

/// Boolean convolution power (eta scaled by t).
Functional boolean_power(const Functional& a, const Rat& t);

/// Monotone convolution:
/// 1 + M^{tau |> psi}(w) = (1 + M^tau((1+M^psi(w))w)) (1 + M^psi(w)).
Functional monotone_convolve(const Functional& tau, const Functional& psi);

/// Orthogonal convolution (single variable only): phi_map of the
/// Boolean-to-free image of tau against psi.
Functional orthogonal_convolve(const Functional& tau, const Functional& psi);

/// The functional whose pair cumulants relative to psi are the free
/// cumulants of rho:
/// eta(w) = (1 + M^psi(w))^{-1} R^rho((1 + M^psi(w)) w).
Functional phi_map(const Functional& rho, const Functional& psi);

/// One-argument special case: eta(w) = sum_i w_i (1 + M^psi(w)) w_i.
Functional phi_one_arg(const Functional& psi);

/// The functional with R(z) = sum_i z_i (1 + M^tau(z)) z_i; equals the
/// Boolean-to-free image of phi_one_arg(tau).
Functional phi_free(const Functional& tau);

/// ((rho^{boxplus(1+t)} boxplus delta_a) uplus delta_{-a})^{uplus 1/(1+t)}.
/// Rejects t = -1, where the defining formula degenerates; that boundary
/// case is phi_map(rho, delta_a).
Functional b_map(const Functional& rho, const std::vector<Rat>& a,
                 const Rat& t);
Functional b_map(const Functional& rho, const Rat& t);  // a = 0

/// Boolean-to-free bijection (b_map at t = 1) and its exact inverse
/// (rho^{uplus 2})^{boxplus 1/2}.
Functional bercovici_pata(const Functional& rho);
Functional bercovici_pata_inverse(const Functional& rho);

/// b_map at a = mean(rho), t = 0: the Boolean-to-Fermi bijection image.
Functional fermi_image(const Functional& rho);

/// Boolean cumulant of b_map(rho, a, t) at a word of degree >= 2, by direct
/// summation over endpoint-joining non-crossing partitions with subsets of
/// singleton blocks turned into scalar factors.
Rat b_t_eta_oracle(const Functional& rho, const std::vector<Rat>& a,
                   const Rat& t, Word word);

/// The t = 0 case by the independent endpoint-subset expansion: the sum
/// over subsets containing both endpoints, with the complement contributing
/// scalar factors.
Rat fermi_eta_oracle(const Functional& rho, const std::vector<Rat>& a,
                     Word word);

/// The unique psi with phi_map(rho, psi) = phi, recovered degree by degree
/// from the derivative relations. Requires an invertible covariance block
/// in the free cumulants of rho; psi is determined (and returned) with
/// truncation degree N - 2.
Functional recover_psi(const Functional& rho, const Functional& phi);

/// Both halves of the evolution identity, as exact coefficient diffs:
///   evolution_diff  = Phi[rho, psi ⊞ rho^{⊞t} ⊞ delta_a] - B_{a,t}[Phi[rho, psi]]
///   first_arg_diff  = Phi[rho^{⊞t} ⊞ delta_a, psi] - (Phi[rho, psi]^{⊎t} ⊎ delta_a)
struct EvolutionReport {
  NcSeries evolution_diff;
  NcSeries first_arg_diff;

  bool ok() const {
    return evolution_diff.is_zero() && first_arg_diff.is_zero();
  }
  std::optional<Word> first_failure() const;
};
EvolutionReport evolution_check(const Functional& rho, const Functional& psi,
                                const std::vector<Rat>& a, const Rat& t);

/// Free product of standard semicircular variables: R(z) = sum_i z_i^2.
/// The unique fixed point of phi_one_arg.
Functional semicircular_product(int d, int truncation);

}  // namespace cfree
