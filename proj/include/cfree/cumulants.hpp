#pragma once

#include "cfree/functional.hpp"

namespace cfree {

/// Boolean cumulant series eta = 1 - (1 + M)^{-1}.
CumulantSeries boolean_from_moments(const Functional& f);

/// Inverse of boolean_from_moments: M = (1 - eta)^{-1} - 1.
Functional moments_from_boolean(const CumulantSeries& eta);

/// Free cumulant series: the unique R with M(w) = R((1 + M(w)) w),
/// solved degree by degree (the unknown enters each degree linearly with
/// unit coefficient).
CumulantSeries free_from_moments(const Functional& f);

/// Inverse of free_from_moments, via the first-block recursion of the
/// non-crossing moment expansion.
Functional moments_from_free(const CumulantSeries& r);

/// Cumulants of the pair (phi, psi): the unique R with
/// eta^phi(w) = (1 + M^psi(w))^{-1} R((1 + M^psi(w)) w).
CumulantSeries two_state_from_pair(const Functional& phi,
                                   const Functional& psi);

/// Inverse of two_state_from_pair in phi: outer blocks carry r, nested
/// gaps carry psi-moments.
Functional pair_moments_from_two_state(const CumulantSeries& r,
                                       const Functional& psi);

/// sum over words v of r[v] * (A z_{v_1})(A z_{v_2})...(A z_{v_n}):
/// evaluation of r under the substitution z_i -> A z_i.
NcSeries entangle(const NcSeries& r, const NcSeries& a_series);

/// Inverse of entangle in r: peels the coefficients of g degree by degree
/// (A must have constant term 1, g constant term 0).
NcSeries untangle(const NcSeries& g, const NcSeries& a_series);

}  // namespace cfree
