#pragma once

#include "cfree/cumulants.hpp"
#include "cfree/partition.hpp"

namespace cfree::oracles {

/// Partition-sum counterparts of the generating-function conversions in
/// cumulants.hpp. These enumerate interval or non-crossing partitions
/// explicitly and are kept deliberately independent of the series-algebra
/// code paths they cross-check.

/// Boolean cumulants via the interval-partition moment expansion, solved
/// triangularly.
NcSeries boolean_cumulants(const Functional& f);

/// Moments as the interval-partition sum of Boolean cumulant products.
Functional moments_from_boolean(const NcSeries& eta);

/// Free cumulants via the non-crossing moment expansion, solved
/// triangularly.
NcSeries free_cumulants(const Functional& f);

/// Moments as the full non-crossing partition sum.
Functional moments_from_free(const NcSeries& r);

/// Pair cumulants: outer blocks carry the unknown series, inner blocks the
/// free cumulants of psi; solved triangularly over non-crossing partitions.
NcSeries two_state_cumulants(const Functional& phi, const Functional& psi);

/// Moments from pair cumulants by direct outer/inner partition summation.
Functional two_state_moments(const NcSeries& r, const Functional& psi);

}  // namespace cfree::oracles
