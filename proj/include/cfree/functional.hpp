#pragma once

#include <vector>

#include "cfree/series.hpp"

namespace cfree {

/// A unital linear functional on non-commutative polynomials, stored as
/// its truncated moment series. The empty-word coefficient is exactly 1.
/// Positivity is never assumed here; states are the functionals that also
/// pass the PSD checks.
class Functional {
 public:
  explicit Functional(NcSeries moments);

  int alphabet() const { return moments_.alphabet(); }
  int truncation() const { return moments_.truncation(); }
  const NcSeries& moments() const { return moments_; }
  const Rat& moment(Word w) const { return moments_.coeff(w); }

  /// Centered generating series M = moments - 1.
  NcSeries m_series() const { return moments_ - Rat(1); }
  static Functional from_m_series(const NcSeries& m);

  /// Degree-1 moments.
  std::vector<Rat> mean() const;

  /// True when every moment agrees with the moment of the reversed word.
  bool reversal_symmetric() const;

  friend bool operator==(const Functional& a, const Functional& b) {
    return a.moments_ == b.moments_;
  }

 private:
  NcSeries moments_;
};

enum class CumulantKind { kBoolean, kFree, kTwoState };

/// A cumulant generating series: zero constant term, tagged with the
/// cumulant calculus it belongs to.
struct CumulantSeries {
  CumulantKind kind;
  NcSeries series;

  CumulantSeries(CumulantKind k, NcSeries s);
  int alphabet() const { return series.alphabet(); }
  int truncation() const { return series.truncation(); }
};

}  // namespace cfree
