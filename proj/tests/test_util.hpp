#pragma once

#include <doctest.h>

#include "cfree/random.hpp"
#include "cfree/transforms.hpp"

namespace cfree::testutil {

inline Rat q(long num, long den = 1) {
  Rat out(num, den);
  out.canonicalize();
  return out;
}

/// Series from a list of (word, coefficient) pairs.
inline NcSeries series_of(int d, int n,
                          std::initializer_list<std::pair<Word, Rat>> terms) {
  NcSeries s(d, n);
  for (const auto& [w, c] : terms) s.set_coeff(w, c);
  return s;
}

inline CumulantSeries free_series(NcSeries s) {
  return CumulantSeries(CumulantKind::kFree, std::move(s));
}

inline CumulantSeries boolean_series(NcSeries s) {
  return CumulantSeries(CumulantKind::kBoolean, std::move(s));
}

inline Word pow_word(int letter, int count) {
  return Word(std::vector<int>(count, letter));
}

inline Functional one_variable_moments(int n, std::vector<Rat> values) {
  NcSeries m = NcSeries::one(1, n);
  for (int k = 1; k <= n && k <= static_cast<int>(values.size()); ++k)
    m.set_coeff(pow_word(1, k), values[k - 1]);
  return Functional(std::move(m));
}

inline Rat catalan(int n) {
  Rat c(1);
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

}  // namespace cfree::testutil
