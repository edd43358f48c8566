#pragma once

#include <map>
#include <vector>

#include "cfree/rational.hpp"
#include "cfree/word.hpp"

namespace cfree {

/// Truncated non-commutative formal power series over exact rationals.
///
/// A series carries its alphabet size d and truncation degree N; words of
/// degree > N are identically zero and never stored. Binary operations
/// require equal alphabets and truncate to the smaller N; no operation
/// ever extends the truncation degree. Equality compares coefficients up
/// to the common truncation degree. Values are treated as immutable once
/// built: every operation returns a new series, and the setters exist
/// for construction code only.
class NcSeries {
 public:
  NcSeries(int alphabet, int truncation);

  static NcSeries constant(int alphabet, int truncation, const Rat& value);
  static NcSeries one(int alphabet, int truncation) {
    return constant(alphabet, truncation, 1);
  }
  /// The monomial z_index.
  static NcSeries variable(int alphabet, int truncation, int index);
  /// c * z_w; silently zero when w exceeds the truncation degree.
  static NcSeries monomial(int alphabet, int truncation, Word w,
                           const Rat& coefficient);

  int alphabet() const { return d_; }
  int truncation() const { return trunc_; }

  /// Coefficient of the word (zero when absent).
  const Rat& coeff(Word w) const;
  const Rat& constant_term() const { return coeff(Word{}); }
  void set_coeff(Word w, Rat value);
  void add_coeff(Word w, const Rat& delta);

  const std::map<Word, Rat>& terms() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  NcSeries truncated(int new_truncation) const;
  NcSeries scaled(const Rat& factor) const;

  friend NcSeries operator+(const NcSeries& a, const NcSeries& b);
  friend NcSeries operator-(const NcSeries& a, const NcSeries& b);
  friend NcSeries operator*(const NcSeries& a, const NcSeries& b);
  NcSeries operator-() const;
  friend NcSeries operator*(const Rat& s, const NcSeries& a) {
    return a.scaled(s);
  }
  friend NcSeries operator+(const NcSeries& a, const Rat& s);
  friend NcSeries operator-(const NcSeries& a, const Rat& s);

  /// Coefficient-wise equality on all words of degree <= min(N_a, N_b);
  /// false on alphabet mismatch.
  friend bool operator==(const NcSeries& a, const NcSeries& b);

 private:
  int d_;
  int trunc_;
  std::map<Word, Rat> coeffs_;
};

/// Multiplicative inverse of a series with nonzero constant term, exact up
/// to the truncation degree.
NcSeries reciprocal(const NcSeries& a);

/// Left partial derivative: sends the word (index).w to w, kills the rest.
NcSeries left_derivative(const NcSeries& a, int index);

/// Substitutes substituents[i-1] for the letter i, preserving word order.
/// Every substituent must have zero constant term (the composition is then
/// well defined degree by degree) and all must share one alphabet.
NcSeries substitute(const NcSeries& a,
                    const std::vector<NcSeries>& substituents);

}  // namespace cfree
