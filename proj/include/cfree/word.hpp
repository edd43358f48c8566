#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace cfree {

/// Index of a joint moment: a finite word in the letters {1, ..., d}.
///
/// Words pack into one 64-bit value: the length sits in the top nibble and
/// letter k (0-based) in the nibble at bits [56-4k, 60-4k). Packed values
/// compare in (degree, lexicographic) order, which is the canonical word
/// order used for storage, iteration and serialization. The packing caps
/// words at 15 letters over a 15-letter alphabet, far beyond any feasible
/// truncation degree here.
class Word {
 public:
  static constexpr int kMaxLength = 15;
  static constexpr int kMaxAlphabet = 15;

  constexpr Word() = default;
  Word(std::initializer_list<int> letters);
  explicit Word(const std::vector<int>& letters);

  int degree() const { return static_cast<int>(bits_ >> 60); }
  bool empty() const { return bits_ == 0; }
  /// Letter at 0-based position k, in [1, d].
  int letter(int k) const {
    return static_cast<int>((bits_ >> (56 - 4 * k)) & 0xF);
  }
  int first() const { return letter(0); }
  int last() const { return letter(degree() - 1); }
  int max_letter() const;

  Word concat(Word rhs) const;
  Word appended(int letter) const;
  Word prepended(int letter) const;
  /// Letters [from, from + count).
  Word subword(int from, int count) const;
  /// Drops the first letter.
  Word tail() const { return subword(1, degree() - 1); }
  Word reversed() const;

  std::vector<int> letters() const;
  std::string str() const;

  uint64_t packed() const { return bits_; }

  friend bool operator==(Word a, Word b) = default;
  friend std::strong_ordering operator<=>(Word a, Word b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  static Word from_bits(uint64_t bits) {
    Word w;
    w.bits_ = bits;
    return w;
  }
  uint64_t bits_ = 0;
};

/// All words over {1..d} of the given degree, lexicographically.
std::vector<Word> words_of_degree(int d, int degree);

/// All words of degree <= max_degree in canonical (degree, lex) order.
std::vector<Word> words_up_to(int d, int max_degree);

}  // namespace cfree
