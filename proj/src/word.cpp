#include "cfree/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace cfree {

namespace {
constexpr uint64_t kLetterMask = 0x0FFFFFFFFFFFFFFFULL;
}

Word::Word(std::initializer_list<int> letters)
    : Word(std::vector<int>(letters)) {}

Word::Word(const std::vector<int>& letters) {
  if (letters.size() > kMaxLength) throw std::length_error("Word: too long");
  uint64_t bits = static_cast<uint64_t>(letters.size()) << 60;
  int pos = 0;
  for (int letter : letters) {
    if (letter < 1 || letter > kMaxAlphabet)
      throw std::out_of_range("Word: letter out of range");
    bits |= static_cast<uint64_t>(letter) << (56 - 4 * pos);
    ++pos;
  }
  bits_ = bits;
}

int Word::max_letter() const {
  int result = 0;
  for (int k = 0; k < degree(); ++k) result = std::max(result, letter(k));
  return result;
}

Word Word::concat(Word rhs) const {
  int n = degree();
  int m = rhs.degree();
  if (n + m > kMaxLength) throw std::length_error("Word::concat: too long");
  uint64_t letters =
      (bits_ & kLetterMask) | ((rhs.bits_ & kLetterMask) >> (4 * n));
  return from_bits(letters | (static_cast<uint64_t>(n + m) << 60));
}

Word Word::appended(int letter) const {
  int n = degree();
  if (n + 1 > kMaxLength) throw std::length_error("Word::appended: too long");
  if (letter < 1 || letter > kMaxAlphabet)
    throw std::out_of_range("Word::appended: letter out of range");
  return from_bits((bits_ & kLetterMask) |
                   (static_cast<uint64_t>(letter) << (56 - 4 * n)) |
                   (static_cast<uint64_t>(n + 1) << 60));
}

Word Word::prepended(int letter) const { return Word{letter}.concat(*this); }

Word Word::subword(int from, int count) const {
  if (from < 0 || count < 0 || from + count > degree())
    throw std::out_of_range("Word::subword: bad range");
  uint64_t letters = ((bits_ & kLetterMask) << (4 * from)) & kLetterMask;
  uint64_t keep = count == 0
                      ? 0
                      : (~0ULL >> (64 - 4 * count)) << (60 - 4 * count);
  return from_bits((letters & keep) | (static_cast<uint64_t>(count) << 60));
}

Word Word::reversed() const {
  auto ls = letters();
  std::reverse(ls.begin(), ls.end());
  return Word(ls);
}

std::vector<int> Word::letters() const {
  std::vector<int> out(degree());
  for (int k = 0; k < degree(); ++k) out[k] = letter(k);
  return out;
}

std::string Word::str() const {
  if (empty()) return "1";
  std::string out;
  for (int k = 0; k < degree(); ++k) {
    out += "x";
    out += std::to_string(letter(k));
  }
  return out;
}

std::vector<Word> words_of_degree(int d, int degree) {
  if (d < 1 || d > Word::kMaxAlphabet)
    throw std::out_of_range("words_of_degree: bad alphabet size");
  if (degree < 0 || degree > Word::kMaxLength)
    throw std::out_of_range("words_of_degree: bad degree");
  std::vector<Word> out;
  if (degree == 0) {
    out.push_back(Word{});
    return out;
  }
  std::vector<int> letters(degree, 1);
  while (true) {
    out.emplace_back(letters);
    int k = degree - 1;
    while (k >= 0 && letters[k] == d) {
      letters[k] = 1;
      --k;
    }
    if (k < 0) break;
    ++letters[k];
  }
  return out;
}

std::vector<Word> words_up_to(int d, int max_degree) {
  std::vector<Word> out;
  for (int n = 0; n <= max_degree; ++n) {
    auto level = words_of_degree(d, n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace cfree
