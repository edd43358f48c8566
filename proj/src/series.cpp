#include "cfree/series.hpp"

#include <stdexcept>
#include <unordered_set>

namespace cfree {

namespace {
const Rat kZero(0);

void require_compatible(const NcSeries& a, const NcSeries& b,
                        const char* op) {
  if (a.alphabet() != b.alphabet())
    throw std::invalid_argument(std::string(op) + ": alphabet mismatch");
}
}  // namespace

NcSeries::NcSeries(int alphabet, int truncation)
    : d_(alphabet), trunc_(truncation) {
  if (alphabet < 1 || alphabet > Word::kMaxAlphabet)
    throw std::out_of_range("NcSeries: bad alphabet size");
  if (truncation < 0 || truncation > Word::kMaxLength)
    throw std::out_of_range("NcSeries: bad truncation degree");
}

NcSeries NcSeries::constant(int alphabet, int truncation, const Rat& value) {
  NcSeries s(alphabet, truncation);
  if (value != 0) s.coeffs_.emplace(Word{}, value);
  return s;
}

NcSeries NcSeries::variable(int alphabet, int truncation, int index) {
  if (index < 1 || index > alphabet)
    throw std::out_of_range("NcSeries::variable: index out of range");
  return monomial(alphabet, truncation, Word{index}, 1);
}

NcSeries NcSeries::monomial(int alphabet, int truncation, Word w,
                            const Rat& coefficient) {
  NcSeries s(alphabet, truncation);
  if (w.max_letter() > alphabet)
    throw std::out_of_range("NcSeries::monomial: letter out of range");
  if (w.degree() <= truncation && coefficient != 0)
    s.coeffs_.emplace(w, coefficient);
  return s;
}

const Rat& NcSeries::coeff(Word w) const {
  auto it = coeffs_.find(w);
  return it == coeffs_.end() ? kZero : it->second;
}

void NcSeries::set_coeff(Word w, Rat value) {
  if (w.degree() > trunc_ || w.max_letter() > d_)
    throw std::out_of_range("NcSeries::set_coeff: word out of range");
  if (value == 0)
    coeffs_.erase(w);
  else
    coeffs_[w] = std::move(value);
}

void NcSeries::add_coeff(Word w, const Rat& delta) {
  if (delta == 0) return;
  if (w.degree() > trunc_ || w.max_letter() > d_)
    throw std::out_of_range("NcSeries::add_coeff: word out of range");
  auto [it, inserted] = coeffs_.emplace(w, delta);
  if (!inserted) {
    it->second += delta;
    if (it->second == 0) coeffs_.erase(it);
  }
}

NcSeries NcSeries::truncated(int new_truncation) const {
  if (new_truncation >= trunc_) {
    if (new_truncation == trunc_) return *this;
    throw std::out_of_range("NcSeries::truncated: cannot extend degree");
  }
  NcSeries out(d_, new_truncation);
  for (const auto& [w, c] : coeffs_) {
    if (w.degree() > new_truncation) break;
    out.coeffs_.emplace(w, c);
  }
  return out;
}

NcSeries NcSeries::scaled(const Rat& factor) const {
  NcSeries out(d_, trunc_);
  if (factor == 0) return out;
  for (const auto& [w, c] : coeffs_) out.coeffs_.emplace(w, c * factor);
  return out;
}

NcSeries operator+(const NcSeries& a, const NcSeries& b) {
  require_compatible(a, b, "add");
  const int n = std::min(a.trunc_, b.trunc_);
  NcSeries out(a.d_, n);
  for (const auto& [w, c] : a.coeffs_) {
    if (w.degree() > n) break;
    out.coeffs_.emplace(w, c);
  }
  for (const auto& [w, c] : b.coeffs_) {
    if (w.degree() > n) break;
    out.add_coeff(w, c);
  }
  return out;
}

NcSeries operator-(const NcSeries& a, const NcSeries& b) {
  return a + (-b);
}

NcSeries NcSeries::operator-() const { return scaled(-1); }

NcSeries operator+(const NcSeries& a, const Rat& s) {
  NcSeries out = a;
  out.add_coeff(Word{}, s);
  return out;
}

NcSeries operator-(const NcSeries& a, const Rat& s) { return a + (-s); }

NcSeries operator*(const NcSeries& a, const NcSeries& b) {
  require_compatible(a, b, "mul");
  const int n = std::min(a.trunc_, b.trunc_);
  NcSeries out(a.d_, n);
  for (const auto& [u, cu] : a.coeffs_) {
    if (u.degree() > n) break;
    const int room = n - u.degree();
    for (const auto& [v, cv] : b.coeffs_) {
      if (v.degree() > room) break;
      out.add_coeff(u.concat(v), cu * cv);
    }
  }
  return out;
}

bool operator==(const NcSeries& a, const NcSeries& b) {
  if (a.d_ != b.d_) return false;
  const int n = std::min(a.trunc_, b.trunc_);
  auto ia = a.coeffs_.begin();
  auto ib = b.coeffs_.begin();
  while (true) {
    // maps are degree-ordered: the first over-degree entry ends the walk
    const bool done_a = ia == a.coeffs_.end() || ia->first.degree() > n;
    const bool done_b = ib == b.coeffs_.end() || ib->first.degree() > n;
    if (done_a || done_b) return done_a && done_b;
    if (ia->first != ib->first || ia->second != ib->second) return false;
    ++ia;
    ++ib;
  }
}

NcSeries reciprocal(const NcSeries& a) {
  const Rat& a0 = a.constant_term();
  if (a0 == 0)
    throw std::domain_error("reciprocal: zero constant term");
  const int n = a.truncation();
  // 1/a = (1/a0) * 1/(1+x) with x = a/a0 - 1; Horner form of the
  // alternating geometric series, exact after N steps since x has no
  // constant term.
  NcSeries x = a.scaled(Rat(1) / a0) - Rat(1);
  NcSeries r = NcSeries::one(a.alphabet(), n);
  for (int k = 0; k < n; ++k) r = NcSeries::one(a.alphabet(), n) - x * r;
  return r.scaled(Rat(1) / a0);
}

NcSeries left_derivative(const NcSeries& a, int index) {
  if (index < 1 || index > a.alphabet())
    throw std::out_of_range("left_derivative: index out of range");
  NcSeries out(a.alphabet(), a.truncation());
  for (const auto& [w, c] : a.terms()) {
    if (w.degree() >= 1 && w.first() == index) out.add_coeff(w.tail(), c);
  }
  return out;
}

NcSeries substitute(const NcSeries& a,
                    const std::vector<NcSeries>& substituents) {
  if (static_cast<int>(substituents.size()) != a.alphabet())
    throw std::invalid_argument("substitute: need one series per letter");
  const int d_out = substituents.front().alphabet();
  int n = a.truncation();
  for (const auto& s : substituents) {
    if (s.alphabet() != d_out)
      throw std::invalid_argument("substitute: substituent alphabet mismatch");
    if (s.constant_term() != 0)
      throw std::domain_error("substitute: substituent has a constant term");
    n = std::min(n, s.truncation());
  }

  // Only prefixes of words actually present in a can contribute.
  std::unordered_set<uint64_t> live;
  for (const auto& [w, c] : a.terms()) {
    if (w.degree() > n) break;
    for (int k = 1; k <= w.degree(); ++k)
      live.insert(w.subword(0, k).packed());
  }

  NcSeries acc = NcSeries::constant(d_out, n, a.constant_term());
  // Walks the prefix tree carrying the partial product of substituents;
  // each substituent has positive minimal degree, so depth is capped by n.
  auto walk = [&](auto&& self, Word prefix, const NcSeries& product) -> void {
    if (!prefix.empty()) {
      const Rat& c = a.coeff(prefix);
      if (c != 0) acc = acc + product.scaled(c);
    }
    if (prefix.degree() == n) return;
    for (int i = 1; i <= a.alphabet(); ++i) {
      Word next = prefix.appended(i);
      if (!live.count(next.packed())) continue;
      self(self, next, product * substituents[i - 1]);
    }
  };
  walk(walk, Word{}, NcSeries::one(d_out, n));
  return acc;
}

}  // namespace cfree
