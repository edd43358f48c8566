#include "cfree/cumulants.hpp"

#include <stdexcept>
#include <utility>

namespace cfree {

namespace {

void require_same_alphabet(int da, int db, const char* op) {
  if (da != db)
    throw std::invalid_argument(std::string(op) + ": alphabet mismatch");
}

// Letters of w at the 0-based positions listed in pos.
Word subword_at(Word w, const std::vector<int>& pos) {
  std::vector<int> letters;
  letters.reserve(pos.size());
  for (int p : pos) letters.push_back(w.letter(p));
  return Word(letters);
}

}  // namespace

NcSeries entangle(const NcSeries& r, const NcSeries& a_series) {
  require_same_alphabet(r.alphabet(), a_series.alphabet(), "entangle");
  const int d = r.alphabet();
  const int n = std::min(r.truncation(), a_series.truncation());
  std::vector<NcSeries> subs;
  subs.reserve(d);
  for (int i = 1; i <= d; ++i)
    subs.push_back(a_series.truncated(n) * NcSeries::variable(d, n, i));
  NcSeries centered = r.truncated(n);
  centered.set_coeff(Word{}, 0);
  return substitute(centered, subs);
}

NcSeries untangle(const NcSeries& g, const NcSeries& a_series) {
  require_same_alphabet(g.alphabet(), a_series.alphabet(), "untangle");
  if (g.constant_term() != 0)
    throw std::invalid_argument("untangle: g must have zero constant term");
  if (a_series.constant_term() != 1)
    throw std::invalid_argument("untangle: A must have constant term 1");
  const int d = g.alphabet();
  const int n = std::min(g.truncation(), a_series.truncation());

  std::vector<NcSeries> step;  // A z_i
  step.reserve(d);
  for (int i = 1; i <= d; ++i)
    step.push_back(a_series.truncated(n) * NcSeries::variable(d, n, i));

  NcSeries r(d, n);
  // acc = sum over already-solved words v of r[v] (A z_{v_1})...(A z_{v_k});
  // each product starts with z_v + higher degree, so the degree-k slice of
  // g - acc is exactly the next layer of coefficients.
  NcSeries acc(d, n);
  std::vector<std::pair<Word, NcSeries>> level;
  for (int k = 1; k <= n; ++k) {
    if (k == 1) {
      for (int i = 1; i <= d; ++i) level.emplace_back(Word{i}, step[i - 1]);
    } else {
      std::vector<std::pair<Word, NcSeries>> next;
      next.reserve(level.size() * d);
      for (const auto& [w, prod] : level)
        for (int i = 1; i <= d; ++i)
          next.emplace_back(w.appended(i), prod * step[i - 1]);
      level = std::move(next);
    }
    for (const auto& [w, prod] : level) {
      Rat value = g.coeff(w) - acc.coeff(w);
      if (value != 0) r.set_coeff(w, std::move(value));
    }
    if (k == n) break;
    for (const auto& [w, prod] : level) {
      const Rat& rv = r.coeff(w);
      if (rv != 0) acc = acc + prod.scaled(rv);
    }
  }
  return r;
}

CumulantSeries boolean_from_moments(const Functional& f) {
  NcSeries eta = NcSeries::one(f.alphabet(), f.truncation()) -
                 reciprocal(f.moments());
  return CumulantSeries(CumulantKind::kBoolean, std::move(eta));
}

Functional moments_from_boolean(const CumulantSeries& eta) {
  const int d = eta.alphabet();
  const int n = eta.truncation();
  return Functional(reciprocal(NcSeries::one(d, n) - eta.series));
}

CumulantSeries free_from_moments(const Functional& f) {
  NcSeries m = f.m_series();
  return CumulantSeries(CumulantKind::kFree, untangle(m, f.moments()));
}

CumulantSeries two_state_from_pair(const Functional& phi,
                                   const Functional& psi) {
  require_same_alphabet(phi.alphabet(), psi.alphabet(), "two_state_from_pair");
  const int n = std::min(phi.truncation(), psi.truncation());
  NcSeries a = psi.moments().truncated(n);
  NcSeries g = a * boolean_from_moments(phi).series.truncated(n);
  return CumulantSeries(CumulantKind::kTwoState, untangle(g, a));
}

Functional moments_from_free(const CumulantSeries& r) {
  const NcSeries& cum = r.series;
  const int d = cum.alphabet();
  const int n = cum.truncation();
  NcSeries m = NcSeries::one(d, n);
  // First-block recursion: split each word by the block of the leftmost
  // position; gaps between chosen positions and the tail after the last
  // one contribute lower-degree moments.
  for (int deg = 1; deg <= n; ++deg) {
    for (Word w : words_of_degree(d, deg)) {
      Rat total(0);
      const uint32_t masks = 1u << (deg - 1);
      std::vector<int> chosen;
      for (uint32_t mask = 0; mask < masks; ++mask) {
        chosen.clear();
        chosen.push_back(0);
        for (int k = 0; k < deg - 1; ++k)
          if (mask & (1u << k)) chosen.push_back(k + 1);
        const Rat& head = cum.coeff(subword_at(w, chosen));
        if (head == 0) continue;
        Rat term = head;
        bool dead = false;
        for (size_t j = 0; j + 1 < chosen.size(); ++j) {
          const int lo = chosen[j] + 1, hi = chosen[j + 1];
          if (lo == hi) continue;
          term *= m.coeff(w.subword(lo, hi - lo));
          if (term == 0) {
            dead = true;
            break;
          }
        }
        if (dead) continue;
        const int tail_lo = chosen.back() + 1;
        if (tail_lo < deg) term *= m.coeff(w.subword(tail_lo, deg - tail_lo));
        total += term;
      }
      if (total != 0) m.set_coeff(w, std::move(total));
    }
  }
  return Functional(std::move(m));
}

Functional pair_moments_from_two_state(const CumulantSeries& r,
                                       const Functional& psi) {
  require_same_alphabet(r.alphabet(), psi.alphabet(),
                        "pair_moments_from_two_state");
  const NcSeries& cum = r.series;
  const int d = cum.alphabet();
  const int n = std::min(cum.truncation(), psi.truncation());
  NcSeries m = NcSeries::one(d, n);
  // Same recursion, except the covered gaps are psi-moments (those blocks
  // are inner) while the tail stays in the functional being built.
  for (int deg = 1; deg <= n; ++deg) {
    for (Word w : words_of_degree(d, deg)) {
      Rat total(0);
      const uint32_t masks = 1u << (deg - 1);
      std::vector<int> chosen;
      for (uint32_t mask = 0; mask < masks; ++mask) {
        chosen.clear();
        chosen.push_back(0);
        for (int k = 0; k < deg - 1; ++k)
          if (mask & (1u << k)) chosen.push_back(k + 1);
        const Rat& head = cum.coeff(subword_at(w, chosen));
        if (head == 0) continue;
        Rat term = head;
        bool dead = false;
        for (size_t j = 0; j + 1 < chosen.size(); ++j) {
          const int lo = chosen[j] + 1, hi = chosen[j + 1];
          if (lo == hi) continue;
          term *= psi.moment(w.subword(lo, hi - lo));
          if (term == 0) {
            dead = true;
            break;
          }
        }
        if (dead) continue;
        const int tail_lo = chosen.back() + 1;
        if (tail_lo < deg) term *= m.coeff(w.subword(tail_lo, deg - tail_lo));
        total += term;
      }
      if (total != 0) m.set_coeff(w, std::move(total));
    }
  }
  return Functional(std::move(m));
}

}  // namespace cfree
