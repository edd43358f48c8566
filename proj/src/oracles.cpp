#include "cfree/oracles.hpp"

#include <stdexcept>

namespace cfree::oracles {

namespace {

Word block_word(Word w, const std::vector<int>& block) {
  std::vector<int> letters;
  letters.reserve(block.size());
  for (int e : block) letters.push_back(w.letter(e - 1));
  return Word(letters);
}

Rat block_product(Word w, const SetPartition& p, const NcSeries& values) {
  Rat out(1);
  for (const auto& block : p.blocks) {
    out *= values.coeff(block_word(w, block));
    if (out == 0) break;
  }
  return out;
}

}  // namespace

NcSeries boolean_cumulants(const Functional& f) {
  const int d = f.alphabet();
  const int n = f.truncation();
  NcSeries eta(d, n);
  for (int deg = 1; deg <= n; ++deg) {
    const auto parts = enumerate_interval(deg);
    for (Word w : words_of_degree(d, deg)) {
      Rat rest(0);
      for (const auto& p : parts) {
        if (p.block_count() == 1) continue;
        rest += block_product(w, p, eta);
      }
      Rat value = f.moment(w) - rest;
      if (value != 0) eta.set_coeff(w, std::move(value));
    }
  }
  return eta;
}

Functional moments_from_boolean(const NcSeries& eta) {
  if (eta.constant_term() != 0)
    throw std::invalid_argument("moments_from_boolean: nonzero constant term");
  const int d = eta.alphabet();
  const int n = eta.truncation();
  NcSeries m = NcSeries::one(d, n);
  for (int deg = 1; deg <= n; ++deg) {
    const auto parts = enumerate_interval(deg);
    for (Word w : words_of_degree(d, deg)) {
      Rat total(0);
      for (const auto& p : parts) total += block_product(w, p, eta);
      if (total != 0) m.set_coeff(w, std::move(total));
    }
  }
  return Functional(std::move(m));
}

NcSeries free_cumulants(const Functional& f) {
  const int d = f.alphabet();
  const int n = f.truncation();
  NcSeries r(d, n);
  for (int deg = 1; deg <= n; ++deg) {
    const auto parts = enumerate_nc(deg);
    for (Word w : words_of_degree(d, deg)) {
      Rat rest(0);
      for (const auto& p : parts) {
        if (p.block_count() == 1) continue;
        rest += block_product(w, p, r);
      }
      Rat value = f.moment(w) - rest;
      if (value != 0) r.set_coeff(w, std::move(value));
    }
  }
  return r;
}

Functional moments_from_free(const NcSeries& r) {
  if (r.constant_term() != 0)
    throw std::invalid_argument("moments_from_free: nonzero constant term");
  const int d = r.alphabet();
  const int n = r.truncation();
  NcSeries m = NcSeries::one(d, n);
  for (int deg = 1; deg <= n; ++deg) {
    const auto parts = enumerate_nc(deg);
    for (Word w : words_of_degree(d, deg)) {
      Rat total(0);
      for (const auto& p : parts) total += block_product(w, p, r);
      if (total != 0) m.set_coeff(w, std::move(total));
    }
  }
  return Functional(std::move(m));
}

NcSeries two_state_cumulants(const Functional& phi, const Functional& psi) {
  if (phi.alphabet() != psi.alphabet())
    throw std::invalid_argument("two_state_cumulants: alphabet mismatch");
  const int d = phi.alphabet();
  const int n = std::min(phi.truncation(), psi.truncation());
  const NcSeries psi_free = free_cumulants(
      Functional(psi.moments().truncated(n)));
  NcSeries r(d, n);
  for (int deg = 1; deg <= n; ++deg) {
    const auto parts = enumerate_nc(deg);
    std::vector<BlockClasses> classes;
    classes.reserve(parts.size());
    for (const auto& p : parts) classes.push_back(classify_blocks(p));
    for (Word w : words_of_degree(d, deg)) {
      Rat rest(0);
      for (size_t pi = 0; pi < parts.size(); ++pi) {
        const auto& p = parts[pi];
        if (p.block_count() == 1) continue;
        Rat term(1);
        for (int b : classes[pi].outer) {
          term *= r.coeff(block_word(w, p.blocks[b]));
          if (term == 0) break;
        }
        if (term == 0) continue;
        for (int b : classes[pi].inner) {
          term *= psi_free.coeff(block_word(w, p.blocks[b]));
          if (term == 0) break;
        }
        rest += term;
      }
      Rat value = phi.moment(w) - rest;
      if (value != 0) r.set_coeff(w, std::move(value));
    }
  }
  return r;
}

Functional two_state_moments(const NcSeries& r, const Functional& psi) {
  if (r.alphabet() != psi.alphabet())
    throw std::invalid_argument("two_state_moments: alphabet mismatch");
  if (r.constant_term() != 0)
    throw std::invalid_argument("two_state_moments: nonzero constant term");
  const int d = r.alphabet();
  const int n = std::min(r.truncation(), psi.truncation());
  const NcSeries psi_free = free_cumulants(
      Functional(psi.moments().truncated(n)));
  NcSeries m = NcSeries::one(d, n);
  for (int deg = 1; deg <= n; ++deg) {
    const auto parts = enumerate_nc(deg);
    std::vector<BlockClasses> classes;
    classes.reserve(parts.size());
    for (const auto& p : parts) classes.push_back(classify_blocks(p));
    for (Word w : words_of_degree(d, deg)) {
      Rat total(0);
      for (size_t pi = 0; pi < parts.size(); ++pi) {
        const auto& p = parts[pi];
        Rat term(1);
        for (int b : classes[pi].outer) {
          term *= r.coeff(block_word(w, p.blocks[b]));
          if (term == 0) break;
        }
        if (term == 0) continue;
        for (int b : classes[pi].inner) {
          term *= psi_free.coeff(block_word(w, p.blocks[b]));
          if (term == 0) break;
        }
        total += term;
      }
      if (total != 0) m.set_coeff(w, std::move(total));
    }
  }
  return Functional(std::move(m));
}

}  // namespace cfree::oracles
