#include "cfree/transforms.hpp"

#include <stdexcept>

#include "cfree/partition.hpp"

namespace cfree {

namespace {

void require_same_alphabet(int da, int db, const char* op) {
  if (da != db)
    throw std::invalid_argument(std::string(op) + ": alphabet mismatch");
}

std::vector<Rat> negated(const std::vector<Rat>& a) {
  std::vector<Rat> out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(-x);
  return out;
}

Word block_word(Word w, const std::vector<int>& block) {
  std::vector<int> letters;
  letters.reserve(block.size());
  for (int e : block) letters.push_back(w.letter(e - 1));
  return Word(letters);
}

}  // namespace

std::vector<Rat> zero_vector(int d) { return std::vector<Rat>(d, Rat(0)); }

Functional delta_state(const std::vector<Rat>& a, int truncation) {
  const int d = static_cast<int>(a.size());
  NcSeries m = NcSeries::one(d, truncation);
  for (int deg = 1; deg <= truncation; ++deg) {
    for (Word w : words_of_degree(d, deg)) {
      Rat value(1);
      for (int k = 0; k < deg; ++k) {
        value *= a[w.letter(k) - 1];
        if (value == 0) break;
      }
      if (value != 0) m.set_coeff(w, std::move(value));
    }
  }
  return Functional(std::move(m));
}

Functional free_convolve(const Functional& a, const Functional& b) {
  require_same_alphabet(a.alphabet(), b.alphabet(), "free_convolve");
  NcSeries r = free_from_moments(a).series + free_from_moments(b).series;
  return moments_from_free(CumulantSeries(CumulantKind::kFree, std::move(r)));
}

Functional boolean_convolve(const Functional& a, const Functional& b) {
  require_same_alphabet(a.alphabet(), b.alphabet(), "boolean_convolve");
  NcSeries eta =
      boolean_from_moments(a).series + boolean_from_moments(b).series;
  return moments_from_boolean(
      CumulantSeries(CumulantKind::kBoolean, std::move(eta)));
}

Functional free_power(const Functional& a, const Rat& t) {
  NcSeries r = free_from_moments(a).series.scaled(t);
  return moments_from_free(CumulantSeries(CumulantKind::kFree, std::move(r)));
}

Functional boolean_power(const Functional& a, const Rat& t) {
  NcSeries eta = boolean_from_moments(a).series.scaled(t);
  return moments_from_boolean(
      CumulantSeries(CumulantKind::kBoolean, std::move(eta)));
}

Functional monotone_convolve(const Functional& tau, const Functional& psi) {
  require_same_alphabet(tau.alphabet(), psi.alphabet(), "monotone_convolve");
  const int n = std::min(tau.truncation(), psi.truncation());
  NcSeries a = psi.moments().truncated(n);
  NcSeries outer = entangle(tau.m_series().truncated(n), a);
  return Functional((outer + Rat(1)) * a);
}

Functional orthogonal_convolve(const Functional& tau, const Functional& psi) {
  require_same_alphabet(tau.alphabet(), psi.alphabet(), "orthogonal_convolve");
  if (tau.alphabet() != 1)
    throw std::invalid_argument(
        "orthogonal_convolve: defined in a single variable only");
  return phi_map(bercovici_pata(tau), psi);
}

Functional phi_map(const Functional& rho, const Functional& psi) {
  require_same_alphabet(rho.alphabet(), psi.alphabet(), "phi_map");
  const int n = std::min(rho.truncation(), psi.truncation());
  NcSeries a = psi.moments().truncated(n);
  NcSeries r = free_from_moments(rho).series.truncated(n);
  NcSeries eta = reciprocal(a) * entangle(r, a);
  return moments_from_boolean(
      CumulantSeries(CumulantKind::kBoolean, std::move(eta)));
}

Functional phi_one_arg(const Functional& psi) {
  const int d = psi.alphabet();
  const int n = psi.truncation();
  NcSeries eta(d, n);
  for (int i = 1; i <= d; ++i) {
    NcSeries z = NcSeries::variable(d, n, i);
    eta = eta + z * psi.moments() * z;
  }
  return moments_from_boolean(
      CumulantSeries(CumulantKind::kBoolean, std::move(eta)));
}

Functional phi_free(const Functional& tau) {
  const int d = tau.alphabet();
  const int n = tau.truncation();
  NcSeries r(d, n);
  for (int i = 1; i <= d; ++i) {
    NcSeries z = NcSeries::variable(d, n, i);
    r = r + z * tau.moments() * z;
  }
  return moments_from_free(CumulantSeries(CumulantKind::kFree, std::move(r)));
}

Functional b_map(const Functional& rho, const std::vector<Rat>& a,
                 const Rat& t) {
  if (static_cast<int>(a.size()) != rho.alphabet())
    throw std::invalid_argument("b_map: shift vector has wrong length");
  if (t == -1)
    throw std::domain_error(
        "b_map: t = -1 is outside the defining formula; use "
        "phi_map(rho, delta_a)");
  const int n = rho.truncation();
  Functional shifted =
      free_convolve(free_power(rho, Rat(1) + t), delta_state(a, n));
  Functional recentred =
      boolean_convolve(shifted, delta_state(negated(a), n));
  return boolean_power(recentred, Rat(1) / (Rat(1) + t));
}

Functional b_map(const Functional& rho, const Rat& t) {
  return b_map(rho, zero_vector(rho.alphabet()), t);
}

Functional bercovici_pata(const Functional& rho) {
  return b_map(rho, Rat(1));
}

Functional bercovici_pata_inverse(const Functional& rho) {
  return free_power(boolean_power(rho, Rat(2)), Rat(1, 2));
}

Functional fermi_image(const Functional& rho) {
  return b_map(rho, rho.mean(), Rat(0));
}

Rat b_t_eta_oracle(const Functional& rho, const std::vector<Rat>& a,
                   const Rat& t, Word word) {
  const int n = word.degree();
  if (n < 2)
    throw std::invalid_argument("b_t_eta_oracle: needs a word of degree >= 2");
  if (static_cast<int>(a.size()) != rho.alphabet())
    throw std::invalid_argument("b_t_eta_oracle: shift vector length");
  const NcSeries eta = boolean_from_moments(rho).series;
  Rat total(0);
  for (const auto& p : enumerate_nc_prime(n)) {
    const auto singles = singleton_blocks(p);
    const uint32_t masks = 1u << singles.size();
    for (uint32_t mask = 0; mask < masks; ++mask) {
      // Blocks in the chosen singleton subset become scalar factors; the
      // rest keep their Boolean cumulant, weighted by t^(kept - 1).
      std::vector<char> dropped(p.block_count(), 0);
      Rat term(1);
      int kept = p.block_count();
      for (size_t s = 0; s < singles.size(); ++s) {
        if (mask & (1u << s)) {
          term *= a[word.letter(p.blocks[singles[s]].front() - 1) - 1];
          dropped[singles[s]] = 1;
          --kept;
        }
      }
      if (term == 0) continue;
      term *= rat_pow(t, kept - 1);
      if (term == 0) continue;
      for (int b = 0; b < p.block_count() && term != 0; ++b)
        if (!dropped[b]) term *= eta.coeff(block_word(word, p.blocks[b]));
      total += term;
    }
  }
  return total;
}

Rat fermi_eta_oracle(const Functional& rho, const std::vector<Rat>& a,
                     Word word) {
  const int n = word.degree();
  if (n < 2)
    throw std::invalid_argument("fermi_eta_oracle: needs degree >= 2");
  if (static_cast<int>(a.size()) != rho.alphabet())
    throw std::invalid_argument("fermi_eta_oracle: shift vector length");
  const NcSeries eta = boolean_from_moments(rho).series;
  Rat total(0);
  const uint32_t masks = n >= 2 ? (1u << (n - 2)) : 1;
  for (uint32_t mask = 0; mask < masks; ++mask) {
    std::vector<int> lambda = {0};
    Rat scal(1);
    for (int k = 1; k < n - 1; ++k) {
      if (mask & (1u << (k - 1)))
        lambda.push_back(k);
      else
        scal *= a[word.letter(k) - 1];
    }
    lambda.push_back(n - 1);
    if (scal == 0) continue;
    std::vector<int> letters;
    letters.reserve(lambda.size());
    for (int k : lambda) letters.push_back(word.letter(k));
    total += scal * eta.coeff(Word(letters));
  }
  return total;
}

Functional recover_psi(const Functional& rho, const Functional& phi) {
  require_same_alphabet(rho.alphabet(), phi.alphabet(), "recover_psi");
  const int d = rho.alphabet();
  const int n = std::min(rho.truncation(), phi.truncation());
  const NcSeries r = free_from_moments(rho).series.truncated(n);

  // Covariance block of the free cumulants; must be invertible for the
  // degree-by-degree solve to have a pivot on every column.
  std::vector<std::vector<Rat>> cov(d, std::vector<Rat>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      cov[i][j] = r.coeff(Word{i + 1, j + 1});
  {
    auto m = cov;  // fraction-free elimination to test the determinant
    Rat det(1);
    for (int col = 0; col < d; ++col) {
      int pivot = -1;
      for (int row = col; row < d; ++row)
        if (m[row][col] != 0) {
          pivot = row;
          break;
        }
      if (pivot < 0) {
        det = 0;
        break;
      }
      std::swap(m[col], m[pivot]);
      det *= m[col][col];
      for (int row = col + 1; row < d; ++row) {
        Rat factor = m[row][col] / m[col][col];
        for (int c2 = col; c2 < d; ++c2) m[row][c2] -= factor * m[col][c2];
      }
    }
    if (det == 0)
      throw std::domain_error(
          "recover_psi: singular covariance block at degree 2");
  }
  int pivot_row = 0;  // row with cov[pivot_row][0] != 0 (column 1 pivot)
  while (cov[pivot_row][0] == 0) ++pivot_row;

  const NcSeries eta = boolean_from_moments(phi).series.truncated(n);
  const NcSeries dr = left_derivative(r, pivot_row + 1);

  const int n_out = std::max(n - 2, 0);
  NcSeries q = NcSeries::one(d, n);
  // Target degree m determines the level m-1 of 1 + M^psi: the only
  // appearance of that level is through the linear covariance term.
  for (int m = 2; m <= n - 1; ++m) {
    std::vector<NcSeries> subs;
    subs.reserve(d);
    for (int i = 1; i <= d; ++i)
      subs.push_back(q.truncated(m) * NcSeries::variable(d, m, i));
    NcSeries known = substitute(dr.truncated(m), subs);
    for (Word v : words_of_degree(d, m - 1)) {
      Word target = v.appended(1);
      Rat rhs = eta.coeff(target.prepended(pivot_row + 1));
      Rat value = (rhs - known.coeff(target)) / cov[pivot_row][0];
      if (value != 0) q.set_coeff(v, std::move(value));
    }
  }
  return Functional((q - Rat(1)).truncated(n_out) + Rat(1));
}

std::optional<Word> EvolutionReport::first_failure() const {
  if (!evolution_diff.is_zero())
    return evolution_diff.terms().begin()->first;
  if (!first_arg_diff.is_zero())
    return first_arg_diff.terms().begin()->first;
  return std::nullopt;
}

EvolutionReport evolution_check(const Functional& rho, const Functional& psi,
                                const std::vector<Rat>& a, const Rat& t) {
  require_same_alphabet(rho.alphabet(), psi.alphabet(), "evolution_check");
  const int n = std::min(rho.truncation(), psi.truncation());
  Functional shift = delta_state(a, n);

  Functional evolved_psi =
      free_convolve(free_convolve(psi, free_power(rho, t)), shift);
  Functional lhs_b = phi_map(rho, evolved_psi);
  Functional rhs_b = b_map(phi_map(rho, psi), a, t);

  Functional lhs_a = phi_map(free_convolve(free_power(rho, t), shift), psi);
  Functional rhs_a =
      boolean_convolve(boolean_power(phi_map(rho, psi), t), shift);

  return EvolutionReport{lhs_b.moments() - rhs_b.moments(),
                         lhs_a.moments() - rhs_a.moments()};
}

Functional semicircular_product(int d, int truncation) {
  NcSeries r(d, truncation);
  for (int i = 1; i <= d; ++i)
    r.set_coeff(Word{i, i}, 1);
  return moments_from_free(CumulantSeries(CumulantKind::kFree, std::move(r)));
}

}  // namespace cfree
