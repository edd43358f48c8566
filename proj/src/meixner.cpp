#include "cfree/meixner.hpp"

#include <Eigen/Dense>
#include <stdexcept>

#include "cfree/cumulants.hpp"
#include "cfree/transforms.hpp"

namespace cfree {

namespace {

void require_one_variable(const Functional& f, const char* who) {
  if (f.alphabet() != 1)
    throw std::invalid_argument(std::string(who) + ": single variable only");
}

// <P, Q> = sum p_a q_b m_{a+b} for one-variable polynomials given by
// coefficient vectors.
Rat moment_pairing(const std::vector<Rat>& p, const std::vector<Rat>& q,
                   const Functional& f) {
  Rat out(0);
  for (size_t a = 0; a < p.size(); ++a) {
    if (p[a] == 0) continue;
    for (size_t b = 0; b < q.size(); ++b) {
      if (q[b] == 0) continue;
      out += p[a] * q[b] *
             f.moment(Word(std::vector<int>(a + b, 1)));
    }
  }
  return out;
}

std::vector<Rat> shift_up(const std::vector<Rat>& p) {  // multiply by x
  std::vector<Rat> out(p.size() + 1, Rat(0));
  for (size_t i = 0; i < p.size(); ++i) out[i + 1] = p[i];
  return out;
}

std::vector<Word> gram_words(int d, int level, bool conditional) {
  std::vector<Word> out;
  for (int n = conditional ? 1 : 0; n <= level; ++n)
    for (Word w : words_of_degree(d, n)) out.push_back(w);
  return out;
}

bool rational_psd(std::vector<std::vector<Rat>> m) {
  // Pivoted symmetric elimination: PSD iff every pivot is > 0 and any
  // zero-diagonal row is entirely zero in the remaining block.
  const int n = static_cast<int>(m.size());
  std::vector<char> done(n, 0);
  while (true) {
    int pivot = -1;
    for (int i = 0; i < n; ++i)
      if (!done[i] && m[i][i] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) {
      for (int i = 0; i < n; ++i) {
        if (done[i]) continue;
        for (int j = 0; j < n; ++j)
          if (!done[j] && m[i][j] != 0) return false;
      }
      return true;
    }
    if (m[pivot][pivot] < 0) return false;
    for (int i = 0; i < n; ++i) {
      if (done[i] || i == pivot || m[i][pivot] == 0) continue;
      Rat factor = m[i][pivot] / m[pivot][pivot];
      for (int j = 0; j < n; ++j) {
        if (done[j]) continue;
        m[i][j] -= factor * m[pivot][j];
      }
    }
    done[pivot] = 1;
  }
}

PsdReport eigen_verdict(const Eigen::MatrixXd& g, double eps) {
  PsdReport report;
  if (g.rows() == 0) {
    report.psd = true;
    return report;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g);
  report.min_eigenvalue = solver.eigenvalues().minCoeff();
  report.max_eigenvalue = solver.eigenvalues().maxCoeff();
  const double scale = std::max(
      {std::abs(report.min_eigenvalue), std::abs(report.max_eigenvalue), 1.0});
  report.psd = report.min_eigenvalue >= -eps * scale;
  return report;
}

}  // namespace

Functional moments_from_jacobi(const JacobiParams& params, int truncation) {
  const int levels = truncation / 2 + 1;  // matrix size, levels 0..N/2
  int eff = levels;
  for (int k = 0; k + 1 < levels; ++k) {
    if (k < static_cast<int>(params.gamma.size()) && params.gamma[k] == 0) {
      eff = k + 1;  // zero gamma: the walk never passes this level
      break;
    }
  }
  // A 0->0 walk of length <= N never pauses on the top level, so the top
  // beta is not needed when N is even.
  const bool cut = eff < levels;
  const int need_beta = cut ? eff : std::min(levels, (truncation + 1) / 2);
  const int need_gamma = cut ? eff - 1 : truncation / 2;
  if (static_cast<int>(params.beta.size()) < need_beta ||
      static_cast<int>(params.gamma.size()) < need_gamma)
    throw std::invalid_argument(
        "moments_from_jacobi: insufficient parameters for this degree");
  auto beta_at = [&](int k) {
    return k < static_cast<int>(params.beta.size()) ? params.beta[k] : Rat(0);
  };

  NcSeries m = NcSeries::one(1, truncation);
  // v = (recursion matrix)^n applied to e_0; moment n is its 0 entry.
  std::vector<Rat> v(eff, Rat(0));
  v[0] = 1;
  for (int n = 1; n <= truncation; ++n) {
    std::vector<Rat> next(eff, Rat(0));
    for (int k = 0; k < eff; ++k) {
      if (v[k] == 0) continue;
      next[k] += beta_at(k) * v[k];
      if (k + 1 < eff) next[k + 1] += v[k];
      if (k > 0) next[k - 1] += params.gamma[k - 1] * v[k];
    }
    v = std::move(next);
    if (v[0] != 0) m.set_coeff(Word(std::vector<int>(n, 1)), v[0]);
  }
  return Functional(std::move(m));
}

JacobiParams jacobi_from_moments(const Functional& f, int levels) {
  require_one_variable(f, "jacobi_from_moments");
  if (levels < 1) throw std::invalid_argument("jacobi_from_moments: levels");
  if (2 * levels > f.truncation())
    throw std::invalid_argument(
        "jacobi_from_moments: truncation too small for requested levels");
  JacobiParams out;
  std::vector<Rat> prev;            // P_{n-1}
  std::vector<Rat> cur = {Rat(1)};  // P_0
  Rat norm_cur = moment_pairing(cur, cur, f);  // = 1
  for (int n = 0; n < levels; ++n) {
    out.beta.push_back(moment_pairing(shift_up(cur), cur, f) / norm_cur);
    // P_{n+1} = (x - beta_n) P_n - gamma_n P_{n-1}
    std::vector<Rat> next = shift_up(cur);
    for (size_t i = 0; i < cur.size(); ++i) next[i] -= out.beta.back() * cur[i];
    if (n > 0) {
      const Rat& gamma_prev = out.gamma.back();
      for (size_t i = 0; i < prev.size(); ++i) next[i] -= gamma_prev * prev[i];
    }
    Rat norm_next = moment_pairing(next, next, f);
    Rat gamma = norm_next / norm_cur;
    out.gamma.push_back(gamma);
    if (gamma == 0) break;  // finitely supported: stop at the zero level
    prev = std::move(cur);
    cur = std::move(next);
    norm_cur = std::move(norm_next);
  }
  return out;
}

JacobiParams boolean_shift_jacobi(const JacobiParams& params, const Rat& alpha,
                                  const Rat& t) {
  JacobiParams out = params;
  if (out.beta.empty()) out.beta.push_back(Rat(0));
  out.beta[0] = alpha + t * out.beta[0];
  if (!out.gamma.empty()) out.gamma[0] = t * out.gamma[0];
  return out;
}

Functional semicircular(const Rat& mean, const Rat& variance, int truncation) {
  NcSeries r(1, truncation);
  r.set_coeff(Word{1}, mean);
  r.set_coeff(Word{1, 1}, variance);
  return moments_from_free(CumulantSeries(CumulantKind::kFree, std::move(r)));
}

Functional meixner_functional(const Rat& b, const Rat& c, int truncation) {
  const int levels = truncation / 2 + 1;
  JacobiParams params;
  params.beta.assign(levels, b);
  params.beta[0] = 0;
  params.gamma.assign(std::max(levels - 1, 1), Rat(1) + c);
  params.gamma[0] = 1;
  return moments_from_jacobi(params, truncation);
}

Functional meixner_functional(const MeixnerParams& params, int truncation) {
  Functional base = meixner_functional(params.b, params.c, truncation);
  if (!params.mean && !params.variance) return base;
  const Rat alpha = params.mean.value_or(Rat(0));
  const Rat t = params.variance.value_or(Rat(1));
  const Functional shift = delta_state({alpha}, truncation);
  if (params.dressing == MeixnerParams::Dressing::kFree)
    return free_convolve(free_power(base, t), shift);
  return boolean_convolve(boolean_power(base, t), shift);
}

std::optional<int> PdeReport::first_failing_degree() const {
  int deg = -1;
  if (!r_form_residual.is_zero())
    deg = r_form_residual.terms().begin()->first.degree();
  if (!eta_form_residual.is_zero()) {
    int e = eta_form_residual.terms().begin()->first.degree();
    deg = deg < 0 ? e : std::min(deg, e);
  }
  if (deg < 0) return std::nullopt;
  return deg;
}

MultiPdeReport meixner_pde_check(const Functional& f,
                                 const std::vector<RatMatrix>& b_tensor,
                                 const RatMatrix& c_matrix) {
  const int d = f.alphabet();
  const int n = f.truncation();
  if (static_cast<int>(b_tensor.size()) != d ||
      static_cast<int>(c_matrix.size()) != d)
    throw std::invalid_argument("meixner_pde_check: coefficient shape");
  const NcSeries r = free_from_moments(f).series;
  const NcSeries eta = boolean_from_moments(f).series;

  auto residuals = [&](const NcSeries& x, bool boolean_form) {
    std::vector<NcSeries> dx;
    for (int i = 1; i <= d; ++i) dx.push_back(left_derivative(x, i));
    std::vector<NcSeries> out;
    out.reserve(d * d);
    for (int i = 1; i <= d; ++i) {
      for (int j = 1; j <= d; ++j) {
        NcSeries res = left_derivative(dx[j - 1], i);
        if (i == j) res = res - Rat(1);
        for (int k = 1; k <= d; ++k) {
          const Rat& w = b_tensor[k - 1][i - 1][j - 1];
          if (w != 0) res = res - dx[k - 1].scaled(w);
        }
        Rat quad = c_matrix[i - 1][j - 1];
        if (boolean_form) quad += 1;
        if (quad != 0) res = res - (dx[i - 1] * dx[j - 1]).scaled(quad);
        out.push_back(res.truncated(std::max(n - 2, 0)));
      }
    }
    return out;
  };

  MultiPdeReport report;
  report.r_form = residuals(r, false);
  report.eta_form = residuals(eta, true);
  return report;
}

bool MultiPdeReport::ok() const {
  for (const auto& s : r_form)
    if (!s.is_zero()) return false;
  for (const auto& s : eta_form)
    if (!s.is_zero()) return false;
  return true;
}

PdeReport meixner_pde_check(const Functional& f, const Rat& b, const Rat& c) {
  require_one_variable(f, "meixner_pde_check");
  std::vector<RatMatrix> b_tensor = {{{b}}};
  RatMatrix c_matrix = {{c}};
  auto multi = meixner_pde_check(f, b_tensor, c_matrix);
  return PdeReport{std::move(multi.r_form.front()),
                   std::move(multi.eta_form.front())};
}

NcSeries two_state_pde_residual(const Functional& phi, const Functional& psi,
                                const Rat& b, const Rat& c) {
  require_one_variable(phi, "two_state_pde_residual");
  require_one_variable(psi, "two_state_pde_residual");
  const int n = std::min(phi.truncation(), psi.truncation());
  NcSeries rp = two_state_from_pair(Functional(phi.moments().truncated(n)),
                                    Functional(psi.moments().truncated(n)))
                    .series;
  NcSeries rpsi = free_from_moments(
                      Functional(psi.moments().truncated(n)))
                      .series;
  NcSeries drp = left_derivative(rp, 1);
  NcSeries drpsi = left_derivative(rpsi, 1);
  NcSeries res = left_derivative(drp, 1) - Rat(1) - drp.scaled(b) -
                 (drp * drp).scaled(Rat(1) + c) + drpsi * drp;
  return res.truncated(std::max(n - 2, 0));
}

PsdReport psd_check(const Functional& f, int level, double eps,
                    bool conditional) {
  if (2 * level > f.truncation())
    throw std::invalid_argument("psd_check: 2k exceeds the truncation degree");
  const auto words = gram_words(f.alphabet(), level, conditional);
  const int n = static_cast<int>(words.size());
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g(i, j) = rat_to_double(f.moment(words[i].reversed().concat(words[j])));
  PsdReport report = eigen_verdict(g, eps);
  // A verdict within a whisker of the threshold is settled exactly.
  const double scale = std::max(
      {std::abs(report.min_eigenvalue), std::abs(report.max_eigenvalue), 1.0});
  if (n <= 48 && std::abs(report.min_eigenvalue) <= 64 * eps * scale) {
    report.psd = psd_check_exact(f, level, conditional);
    report.exact_confirmed = true;
  }
  return report;
}

bool psd_check_exact(const Functional& f, int level, bool conditional) {
  if (2 * level > f.truncation())
    throw std::invalid_argument(
        "psd_check_exact: 2k exceeds the truncation degree");
  const auto words = gram_words(f.alphabet(), level, conditional);
  const int n = static_cast<int>(words.size());
  std::vector<std::vector<Rat>> g(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g[i][j] = f.moment(words[i].reversed().concat(words[j]));
  return rational_psd(std::move(g));
}

PsdReport cpd_one_variable_check(const std::vector<Rat>& f_seq,
                                 const std::vector<Rat>& g_seq, int truncation,
                                 double eps) {
  NcSeries fs(1, truncation);
  NcSeries gs(1, truncation);
  for (int k = 0; k <= truncation; ++k) {
    if (k < static_cast<int>(f_seq.size()))
      fs.set_coeff(Word(std::vector<int>(k, 1)), f_seq[k]);
    if (k < static_cast<int>(g_seq.size()))
      gs.set_coeff(Word(std::vector<int>(k, 1)), g_seq[k]);
  }
  NcSeries argument = NcSeries::variable(1, truncation, 1) * gs;
  NcSeries h = substitute(fs, {argument}) * gs;
  const int size = truncation / 2 + 1;
  Eigen::MatrixXd hankel(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      hankel(i, j) =
          rat_to_double(h.coeff(Word(std::vector<int>(i + j, 1))));
  return eigen_verdict(hankel, eps);
}

}  // namespace cfree
