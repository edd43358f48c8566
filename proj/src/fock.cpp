#include "cfree/fock.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "cfree/cumulants.hpp"
#include "cfree/transforms.hpp"

namespace cfree {

namespace {

constexpr int64_t kSpaceLimit = 1 << 22;

template <typename T>
T dot(const Vec<T>& a, const Vec<T>& b) {
  T out(0);
  for (size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
  return out;
}

template <typename T>
Vec<T> matvec(const DenseMatrix<T>& m, const Vec<T>& v) {
  Vec<T> out(m.n, T(0));
  for (int i = 0; i < m.n; ++i) {
    T acc(0);
    for (int j = 0; j < m.n; ++j) acc += m.at(i, j) * v[j];
    out[i] = std::move(acc);
  }
  return out;
}

template <typename T>
bool scalar_is_one(const T& x) {
  if constexpr (std::is_same_v<T, double>)
    return std::abs(x - 1.0) < 1e-9;
  else
    return x == 1;
}

template <typename T>
void require_symmetric(const DenseMatrix<T>& m, const char* who) {
  if (!m.is_symmetric())
    throw std::invalid_argument(std::string(who) + ": operator not symmetric");
}

// Depth-first walk over all words of degree <= max_degree; the vector at a
// node is the operator word applied to the start vector, letters applied
// right to left.
template <typename T, typename Apply, typename Pair>
std::map<Word, T> word_table(int d, int max_degree, const Vec<T>& start,
                             Apply&& apply, Pair&& pair) {
  std::map<Word, T> out;
  auto rec = [&](auto&& self, Word suffix, const Vec<T>& v) -> void {
    out.emplace(suffix, pair(v));
    if (suffix.degree() == max_degree) return;
    for (int i = 1; i <= d; ++i) self(self, suffix.prepended(i), apply(i, v));
  };
  rec(rec, Word{}, start);
  return out;
}

PsdReport eigen_report(const Eigen::MatrixXd& g, double eps) {
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

template <typename T>
void validate(const StateOpData<T>& data) {
  if (static_cast<int>(data.xi.size()) != data.dim)
    throw std::invalid_argument("StateOpData: vector size");
  if (!scalar_is_one(dot(data.xi, data.xi)))
    throw std::invalid_argument("StateOpData: xi must be a unit vector");
  for (const auto& k : data.k_ops) {
    if (k.n != data.dim) throw std::invalid_argument("StateOpData: op size");
    require_symmetric(k, "StateOpData");
  }
}

template <typename T>
void validate(const BooleanOpData<T>& data) {
  if (data.eps.size() != data.s_ops.size() ||
      data.alpha.size() != data.s_ops.size())
    throw std::invalid_argument("BooleanOpData: per-variable sizes differ");
  for (const auto& e : data.eps)
    if (static_cast<int>(e.size()) != data.dim)
      throw std::invalid_argument("BooleanOpData: vector size");
  for (const auto& s : data.s_ops) {
    if (s.n != data.dim) throw std::invalid_argument("BooleanOpData: op size");
    require_symmetric(s, "BooleanOpData");
  }
}

template <typename T>
void validate(const FreeOpData<T>& data) {
  if (data.zeta.size() != data.h_ops.size() ||
      data.lambda.size() != data.h_ops.size())
    throw std::invalid_argument("FreeOpData: per-variable sizes differ");
  for (const auto& z : data.zeta)
    if (static_cast<int>(z.size()) != data.dim)
      throw std::invalid_argument("FreeOpData: vector size");
  for (const auto& h : data.h_ops) {
    if (h.n != data.dim) throw std::invalid_argument("FreeOpData: op size");
    require_symmetric(h, "FreeOpData");
  }
}

namespace {
template <typename T>
DenseMatrix<double> mat_to_double(const DenseMatrix<T>& m) {
  DenseMatrix<double> out(m.n);
  for (size_t i = 0; i < m.entries.size(); ++i)
    out.entries[i] = rat_to_double(m.entries[i]);
  return out;
}
Vec<double> vec_to_double(const Vec<Rat>& v) {
  Vec<double> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = rat_to_double(v[i]);
  return out;
}
}  // namespace

StateOpData<double> to_double(const StateOpData<Rat>& data) {
  StateOpData<double> out;
  out.dim = data.dim;
  out.xi = vec_to_double(data.xi);
  for (const auto& k : data.k_ops) out.k_ops.push_back(mat_to_double(k));
  return out;
}

BooleanOpData<double> to_double(const BooleanOpData<Rat>& data) {
  BooleanOpData<double> out;
  out.dim = data.dim;
  for (const auto& e : data.eps) out.eps.push_back(vec_to_double(e));
  for (const auto& s : data.s_ops) out.s_ops.push_back(mat_to_double(s));
  for (const auto& a : data.alpha) out.alpha.push_back(rat_to_double(a));
  return out;
}

FreeOpData<double> to_double(const FreeOpData<Rat>& data) {
  FreeOpData<double> out;
  out.dim = data.dim;
  for (const auto& z : data.zeta) out.zeta.push_back(vec_to_double(z));
  for (const auto& h : data.h_ops) out.h_ops.push_back(mat_to_double(h));
  for (const auto& l : data.lambda) out.lambda.push_back(rat_to_double(l));
  return out;
}

template <typename T>
std::map<Word, T> state_moments(const StateOpData<T>& data, int max_degree) {
  validate(data);
  return word_table<T>(
      data.variables(), max_degree, data.xi,
      [&](int i, const Vec<T>& v) { return matvec(data.k_ops[i - 1], v); },
      [&](const Vec<T>& v) { return dot(data.xi, v); });
}

template <typename T>
BooleanFockModel<T>::BooleanFockModel(BooleanOpData<T> base)
    : base_(std::move(base)) {
  validate(base_);
}

template <typename T>
Vec<T> BooleanFockModel<T>::vacuum() const {
  Vec<T> v(space_dim(), T(0));
  v[0] = T(1);
  return v;
}

template <typename T>
Vec<T> BooleanFockModel<T>::apply_op(int letter, const Vec<T>& v) const {
  const auto& eps = base_.eps[letter - 1];
  const auto& s = base_.s_ops[letter - 1];
  Vec<T> out(space_dim(), T(0));
  out[0] = base_.alpha[letter - 1] * v[0];
  for (int j = 0; j < base_.dim; ++j) out[0] += eps[j] * v[1 + j];
  for (int i = 0; i < base_.dim; ++i) {
    T acc = eps[i] * v[0];
    for (int j = 0; j < base_.dim; ++j) acc += s.at(i, j) * v[1 + j];
    out[1 + i] = std::move(acc);
  }
  return out;
}

template <typename T>
std::map<Word, T> BooleanFockModel<T>::vacuum_moments(int max_degree) const {
  return word_table<T>(
      variables(), max_degree, vacuum(),
      [&](int i, const Vec<T>& v) { return apply_op(i, v); },
      [&](const Vec<T>& v) { return v[0]; });
}

template <typename T>
FullFockModel<T>::FullFockModel(FreeOpData<T> base, int depth)
    : base_(std::move(base)), depth_(depth) {
  validate(base_);
  if (depth_ < 0) throw std::invalid_argument("FullFockModel: negative depth");
  offsets_.assign(depth_ + 2, 0);
  int64_t level_size = 1;
  for (int l = 0; l <= depth_; ++l) {
    offsets_[l + 1] = offsets_[l] + level_size;
    level_size *= base_.dim;
    if (offsets_[l + 1] > kSpaceLimit)
      throw std::length_error("FullFockModel: truncated space too large");
  }
}

template <typename T>
Vec<T> FullFockModel<T>::vacuum() const {
  Vec<T> v(space_dim(), T(0));
  v[0] = T(1);
  return v;
}

template <typename T>
Vec<T> FullFockModel<T>::apply_op(int letter, const Vec<T>& v) const {
  const auto& zeta = base_.zeta[letter - 1];
  const auto& gauge = base_.h_ops[letter - 1];
  const T& lam = base_.lambda[letter - 1];
  const int h = base_.dim;
  Vec<T> out(space_dim(), T(0));
  if (!(lam == T(0)))
    for (int64_t idx = 0; idx < space_dim(); ++idx) out[idx] = lam * v[idx];
  int64_t stride = 1;  // h^(l-1) while at level l
  for (int l = 0; l <= depth_; ++l) {
    const int64_t level_count = offsets_[l + 1] - offsets_[l];
    for (int64_t m = 0; m < level_count; ++m) {
      const T& x = v[offsets_[l] + m];
      if (x == T(0)) continue;
      if (l < depth_) {  // creation s.tau
        for (int s = 0; s < h; ++s) {
          if (zeta[s] == T(0)) continue;
          out[offsets_[l + 1] + s * level_count + m] += zeta[s] * x;
        }
      }
      if (l >= 1) {
        const int first = static_cast<int>(m / stride);
        const int64_t rest = m % stride;
        // annihilation
        if (!(zeta[first] == T(0)))
          out[offsets_[l - 1] + rest] += zeta[first] * x;
        // gauge on the first letter
        for (int s = 0; s < h; ++s) {
          const T& g = gauge.at(s, first);
          if (g == T(0)) continue;
          out[offsets_[l] + s * stride + rest] += g * x;
        }
      }
    }
    if (l >= 1) stride *= h;
    if (l == 0) stride = 1;
  }
  return out;
}

template <typename T>
std::map<Word, T> FullFockModel<T>::vacuum_moments(int max_degree) const {
  if (depth_ < max_degree)
    throw std::invalid_argument(
        "FullFockModel: depth below requested degree breaks the truncation "
        "guarantee");
  return word_table<T>(
      variables(), max_degree, vacuum(),
      [&](int i, const Vec<T>& v) { return apply_op(i, v); },
      [&](const Vec<T>& v) { return v[0]; });
}

template <typename T>
T TensorEtaModel<T>::eta(Word w) const {
  const int n = w.degree();
  if (n < 1) throw std::invalid_argument("TensorEtaModel::eta: empty word");
  if (n == 1) return lambda[w.first() - 1];
  Vec<T> u = vectors[w.last() - 1];
  for (int k = n - 2; k >= 1; --k) u = matvec(ops[w.letter(k) - 1], u);
  return dot(vectors[w.first() - 1], u);
}

template <typename T>
std::map<Word, T> TensorEtaModel<T>::eta_table(int max_degree) const {
  std::map<Word, T> out;
  for (int deg = 1; deg <= max_degree; ++deg)
    for (Word w : words_of_degree(variables(), deg)) out.emplace(w, eta(w));
  return out;
}

template <typename T>
BooleanOpData<T> TensorEtaModel<T>::phi_boolean_data() const {
  return BooleanOpData<T>{dim, vectors, ops, lambda};
}

template <typename T>
FreeOpData<T> TensorEtaModel<T>::free_data() const {
  return FreeOpData<T>{dim, vectors, ops, lambda};
}

template <typename T>
TensorEtaModel<T> tensor_eta_model(const StateOpData<T>& psi_data,
                                   const FreeOpData<T>& mu_data, int max_dim) {
  validate(psi_data);
  validate(mu_data);
  if (psi_data.variables() != mu_data.variables())
    throw std::invalid_argument("tensor_eta_model: variable count mismatch");
  const int k = psi_data.dim;
  const int h = mu_data.dim;
  if (static_cast<int64_t>(k) * h > max_dim)
    throw std::length_error("tensor_eta_model: product dimension too large");
  TensorEtaModel<T> model;
  model.dim = k * h;
  model.lambda = mu_data.lambda;
  for (int i = 0; i < mu_data.variables(); ++i) {
    DenseMatrix<T> op(model.dim);
    const auto& kop = psi_data.k_ops[i];
    const auto& hop = mu_data.h_ops[i];
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < h; ++b)
        for (int a2 = 0; a2 < k; ++a2)
          for (int b2 = 0; b2 < h; ++b2) {
            T value = (b == b2) ? kop.at(a, a2) : T(0);
            value += psi_data.xi[a] * psi_data.xi[a2] * hop.at(b, b2);
            op.at(a * h + b, a2 * h + b2) = std::move(value);
          }
    model.ops.push_back(std::move(op));
    Vec<T> vec(model.dim, T(0));
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < h; ++b)
        vec[a * h + b] = psi_data.xi[a] * mu_data.zeta[i][b];
    model.vectors.push_back(std::move(vec));
  }
  return model;
}

template <typename T>
StateOpData<T> monotone_product_data(const StateOpData<T>& psi_data,
                                     const StateOpData<T>& phi_data) {
  validate(psi_data);
  validate(phi_data);
  if (psi_data.variables() != phi_data.variables())
    throw std::invalid_argument("monotone_product_data: variable mismatch");
  FreeOpData<T> mu;
  mu.dim = phi_data.dim;
  mu.h_ops = phi_data.k_ops;
  mu.zeta.assign(phi_data.variables(), phi_data.xi);
  mu.lambda.assign(phi_data.variables(), T(0));
  auto tensor = tensor_eta_model(psi_data, mu);
  StateOpData<T> out;
  out.dim = tensor.dim;
  out.k_ops = tensor.ops;
  Vec<T> xi(tensor.dim, T(0));
  for (int a = 0; a < psi_data.dim; ++a)
    for (int b = 0; b < phi_data.dim; ++b)
      xi[a * phi_data.dim + b] = psi_data.xi[a] * phi_data.xi[b];
  out.xi = std::move(xi);
  return out;
}

template <typename T>
ConvolutionStateModel<T>::ConvolutionStateModel(StateOpData<T> psi_data,
                                                FreeOpData<T> mu_data,
                                                int depth)
    : psi_(std::move(psi_data)), mu_(std::move(mu_data)), depth_(depth) {
  validate(psi_);
  validate(mu_);
  if (psi_.variables() != mu_.variables())
    throw std::invalid_argument("ConvolutionStateModel: variable mismatch");
  k_ = psi_.dim;
  h_ = mu_.dim;
  w_ = k_ * h_;
  offsets_.assign(depth_ + 2, 0);
  int64_t level_size = 1;
  for (int l = 0; l <= depth_; ++l) {
    offsets_[l + 1] = offsets_[l] + level_size;
    level_size *= w_;
    if (offsets_[l + 1] * k_ > kSpaceLimit)
      throw std::length_error("ConvolutionStateModel: space too large");
  }
  f_dim_ = offsets_.back();
}

template <typename T>
Vec<T> ConvolutionStateModel<T>::distinguished() const {
  Vec<T> v(space_dim(), T(0));
  for (int a = 0; a < k_; ++a) v[a] = psi_.xi[a];  // Omega has f-index 0
  return v;
}

template <typename T>
Vec<T> ConvolutionStateModel<T>::apply_op(int letter, const Vec<T>& v) const {
  const auto& xi = psi_.xi;
  const auto& kop = psi_.k_ops[letter - 1];
  const auto& zeta = mu_.zeta[letter - 1];
  const auto& hop = mu_.h_ops[letter - 1];
  const T& lam = mu_.lambda[letter - 1];
  Vec<T> out(space_dim(), T(0));
  if (!(lam == T(0)))
    for (int64_t idx = 0; idx < space_dim(); ++idx) out[idx] = lam * v[idx];

  // Level-0 action of the state operator on the K slot.
  for (int a = 0; a < k_; ++a) {
    const T& x = v[a];
    if (x == T(0)) continue;
    for (int a2 = 0; a2 < k_; ++a2) {
      const T& g = kop.at(a2, a);
      if (!(g == T(0))) out[a2] += g * x;
    }
  }

  int64_t stride = 1;  // w^(l-1) while at level l
  for (int l = 0; l <= depth_; ++l) {
    const int64_t level_count = offsets_[l + 1] - offsets_[l];
    for (int64_t m = 0; m < level_count; ++m) {
      for (int a = 0; a < k_; ++a) {
        const T& x = v[(offsets_[l] + m) * k_ + a];
        if (x == T(0)) continue;
        if (l < depth_) {  // creation with xi (x) zeta
          for (int a2 = 0; a2 < k_; ++a2) {
            if (xi[a2] == T(0)) continue;
            for (int b2 = 0; b2 < h_; ++b2) {
              if (zeta[b2] == T(0)) continue;
              const int64_t s = a2 * h_ + b2;
              out[(offsets_[l + 1] + s * level_count + m) * k_ + a] +=
                  xi[a2] * zeta[b2] * x;
            }
          }
        }
        if (l >= 1) {
          const int first = static_cast<int>(m / stride);
          const int64_t rest = m % stride;
          const int fa = first / h_;
          const int fb = first % h_;
          // annihilation with xi (x) zeta
          if (!(xi[fa] == T(0)) && !(zeta[fb] == T(0)))
            out[(offsets_[l - 1] + rest) * k_ + a] += xi[fa] * zeta[fb] * x;
          // gauge of K (x) I on the first letter
          for (int a2 = 0; a2 < k_; ++a2) {
            const T& g = kop.at(a2, fa);
            if (g == T(0)) continue;
            out[(offsets_[l] + (a2 * h_ + fb) * stride + rest) * k_ + a] +=
                g * x;
          }
          // gauge of P_xi (x) H on the first letter
          if (!(xi[fa] == T(0))) {
            for (int a2 = 0; a2 < k_; ++a2) {
              if (xi[a2] == T(0)) continue;
              for (int b2 = 0; b2 < h_; ++b2) {
                const T& g = hop.at(b2, fb);
                if (g == T(0)) continue;
                out[(offsets_[l] + (a2 * h_ + b2) * stride + rest) * k_ + a] +=
                    xi[fa] * xi[a2] * g * x;
              }
            }
          }
        }
      }
    }
    if (l >= 1) stride *= w_;
  }
  return out;
}

template <typename T>
std::map<Word, T> ConvolutionStateModel<T>::moments(int max_degree) const {
  if (depth_ < max_degree)
    throw std::invalid_argument("ConvolutionStateModel: depth too small");
  const Vec<T> start = distinguished();
  return word_table<T>(
      variables(), max_degree, start,
      [&](int i, const Vec<T>& v) { return apply_op(i, v); },
      [&](const Vec<T>& v) { return dot(start, v); });
}

template <typename T>
BooleanConvolutionModel<T>::BooleanConvolutionModel(StateOpData<T> psi_data,
                                                    FreeOpData<T> mu_data,
                                                    int depth)
    : inner_(std::move(psi_data), std::move(mu_data), depth),
      h_(inner_.mu_data().dim) {
  if (inner_.space_dim() * h_ + 1 > kSpaceLimit)
    throw std::length_error("BooleanConvolutionModel: space too large");
}

template <typename T>
Vec<T> BooleanConvolutionModel<T>::vacuum() const {
  Vec<T> v(space_dim(), T(0));
  v[0] = T(1);
  return v;
}

template <typename T>
Vec<T> BooleanConvolutionModel<T>::apply_op(int letter, const Vec<T>& v) const {
  const auto& psi = inner_.psi_data();
  const auto& mu = inner_.mu_data();
  const auto& xi = psi.xi;
  const auto& zeta = mu.zeta[letter - 1];
  const auto& hop = mu.h_ops[letter - 1];
  const int k = psi.dim;
  const int64_t inner_dim = inner_.space_dim();
  Vec<T> out(space_dim(), T(0));

  // alpha P_Omega
  out[0] = mu.lambda[letter - 1] * v[0];
  // creation from and annihilation to the vacuum, with vector
  // (Omega (x) xi) (x) zeta_i
  for (int a = 0; a < k; ++a) {
    if (xi[a] == T(0)) continue;
    for (int b = 0; b < h_; ++b) {
      if (zeta[b] == T(0)) continue;
      const int64_t idx = 1 + static_cast<int64_t>(a) * h_ + b;
      out[idx] += xi[a] * zeta[b] * v[0];
      out[0] += xi[a] * zeta[b] * v[idx];
    }
  }
  // S_i = (convolution-state operator) (x) I on the non-vacuum part
  {
    Vec<T> slice(inner_dim);
    for (int b = 0; b < h_; ++b) {
      for (int64_t m = 0; m < inner_dim; ++m) slice[m] = v[1 + m * h_ + b];
      Vec<T> mapped = inner_.apply_op(letter, slice);
      for (int64_t m = 0; m < inner_dim; ++m) out[1 + m * h_ + b] += mapped[m];
    }
  }
  // P_(Omega (x) xi) (x) H_i
  for (int b = 0; b < h_; ++b) {
    T c(0);
    for (int a = 0; a < k; ++a)
      c += xi[a] * v[1 + static_cast<int64_t>(a) * h_ + b];
    if (c == T(0)) continue;
    for (int b2 = 0; b2 < h_; ++b2) {
      const T& g = hop.at(b2, b);
      if (g == T(0)) continue;
      for (int a = 0; a < k; ++a) {
        if (xi[a] == T(0)) continue;
        out[1 + static_cast<int64_t>(a) * h_ + b2] += xi[a] * g * c;
      }
    }
  }
  return out;
}

template <typename T>
std::map<Word, T> BooleanConvolutionModel<T>::vacuum_moments(
    int max_degree) const {
  if (inner_.depth() < max_degree)
    throw std::invalid_argument("BooleanConvolutionModel: depth too small");
  return word_table<T>(
      variables(), max_degree, vacuum(),
      [&](int i, const Vec<T>& v) { return apply_op(i, v); },
      [&](const Vec<T>& v) { return v[0]; });
}

NcSeries free_cumulant_series_from_data(const FreeOpData<Rat>& data,
                                        int truncation) {
  validate(data);
  const int d = data.variables();
  NcSeries r(d, truncation);
  for (int i = 0; i < d; ++i)
    r.set_coeff(Word{i + 1}, data.lambda[i]);
  for (int deg = 2; deg <= truncation; ++deg) {
    for (Word w : words_of_degree(d, deg)) {
      Vec<Rat> u = data.zeta[w.last() - 1];
      for (int k = deg - 2; k >= 1; --k)
        u = matvec(data.h_ops[w.letter(k) - 1], u);
      Rat value = dot(data.zeta[w.first() - 1], u);
      if (value != 0) r.set_coeff(w, std::move(value));
    }
  }
  return r;
}

Functional functional_from_state_data(const StateOpData<Rat>& data,
                                      int truncation) {
  auto table = state_moments(data, truncation);
  NcSeries m(data.variables(), truncation);
  for (auto& [w, value] : table)
    if (value != 0) m.set_coeff(w, std::move(value));
  return Functional(std::move(m));
}

EvolutionOperatorReport evolution_operator_check(
    const StateOpData<Rat>& psi_data, const FreeOpData<Rat>& mu_data,
    int max_degree, int depth) {
  // Exact series pipeline driven by the same data.
  Functional psi = functional_from_state_data(psi_data, max_degree);
  Functional rho = moments_from_free(CumulantSeries(
      CumulantKind::kFree,
      free_cumulant_series_from_data(mu_data, max_degree)));
  Functional free_side_exact = bercovici_pata(phi_map(rho, psi));
  Functional conv_side_exact = phi_map(rho, free_convolve(psi, rho));

  // Operator side A: full Fock space over the product base.
  auto tensor = tensor_eta_model(to_double(psi_data), to_double(mu_data));
  FullFockModel<double> side_a(tensor.free_data(), depth);
  auto a_table = side_a.vacuum_moments(max_degree);

  // Operator side B: two-level space over the convolved state.
  BooleanConvolutionModel<double> side_b(to_double(psi_data),
                                         to_double(mu_data), depth);
  auto b_table = side_b.vacuum_moments(max_degree);

  EvolutionOperatorReport report;
  for (const auto& [w, a_val] : a_table) {
    const double b_val = b_table.at(w);
    report.side_difference =
        std::max(report.side_difference, std::abs(a_val - b_val));
    report.series_difference = std::max(
        report.series_difference,
        std::abs(a_val - rat_to_double(free_side_exact.moment(w))));
    report.series_difference = std::max(
        report.series_difference,
        std::abs(b_val - rat_to_double(conv_side_exact.moment(w))));
    ++report.words_checked;
  }
  return report;
}

PsdReport eta_conditional_psd(const TensorEtaModel<double>& model, int level,
                              double eps) {
  std::vector<Word> words;
  for (int n = 1; n <= level; ++n)
    for (Word w : words_of_degree(model.variables(), n)) words.push_back(w);
  const int n = static_cast<int>(words.size());
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g(i, j) = model.eta(words[i].reversed().concat(words[j]));
  return eigen_report(g, eps);
}

GnsResult gns_from_functional(const Functional& f, int level,
                              double kernel_eps) {
  const int d = f.alphabet();
  if (2 * level + 1 > f.truncation())
    throw std::invalid_argument(
        "gns_from_functional: needs moments to degree 2*level + 1");
  std::vector<Word> words = words_up_to(d, level);
  const int n = static_cast<int>(words.size());
  Eigen::MatrixXd gram(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      gram(i, j) =
          rat_to_double(f.moment(words[i].reversed().concat(words[j])));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram);
  const double max_eig = solver.eigenvalues().maxCoeff();
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -1e-9 * std::max(max_eig, 1.0))
    throw std::domain_error("gns_from_functional: functional is not PSD at this level");

  std::vector<int> kept;
  for (int i = 0; i < n; ++i)
    if (solver.eigenvalues()(i) > kernel_eps * std::max(max_eig, 1e-300))
      kept.push_back(i);
  const int rank = static_cast<int>(kept.size());
  Eigen::MatrixXd v(n, rank);  // columns U_r Lambda_r^{-1/2}
  for (int c = 0; c < rank; ++c)
    v.col(c) = solver.eigenvectors().col(kept[c]) /
               std::sqrt(solver.eigenvalues()(kept[c]));

  GnsResult result;
  result.rank = rank;
  result.min_eigenvalue = min_eig;
  result.max_eigenvalue = max_eig;
  result.data.dim = rank;

  Eigen::VectorXd e0 = Eigen::VectorXd::Zero(n);
  e0(0) = 1.0;  // the empty word is first in canonical order
  Eigen::VectorXd xi = v.transpose() * gram * e0;
  result.data.xi.assign(xi.data(), xi.data() + rank);

  for (int letter = 1; letter <= d; ++letter) {
    Eigen::MatrixXd amat(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        amat(i, j) = rat_to_double(f.moment(
            words[i].reversed().concat(words[j].prepended(letter))));
    Eigen::MatrixXd compressed = v.transpose() * amat * v;
    compressed = 0.5 * (compressed + compressed.transpose().eval());
    DenseMatrix<double> op(rank);
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) op.at(i, j) = compressed(i, j);
    result.data.k_ops.push_back(std::move(op));
  }
  return result;
}

ConditionalGnsResult gns_from_cumulants(const NcSeries& values, int level,
                                        double kernel_eps) {
  const int d = values.alphabet();
  if (level < 1)
    throw std::invalid_argument("gns_from_cumulants: level must be >= 1");
  if (2 * level + 1 > values.truncation())
    throw std::invalid_argument(
        "gns_from_cumulants: needs values to degree 2*level + 1");
  std::vector<Word> words;
  for (int deg = 1; deg <= level; ++deg)
    for (Word w : words_of_degree(d, deg)) words.push_back(w);
  const int n = static_cast<int>(words.size());
  Eigen::MatrixXd gram(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      gram(i, j) =
          rat_to_double(values.coeff(words[i].reversed().concat(words[j])));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram);
  const double max_eig = solver.eigenvalues().maxCoeff();
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -1e-9 * std::max(max_eig, 1.0))
    throw std::domain_error(
        "gns_from_cumulants: values are not conditionally PSD at this level");

  std::vector<int> kept;
  for (int i = 0; i < n; ++i)
    if (solver.eigenvalues()(i) > kernel_eps * std::max(max_eig, 1e-300))
      kept.push_back(i);
  const int rank = static_cast<int>(kept.size());
  Eigen::MatrixXd v(n, rank);
  for (int c = 0; c < rank; ++c)
    v.col(c) = solver.eigenvectors().col(kept[c]) /
               std::sqrt(solver.eigenvalues()(kept[c]));

  ConditionalGnsResult result;
  result.rank = rank;
  result.min_eigenvalue = min_eig;
  result.max_eigenvalue = max_eig;
  result.data.dim = rank;
  for (int letter = 1; letter <= d; ++letter) {
    Eigen::MatrixXd amat(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        amat(i, j) = rat_to_double(values.coeff(
            words[i].reversed().concat(words[j].prepended(letter))));
    Eigen::MatrixXd compressed = v.transpose() * amat * v;
    compressed = 0.5 * (compressed + compressed.transpose().eval());
    DenseMatrix<double> op(rank);
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) op.at(i, j) = compressed(i, j);
    result.data.h_ops.push_back(std::move(op));

    Eigen::VectorXd basis = Eigen::VectorXd::Zero(n);
    basis(letter - 1) = 1.0;  // the word (letter) is among the first d
    Eigen::VectorXd zeta = v.transpose() * gram * basis;
    result.data.zeta.emplace_back(zeta.data(), zeta.data() + rank);
    result.data.lambda.push_back(rat_to_double(values.coeff(Word{letter})));
  }
  return result;
}

template void validate(const StateOpData<Rat>&);
template void validate(const StateOpData<double>&);
template void validate(const BooleanOpData<Rat>&);
template void validate(const BooleanOpData<double>&);
template void validate(const FreeOpData<Rat>&);
template void validate(const FreeOpData<double>&);
template std::map<Word, Rat> state_moments(const StateOpData<Rat>&, int);
template std::map<Word, double> state_moments(const StateOpData<double>&, int);
template class BooleanFockModel<Rat>;
template class BooleanFockModel<double>;
template class FullFockModel<Rat>;
template class FullFockModel<double>;
template struct TensorEtaModel<Rat>;
template struct TensorEtaModel<double>;
template TensorEtaModel<Rat> tensor_eta_model(const StateOpData<Rat>&,
                                              const FreeOpData<Rat>&, int);
template TensorEtaModel<double> tensor_eta_model(const StateOpData<double>&,
                                                 const FreeOpData<double>&,
                                                 int);
template StateOpData<Rat> monotone_product_data(const StateOpData<Rat>&,
                                                const StateOpData<Rat>&);
template StateOpData<double> monotone_product_data(const StateOpData<double>&,
                                                   const StateOpData<double>&);
template class ConvolutionStateModel<Rat>;
template class ConvolutionStateModel<double>;
template class BooleanConvolutionModel<Rat>;
template class BooleanConvolutionModel<double>;

}  // namespace cfree
