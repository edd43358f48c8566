#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>

#include "cfree/functional.hpp"
#include "cfree/meixner.hpp"

namespace cfree {

/// Small dense square matrix; scalar is exact rational or double.
template <typename T>
struct DenseMatrix {
  int n = 0;
  std::vector<T> entries;  // row-major

  DenseMatrix() = default;
  explicit DenseMatrix(int size) : n(size), entries(size * size, T(0)) {}

  T& at(int i, int j) { return entries[i * n + j]; }
  const T& at(int i, int j) const { return entries[i * n + j]; }

  bool is_symmetric() const {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (!(at(i, j) == at(j, i))) return false;
    return true;
  }
};

template <typename T>
using Vec = std::vector<T>;

/// Data realizing a state directly: psi[x_u] = <xi, K_{u_1}...K_{u_n} xi>.
/// xi must be a unit vector, every K_i symmetric.
template <typename T>
struct StateOpData {
  int dim = 0;
  Vec<T> xi;
  std::vector<DenseMatrix<T>> k_ops;

  int variables() const { return static_cast<int>(k_ops.size()); }
};

/// Data realizing a functional on the two-level space C Omega + K via
/// creation/annihilation of eps_i, a symmetric op S_i, and alpha_i times
/// the vacuum projection. <eps_i, S_u eps_j> are its Boolean cumulants.
template <typename T>
struct BooleanOpData {
  int dim = 0;
  std::vector<Vec<T>> eps;
  std::vector<DenseMatrix<T>> s_ops;
  std::vector<T> alpha;

  int variables() const { return static_cast<int>(s_ops.size()); }
};

/// Data realizing a functional on the truncated full Fock space over H via
/// creation/annihilation of zeta_i, the gauge of a symmetric H_i, and a
/// scalar lambda_i. <zeta_i, H_u zeta_j> are its free cumulants.
template <typename T>
struct FreeOpData {
  int dim = 0;
  std::vector<Vec<T>> zeta;
  std::vector<DenseMatrix<T>> h_ops;
  std::vector<T> lambda;

  int variables() const { return static_cast<int>(h_ops.size()); }
};

template <typename T>
void validate(const StateOpData<T>& data);
template <typename T>
void validate(const BooleanOpData<T>& data);
template <typename T>
void validate(const FreeOpData<T>& data);

StateOpData<double> to_double(const StateOpData<Rat>& data);
BooleanOpData<double> to_double(const BooleanOpData<Rat>& data);
FreeOpData<double> to_double(const FreeOpData<Rat>& data);

/// <xi, K_u xi> for all words of degree <= max_degree.
template <typename T>
std::map<Word, T> state_moments(const StateOpData<T>& data, int max_degree);

/// Two-level (vacuum + base space) model; the vacuum is basis vector 0.
template <typename T>
class BooleanFockModel {
 public:
  explicit BooleanFockModel(BooleanOpData<T> base);

  int variables() const { return base_.variables(); }
  int space_dim() const { return base_.dim + 1; }
  Vec<T> vacuum() const;
  Vec<T> apply_op(int letter, const Vec<T>& v) const;
  std::map<Word, T> vacuum_moments(int max_degree) const;
  const BooleanOpData<T>& base() const { return base_; }

 private:
  BooleanOpData<T> base_;
};

/// Truncated full Fock space over a dim-dimensional base: levels 0..depth,
/// creation into the top level is cut off. A vacuum moment of a word of
/// degree n only climbs n levels, so depth >= max_degree keeps moments of
/// degree <= max_degree exact.
template <typename T>
class FullFockModel {
 public:
  FullFockModel(FreeOpData<T> base, int depth);

  int variables() const { return base_.variables(); }
  int depth() const { return depth_; }
  int space_dim() const { return static_cast<int>(offsets_.back()); }
  Vec<T> vacuum() const;
  Vec<T> apply_op(int letter, const Vec<T>& v) const;
  /// Requires depth >= max_degree (the truncation guarantee).
  std::map<Word, T> vacuum_moments(int max_degree) const;
  const FreeOpData<T>& base() const { return base_; }

 private:
  FreeOpData<T> base_;
  int depth_;
  std::vector<int64_t> offsets_;  // offsets_[l] = first index of level l
};

/// Operators K_i (x) I + P_xi (x) H_i on the product space, with vectors
/// xi (x) zeta_i and scalars lambda_i. Its matrix elements produce the
/// composed cumulant values
///   eta[x_i x_u x_j] = <xi (x) zeta_i, prod (K (x) I + P_xi (x) H)
///                       (xi (x) zeta_j)>,   eta[x_i] = lambda_i.
template <typename T>
struct TensorEtaModel {
  int dim = 0;  // dim_K * dim_H
  std::vector<DenseMatrix<T>> ops;
  std::vector<Vec<T>> vectors;
  std::vector<T> lambda;

  int variables() const { return static_cast<int>(ops.size()); }
  T eta(Word w) const;
  std::map<Word, T> eta_table(int max_degree) const;
  /// Boolean-model data realizing the functional with these pair
  /// cumulants (two-level model over the product space).
  BooleanOpData<T> phi_boolean_data() const;
  /// Full-Fock data realizing the free functional with the same cumulants.
  FreeOpData<T> free_data() const;
};

template <typename T>
TensorEtaModel<T> tensor_eta_model(const StateOpData<T>& psi_data,
                                   const FreeOpData<T>& mu_data,
                                   int max_dim = 4096);

/// Product data {K_i (x) I + P_xi (x) H_i} with vector xi (x) zeta whose
/// joint distribution is the monotone convolution of the H-side state into
/// the K-side state.
template <typename T>
StateOpData<T> monotone_product_data(const StateOpData<T>& psi_data,
                                     const StateOpData<T>& phi_data);

/// Model of the free convolution of the state of psi_data with the free
/// functional of mu_data, on (truncated full Fock over K (x) H) (x) K.
/// The gauge acts on the first tensor letter, and as K_i directly on the
/// level-0 K slot.
template <typename T>
class ConvolutionStateModel {
 public:
  ConvolutionStateModel(StateOpData<T> psi_data, FreeOpData<T> mu_data,
                        int depth);

  int variables() const { return mu_.variables(); }
  int depth() const { return depth_; }
  int64_t space_dim() const { return f_dim_ * k_; }
  Vec<T> distinguished() const;  // Omega (x) xi
  Vec<T> apply_op(int letter, const Vec<T>& v) const;
  std::map<Word, T> moments(int max_degree) const;

  int64_t fock_dim() const { return f_dim_; }
  const StateOpData<T>& psi_data() const { return psi_; }
  const FreeOpData<T>& mu_data() const { return mu_; }

 private:
  StateOpData<T> psi_;
  FreeOpData<T> mu_;
  int k_, h_, w_;  // dim K, dim H, w = k*h
  int depth_;
  std::vector<int64_t> offsets_;
  int64_t f_dim_;
};

/// Two-level model over (ConvolutionStateModel space) (x) H: realizes the
/// composed functional whose pair cumulants relative to the convolved
/// state are the free cumulants of mu_data. Vacuum is index 0.
template <typename T>
class BooleanConvolutionModel {
 public:
  BooleanConvolutionModel(StateOpData<T> psi_data, FreeOpData<T> mu_data,
                          int depth);

  int variables() const { return inner_.variables(); }
  int64_t space_dim() const { return 1 + inner_.space_dim() * h_; }
  Vec<T> vacuum() const;
  Vec<T> apply_op(int letter, const Vec<T>& v) const;
  std::map<Word, T> vacuum_moments(int max_degree) const;

 private:
  ConvolutionStateModel<T> inner_;
  int h_;
};

/// Both operator realizations of the evolution identity at unit time: the
/// full-Fock model of the Boolean-to-free image of the composed functional
/// versus the two-level model over the convolved state. Also compares both
/// against the exact series pipeline driven by the same data.
struct EvolutionOperatorReport {
  double side_difference = 0;    // operator side vs operator side
  double series_difference = 0;  // operator sides vs exact pipeline
  int64_t words_checked = 0;

  bool ok(double tol) const {
    return side_difference < tol && series_difference < tol;
  }
};
EvolutionOperatorReport evolution_operator_check(
    const StateOpData<Rat>& psi_data, const FreeOpData<Rat>& mu_data,
    int max_degree, int depth);

/// Exact free cumulant series encoded by full-Fock data: lambda on single
/// letters, <zeta_i, H_u zeta_j> beyond.
NcSeries free_cumulant_series_from_data(const FreeOpData<Rat>& data,
                                        int truncation);
Functional functional_from_state_data(const StateOpData<Rat>& data,
                                      int truncation);

/// PSD of the Gram form of the model's eta values over words of degree
/// 1..level (conditional positivity).
PsdReport eta_conditional_psd(const TensorEtaModel<double>& model, int level,
                              double eps = 1e-9);

/// Finite-dimensional GNS compression of a functional onto polynomials of
/// degree <= level: the Gram kernel (eigenvalues below kernel_eps relative
/// to the largest) is quotiented out, multiplication operators are
/// compressed to the complement. Vacuum moments of the result reproduce f
/// through degree `level`.
struct GnsResult {
  StateOpData<double> data;
  int rank = 0;
  double min_eigenvalue = 0;
  double max_eigenvalue = 0;
};
GnsResult gns_from_functional(const Functional& f, int level,
                              double kernel_eps = 1e-10);

/// Conditional variant: compression of a conditionally PSD coefficient
/// series (a cumulant functional) onto the span of non-constant words of
/// degree <= level. zeta_i is the image of the word (i), the gauge ops are
/// compressed left multiplications, lambda_i the degree-1 values; the
/// resulting full-Fock data reproduces the series values
/// <zeta_i, H_u zeta_j> through total degree level + 1.
struct ConditionalGnsResult {
  FreeOpData<double> data;
  int rank = 0;
  double min_eigenvalue = 0;
  double max_eigenvalue = 0;
};
ConditionalGnsResult gns_from_cumulants(const NcSeries& values, int level,
                                        double kernel_eps = 1e-10);

}  // namespace cfree
