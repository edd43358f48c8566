#include "cfree/random.hpp"

namespace cfree {

Rat RatRng::coefficient() {
  Rat q(uniform_int(-3, 3), uniform_int(1, 3));
  q.canonicalize();
  return q;
}

Rat RatRng::nonzero_coefficient() {
  while (true) {
    Rat q = coefficient();
    if (q != 0) return q;
  }
}

Rat RatRng::positive() {
  Rat q(uniform_int(1, 4), uniform_int(1, 3));
  q.canonicalize();
  return q;
}

int RatRng::uniform_int(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(gen_);
}

Functional random_functional(RatRng& rng, int d, int truncation) {
  NcSeries m = NcSeries::one(d, truncation);
  for (int deg = 1; deg <= truncation; ++deg)
    for (Word w : words_of_degree(d, deg)) m.set_coeff(w, rng.coefficient());
  return Functional(std::move(m));
}

Functional random_symmetric_functional(RatRng& rng, int d, int truncation) {
  NcSeries m = NcSeries::one(d, truncation);
  for (int deg = 1; deg <= truncation; ++deg) {
    for (Word w : words_of_degree(d, deg)) {
      if (w.reversed() < w) continue;  // one draw per reversal pair
      Rat value = rng.coefficient();
      m.set_coeff(w, value);
      m.set_coeff(w.reversed(), value);
    }
  }
  return Functional(std::move(m));
}

Functional random_jacobi_state(RatRng& rng, int truncation) {
  JacobiParams params;
  const int levels = truncation / 2 + 1;
  for (int k = 0; k < levels; ++k) params.beta.push_back(rng.coefficient());
  for (int k = 0; k + 1 < levels; ++k) params.gamma.push_back(rng.positive());
  if (levels == 1) params.gamma.push_back(rng.positive());
  return moments_from_jacobi(params, truncation);
}

std::vector<Rat> random_point(RatRng& rng, int d) {
  std::vector<Rat> out;
  out.reserve(d);
  for (int i = 0; i < d; ++i) out.push_back(rng.coefficient());
  return out;
}

StateOpData<Rat> random_state_data(RatRng& rng, int d, int dim) {
  StateOpData<Rat> data;
  data.dim = dim;
  data.xi.assign(dim, Rat(0));
  data.xi[0] = 1;
  for (int v = 0; v < d; ++v) {
    DenseMatrix<Rat> op(dim);
    for (int i = 0; i < dim; ++i)
      for (int j = i; j < dim; ++j) {
        Rat value = rng.coefficient();
        op.at(i, j) = value;
        op.at(j, i) = value;
      }
    data.k_ops.push_back(std::move(op));
  }
  return data;
}

FreeOpData<Rat> random_free_data(RatRng& rng, int d, int dim) {
  FreeOpData<Rat> data;
  data.dim = dim;
  for (int v = 0; v < d; ++v) {
    Vec<Rat> zeta;
    for (int i = 0; i < dim; ++i) zeta.push_back(rng.coefficient());
    data.zeta.push_back(std::move(zeta));
    DenseMatrix<Rat> op(dim);
    for (int i = 0; i < dim; ++i)
      for (int j = i; j < dim; ++j) {
        Rat value = rng.coefficient();
        op.at(i, j) = value;
        op.at(j, i) = value;
      }
    data.h_ops.push_back(std::move(op));
    data.lambda.push_back(rng.coefficient());
  }
  return data;
}

}  // namespace cfree
