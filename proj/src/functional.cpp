#include "cfree/functional.hpp"

#include <stdexcept>

namespace cfree {

Functional::Functional(NcSeries moments) : moments_(std::move(moments)) {
  if (moments_.constant_term() != 1)
    throw std::invalid_argument(
        "Functional: empty-word moment must be exactly 1");
}

Functional Functional::from_m_series(const NcSeries& m) {
  if (m.constant_term() != 0)
    throw std::invalid_argument(
        "Functional::from_m_series: nonzero constant term");
  return Functional(m + Rat(1));
}

std::vector<Rat> Functional::mean() const {
  std::vector<Rat> out;
  out.reserve(alphabet());
  for (int i = 1; i <= alphabet(); ++i) out.push_back(moment(Word{i}));
  return out;
}

bool Functional::reversal_symmetric() const {
  for (const auto& [w, c] : moments_.terms())
    if (c != moments_.coeff(w.reversed())) return false;
  return true;
}

CumulantSeries::CumulantSeries(CumulantKind k, NcSeries s)
    : kind(k), series(std::move(s)) {
  if (series.constant_term() != 0)
    throw std::invalid_argument("CumulantSeries: nonzero constant term");
}

}  // namespace cfree
