#include "tetragauge/tensor_core.hpp"

#include <stdexcept>
#include <string>

namespace tetragauge {

Index::Index(int value) : value_(value) {
  if (value < 0 || value >= kDim)
    throw std::out_of_range("index out of range 0..3: " + std::to_string(value));
}

namespace detail {

const std::array<EpsTerm, 24>& eps_terms() noexcept {
  static const std::array<EpsTerm, 24> terms = [] {
    std::array<EpsTerm, 24> out{};
    std::size_t n = 0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
          for (int d = 0; d < 4; ++d)
            if (int s = eps(a, b, c, d); s != 0) out[n++] = {a, b, c, d, s};
    return out;
  }();
  return terms;
}

}  // namespace detail

int levi_civita(Index i, Index j, Index p, Index q) noexcept {
  return detail::eps(i.value(), j.value(), p.value(), q.value());
}

int eta(Index mu, Index nu) noexcept { return detail::eta(mu.value(), nu.value()); }

int epsilon_pair_contraction(Index xi, Index et, Index lambda, Index sigma) noexcept {
  int acc = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      acc += detail::eps(xi.value(), et.value(), a, b) *
             detail::eps(a, b, lambda.value(), sigma.value());
  return acc;
}

PairIndex pair_encode(Index mu, Index nu) {
  const int m = mu.value(), n = nu.value();
  if (m == n) throw std::invalid_argument("degenerate pair");
  return m < n ? PairIndex{detail::pair_code(m, n), 1.0}
               : PairIndex{detail::pair_code(n, m), -1.0};
}

std::pair<Index, Index> pair_decode(int code) {
  if (code < 0 || code >= kPairCount) throw std::out_of_range("pair code out of range 0..5");
  return {Index(detail::kPairFirst[code]), Index(detail::kPairSecond[code])};
}

}  // namespace tetragauge
