// Fixed-dimension (n=4) index bookkeeping: permutation symbols, the
// Minkowski signature table, antisymmetric pair encoding and the exhaustive
// epsilon contraction identities used by every other module.
#ifndef TETRAGAUGE_TENSOR_CORE_HPP
#define TETRAGAUGE_TENSOR_CORE_HPP

#include <array>
#include <cstddef>
#include <utility>

namespace tetragauge {

inline constexpr int kDim = 4;
inline constexpr int kPairCount = 6;

/// A spacetime/frame index, 0-based internally (reports print 1-based).
class Index {
 public:
  explicit Index(int value);
  int value() const noexcept { return value_; }

 private:
  int value_;
};

namespace detail {

constexpr int eps_sign(int i, int j, int p, int q) noexcept {
  // Sign of the permutation (i,j,p,q) of (0,1,2,3); 0 on repeats.
  if (i == j || i == p || i == q || j == p || j == q || p == q) return 0;
  int inversions = 0;
  const int a[4] = {i, j, p, q};
  for (int s = 0; s < 4; ++s)
    for (int t = s + 1; t < 4; ++t)
      if (a[s] > a[t]) ++inversions;
  return (inversions % 2 == 0) ? 1 : -1;
}

constexpr std::array<int, 256> make_eps_table() noexcept {
  std::array<int, 256> table{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q)
          table[static_cast<std::size_t>(((i * 4 + j) * 4 + p) * 4 + q)] =
              eps_sign(i, j, p, q);
  return table;
}

inline constexpr std::array<int, 256> kEpsTable = make_eps_table();

// Raw fast paths for inner loops; callers guarantee indices in 0..3.
constexpr int eps(int i, int j, int p, int q) noexcept {
  return kEpsTable[static_cast<std::size_t>(((i * 4 + j) * 4 + p) * 4 + q)];
}

constexpr int eta_diag(int mu) noexcept { return mu == 0 ? -1 : 1; }

constexpr int eta(int mu, int nu) noexcept {
  return mu == nu ? eta_diag(mu) : 0;
}

// Lexicographic codes for ordered pairs (a,b), a<b:
//   (0,1)->0 (0,2)->1 (0,3)->2 (1,2)->3 (1,3)->4 (2,3)->5
inline constexpr int kPairFirst[kPairCount] = {0, 0, 0, 1, 1, 2};
inline constexpr int kPairSecond[kPairCount] = {1, 2, 3, 2, 3, 3};

constexpr int pair_code(int a, int b) noexcept {  // requires a < b
  constexpr int table[4][4] = {{-1, 0, 1, 2}, {-1, -1, 3, 4}, {-1, -1, -1, 5}, {-1, -1, -1, -1}};
  return table[a][b];
}

/// One nonzero term of the Levi-Civita symbol: indices and sign.
struct EpsTerm {
  int a, b, c, d;
  int sign;
};

/// The 24 nonzero entries of the permutation symbol, for contraction loops.
const std::array<EpsTerm, 24>& eps_terms() noexcept;

}  // namespace detail

/// Storage slot plus orientation sign of an antisymmetric index pair.
struct PairIndex {
  int code;     // 0..5, position of the ordered pair
  double sign;  // +1 if mu<nu was passed, -1 if mu>nu
};

/// Permutation symbol eps(i,j,p,q); upper and lower index placement evaluate
/// to the same integer (no metric factors).
int levi_civita(Index i, Index j, Index p, Index q) noexcept;

/// Signature table diag(-1,1,1,1); identical with both indices up or down.
int eta(Index mu, Index nu) noexcept;

/// sum_{a,b} eps(xi,eta,a,b) * eps(a,b,lambda,sigma).
/// Equals 2*(delta(xi,lambda)*delta(eta,sigma) - delta(xi,sigma)*delta(eta,lambda)).
int epsilon_pair_contraction(Index xi, Index eta, Index lambda, Index sigma) noexcept;

/// Encode an off-diagonal index pair into its storage code and sign.
/// Throws std::invalid_argument("degenerate pair") when mu == nu.
PairIndex pair_encode(Index mu, Index nu);

/// Inverse of pair_encode on codes 0..5: returns the ordered pair (a,b), a<b.
std::pair<Index, Index> pair_decode(int code);

}  // namespace tetragauge

#endif  // TETRAGAUGE_TENSOR_CORE_HPP
