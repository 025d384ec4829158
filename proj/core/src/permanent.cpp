#include "fidest/quantum/permanent.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "fidest/quantum/errors.hpp"

namespace fidest {

Complex permanent(const ComplexMatrix& m) {
  if (!m.is_square() || m.rows() == 0)
    throw DimensionMismatch("permanent: matrix must be square and non-empty");
  const std::size_t n = m.rows();
  if (n > kPermanentSizeCap)
    throw SizeLimitExceeded("permanent: order " + std::to_string(n) + " exceeds cap " +
                            std::to_string(kPermanentSizeCap));
  if (n == 1) return m(0, 0);

  // row_sums[i] = sum_{j in S} M(i, j) for the current Gray-code subset S.
  std::vector<Complex> row_sums(n);
  Complex total{};
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::uint64_t gray = 0;
  for (std::uint64_t step = 1; step < subsets; ++step) {
    const auto col = static_cast<std::size_t>(std::countr_zero(step));
    const std::uint64_t bit = std::uint64_t{1} << col;
    gray ^= bit;
    if (gray & bit) {
      for (std::size_t i = 0; i < n; ++i) row_sums[i] += m(i, col);
    } else {
      for (std::size_t i = 0; i < n; ++i) row_sums[i] -= m(i, col);
    }
    Complex prod = row_sums[0];
    for (std::size_t i = 1; i < n; ++i) prod *= row_sums[i];
    // sign (-1)^{n - |S|}
    const bool odd = ((n - static_cast<std::size_t>(std::popcount(gray))) & 1U) != 0;
    total += odd ? -prod : prod;
  }
  return total;
}

}  // namespace fidest
