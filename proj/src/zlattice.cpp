#include "mcsl/zlattice.hpp"

namespace mcsl {

namespace detail {

Int bareiss_determinant(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        const Int num = checked_sub(checked_mul(m[i][j], m[k][k]), checked_mul(m[i][k], m[k][j]));
        m[i][j] = num / prev;
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace detail

const Lattice3& bcc_lattice() {
  static const Lattice3 gamma = Lattice3::from_generators({Vec3{2, 0, 0}, Vec3{0, 2, 0}, Vec3{1, 1, 1}});
  return gamma;
}

}  // namespace mcsl
