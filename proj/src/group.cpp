#include "boas/group.hpp"

#include "boas/errors.hpp"

namespace boas {

std::vector<double> uniform_grid(double lo, double hi, int count) {
  if (count < 1) throw InvalidArgument("uniform_grid: count must be >= 1");
  if (count == 1) return {0.5 * (lo + hi)};
  std::vector<double> pts(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    pts[static_cast<std::size_t>(i)] = lo + (hi - lo) * static_cast<double>(i) / (count - 1);
  }
  return pts;
}

}  // namespace boas
