#include "tilings/lines.hpp"

namespace tilings {

LineEnsemble::LineEnsemble(int num_paths, int num_times) {
  h_.assign(std::size_t(num_paths), std::vector<int>(std::size_t(num_times), 0));
  for (int j = 0; j < num_paths; ++j)
    for (int t = 0; t < num_times; ++t) h_[std::size_t(j)][std::size_t(t)] = -(j + 1);
}

void LineEnsemble::check_boundary_and_order() const {
  const int P = num_paths(), T = num_times();
  for (int j = 0; j < P; ++j) {
    if (height(j, 0) != -(j + 1) || height(j, T - 1) != -(j + 1))
      throw BijectionError("line ensemble boundary must sit at -1,-2,...");
  }
  for (int t = 0; t < T; ++t)
    for (int j = 0; j + 1 < P; ++j)
      if (!(height(j, t) > height(j + 1, t)))
        throw BijectionError("paths must stay strictly ordered");
}

}  // namespace tilings
