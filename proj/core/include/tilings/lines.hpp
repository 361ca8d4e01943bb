#pragma once

#include <vector>

#include "tilings/numeric.hpp"

namespace tilings {

// Ensemble of non-intersecting monotone lattice paths, stored as node heights
// h(path, time). Path j (0-based) starts and ends at height -(j+1). The
// column structure (where rises and falls may occur) is model specific and
// checked by the owning module.
class LineEnsemble {
 public:
  LineEnsemble() = default;
  LineEnsemble(int num_paths, int num_times);

  int num_paths() const { return int(h_.size()); }
  int num_times() const { return h_.empty() ? 0 : int(h_[0].size()); }

  int height(int path, int time) const { return h_[std::size_t(path)][std::size_t(time)]; }
  void set_height(int path, int time, int v) { h_[std::size_t(path)][std::size_t(time)] = v; }

  const std::vector<std::vector<int>>& heights() const { return h_; }

  bool operator==(const LineEnsemble& o) const { return h_ == o.h_; }
  bool operator<(const LineEnsemble& o) const { return h_ < o.h_; }

  // Boundary pinned to -(j+1) on both ends and strictly decreasing path order
  // at every node time.
  void check_boundary_and_order() const;

 private:
  std::vector<std::vector<int>> h_;
};

}  // namespace tilings
