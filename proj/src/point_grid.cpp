#include "point_grid.hpp"

namespace geodome::detail {

void PointGrid::insert(const Vec3& p, std::uint32_t id) {
  const auto c = cell_of(p);
  cells_[pack(c[0], c[1], c[2])].push_back(id);
}

}  // namespace geodome::detail
