#pragma once

#include <cmath>
#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "geodome/sphgeo.hpp"

namespace geodome::detail {

// Uniform hash grid over 3D points for radius queries.
class PointGrid {
 public:
  explicit PointGrid(double cell_size) : cell_(cell_size) {}

  void insert(const Vec3& p, std::uint32_t id);

  // Calls fn(id) for every stored point whose cell overlaps the axis-aligned
  // box of half-width `radius` around `center`. Callers filter exactly.
  template <class Fn>
  void for_each_near(const Vec3& center, double radius, Fn&& fn) const {
    const auto lo = cell_of(center - Vec3{radius, radius, radius});
    const auto hi = cell_of(center + Vec3{radius, radius, radius});
    for (std::int64_t x = lo[0]; x <= hi[0]; ++x) {
      for (std::int64_t y = lo[1]; y <= hi[1]; ++y) {
        for (std::int64_t z = lo[2]; z <= hi[2]; ++z) {
          const auto it = cells_.find(pack(x, y, z));
          if (it == cells_.end()) continue;
          for (std::uint32_t id : it->second) fn(id);
        }
      }
    }
  }

 private:
  std::array<std::int64_t, 3> cell_of(const Vec3& p) const {
    return {static_cast<std::int64_t>(std::floor(p.x / cell_)),
            static_cast<std::int64_t>(std::floor(p.y / cell_)),
            static_cast<std::int64_t>(std::floor(p.z / cell_))};
  }
  static std::uint64_t pack(std::int64_t x, std::int64_t y, std::int64_t z) {
    constexpr std::int64_t kBias = 1 << 20;
    constexpr std::uint64_t kMask = (1u << 21) - 1;
    return ((static_cast<std::uint64_t>(x + kBias) & kMask) << 42) |
           ((static_cast<std::uint64_t>(y + kBias) & kMask) << 21) |
           (static_cast<std::uint64_t>(z + kBias) & kMask);
  }

  double cell_;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> cells_;
};

}  // namespace geodome::detail
