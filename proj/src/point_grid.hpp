#pragma once

#include "msg/geom.hpp"

#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace msg::detail {

// Uniform hash grid over a fixed point set for radius-limited nearest lookup.
class PointGrid {
public:
    PointGrid(const std::vector<Point>& points, double cell)
        : points_(points), cell_(cell > 0.0 ? cell : 1.0) {
        for (int i = 0; i < static_cast<int>(points_.size()); ++i)
            cells_[key(points_[i])].push_back(i);
    }

    // Index of the nearest point within `radius` of q, or -1.
    int nearest_within(Point q, double radius) const {
        const std::int64_t cx = coord(q.x);
        const std::int64_t cy = coord(q.y);
        const std::int64_t reach = static_cast<std::int64_t>(std::ceil(radius / cell_));
        int best = -1;
        double best_d = radius;
        for (std::int64_t dx = -reach; dx <= reach; ++dx) {
            for (std::int64_t dy = -reach; dy <= reach; ++dy) {
                auto it = cells_.find(pack(cx + dx, cy + dy));
                if (it == cells_.end()) continue;
                for (int i : it->second) {
                    const double d = distance(points_[i], q);
                    if (d <= best_d) {
                        best_d = d;
                        best = i;
                    }
                }
            }
        }
        return best;
    }

    template <typename Fn>
    void for_each_within(Point q, double radius, Fn&& fn) const {
        const std::int64_t cx = coord(q.x);
        const std::int64_t cy = coord(q.y);
        const std::int64_t reach = static_cast<std::int64_t>(std::ceil(radius / cell_));
        for (std::int64_t dx = -reach; dx <= reach; ++dx) {
            for (std::int64_t dy = -reach; dy <= reach; ++dy) {
                auto it = cells_.find(pack(cx + dx, cy + dy));
                if (it == cells_.end()) continue;
                for (int i : it->second)
                    if (distance(points_[i], q) <= radius) fn(i);
            }
        }
    }

private:
    std::int64_t coord(double v) const {
        return static_cast<std::int64_t>(std::floor(v / cell_));
    }
    static std::uint64_t pack(std::int64_t x, std::int64_t y) {
        return (static_cast<std::uint64_t>(x) << 32) ^
               (static_cast<std::uint64_t>(y) & 0xffffffffull);
    }
    std::uint64_t key(Point p) const { return pack(coord(p.x), coord(p.y)); }

    std::vector<Point> points_;
    double cell_;
    std::unordered_map<std::uint64_t, std::vector<int>> cells_;
};

} // namespace msg::detail
