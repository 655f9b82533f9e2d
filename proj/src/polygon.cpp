#include "wild2/polygon.hpp"

#include <stdexcept>
#include <utility>

namespace wild2 {

std::vector<PolygonSegment> newton_polygon(const std::vector<Dyadic>& coeffs) {
    std::vector<std::pair<long, long>> pts;  // (index, valuation)
    for (size_t i = 0; i < coeffs.size(); ++i) {
        const Dyadic& a = coeffs[i];
        if (a.is_exact_zero()) continue;
        if (a.is_zero_to_precision())
            throw PrecisionExhausted("newton_polygon: coefficient of x^" + std::to_string(i) +
                                     " is zero to precision");
        pts.emplace_back(static_cast<long>(i), a.valuation());
    }
    if (pts.size() < 2) return {};

    // Monotone-chain lower hull; input is already sorted by index.
    auto cross = [](const std::pair<long, long>& o, const std::pair<long, long>& a,
                    const std::pair<long, long>& b) {
        return (a.first - o.first) * (b.second - o.second) -
               (a.second - o.second) * (b.first - o.first);
    };
    std::vector<std::pair<long, long>> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0)
            hull.pop_back();
        hull.push_back(p);
    }

    std::vector<PolygonSegment> segments;
    for (size_t i = 1; i < hull.size(); ++i) {
        long dx = hull[i].first - hull[i - 1].first;
        long dy = hull[i].second - hull[i - 1].second;
        segments.push_back({Frac(dy, dx), dx});
    }
    return segments;
}

std::vector<Frac> polygon_root_valuations(const std::vector<PolygonSegment>& segments) {
    std::vector<Frac> out;
    for (const auto& seg : segments)
        for (long i = 0; i < seg.length; ++i) out.push_back(-seg.slope);
    return out;
}

}  // namespace wild2
