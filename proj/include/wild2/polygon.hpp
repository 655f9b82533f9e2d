#pragma once

#include <vector>

#include "wild2/dyadic.hpp"
#include "wild2/frac.hpp"

namespace wild2 {

struct PolygonSegment {
    Frac slope;
    long length;  // horizontal extent, always positive

    friend bool operator==(const PolygonSegment& a, const PolygonSegment& b) {
        return a.slope == b.slope && a.length == b.length;
    }
};

// Lower convex hull of (i, val2(coeffs[i])), coeffs[i] being the coefficient
// of x^i. Exact-zero coefficients impose no constraint and are skipped;
// a zero-to-precision coefficient raises PrecisionExhausted since its
// valuation is not pinned. Slopes come out strictly increasing and the
// segment lengths sum to deg minus the order of vanishing at x = 0.
std::vector<PolygonSegment> newton_polygon(const std::vector<Dyadic>& coeffs);

// Root valuations implied by the polygon: each segment of slope s and
// length l contributes l roots of valuation -s.
std::vector<Frac> polygon_root_valuations(const std::vector<PolygonSegment>& segments);

}  // namespace wild2
