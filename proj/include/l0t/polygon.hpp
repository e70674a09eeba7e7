#pragma once

#include "l0t/linalg.hpp"

#include <vector>

namespace l0t {

/// Symmetric rational polygons bracketing the planar unit disc:
/// conv(+-inner) is inscribed (vertices exactly on the circle), and the
/// disc sits inside conv(+-outer). Lists hold one vertex per antipodal
/// pair; 2^level vertices around the full circle, level in [3, 8].
struct DiscPolygons {
    std::vector<VecQ> inner;
    std::vector<VecQ> outer;
};

DiscPolygons unit_disc_polygons(int level);

/// The same bracket for the ellipse w0 x^2 + w1 y^2 <= 1, available when
/// both weights are squares of rationals. The linear rescaling preserves
/// the inclusions and keeps the inner vertices exactly on the ellipse.
DiscPolygons weighted_disc_polygons(const Rational& w0, const Rational& w1, int level);

} // namespace l0t
