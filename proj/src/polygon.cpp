#include "l0t/polygon.hpp"

#include "l0t/error.hpp"

#include <cmath>

namespace l0t {

namespace {

VecQ sign_rep(const VecQ& v) {
    for (int i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        return v[i] > 0 ? v : VecQ(-v);
    }
    return v;
}

} // namespace

DiscPolygons unit_disc_polygons(int level) {
    if (level < 3 || level > 8)
        fail(ErrorKind::Precondition, "polygon level must lie in [3, 8]");
    const int reps = 1 << (level - 1);  // half circle; pairs complete it

    // Tangent half-angle points (1-t^2, 2t)/(1+t^2) land exactly on the
    // circle for every rational t. The grid below keeps t monotone in the
    // target angle, so adjacency around the circle is structural.
    DiscPolygons out;
    out.inner.reserve(reps);
    const double denom = 4096.0;
    for (int j = 0; j < reps; ++j) {
        const double theta = M_PI * j / reps;
        const double tj = std::tan(theta / 2.0);
        const Rational t(static_cast<long>(std::llround(tj * denom)),
                         static_cast<long>(denom));
        const Rational one_plus = 1 + t * t;
        VecQ p(2);
        p[0] = (1 - t * t) / one_plus;
        p[1] = 2 * t / one_plus;
        out.inner.push_back(p);
    }

    // Outer vertices: intersections of tangents at adjacent circle points
    // of the full antipodal cycle p_0, .., p_{R-1}, -p_0, .., -p_{R-1}.
    std::vector<VecQ> cycle = out.inner;
    for (int j = 0; j < reps; ++j) cycle.push_back(VecQ(-out.inner[j]));
    const int total = static_cast<int>(cycle.size());
    for (int j = 0; j < total; ++j) {
        const VecQ& a = cycle[j];
        const VecQ& b = cycle[(j + 1) % total];
        const Rational det = a[0] * b[1] - a[1] * b[0];
        if (det == 0)
            fail(ErrorKind::Internal, "adjacent circle points must be independent");
        VecQ v(2);
        v[0] = (b[1] - a[1]) / det;
        v[1] = (a[0] - b[0]) / det;
        const VecQ r = sign_rep(v);
        bool seen = false;
        for (const VecQ& u : out.outer)
            if (vec_equal(u, r)) { seen = true; break; }
        if (!seen) out.outer.push_back(r);
    }
    return out;
}

DiscPolygons weighted_disc_polygons(const Rational& w0, const Rational& w1, int level) {
    if (w0 <= 0 || w1 <= 0)
        fail(ErrorKind::Precondition, "weights must be positive");
    auto s0 = exact_sqrt(w0);
    auto s1 = exact_sqrt(w1);
    if (!s0 || !s1)
        fail(ErrorKind::Unsupported,
             "ellipse bracketing needs weights that are squares of rationals");
    DiscPolygons base = unit_disc_polygons(level);
    auto rescale = [&](std::vector<VecQ>& list) {
        for (VecQ& v : list) {
            v[0] /= *s0;
            v[1] /= *s1;
        }
    };
    rescale(base.inner);
    rescale(base.outer);
    return base;
}

} // namespace l0t
