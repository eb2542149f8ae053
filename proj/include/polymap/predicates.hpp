#pragma once

// Exact sign of the 2x2 orientation determinant, double inputs.
//
// A floating-point filter answers the easy cases; near-degenerate ones fall
// through to an exact expansion-arithmetic evaluation (error-free transforms:
// two_sum / two_product / expansion sums).  Only the sign is exact, which is
// all the polygon predicates need.

#include <cmath>
#include <cstddef>

namespace polymap::detail {

inline constexpr double pred_epsilon = 1.1102230246251565e-16;  // 2^-53
inline constexpr double pred_splitter = 134217729.0;            // 2^27 + 1
inline constexpr double ccw_errbound_a = (3.0 + 16.0 * pred_epsilon) * pred_epsilon;

inline void two_sum(double a, double b, double& x, double& y) {
    x = a + b;
    double bv = x - a;
    double av = x - bv;
    y = (a - av) + (b - bv);
}

inline void two_diff(double a, double b, double& x, double& y) {
    x = a - b;
    double bv = a - x;
    double av = x + bv;
    y = (a - av) - (b - bv);
}

inline void split(double a, double& hi, double& lo) {
    double c = pred_splitter * a;
    hi = c - (c - a);
    lo = a - hi;
}

inline void two_product(double a, double b, double& x, double& y) {
    x = a * b;
    double ahi, alo, bhi, blo;
    split(a, ahi, alo);
    split(b, bhi, blo);
    y = alo * blo - (((x - ahi * bhi) - alo * bhi) - ahi * blo);
}

inline void two_one_diff(double a1, double a0, double b,
                         double& x2, double& x1, double& x0) {
    double i;
    two_diff(a0, b, i, x0);
    two_sum(a1, i, x2, x1);
}

// (a1,a0) - (b1,b0) -> four-component expansion x3..x0, increasing magnitude.
inline void two_two_diff(double a1, double a0, double b1, double b0,
                         double& x3, double& x2, double& x1, double& x0) {
    double j, t;
    two_one_diff(a1, a0, b0, j, t, x0);
    two_one_diff(j, t, b1, x3, x2, x1);
}

// Sum of two nonoverlapping expansions, zero components dropped.  Heads are
// merged by increasing magnitude so the running two_sum chain stays exact.
inline std::size_t expansion_sum_zeroelim(std::size_t elen, const double* e,
                                          std::size_t flen, const double* f, double* h) {
    std::size_t eindex = 0, findex = 0, hindex = 0;
    auto take = [&]() {
        if (eindex < elen &&
            (findex >= flen || std::fabs(e[eindex]) <= std::fabs(f[findex])))
            return e[eindex++];
        return f[findex++];
    };
    double q = take();
    while (eindex < elen || findex < flen) {
        double qnew, hh;
        two_sum(q, take(), qnew, hh);
        q = qnew;
        if (hh != 0.0) h[hindex++] = hh;
    }
    if (q != 0.0 || hindex == 0) h[hindex++] = q;
    return hindex;
}

inline double orient2d_exact(double ax, double ay, double bx, double by, double cx, double cy) {
    double axby1, axby0, axcy1, axcy0, bxcy1, bxcy0, bxay1, bxay0, cxay1, cxay0, cxby1, cxby0;
    double at[4], bt[4], ct[4];
    double u[8], w[12];

    two_product(ax, by, axby1, axby0);
    two_product(ax, cy, axcy1, axcy0);
    two_two_diff(axby1, axby0, axcy1, axcy0, at[3], at[2], at[1], at[0]);

    two_product(bx, cy, bxcy1, bxcy0);
    two_product(bx, ay, bxay1, bxay0);
    two_two_diff(bxcy1, bxcy0, bxay1, bxay0, bt[3], bt[2], bt[1], bt[0]);

    two_product(cx, ay, cxay1, cxay0);
    two_product(cx, by, cxby1, cxby0);
    two_two_diff(cxay1, cxay0, cxby1, cxby0, ct[3], ct[2], ct[1], ct[0]);

    std::size_t ulen = expansion_sum_zeroelim(4, at, 4, bt, u);
    std::size_t wlen = expansion_sum_zeroelim(ulen, u, 4, ct, w);
    return w[wlen - 1];  // most significant component carries the sign
}

// Sign of the signed area of triangle (a,b,c): +1 counterclockwise,
// -1 clockwise, 0 exactly collinear.
inline int orient2d(double ax, double ay, double bx, double by, double cx, double cy) {
    double detleft = (ax - cx) * (by - cy);
    double detright = (ay - cy) * (bx - cx);
    double det = detleft - detright;
    double detsum;
    if (detleft > 0.0) {
        if (detright <= 0.0) return det > 0.0 ? 1 : (det < 0.0 ? -1 : 0);
        detsum = detleft + detright;
    } else if (detleft < 0.0) {
        if (detright >= 0.0) return det > 0.0 ? 1 : (det < 0.0 ? -1 : 0);
        detsum = -detleft - detright;
    } else {
        return det > 0.0 ? 1 : (det < 0.0 ? -1 : 0);
    }
    if (det >= ccw_errbound_a * detsum || -det >= ccw_errbound_a * detsum)
        return det > 0.0 ? 1 : -1;
    double ex = orient2d_exact(ax, ay, bx, by, cx, cy);
    return ex > 0.0 ? 1 : (ex < 0.0 ? -1 : 0);
}

}  // namespace polymap::detail
