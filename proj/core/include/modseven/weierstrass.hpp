#pragma once

#include "modseven/poly.hpp"
#include "modseven/series.hpp"

namespace modseven {

/// A cubic y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 with coefficients in
/// any exact commutative ring R (polynomials, truncated series, scalars).
template <class R>
struct WeierstrassCoeffs {
    R a1, a2, a3, a4, a6;
};

/// Coordinate change x = u^2 x' + r, y = u^3 y' + s u^2 x' + t. The caller
/// supplies u and its inverse.
template <class R>
struct TransformParams {
    R r, s, t, u, u_inv;
};

template <class R>
struct CurveQuantities {
    R b2, b4, b6, b8, c4, c6, delta;
};

template <class R>
WeierstrassCoeffs<R> transform(const WeierstrassCoeffs<R>& w, const TransformParams<R>& p) {
    const R &r = p.r, &s = p.s, &t = p.t;
    R ui2 = p.u_inv * p.u_inv;
    R ui3 = ui2 * p.u_inv;
    R ui4 = ui2 * ui2;
    R ui6 = ui3 * ui3;
    WeierstrassCoeffs<R> o;
    o.a1 = (w.a1 + s * 2) * p.u_inv;
    o.a2 = (w.a2 - s * w.a1 + r * 3 - s * s) * ui2;
    o.a3 = (w.a3 + r * w.a1 + t * 2) * ui3;
    o.a4 = (w.a4 - s * w.a3 + r * w.a2 * 2 - (t + r * s) * w.a1 + r * r * 3 - s * t * 2) * ui4;
    o.a6 = (w.a6 + r * w.a4 + r * r * w.a2 + r * r * r - t * w.a3 - t * t - r * t * w.a1) * ui6;
    return o;
}

/// Compose two coordinate changes: apply p1 first, then p2.
template <class R>
TransformParams<R> compose(const TransformParams<R>& p1, const TransformParams<R>& p2) {
    R u1sq = p1.u * p1.u;
    TransformParams<R> o;
    o.r = p1.r + u1sq * p2.r;
    o.s = p1.s + p1.u * p2.s;
    o.t = p1.t + u1sq * p1.u * p2.t + p1.s * u1sq * p2.r;
    o.u = p1.u * p2.u;
    o.u_inv = p1.u_inv * p2.u_inv;
    return o;
}

template <class R>
CurveQuantities<R> c4_c6_delta(const WeierstrassCoeffs<R>& w) {
    CurveQuantities<R> q;
    q.b2 = w.a1 * w.a1 + w.a2 * 4;
    q.b4 = w.a4 * 2 + w.a1 * w.a3;
    q.b6 = w.a3 * w.a3 + w.a6 * 4;
    q.b8 = w.a1 * w.a1 * w.a6 + w.a2 * w.a6 * 4 - w.a1 * w.a3 * w.a4 + w.a2 * w.a3 * w.a3 -
           w.a4 * w.a4;
    q.c4 = q.b2 * q.b2 - q.b4 * 24;
    q.c6 = -(q.b2 * q.b2 * q.b2) + q.b2 * q.b4 * 36 - q.b6 * 216;
    q.delta = -(q.b2 * q.b2 * q.b8) - q.b4 * q.b4 * q.b4 * 8 - q.b6 * q.b6 * 27 +
              q.b2 * q.b4 * q.b6 * 9;
    return q;
}

/// Tate normal form from a marked point: moves (x0, y0) to (0,0) and kills
/// a4, a6, leaving y^2 + alpha1 xy + alpha3 y = x^3 + alpha2 x^2.
/// Division happens in R, so the denominator a3 + a1 x0 + 2 y0 must invert
/// (series with unit lowest coefficient, or nonzero scalars).
template <class R>
struct TateNormalForm {
    R s_prime, alpha1, alpha2, alpha3;
};

template <class R, class Div>
TateNormalForm<R> tate_normal_from_point(const WeierstrassCoeffs<R>& w, const R& x0, const R& y0,
                                         Div div) {
    R den = w.a3 + w.a1 * x0 + y0 * 2;
    TateNormalForm<R> o;
    o.s_prime = div(w.a4 + w.a2 * x0 * 2 - w.a1 * y0 + x0 * x0 * 3, den);
    o.alpha1 = div(w.a1 * w.a3 + w.a4 * 2 + (w.a1 * w.a1 + w.a2 * 4) * x0 + x0 * x0 * 6, den);
    o.alpha2 = w.a2 + x0 * 3 - w.a1 * o.s_prime - o.s_prime * o.s_prime;
    o.alpha3 = den;
    return o;
}

// ---- level-7 specifics --------------------------------------------------

/// alpha_i of the universal curve as sigma2-reduced polynomials in z1,z2,z3:
/// alpha1 = z1 - z2 + z3, alpha2 = z1 z2 + z1 z3, alpha3 = z1 z3^2.
struct AlphaPolys {
    MultiPoly a1, a2, a3;  // over zctx()
};
AlphaPolys alpha_polys();

/// Images of a2b, a4b, a6b under kappa: the completed-square form of the Tate
/// normal form above. Verified internally against transform() with
/// s = -alpha1/2, t = -alpha3/2.
struct KappaImages {
    MultiPoly ka2, ka4, ka6;  // over zctx(), sigma2-reduced
};
KappaImages kappa_images();

/// Substitute the kappa-curve's c4/c6/Delta into a polynomial in c4, c6,
/// Delta (context c4c6ctx()) and reduce mod sigma2.
MultiPoly level1_image(const MultiPoly& m);

}  // namespace modseven
