#include "modseven/tate.hpp"

namespace modseven {

TateCurve tate_coeffs(int n, int prec) {
    if (n < 1) throw Error("tate_coeffs needs n >= 1");
    if (prec < n) throw Error("tate_coeffs needs prec >= n");
    TateCurve tc;
    tc.n = n;
    tc.prec = prec;
    QSeries s3 = divisor_series(3, n, prec);
    QSeries s5 = divisor_series(5, n, prec);
    tc.a4 = s3.scaled(Coef(-5));
    QSeries a6_rat = (s3.scaled(Coef(5)) + s5.scaled(Coef(7))).scaled(Coef::rational(-1, 12));
    if (!all_coeffs_integral(a6_rat))
        throw CheckFailure("a6(q^n) has a non-integer coefficient");
    tc.a6 = map_coeffs(a6_rat, [](const Coef& c) { return c.to_ring(Ring::Int); });
    int m = (prec + n - 1) / n + 1;
    tc.delta = delta_product_series(1, m).scale_exp(n).truncated(prec);
    if (!all_coeffs_integral(tc.a4) || !all_coeffs_integral(tc.delta))
        throw CheckFailure("Tate series lost integrality");
    return tc;
}

namespace {

// Policy for the specialization of v: formal (VRat) or v = 1 (Coef).
struct FormalV {
    using F = VRat;
    static F v_pow(long l) { return VRat::v_pow(static_cast<int>(l)); }
    static F from_long(long n) { return VRat(n); }
};
struct UnitV {
    using F = Coef;
    static F v_pow(long) { return Coef(1); }
    static F from_long(long n) { return Coef(n); }
};

// The reindexed sums for X(v q^k, q^n) and Y(v q^k, q^n). For k = 0 the
// constant (q^0) terms v/(1-v)^2 and v^2/(1-v)^3 are handled by the caller;
// this accumulates everything that carries a positive power of q.
template <class P>
void accumulate_xy(std::vector<typename P::F>& x, std::vector<typename P::F>& y, int n, int k,
                   int prec) {
    auto add = [&](std::vector<typename P::F>& dst, long e, typename P::F c) {
        if (e < prec) dst[e] = dst[e] + c;
    };
    if (k > 0) {
        for (long l = 1; l * k < prec; ++l) {
            add(x, l * k, P::v_pow(l) * P::from_long(l));
            add(y, l * k, P::v_pow(l) * P::from_long(l * (l - 1) / 2));
        }
    }
    for (long m = 1; m * static_cast<long>(n) - k < prec; ++m) {
        long base_plus = m * n + k, base_minus = m * n - k, base = m * n;
        for (long l = 1; base_plus * l < prec; ++l) {
            add(x, base_plus * l, P::v_pow(l) * P::from_long(l));
            add(y, base_plus * l, P::v_pow(l) * P::from_long(l * (l - 1) / 2));
        }
        for (long l = 1; base_minus * l < prec; ++l) {
            add(x, base_minus * l, P::v_pow(-l) * P::from_long(l));
            add(y, base_minus * l, P::v_pow(-l) * P::from_long(-l * (l + 1) / 2));
        }
        for (long l = 1; base * l < prec; ++l) {
            add(x, base * l, P::from_long(-2 * l));
            add(y, base * l, P::from_long(l));
        }
    }
}

VRat one_minus_v_pow(int e) {
    VPoly d(1);
    VPoly omv = VPoly(1) - VPoly::v_pow(1);
    for (int i = 0; i < e; ++i) d = d * omv;
    return VRat(VPoly(1), d);
}

}  // namespace

TorsionPointSeries torsion_xy(int n, int k, int d, int prec) {
    if (n < 1 || k < 0 || k >= n) throw Error("torsion_xy needs 0 <= k < n");
    if (prec < 1) throw Error("torsion_xy needs prec >= 1");
    d = ((d % n) + n) % n;
    if (k == 0 && d == 0) throw Error("(k,d) = (0,0) is not a point of exact order n");
    TorsionPointSeries out;
    out.n = n;
    out.k = k;
    out.d = d;
    if (d == 0) {
        std::vector<Coef> x(prec, Coef(0)), y(prec, Coef(0));
        accumulate_xy<UnitV>(x, y, n, k, prec);
        out.x = QSeries::from_coeffs(0, prec, std::move(x));
        out.y = QSeries::from_coeffs(0, prec, std::move(y));
    } else {
        std::vector<VRat> x(prec, VRat()), y(prec, VRat());
        accumulate_xy<FormalV>(x, y, n, k, prec);
        if (k == 0) {
            // m = 0 contributions: X gains v/(1-v)^2 and Y gains v^2/(1-v)^3.
            x[0] = x[0] + VRat(VPoly::v_pow(1)) * one_minus_v_pow(2);
            y[0] = y[0] + VRat(VPoly::v_pow(2)) * one_minus_v_pow(3);
        }
        out.xv = Series<VRat>::from_coeffs(0, prec, std::move(x));
        out.yv = Series<VRat>::from_coeffs(0, prec, std::move(y));
    }
    return out;
}

std::string LowestTerm::str() const {
    std::string c = coef.str();
    if (c.find_first_of("+-/", 1) != std::string::npos || !coef.is_laurent()) c = "(" + c + ")";
    if (exp == 0) return c;
    return c + "*q" + (exp == 1 ? "" : "^" + std::to_string(exp));
}

namespace {

LowestTerm lowest_of(const Series<VRat>& s) {
    if (s.is_zero()) throw CheckFailure("series vanished to precision; no lowest term");
    return {s.coeff(s.low()), s.low()};
}

LowestTerm lowest_of(const QSeries& s) {
    if (s.is_zero()) throw CheckFailure("series vanished to precision; no lowest term");
    return {VRat(VPoly(s.coeff(s.low()).to_ring(Ring::Rat).rat())), s.low()};
}

LowestTerm specialize1(const LowestTerm& t) { return {VRat(VPoly(t.coef.eval1())), t.exp}; }

}  // namespace

LowestTermRow lowest_term_table(int n, int k, int d) {
    LowestTermRow row;
    int prec = 2 * n + 2;
    VRat v = VRat::v_pow(1), vinv = VRat::v_pow(-1);
    if (k == 0) {
        row.case_name = "k=0";
        row.x_exp = {VRat(VPoly::v_pow(1)) * one_minus_v_pow(2), 0};
        row.y_exp = {VRat(VPoly::v_pow(2)) * one_minus_v_pow(3), 0};
        row.xy2_exp = {(VRat(VPoly::v_pow(1)) + VRat(VPoly::v_pow(2))) * one_minus_v_pow(3), 0};
    } else if (2 * k < n) {
        row.case_name = "0<k<n/2";
        row.y_higher_case = true;
        row.x_exp = {v, k};
        row.xy2_exp = {v, k};
    } else if (2 * k == n) {
        row.case_name = "k=n/2";
        row.x_exp = {v + vinv, n / 2};
        row.y_exp = {-vinv, n / 2};
        row.xy2_exp = {v - vinv, n / 2};
    } else {
        row.case_name = "n/2<k<n";
        row.x_exp = {vinv, n - k};
        row.y_exp = {-vinv, n - k};
        row.xy2_exp = {-vinv, n - k};
    }
    TorsionPointSeries t = torsion_xy(n, k, d, prec);
    if (t.x) {
        row.x_exp = specialize1(row.x_exp);
        row.y_exp = specialize1(row.y_exp);
        row.xy2_exp = specialize1(row.xy2_exp);
        if (row.x_exp.coef.is_zero() || (!row.y_higher_case && row.xy2_exp.coef.is_zero()))
            throw Error("table row degenerates at v = 1; needs d != 0");
        row.x = lowest_of(*t.x);
        row.y = lowest_of(*t.y);
        row.xy2 = lowest_of(*t.x + t.y->scaled(Coef(2)));
    } else {
        row.x = lowest_of(*t.xv);
        row.y = lowest_of(*t.yv);
        row.xy2 = lowest_of(*t.xv + t.yv->scaled(VRat(2)));
    }
    row.pass = row.x == row.x_exp && row.xy2 == row.xy2_exp &&
               (row.y_higher_case ? row.y.exp > k : row.y == row.y_exp);
    return row;
}

namespace {

template <class F>
F lift_coef(const Coef&);

template <>
Coef lift_coef<Coef>(const Coef& c) {
    return c;
}
template <>
VRat lift_coef<VRat>(const Coef& c) {
    return VRat(VPoly(c.to_ring(Ring::Rat).rat()));
}

// Shared alpha computation over a coefficient field F.
template <class F>
struct AlphaTriple {
    Series<F> a1, a2, a3;
};

template <class F>
AlphaTriple<F> alpha_impl(const Series<F>& x0, const Series<F>& y0, const QSeries& a4n, int prec) {
    Series<F> a4;
    {
        std::vector<F> v;
        for (int e = 0; e < a4n.prec(); ++e) v.push_back(lift_coef<F>(a4n.coeff(e)));
        a4 = Series<F>::from_coeffs(0, a4n.prec(), std::move(v));
    }
    Series<F> den = x0 + y0.scaled(F(2));
    if (den.is_zero()) throw Error("alpha3 vanishes; disallowed torsion point");
    Series<F> den_inv = den.inverse();  // unit lowest coefficient required
    AlphaTriple<F> out;
    Series<F> sp = (a4 - y0 + x0 * x0 * 3L) * den_inv;
    out.a1 = (x0 + x0 * x0 * 6L + a4.scaled(F(2))) * den_inv;
    out.a2 = x0 * 3L - sp - sp * sp;
    out.a3 = den;
    for (const Series<F>* s : {&out.a1, &out.a2, &out.a3})
        if (s->low() < 0)
            throw CheckFailure("alpha series has a negative q-power; holomorphy fails");
    out.a1 = out.a1.truncated(prec);
    out.a2 = out.a2.truncated(prec);
    out.a3 = out.a3.truncated(prec);
    return out;
}

}  // namespace

AlphaSeries alpha_series(int n, int k, int d, int prec) {
    if (n < 3) throw Error("alpha_series needs n >= 3");
    d = ((d % n) + n) % n;
    if (d != 0) throw Error("alpha_series with d != 0: use alpha_series_v");
    if (k == 0 || 2 * k == n) throw Error("v = 1 with k = 0 or k = n/2 is not a point of exact order n");
    int inner = prec + 2 * k + 6;
    TorsionPointSeries t = torsion_xy(n, k, 0, inner);
    TateCurve tc = tate_coeffs(n, inner);
    auto a = alpha_impl<Coef>(*t.x, *t.y, tc.a4, prec);
    return {a.a1, a.a2, a.a3};
}

AlphaSeriesV alpha_series_v(int n, int k, int d, int prec) {
    if (n < 3) throw Error("alpha_series_v needs n >= 3");
    d = ((d % n) + n) % n;
    if (d == 0) throw Error("alpha_series_v needs d != 0");
    int low_exp = (k == 0) ? 0 : std::min(k, n - k);
    int inner = prec + 2 * low_exp + 6;
    TorsionPointSeries t = torsion_xy(n, k, d, inner);
    TateCurve tc = tate_coeffs(n, inner);
    auto a = alpha_impl<VRat>(*t.xv, *t.yv, tc.a4, prec);
    return {a.a1, a.a2, a.a3};
}

}  // namespace modseven
