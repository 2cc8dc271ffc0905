#include <doctest.h>

#include "modseven/series.hpp"
#include "modseven/vrat.hpp"

using namespace modseven;

TEST_CASE("geometric series and precision tracking") {
    int prec = 12;
    QSeries one = QSeries::one(prec), q = QSeries::monomial(1, Coef(1), prec);
    QSeries geo = (one - q).inverse();
    for (int e = 0; e < prec; ++e) CHECK(geo.coeff(e) == Coef(1));
    CHECK(geo.prec() == prec);

    // Multiplying by something of valuation 2: the window shifts only as far
    // as the factors' knowledge allows.
    QSeries q2 = QSeries::monomial(2, Coef(1), prec);
    CHECK((geo * q2).prec() == prec);  // q2 itself is unknown from q^prec on
    QSeries q2exact = QSeries::monomial(2, Coef(1), 100);
    CHECK((geo * q2exact).prec() == prec + 2);
    CHECK((geo * q2exact).low() == 2);

    // Inverting a series of valuation 1 costs two exponents of precision.
    QSeries s = q + QSeries::monomial(2, Coef(4), prec);
    QSeries inv = s.inverse();
    CHECK(inv.low() == -1);
    CHECK(inv.prec() == prec - 2);
    CHECK((s * inv).coeff(0) == Coef(1));
}

TEST_CASE("series error paths") {
    int prec = 8;
    CHECK_THROWS_AS(QSeries::zero(prec).inverse(), Error);
    // Non-unit leading coefficient over the integers.
    QSeries two = QSeries::monomial(0, Coef(2), prec);
    CHECK_THROWS_AS(two.inverse(), Error);
    // Precision underflow: inverting at too-low precision.
    QSeries tiny = QSeries::monomial(3, Coef(1), 4);
    CHECK_THROWS_AS(tiny.inverse(), Error);
    CHECK_THROWS_AS(QSeries::one(prec).coeff(prec), Error);
}

TEST_CASE("compose_scale") {
    int prec = 5;
    QSeries q = QSeries::monomial(1, Coef(1), prec);
    QSeries q7 = q.scale_exp(7);
    CHECK(q7.low() == 7);
    CHECK(q7.prec() == 35);
    CHECK(q7.coeff(7) == Coef(1));
    CHECK(q7.coeff(8).is_zero());
}

TEST_CASE("divisor series") {
    QSeries s1 = divisor_series(1, 1, 10);
    long expect[9] = {1, 3, 4, 7, 6, 12, 8, 15, 13};
    // Oracle: direct divisor sums.
    for (int m = 1; m <= 9; ++m) {
        long s = 0;
        for (int d = 1; d <= m; ++d)
            if (m % d == 0) s += d;
        CHECK(s == expect[m - 1]);
        CHECK(s1.coeff(m) == Coef(expect[m - 1]));
    }
    QSeries s3n7 = divisor_series(3, 7, 22);
    CHECK(s3n7.coeff(7) == Coef(1));
    CHECK(s3n7.coeff(14) == Coef(9));
    CHECK(s3n7.coeff(21) == Coef(28));
    CHECK(s3n7.coeff(13).is_zero());
}

TEST_CASE("delta product begins q - 24q^2 + 252q^3 - 1472q^4") {
    QSeries d = delta_product_series(1, 8);
    CHECK(d.coeff(1) == Coef(1));
    CHECK(d.coeff(2) == Coef(-24));
    CHECK(d.coeff(3) == Coef(252));
    CHECK(d.coeff(4) == Coef(-1472));
    CHECK(all_coeffs_integral(d));
}

TEST_CASE("v-rational functions") {
    VRat v = VRat::v_pow(1);
    VRat one(1);
    VRat f = v * (one - v).inverse() * (one - v).inverse();  // v/(1-v)^2
    CHECK_FALSE(f.is_laurent());
    // (1-v)^2 / (1-v) cancels to 1-v.
    VPoly omv = VPoly(1) - VPoly::v_pow(1);
    VRat g(omv * omv, omv);
    CHECK(g == VRat(omv));
    CHECK(g.is_laurent());
    // Arithmetic: v/(1-v)^2 + v^2/(1-v)^2 = v(1+v)/(1-v)^2.
    VRat h = f + VRat(VPoly::v_pow(2), omv * omv);
    CHECK(h == VRat(VPoly::v_pow(1) + VPoly::v_pow(2), omv * omv));
    CHECK(h.inverse() * h == one);
    CHECK_THROWS_AS(f.eval1(), Error);  // pole at v = 1
    CHECK(VRat(VPoly::v_pow(-2)).eval1() == mpq_class(1));
    CHECK((v + v.inverse()).eval1() == mpq_class(2));
}

TEST_CASE("series over v-rationals") {
    int prec = 6;
    using VS = Series<VRat>;
    VS x = VS::monomial(1, VRat::v_pow(1), prec);
    VS y = VS::monomial(1, VRat::v_pow(-1), prec);
    VS s = x + y;
    CHECK(s.coeff(1) == VRat::v_pow(1) + VRat::v_pow(-1));
    CHECK((x * y).coeff(2) == VRat(1));
}
