#pragma once

#include <optional>

#include "modseven/series.hpp"
#include "modseven/vrat.hpp"

namespace modseven {

/// Tate(q^n): y^2 + xy = x^3 + a4(q^n) x + a6(q^n), with the discriminant in
/// its product form. All integer coefficients (asserted on construction).
struct TateCurve {
    int n = 1;
    int prec = 0;
    QSeries a4, a6, delta;
};

TateCurve tate_coeffs(int n, int prec);

/// Coordinate series of the torsion point (X(v q^k, q^n), Y(v q^k, q^n)),
/// with v = zeta_n^d kept formal. For d = 0 the series specialize to v = 1
/// and carry plain rational (in fact integer) coefficients.
struct TorsionPointSeries {
    int n, k, d;
    std::optional<QSeries> x, y;             // d == 0
    std::optional<Series<VRat>> xv, yv;      // d != 0
};

TorsionPointSeries torsion_xy(int n, int k, int d, int prec);

/// One row of the lowest-term table for X, Y and X + 2Y.
struct LowestTerm {
    VRat coef;
    int exp;
    bool operator==(const LowestTerm& o) const { return coef == o.coef && exp == o.exp; }
    std::string str() const;
};

struct LowestTermRow {
    std::string case_name;
    LowestTerm x, y, xy2;              // computed
    LowestTerm x_exp, y_exp, xy2_exp;  // from the table
    bool y_higher_case = false;        // middle row: Y only needs to start above q^k
    bool pass = false;
};

/// Computes the lowest terms of X, Y, X+2Y for (n,k,d) and checks them
/// against the table. For d = 0 the expected entries are specialized at v=1.
LowestTermRow lowest_term_table(int n, int k, int d);

/// Tate-normal-form coefficients at the torsion point (d = 0 path): all
/// three are power series; division is by the unit-leading-coefficient
/// series alpha3 = X + 2Y.
struct AlphaSeries {
    QSeries a1, a2, a3;
};
AlphaSeries alpha_series(int n, int k, int d, int prec);

/// Same with v formal (d != 0).
struct AlphaSeriesV {
    Series<VRat> a1, a2, a3;
};
AlphaSeriesV alpha_series_v(int n, int k, int d, int prec);

}  // namespace modseven
