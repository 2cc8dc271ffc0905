#include "modseven/series.hpp"

#include "modseven/vrat.hpp"

namespace modseven {

template <>
bool Series<Coef>::needs_parens(const Coef& c) {
    return c.ring() == Ring::CycQ6;
}

template <>
bool Series<VRat>::needs_parens(const VRat&) {
    return true;
}

QSeries divisor_series(int k, int n, int prec) {
    if (k < 1 || n < 1) throw Error("divisor_series needs k >= 1, n >= 1");
    if (prec < 1) throw Error("divisor_series needs prec >= 1");
    std::vector<Coef> v(prec, Coef(0));
    // sigma_k via the lambert form: every d contributes d^k at exponents n*d*m.
    for (long d = 1; d * n < prec; ++d) {
        mpz_class dk;
        mpz_ui_pow_ui(dk.get_mpz_t(), d, k);
        for (long m = d; m * n < prec; m += d) v[m * n] = v[m * n] + Coef::integer(dk);
    }
    return QSeries::from_coeffs(0, prec, std::move(v));
}

QSeries delta_product_series(int n, int prec) {
    QSeries p = QSeries::one(prec);
    for (int m = 1; m < prec; ++m)
        p = p * (QSeries::one(prec) - QSeries::monomial(m, Coef(1), prec));
    QSeries d = p.pow(24).truncated(prec - 1).shifted(1);
    return n == 1 ? d : d.scale_exp(n).truncated(prec * n);
}

bool all_coeffs_integral(const QSeries& s) {
    for (int e = s.low(); e < s.prec(); ++e)
        if (!s.coeff(e).is_integer()) return false;
    return true;
}

}  // namespace modseven
