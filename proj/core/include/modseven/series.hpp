#pragma once

#include <cstdlib>
#include <string>
#include <vector>

#include "modseven/coef.hpp"

namespace modseven {

/// Truncated (Laurent) series in q with exact coefficients.
///
/// Terms are stored densely for exponents in [low, prec); everything at
/// exponent >= prec is unknown. The stored leading coefficient is nonzero,
/// or the series is zero at its precision (low == prec, no terms).
/// Arithmetic tracks the precision honestly: a product of series known to
/// O(q^Na), O(q^Nb) is only known to O(q^min(Na+lb, Nb+la)).
template <class C>
class Series {
public:
    Series() : low_(0), prec_(0) {}

    static Series zero(int prec) {
        Series s;
        s.low_ = s.prec_ = prec;
        return s;
    }
    static Series one(int prec) { return monomial(0, C(1), prec); }
    static Series monomial(int e, C c, int prec) {
        Series s;
        s.prec_ = prec;
        if (e >= prec || is_zero_c(c)) {
            s.low_ = prec;
            return s;
        }
        s.low_ = e;
        s.c_.push_back(std::move(c));
        return s;
    }
    static Series from_coeffs(int low, int prec, std::vector<C> coeffs) {
        Series s;
        s.low_ = low;
        s.prec_ = prec;
        s.c_ = std::move(coeffs);
        if (static_cast<int>(s.c_.size()) != prec - low) throw Error("coefficient list length mismatch");
        s.normalize();
        return s;
    }

    int low() const { return low_; }
    int prec() const { return prec_; }
    bool is_zero() const { return c_.empty(); }

    /// Coefficient of q^e; zero below the support, error at or above precision.
    const C& coeff(int e) const {
        if (e >= prec_) throw Error("coefficient q^" + std::to_string(e) + " beyond precision O(q^" + std::to_string(prec_) + ")");
        if (e < low_ || e >= low_ + static_cast<int>(c_.size())) return zero_c();
        return c_[e - low_];
    }

    Series truncated(int new_prec) const {
        if (new_prec >= prec_) return *this;
        Series s;
        s.prec_ = new_prec;
        s.low_ = std::min(low_, new_prec);
        if (new_prec > low_) s.c_.assign(c_.begin(), c_.begin() + (new_prec - low_));
        s.normalize();
        return s;
    }

    friend Series operator+(const Series& a, const Series& b) {
        int prec = std::min(a.prec_, b.prec_);
        int low = std::min(std::min(a.low_, b.low_), prec);
        std::vector<C> v(prec - low, C(0));
        for (int e = a.low_; e < std::min(a.prec_, prec); ++e)
            if (e >= low && e - a.low_ < static_cast<int>(a.c_.size())) v[e - low] = v[e - low] + a.c_[e - a.low_];
        for (int e = b.low_; e < std::min(b.prec_, prec); ++e)
            if (e >= low && e - b.low_ < static_cast<int>(b.c_.size())) v[e - low] = v[e - low] + b.c_[e - b.low_];
        return from_coeffs(low, prec, std::move(v));
    }
    friend Series operator-(const Series& a, const Series& b) { return a + (-b); }
    Series operator-() const {
        Series s = *this;
        for (auto& c : s.c_) c = -c;
        return s;
    }

    friend Series operator*(const Series& a, const Series& b) {
        int prec = std::min(a.prec_ + b.low_, b.prec_ + a.low_);
        check_prec(prec);
        int low = a.low_ + b.low_;
        if (a.is_zero() || b.is_zero()) return zero(prec);
        if (low >= prec) return zero(prec);
        std::vector<C> v(prec - low, C(0));
        for (int i = 0; i < static_cast<int>(a.c_.size()); ++i) {
            if (is_zero_c(a.c_[i])) continue;
            int jmax = std::min<int>(b.c_.size(), prec - low - i);
            for (int j = 0; j < jmax; ++j) {
                if (is_zero_c(b.c_[j])) continue;
                v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
            }
        }
        return from_coeffs(low, prec, std::move(v));
    }

    Series scaled(const C& k) const {
        Series s;
        s.prec_ = prec_;
        s.low_ = low_;
        s.c_.reserve(c_.size());
        for (const auto& c : c_) s.c_.push_back(c * k);
        s.normalize();
        return s;
    }
    friend Series operator*(const Series& a, long n) { return a.scaled(C(n)); }

    /// Multiplicative inverse; the lowest coefficient must be a unit.
    Series inverse() const {
        if (is_zero()) throw Error("inverting a zero series");
        C lead_inv = invert_c(c_[0]);
        int n = prec_ - low_;  // relative precision
        int prec = prec_ - 2 * low_;
        check_prec(prec);
        // u = 1 - lead_inv * q^{-low} * this; inverse = lead_inv*q^{-low} * sum u^k
        std::vector<C> u(n, C(0));
        for (int i = 1; i < n; ++i) u[i] = -(lead_inv * c_[i]);
        std::vector<C> inv(n, C(0));
        inv[0] = C(1);
        // inv = 1/(1-u) via inv[k] = sum_{j>=1} u[j]*inv[k-j]
        for (int k = 1; k < n; ++k) {
            C acc(0);
            for (int j = 1; j <= k; ++j) acc = acc + u[j] * inv[k - j];
            inv[k] = acc;
        }
        for (auto& c : inv) c = c * lead_inv;
        return from_coeffs(-low_, prec, std::move(inv));
    }

    friend Series operator/(const Series& a, const Series& b) { return a * b.inverse(); }

    Series pow(unsigned e) const {
        if (e == 0) return one(prec_);
        // Seed with enough headroom that the honest per-product clamping is
        // driven by the base series alone.
        int guard = prec_ + (std::abs(low_) + 1) * static_cast<int>(e + 1);
        Series acc = one(guard);
        Series base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            if (e >>= 1) base = base * base;
        }
        return acc;
    }

    /// Substitute q -> q^n (n >= 1). A series known mod q^N becomes known mod q^{nN}.
    Series scale_exp(int n) const {
        if (n < 1) throw Error("scale_exp needs n >= 1");
        Series s;
        s.prec_ = prec_ * n;
        s.low_ = low_ * n;
        if (is_zero()) {
            s.low_ = s.prec_;
            return s;
        }
        s.c_.assign(static_cast<std::size_t>(prec_ - low_ - 1) * n + 1, C(0));
        for (std::size_t i = 0; i < c_.size(); ++i) s.c_[i * n] = c_[i];
        s.normalize();
        return s;
    }

    /// Multiply by q^k.
    Series shifted(int k) const {
        Series s = *this;
        s.low_ += k;
        s.prec_ += k;
        return s;
    }

    bool agrees_with(const Series& o, int upto) const {
        int n = std::min({upto, prec_, o.prec_});
        for (int e = std::min(low_, o.low_); e < n; ++e)
            if (!(coeff(e) == o.coeff(e))) return false;
        return true;
    }

    /// True when every known coefficient vanishes (up to the stated precision).
    bool vanishes() const { return c_.empty(); }

    std::string str(const char* var = "q") const {
        std::string out;
        for (int e = low_; e < low_ + static_cast<int>(c_.size()); ++e) {
            const C& c = c_[e - low_];
            if (is_zero_c(c)) continue;
            std::string cs = coeff_str(c);
            bool neg = cs.size() > 1 && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos;
            std::string body;
            std::string mono = e == 0 ? "" : (e == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(e));
            if (mono.empty())
                body = neg ? cs.substr(1) : cs;
            else if (cs == "1")
                body = mono;
            else if (cs == "-1") {
                body = mono;
                neg = true;
            } else if (cs.find_first_of("+-/", 1) != std::string::npos && cs.find('(') == std::string::npos && needs_parens(c))
                body = "(" + cs + ")*" + mono;
            else
                body = (neg ? cs.substr(1) : cs) + "*" + mono;
            if (out.empty())
                out = (neg ? "-" : "") + body;
            else
                out += (neg ? " - " : " + ") + body;
        }
        if (out.empty()) out = "0";
        out += " + O(" + std::string(var) + "^" + std::to_string(prec_) + ")";
        return out;
    }

private:
    static const C& zero_c() {
        static const C z = C(0);
        return z;
    }
    static bool is_zero_c(const C& c) { return c.is_zero(); }
    static C invert_c(const C& c) { return c.inverse(); }
    static std::string coeff_str(const C& c) { return c.str(); }
    static bool needs_parens(const C& c);

    static void check_prec(int prec) {
        if (prec < 1) throw Error("precision underflow: result precision " + std::to_string(prec) + " < 1");
    }

    void normalize() {
        std::size_t lead = 0;
        while (lead < c_.size() && is_zero_c(c_[lead])) ++lead;
        if (lead == c_.size()) {
            c_.clear();
            low_ = prec_;
            return;
        }
        if (lead) {
            c_.erase(c_.begin(), c_.begin() + lead);
            low_ += static_cast<int>(lead);
        }
        while (!c_.empty() && is_zero_c(c_.back())) c_.pop_back();
    }

    int low_;
    int prec_;
    std::vector<C> c_;
};

using QSeries = Series<Coef>;

/// s_k evaluated at q^n: the coefficient of q^{nm} is sigma_k(m) = sum of
/// d^k over divisors d of m; all other coefficients vanish.
QSeries divisor_series(int k, int n, int prec);

/// q * prod_{m>=1} (1-q^m)^24, then q -> q^n.
QSeries delta_product_series(int n, int prec);

/// Apply a Coef->Coef map to every known coefficient.
template <class F>
QSeries map_coeffs(const QSeries& s, F f) {
    std::vector<Coef> v;
    v.reserve(s.prec() - s.low());
    for (int e = s.low(); e < s.prec(); ++e) v.push_back(f(s.coeff(e)));
    return QSeries::from_coeffs(s.low(), s.prec(), std::move(v));
}

bool all_coeffs_integral(const QSeries& s);

}  // namespace modseven
