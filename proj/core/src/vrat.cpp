#include "modseven/vrat.hpp"

#include <vector>

namespace modseven {

void VPoly::set(int e, mpq_class c) {
    c.canonicalize();
    if (c == 0)
        t_.erase(e);
    else
        t_[e] = std::move(c);
}

int VPoly::min_exp() const {
    if (t_.empty()) throw Error("min_exp of zero");
    return t_.begin()->first;
}

int VPoly::max_exp() const {
    if (t_.empty()) throw Error("max_exp of zero");
    return t_.rbegin()->first;
}

mpq_class VPoly::coeff(int e) const {
    auto it = t_.find(e);
    return it == t_.end() ? mpq_class(0) : it->second;
}

mpq_class VPoly::eval1() const {
    mpq_class s = 0;
    for (const auto& [e, c] : t_) s += c;
    return s;
}

mpq_class VPoly::evalm1() const {
    mpq_class s = 0;
    for (const auto& [e, c] : t_) s += (e % 2 == 0) ? c : mpq_class(-c);
    return s;
}

VPoly operator+(const VPoly& a, const VPoly& b) {
    VPoly r = a;
    for (const auto& [e, c] : b.t_) r.set(e, r.coeff(e) + c);
    return r;
}

VPoly operator-(const VPoly& a, const VPoly& b) {
    VPoly r = a;
    for (const auto& [e, c] : b.t_) r.set(e, r.coeff(e) - c);
    return r;
}

VPoly operator*(const VPoly& a, const VPoly& b) {
    VPoly r;
    for (const auto& [ea, ca] : a.t_)
        for (const auto& [eb, cb] : b.t_) r.set(ea + eb, r.coeff(ea + eb) + ca * cb);
    return r;
}

VPoly VPoly::operator-() const {
    VPoly r;
    for (const auto& [e, c] : t_) r.t_[e] = -c;
    return r;
}

VPoly VPoly::scaled(const mpq_class& k) const {
    VPoly r;
    if (k == 0) return r;
    for (const auto& [e, c] : t_) {
        mpq_class x = c * k;
        x.canonicalize();
        r.t_[e] = std::move(x);
    }
    return r;
}

VPoly VPoly::shifted(int e0) const {
    VPoly r;
    for (const auto& [e, c] : t_) r.t_[e + e0] = c;
    return r;
}

namespace {

// p / (1 - s*v) for s = +-1, exact: with p = sum p_i v^i (shifted to start
// at 0) the quotient satisfies q_i = p_i + s*q_{i-1}.
VPoly divide_linear(const VPoly& p, int s) {
    if (p.is_zero()) return p;
    int lo = p.min_exp(), hi = p.max_exp();
    std::vector<mpq_class> dense(hi - lo + 1, mpq_class(0));
    for (const auto& [e, c] : p.terms()) dense[e - lo] = c;
    std::vector<mpq_class> q(dense.size(), mpq_class(0));
    mpq_class carry = 0;
    for (std::size_t i = 0; i < dense.size(); ++i) {
        q[i] = dense[i] + s * carry;
        carry = q[i];
    }
    if (carry != 0) throw Error("inexact division by (1 -+ v)");
    VPoly out;
    for (std::size_t i = 0; i + 1 < q.size(); ++i)
        if (q[i] != 0) out = out + VPoly(mpq_class(q[i])).shifted(lo + static_cast<int>(i));
    return out;
}

}  // namespace

VPoly VPoly::div_one_minus_v() const { return divide_linear(*this, +1); }
VPoly VPoly::div_one_plus_v() const { return divide_linear(*this, -1); }

std::string VPoly::str() const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : t_) {
        std::string cs = c.get_str();
        bool neg = cs[0] == '-';
        std::string mono = e == 0 ? "" : (e == 1 ? "v" : "v^" + std::to_string(e));
        std::string body;
        if (mono.empty())
            body = neg ? cs.substr(1) : cs;
        else if (cs == "1" || cs == "-1")
            body = mono;
        else
            body = (neg ? cs.substr(1) : cs) + "*" + mono;
        if (out.empty())
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

VRat::VRat(VPoly num, VPoly den) : num_(std::move(num)), b_(0), c_(0) {
    if (den.is_zero()) throw Error("zero denominator in v-rational");
    // Factor the denominator as const * v^a (1-v)^b (1+v)^c.
    int a = den.min_exp();
    den = den.shifted(-a);
    while (!den.is_zero() && den.eval1() == 0) {
        den = den.div_one_minus_v();
        ++b_;
    }
    while (!den.is_zero() && den.evalm1() == 0) {
        den = den.div_one_plus_v();
        ++c_;
    }
    if (den.terms().size() != 1 || den.min_exp() != 0)
        throw Error("denominator is not of the form v^a (1-v)^b (1+v)^c: " + den.str());
    mpq_class k = den.coeff(0);
    num_ = num_.scaled(1 / k).shifted(-a);
    cancel();
}

void VRat::cancel() {
    if (num_.is_zero()) {
        b_ = c_ = 0;
        return;
    }
    while (b_ > 0 && num_.eval1() == 0) {
        num_ = num_.div_one_minus_v();
        --b_;
    }
    while (c_ > 0 && num_.evalm1() == 0) {
        num_ = num_.div_one_plus_v();
        --c_;
    }
}

VPoly VRat::den() const {
    VPoly d(1);
    VPoly omv = VPoly(1) - VPoly::v_pow(1);
    VPoly opv = VPoly(1) + VPoly::v_pow(1);
    for (int i = 0; i < b_; ++i) d = d * omv;
    for (int i = 0; i < c_; ++i) d = d * opv;
    return d;
}

mpq_class VRat::eval1() const {
    if (b_ > 0) throw Error("v-rational has a pole at v = 1");
    mpq_class d = 1;
    for (int i = 0; i < c_; ++i) d *= 2;
    return num_.eval1() / d;
}

VRat operator+(const VRat& a, const VRat& b) {
    int nb = std::max(a.b_, b.b_), nc = std::max(a.c_, b.c_);
    VPoly omv = VPoly(1) - VPoly::v_pow(1);
    VPoly opv = VPoly(1) + VPoly::v_pow(1);
    auto raise = [&](const VRat& x) {
        VPoly n = x.num_;
        for (int i = x.b_; i < nb; ++i) n = n * omv;
        for (int i = x.c_; i < nc; ++i) n = n * opv;
        return n;
    };
    return VRat(raise(a) + raise(b), nb, nc);
}

VRat operator-(const VRat& a, const VRat& b) { return a + (-b); }

VRat operator*(const VRat& a, const VRat& b) {
    return VRat(a.num_ * b.num_, a.b_ + b.b_, a.c_ + b.c_);
}

VRat VRat::operator-() const {
    VRat r = *this;
    r.num_ = -r.num_;
    return r;
}

VRat VRat::inverse() const {
    if (is_zero()) throw Error("inverting zero v-rational");
    // Factor the numerator within the same family.
    VPoly n = num_;
    int a = n.min_exp();
    n = n.shifted(-a);
    int nb = 0, nc = 0;
    while (n.eval1() == 0) {
        n = n.div_one_minus_v();
        ++nb;
    }
    while (n.evalm1() == 0) {
        n = n.div_one_plus_v();
        ++nc;
    }
    if (n.terms().size() != 1 || n.min_exp() != 0)
        throw Error("v-rational inverse leaves the v^a (1-v)^b (1+v)^c family: " + num_.str());
    mpq_class k = n.coeff(0);
    // (k v^a (1-v)^nb (1+v)^nc / D)^-1 = D / (k v^a ...), with D = (1-v)^b (1+v)^c.
    VPoly newnum = den().scaled(1 / k).shifted(-a);
    return VRat(std::move(newnum), nb, nc);
}

std::string VRat::str() const {
    if (is_laurent()) return num_.str();
    return "(" + num_.str() + ")/(" + den().str() + ")";
}

}  // namespace modseven
