#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "modseven/error.hpp"

namespace modseven {

/// Laurent polynomial in v over Q.
class VPoly {
public:
    VPoly() = default;
    VPoly(long n) { set(0, mpq_class(n)); }
    explicit VPoly(mpq_class q) { set(0, std::move(q)); }
    static VPoly v_pow(int e) {
        VPoly p;
        p.set(e, 1);
        return p;
    }

    const std::map<int, mpq_class>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    int min_exp() const;
    int max_exp() const;
    mpq_class coeff(int e) const;
    mpq_class eval1() const;   // value at v = 1
    mpq_class evalm1() const;  // value at v = -1

    friend VPoly operator+(const VPoly& a, const VPoly& b);
    friend VPoly operator-(const VPoly& a, const VPoly& b);
    friend VPoly operator*(const VPoly& a, const VPoly& b);
    VPoly operator-() const;
    VPoly scaled(const mpq_class& k) const;
    VPoly shifted(int e) const;  // * v^e
    bool operator==(const VPoly& o) const { return t_ == o.t_; }

    /// Exact division by (1 - v) or (1 + v); the caller guarantees the root.
    VPoly div_one_minus_v() const;
    VPoly div_one_plus_v() const;

    std::string str() const;

private:
    void set(int e, mpq_class c);
    std::map<int, mpq_class> t_;
};

/// Rational function in v whose denominator is (1-v)^b (1+v)^c (powers of v
/// live in the Laurent numerator). This covers every denominator the
/// torsion-point series produce: the k = 0 coordinates contribute (1-v)
/// powers and inverting X + 2Y contributes v and (1+v) powers. Cancellation
/// is by exact synthetic division, so coefficients stay small; anything
/// outside the family is rejected.
class VRat {
public:
    VRat() : num_(), b_(0), c_(0) {}
    VRat(long n) : num_(n), b_(0), c_(0) {}
    explicit VRat(VPoly p) : num_(std::move(p)), b_(0), c_(0) {}
    VRat(VPoly num, VPoly den);  // den must factor as const * v^a (1-v)^b (1+v)^c
    static VRat v_pow(int e) { return VRat(VPoly::v_pow(e)); }

    const VPoly& num() const { return num_; }
    VPoly den() const;  // expanded (1-v)^b (1+v)^c
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return b_ == 0 && c_ == 0; }
    mpq_class eval1() const;  // throws on a pole at v = 1

    friend VRat operator+(const VRat& a, const VRat& b);
    friend VRat operator-(const VRat& a, const VRat& b);
    friend VRat operator*(const VRat& a, const VRat& b);
    VRat operator-() const;
    VRat inverse() const;
    bool operator==(const VRat& o) const {
        return b_ == o.b_ && c_ == o.c_ && num_ == o.num_;
    }

    std::string str() const;

private:
    VRat(VPoly num, int b, int c) : num_(std::move(num)), b_(b), c_(c) { cancel(); }
    void cancel();

    VPoly num_;
    int b_;  // denominator power of (1 - v)
    int c_;  // denominator power of (1 + v)
};

}  // namespace modseven
