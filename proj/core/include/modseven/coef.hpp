#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

#include "modseven/error.hpp"

namespace modseven {

/// The five coefficient rings the library computes in.
/// Loc3 is the localization of the integers away from 3 (denominators prime
/// to 3); CycQ6 is Q(zeta6) with zeta6^2 = zeta6 - 1.
enum class Ring : std::uint8_t { Int, Rat, GF3, Loc3, CycQ6 };

std::string ring_name(Ring r);

/// a + b*zeta6 with rational a, b.
struct Cyc {
    mpq_class a;
    mpq_class b;
    bool operator==(const Cyc& o) const { return a == o.a && b == o.b; }
};

/// Exact scalar: a tagged value in one of the five rings.
/// Arithmetic promotes along Int < {GF3, Loc3, CycQ6}, Loc3 < Rat < CycQ6;
/// GF3 mixes only with Int. Anything else is a ring mismatch.
class Coef {
public:
    Coef() : tag_(Ring::Int), v_(mpz_class(0)) {}
    Coef(long n) : tag_(Ring::Int), v_(mpz_class(n)) {}

    static Coef integer(mpz_class n);
    static Coef rational(mpq_class q);
    static Coef rational(long num, long den);
    static Coef gf3(long n);
    static Coef loc3(mpq_class q);  // throws if the denominator is divisible by 3
    static Coef loc3(long num, long den);
    static Coef cyc(mpq_class a, mpq_class b);
    static Coef zeta6() { return cyc(0, 1); }
    static Coef zero(Ring r);
    static Coef one(Ring r);

    Ring ring() const { return tag_; }
    bool is_zero() const;
    bool is_one() const;
    bool is_integer() const;  // lies in the image of Z (false for GF3/CycQ6 non-ints)
    bool is_unit() const;

    /// Explicit ring conversion; throws when no canonical map exists
    /// (e.g. CycQ6 -> Rat, or Rat -> Loc3 with a denominator divisible by 3).
    Coef to_ring(Ring r) const;

    const mpq_class& rat() const;   // Rat or Loc3 payload
    const mpz_class& intz() const;  // Int payload
    const Cyc& cycq() const;        // CycQ6 payload
    int gf3_val() const;            // GF3 payload in {0,1,2}

    Coef inverse() const;  // throws on non-units
    Coef pow(unsigned long e) const;

    friend Coef operator+(const Coef& x, const Coef& y);
    friend Coef operator-(const Coef& x, const Coef& y);
    friend Coef operator*(const Coef& x, const Coef& y);
    friend Coef operator/(const Coef& x, const Coef& y);  // Int/Int promotes to Rat
    Coef operator-() const;
    bool operator==(const Coef& o) const;
    bool operator!=(const Coef& o) const { return !(*this == o); }

    std::string str() const;

    /// Least common ring of two tags; throws on GF3-vs-fraction mixes.
    static Ring join(Ring a, Ring b);

private:
    Ring tag_;
    std::variant<mpz_class, mpq_class, std::uint8_t, Cyc> v_;
};

}  // namespace modseven
