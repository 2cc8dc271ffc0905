#include "modseven/coef.hpp"

namespace modseven {

std::string ring_name(Ring r) {
    switch (r) {
        case Ring::Int: return "Int";
        case Ring::Rat: return "Rat";
        case Ring::GF3: return "GF3";
        case Ring::Loc3: return "Loc3";
        case Ring::CycQ6: return "CycQ6";
    }
    return "?";
}

static bool den_coprime_to_3(const mpq_class& q) {
    return mpz_class(q.get_den() % 3) != 0;
}

Coef Coef::integer(mpz_class n) {
    Coef c;
    c.tag_ = Ring::Int;
    c.v_ = std::move(n);
    return c;
}

Coef Coef::rational(mpq_class q) {
    q.canonicalize();
    Coef c;
    c.tag_ = Ring::Rat;
    c.v_ = std::move(q);
    return c;
}

Coef Coef::rational(long num, long den) {
    if (den == 0) throw Error("rational with zero denominator");
    return rational(mpq_class(num, den));
}

Coef Coef::gf3(long n) {
    Coef c;
    c.tag_ = Ring::GF3;
    c.v_ = static_cast<std::uint8_t>(((n % 3) + 3) % 3);
    return c;
}

Coef Coef::loc3(mpq_class q) {
    q.canonicalize();
    if (!den_coprime_to_3(q)) throw Error("Loc3 value with denominator divisible by 3: " + q.get_str());
    Coef c;
    c.tag_ = Ring::Loc3;
    c.v_ = std::move(q);
    return c;
}

Coef Coef::loc3(long num, long den) {
    if (den == 0) throw Error("rational with zero denominator");
    return loc3(mpq_class(num, den));
}

Coef Coef::cyc(mpq_class a, mpq_class b) {
    a.canonicalize();
    b.canonicalize();
    Coef c;
    c.tag_ = Ring::CycQ6;
    c.v_ = Cyc{std::move(a), std::move(b)};
    return c;
}

Coef Coef::zero(Ring r) { return one(r) - one(r); }

Coef Coef::one(Ring r) {
    switch (r) {
        case Ring::Int: return integer(1);
        case Ring::Rat: return rational(mpq_class(1));
        case Ring::GF3: return gf3(1);
        case Ring::Loc3: return loc3(mpq_class(1));
        case Ring::CycQ6: return cyc(1, 0);
    }
    throw Error("bad ring tag");
}

bool Coef::is_zero() const {
    switch (tag_) {
        case Ring::Int: return intz() == 0;
        case Ring::Rat:
        case Ring::Loc3: return rat() == 0;
        case Ring::GF3: return gf3_val() == 0;
        case Ring::CycQ6: return cycq().a == 0 && cycq().b == 0;
    }
    return false;
}

bool Coef::is_one() const {
    switch (tag_) {
        case Ring::Int: return intz() == 1;
        case Ring::Rat:
        case Ring::Loc3: return rat() == 1;
        case Ring::GF3: return gf3_val() == 1;
        case Ring::CycQ6: return cycq().a == 1 && cycq().b == 0;
    }
    return false;
}

bool Coef::is_integer() const {
    switch (tag_) {
        case Ring::Int: return true;
        case Ring::Rat:
        case Ring::Loc3: return rat().get_den() == 1;
        case Ring::GF3: return true;
        case Ring::CycQ6: return cycq().b == 0 && cycq().a.get_den() == 1;
    }
    return false;
}

bool Coef::is_unit() const {
    switch (tag_) {
        case Ring::Int: return intz() == 1 || intz() == -1;
        case Ring::Rat: return !is_zero();
        case Ring::GF3: return !is_zero();
        case Ring::Loc3: return !is_zero() && mpz_class(rat().get_num() % 3) != 0;
        case Ring::CycQ6: return !is_zero();
    }
    return false;
}

Ring Coef::join(Ring a, Ring b) {
    if (a == b) return a;
    if (a == Ring::Int) return b;
    if (b == Ring::Int) return a;
    auto frac = [](Ring r) { return r == Ring::Rat || r == Ring::Loc3; };
    if (frac(a) && frac(b)) return Ring::Rat;
    if ((frac(a) && b == Ring::CycQ6) || (frac(b) && a == Ring::CycQ6)) return Ring::CycQ6;
    throw Error("coefficient ring mismatch: " + ring_name(a) + " vs " + ring_name(b));
}

Coef Coef::to_ring(Ring r) const {
    if (r == tag_) return *this;
    switch (r) {
        case Ring::Int: {
            if (tag_ == Ring::Rat || tag_ == Ring::Loc3) {
                if (rat().get_den() != 1) throw Error("not an integer: " + str());
                return integer(rat().get_num());
            }
            if (tag_ == Ring::CycQ6 && cycq().b == 0 && cycq().a.get_den() == 1)
                return integer(cycq().a.get_num());
            break;
        }
        case Ring::Rat: {
            if (tag_ == Ring::Int) return rational(mpq_class(intz()));
            if (tag_ == Ring::Loc3) return rational(rat());
            break;
        }
        case Ring::Loc3: {
            if (tag_ == Ring::Int) return loc3(mpq_class(intz()));
            if (tag_ == Ring::Rat) return loc3(rat());
            break;
        }
        case Ring::GF3: {
            if (tag_ == Ring::Int) return gf3(mpz_class(intz() % 3).get_si());
            if (tag_ == Ring::Rat || tag_ == Ring::Loc3) {
                if (!den_coprime_to_3(rat())) throw Error("denominator divisible by 3 in GF3 reduction");
                long n = mpz_class(rat().get_num() % 3).get_si();
                long d = mpz_class(rat().get_den() % 3).get_si();
                long dinv = (((d % 3) + 3) % 3 == 1) ? 1 : 2;
                return gf3(n * dinv);
            }
            break;
        }
        case Ring::CycQ6: {
            if (tag_ == Ring::Int) return cyc(mpq_class(intz()), 0);
            if (tag_ == Ring::Rat || tag_ == Ring::Loc3) return cyc(rat(), 0);
            break;
        }
    }
    throw Error("no conversion " + ring_name(tag_) + " -> " + ring_name(r) + " for " + str());
}

const mpq_class& Coef::rat() const {
    if (tag_ != Ring::Rat && tag_ != Ring::Loc3) throw Error("not a fraction payload");
    return std::get<mpq_class>(v_);
}

const mpz_class& Coef::intz() const {
    if (tag_ != Ring::Int) throw Error("not an integer payload");
    return std::get<mpz_class>(v_);
}

const Cyc& Coef::cycq() const {
    if (tag_ != Ring::CycQ6) throw Error("not a CycQ6 payload");
    return std::get<Cyc>(v_);
}

int Coef::gf3_val() const {
    if (tag_ != Ring::GF3) throw Error("not a GF3 payload");
    return std::get<std::uint8_t>(v_);
}

namespace {

enum class Op { Add, Sub, Mul };

Coef apply(Op op, const Coef& x, const Coef& y) {
    Ring r = Coef::join(x.ring(), y.ring());
    Coef a = x.to_ring(r), b = y.to_ring(r);
    switch (r) {
        case Ring::Int: {
            const mpz_class &u = a.intz(), &v = b.intz();
            if (op == Op::Add) return Coef::integer(u + v);
            if (op == Op::Sub) return Coef::integer(u - v);
            return Coef::integer(u * v);
        }
        case Ring::Rat:
        case Ring::Loc3: {
            const mpq_class &u = a.rat(), &v = b.rat();
            mpq_class w = (op == Op::Add) ? mpq_class(u + v)
                        : (op == Op::Sub) ? mpq_class(u - v)
                                          : mpq_class(u * v);
            return r == Ring::Rat ? Coef::rational(std::move(w)) : Coef::loc3(std::move(w));
        }
        case Ring::GF3: {
            int u = a.gf3_val(), v = b.gf3_val();
            if (op == Op::Add) return Coef::gf3(u + v);
            if (op == Op::Sub) return Coef::gf3(u - v + 3);
            return Coef::gf3(u * v);
        }
        case Ring::CycQ6: {
            const Cyc &u = a.cycq(), &v = b.cycq();
            if (op == Op::Add) return Coef::cyc(u.a + v.a, u.b + v.b);
            if (op == Op::Sub) return Coef::cyc(u.a - v.a, u.b - v.b);
            // (a1 + b1 z)(a2 + b2 z) with z^2 = z - 1
            return Coef::cyc(u.a * v.a - u.b * v.b, u.a * v.b + u.b * v.a + u.b * v.b);
        }
    }
    throw Error("bad ring tag");
}

}  // namespace

Coef operator+(const Coef& x, const Coef& y) { return apply(Op::Add, x, y); }
Coef operator-(const Coef& x, const Coef& y) { return apply(Op::Sub, x, y); }
Coef operator*(const Coef& x, const Coef& y) { return apply(Op::Mul, x, y); }

Coef operator/(const Coef& x, const Coef& y) {
    Ring r = Coef::join(x.ring(), y.ring());
    if (r == Ring::Int) r = Ring::Rat;
    return x.to_ring(r) * y.to_ring(r).inverse();
}

Coef Coef::operator-() const { return zero(tag_) - *this; }

Coef Coef::inverse() const {
    if (!is_unit()) throw Error("not a unit in " + ring_name(tag_) + ": " + str());
    switch (tag_) {
        case Ring::Int: return *this;  // only +-1
        case Ring::Rat: return rational(mpq_class(1) / rat());
        case Ring::Loc3: return loc3(mpq_class(1) / rat());
        case Ring::GF3: return *this;  // 1 and 2 are self-inverse mod 3
        case Ring::CycQ6: {
            // conjugate of a+bz is (a+b)-bz; norm a^2+ab+b^2
            const Cyc& c = cycq();
            mpq_class n = c.a * c.a + c.a * c.b + c.b * c.b;
            return cyc((c.a + c.b) / n, -c.b / n);
        }
    }
    throw Error("bad ring tag");
}

Coef Coef::pow(unsigned long e) const {
    Coef acc = one(tag_), base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Coef::operator==(const Coef& o) const {
    Ring r = join(tag_, o.ring());
    Coef a = to_ring(r), b = o.to_ring(r);
    switch (r) {
        case Ring::Int: return a.intz() == b.intz();
        case Ring::Rat:
        case Ring::Loc3: return a.rat() == b.rat();
        case Ring::GF3: return a.gf3_val() == b.gf3_val();
        case Ring::CycQ6: return a.cycq() == b.cycq();
    }
    return false;
}

std::string Coef::str() const {
    switch (tag_) {
        case Ring::Int: return intz().get_str();
        case Ring::Rat:
        case Ring::Loc3: return rat().get_str();
        case Ring::GF3: return std::to_string(gf3_val());
        case Ring::CycQ6: {
            const Cyc& c = cycq();
            if (c.b == 0) return c.a.get_str();
            std::string zpart = (c.b == 1) ? "zeta6" : (c.b == -1) ? "-zeta6" : c.b.get_str() + "*zeta6";
            if (c.a == 0) return zpart;
            std::string s = c.a.get_str();
            if (c.b > 0)
                s += "+" + ((c.b == 1) ? std::string("zeta6") : c.b.get_str() + "*zeta6");
            else
                s += (c.b == -1) ? std::string("-zeta6") : c.b.get_str() + "*zeta6";
            return s;
        }
    }
    return "?";
}

}  // namespace modseven
