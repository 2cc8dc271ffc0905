#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "modseven/coef.hpp"

namespace modseven {

struct Generator {
    std::string name;
    int weight = 1;
};

/// Immutable generator list with weights; shared between polynomials.
class Context {
public:
    explicit Context(std::vector<Generator> gens) : gens_(std::move(gens)) {}
    std::size_t size() const { return gens_.size(); }
    const Generator& gen(std::size_t i) const { return gens_[i]; }
    std::optional<std::size_t> index_of(std::string_view name) const;
    bool operator==(const Context& o) const;

private:
    std::vector<Generator> gens_;
};

using ContextPtr = std::shared_ptr<const Context>;

ContextPtr make_context(std::vector<Generator> gens);

/// Exponent vector, one entry per generator. Negative exponents are allowed
/// (Laurent monomials); only the parser restricts to ordinary polynomials.
using Exp = std::vector<int>;

/// Sparse multivariate polynomial over Coef. Zero coefficients are never stored.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(ContextPtr ctx) : ctx_(std::move(ctx)) {}

    static MultiPoly constant(ContextPtr ctx, Coef c);
    static MultiPoly generator(ContextPtr ctx, std::size_t idx, int power = 1);
    static MultiPoly monomial(ContextPtr ctx, Exp e, Coef c);

    const ContextPtr& context() const { return ctx_; }
    const std::map<Exp, Coef>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t term_count() const { return t_.size(); }
    Coef coeff(const Exp& e) const;

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, long n);
    friend MultiPoly operator*(const MultiPoly& a, const Coef& c) { return a.scaled(c); }
    MultiPoly operator-() const;
    MultiPoly scaled(const Coef& c) const;
    MultiPoly pow(unsigned e) const;
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    /// Weighted degree of a nonzero homogeneous part; the maximum over terms.
    int degree() const;  // throws on the zero polynomial
    bool is_homogeneous() const;
    bool is_homogeneous_of(int d) const;

    /// Ring-map substitution: generator i maps to images[i] (all in one target
    /// context). Requires nonnegative exponents.
    MultiPoly subst(const ContextPtr& target, const std::vector<MultiPoly>& images) const;

    /// Reinterpret in a larger context, matching generators by name.
    MultiPoly extended_to(const ContextPtr& target) const;

    /// Keep only terms whose exponent of generator `idx` equals `e`, with that
    /// generator removed from the exponent (exponent set to zero).
    MultiPoly coeff_of_gen_power(std::size_t idx, int e) const;
    int max_gen_exp(std::size_t idx) const;

    /// Evaluate in any commutative ring V. `lift` maps Coef into V; powers are
    /// cached per generator. Requires nonnegative exponents.
    template <class V, class Lift>
    V eval(const std::vector<V>& values, Lift lift, V zero) const {
        std::vector<std::vector<V>> powers(values.size());
        V acc = zero;
        for (const auto& [e, c] : t_) {
            V term = lift(c);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (e[i] < 0) throw Error("negative exponent in eval");
                auto& cache = powers[i];
                if (cache.empty()) cache.push_back(values[i]);
                while (static_cast<int>(cache.size()) < e[i])
                    cache.push_back(cache.back() * values[i]);
                term = term * cache[e[i] - 1];
            }
            acc = acc + term;
        }
        return acc;
    }

    std::string str() const;

private:
    void add_term(const Exp& e, const Coef& c);

    ContextPtr ctx_;
    std::map<Exp, Coef> t_;
};

/// sigma2-normal form: rewrites z1*z2 -> -z2*z3 - z1*z3 until no monomial
/// contains both z1 and z2. Works in any context containing z1, z2, z3.
MultiPoly nf_sigma2(const MultiPoly& p);

/// Number of sigma2-normal-form monomials of degree k in z1,z2,z3 (by
/// enumeration; equals 2k+1).
int mf7_rank(int k);

/// List the normal-form monomial exponents (e1,e2,e3) of degree k, ordered.
std::vector<Exp> nf_monomials(int k);

/// Exact determinant of a small square matrix of polynomials (bitmask
/// Laplace expansion; fine up to 10x10 or so).
MultiPoly det_poly_matrix(const std::vector<std::vector<MultiPoly>>& m);

// Shared contexts.
ContextPtr zctx();       // z1,z2,z3 (weight 1 each)
ContextPtr zrctx();      // z1,z2,z3 (1), r (2)
ContextPtr zrr1ctx();    // z1,z2,z3 (1), r (2), r1 (2) — model of Gamma (x) R
ContextPtr actx();       // a2,a4,a6 (weights 2,4,6)
ContextPtr gctx();       // a2,a4,a6, r (2)
ContextPtr g2ctx();      // a2,a4,a6, r1, r2
ContextPtr g3ctx();      // a2,a4,a6, r1, r2, r3
ContextPtr wctx();       // a1..a6, r,s,t,u — generic Weierstrass transforms
ContextPtr c4c6ctx();    // c4, c6, Delta (weights 4,6,12)

}  // namespace modseven
