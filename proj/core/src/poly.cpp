#include "modseven/poly.hpp"

#include <algorithm>

namespace modseven {

std::optional<std::size_t> Context::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return i;
    return std::nullopt;
}

bool Context::operator==(const Context& o) const {
    if (gens_.size() != o.gens_.size()) return false;
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name != o.gens_[i].name || gens_[i].weight != o.gens_[i].weight) return false;
    return true;
}

ContextPtr make_context(std::vector<Generator> gens) {
    return std::make_shared<const Context>(std::move(gens));
}

static void require_same_ctx(const MultiPoly& a, const MultiPoly& b) {
    if (!a.context() || !b.context()) throw Error("polynomial without context");
    if (a.context() != b.context() && !(*a.context() == *b.context()))
        throw Error("mismatched generator lists");
}

MultiPoly MultiPoly::constant(ContextPtr ctx, Coef c) {
    MultiPoly p(std::move(ctx));
    p.add_term(Exp(p.ctx_->size(), 0), c);
    return p;
}

MultiPoly MultiPoly::generator(ContextPtr ctx, std::size_t idx, int power) {
    if (idx >= ctx->size()) throw Error("generator index out of range");
    MultiPoly p(std::move(ctx));
    Exp e(p.ctx_->size(), 0);
    e[idx] = power;
    p.add_term(e, Coef(1));
    return p;
}

MultiPoly MultiPoly::monomial(ContextPtr ctx, Exp e, Coef c) {
    if (e.size() != ctx->size()) throw Error("exponent vector length mismatch");
    MultiPoly p(std::move(ctx));
    p.add_term(e, c);
    return p;
}

Coef MultiPoly::coeff(const Exp& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? Coef(0) : it->second;
}

void MultiPoly::add_term(const Exp& e, const Coef& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.emplace(e, c);
    if (!fresh) {
        it->second = it->second + c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    require_same_ctx(a, b);
    MultiPoly r = a;
    for (const auto& [e, c] : b.t_) r.add_term(e, c);
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    require_same_ctx(a, b);
    MultiPoly r = a;
    for (const auto& [e, c] : b.t_) r.add_term(e, -c);
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    require_same_ctx(a, b);
    MultiPoly r(a.ctx_);
    Exp e(a.ctx_->size());
    for (const auto& [ea, ca] : a.t_) {
        for (const auto& [eb, cb] : b.t_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly operator*(const MultiPoly& a, long n) { return a.scaled(Coef(n)); }

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(ctx_);
    for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::scaled(const Coef& c) const {
    MultiPoly r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : t_) r.add_term(e, k * c);
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly acc = constant(ctx_, Coef(1));
    MultiPoly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        if (e >>= 1) base = base * base;
    }
    return acc;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    require_same_ctx(*this, o);
    if (t_.size() != o.t_.size()) return false;
    auto it = o.t_.begin();
    for (const auto& [e, c] : t_) {
        if (e != it->first || !(c == it->second)) return false;
        ++it;
    }
    return true;
}

static int weighted_degree(const Context& ctx, const Exp& e) {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * ctx.gen(i).weight;
    return d;
}

int MultiPoly::degree() const {
    if (t_.empty()) throw Error("degree of zero polynomial");
    int d = weighted_degree(*ctx_, t_.begin()->first);
    for (const auto& [e, c] : t_) d = std::max(d, weighted_degree(*ctx_, e));
    return d;
}

bool MultiPoly::is_homogeneous() const {
    if (t_.empty()) return true;
    return is_homogeneous_of(weighted_degree(*ctx_, t_.begin()->first));
}

bool MultiPoly::is_homogeneous_of(int d) const {
    for (const auto& [e, c] : t_)
        if (weighted_degree(*ctx_, e) != d) return false;
    return true;
}

MultiPoly MultiPoly::subst(const ContextPtr& target, const std::vector<MultiPoly>& images) const {
    if (images.size() != ctx_->size()) throw Error("substitution image count mismatch");
    return eval<MultiPoly>(
        images, [&](const Coef& c) { return MultiPoly::constant(target, c); },
        MultiPoly(target));
}

MultiPoly MultiPoly::extended_to(const ContextPtr& target) const {
    std::vector<std::size_t> where(ctx_->size());
    for (std::size_t i = 0; i < ctx_->size(); ++i) {
        auto j = target->index_of(ctx_->gen(i).name);
        if (!j) throw Error("generator " + ctx_->gen(i).name + " missing from target context");
        where[i] = *j;
    }
    MultiPoly r(target);
    for (const auto& [e, c] : t_) {
        Exp f(target->size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) f[where[i]] = e[i];
        r.add_term(f, c);
    }
    return r;
}

MultiPoly MultiPoly::coeff_of_gen_power(std::size_t idx, int e) const {
    MultiPoly r(ctx_);
    for (const auto& [f, c] : t_) {
        if (f[idx] != e) continue;
        Exp g = f;
        g[idx] = 0;
        r.add_term(g, c);
    }
    return r;
}

int MultiPoly::max_gen_exp(std::size_t idx) const {
    int m = 0;
    for (const auto& [e, c] : t_) m = std::max(m, e[idx]);
    return m;
}

std::string MultiPoly::str() const {
    if (t_.empty()) return "0";
    std::string out;
    // Print in reverse map order so leading generators come first.
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ctx_->gen(i).name;
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        std::string cs = c.str();
        bool neg = cs.size() > 1 && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos;
        std::string body;
        if (mono.empty()) {
            body = cs;
            neg = false;
        } else if (c.is_one()) {
            body = mono;
        } else if ((-c).is_one()) {
            body = mono;
            neg = true;
        } else if (cs.find_first_of("+-", 1) != std::string::npos) {
            body = "(" + cs + ")*" + mono;  // composite scalars (CycQ6) get parens
            neg = false;
        } else if (neg) {
            body = cs.substr(1) + "*" + mono;
        } else {
            body = cs + "*" + mono;
        }
        if (out.empty())
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

MultiPoly nf_sigma2(const MultiPoly& p) {
    const ContextPtr& ctx = p.context();
    auto i1 = ctx->index_of("z1"), i2 = ctx->index_of("z2"), i3 = ctx->index_of("z3");
    if (!i1 || !i2 || !i3) throw Error("context lacks z1,z2,z3");
    // Each rewrite lowers e1+e2, so the loop terminates. Rewrites produce
    // lex-smaller exponents, so popping the largest first processes every
    // monomial exactly once (coefficients merge before their monomial is
    // expanded).
    std::map<Exp, Coef> work(p.terms());
    MultiPoly out(ctx);
    Exp m1, m2;
    while (!work.empty()) {
        auto it = std::prev(work.end());
        Exp e = it->first;
        Coef c = it->second;
        work.erase(it);
        if (c.is_zero()) continue;
        if (e[*i1] > 0 && e[*i2] > 0) {
            m1 = e;
            m1[*i1] -= 1;
            m1[*i3] += 1;
            m2 = e;
            m2[*i2] -= 1;
            m2[*i3] += 1;
            for (const Exp* m : {&m1, &m2}) {
                auto [jt, fresh] = work.emplace(*m, -c);
                if (!fresh) {
                    jt->second = jt->second - c;
                    if (jt->second.is_zero()) work.erase(jt);
                }
            }
        } else {
            out = out + MultiPoly::monomial(ctx, e, c);
        }
    }
    return out;
}

std::vector<Exp> nf_monomials(int k) {
    std::vector<Exp> out;
    for (int e1 = k; e1 >= 1; --e1) out.push_back({e1, 0, k - e1});
    for (int e2 = 0; e2 <= k; ++e2) out.push_back({0, e2, k - e2});
    return out;
}

int mf7_rank(int k) {
    if (k < 0) throw Error("mf7_rank needs k >= 0");
    return static_cast<int>(nf_monomials(k).size());
}

MultiPoly det_poly_matrix(const std::vector<std::vector<MultiPoly>>& m) {
    std::size_t n = m.size();
    if (n == 0 || n > 16) throw Error("det_poly_matrix handles 1..16 rows");
    for (const auto& row : m)
        if (row.size() != n) throw Error("det of non-square matrix");
    const ContextPtr& ctx = m[0][0].context();
    std::vector<MultiPoly> det(1u << n, MultiPoly(ctx));
    det[0] = MultiPoly::constant(ctx, Coef(1));
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::size_t row = static_cast<std::size_t>(__builtin_popcount(mask)) - 1;
        MultiPoly acc(ctx);
        // Expansion along the last row: cofactor sign is (-1)^(row + column
        // index within the mask).
        int sign = (row % 2 == 0) ? 1 : -1;
        for (std::size_t col = 0; col < n; ++col) {
            if (!(mask & (1u << col))) continue;
            if (!m[row][col].is_zero()) {
                MultiPoly term = m[row][col] * det[mask & ~(1u << col)];
                acc = sign > 0 ? acc + term : acc - term;
            }
            sign = -sign;
        }
        det[mask] = acc;
    }
    return det[(1u << n) - 1];
}

namespace {
ContextPtr make_static(std::vector<Generator> g) { return make_context(std::move(g)); }
}  // namespace

ContextPtr zctx() {
    static ContextPtr c = make_static({{"z1", 1}, {"z2", 1}, {"z3", 1}});
    return c;
}
ContextPtr zrctx() {
    static ContextPtr c = make_static({{"z1", 1}, {"z2", 1}, {"z3", 1}, {"r", 2}});
    return c;
}
ContextPtr zrr1ctx() {
    static ContextPtr c = make_static({{"z1", 1}, {"z2", 1}, {"z3", 1}, {"r", 2}, {"r1", 2}});
    return c;
}
ContextPtr actx() {
    static ContextPtr c = make_static({{"a2", 2}, {"a4", 4}, {"a6", 6}});
    return c;
}
ContextPtr gctx() {
    static ContextPtr c = make_static({{"a2", 2}, {"a4", 4}, {"a6", 6}, {"r", 2}});
    return c;
}
ContextPtr g2ctx() {
    static ContextPtr c = make_static({{"a2", 2}, {"a4", 4}, {"a6", 6}, {"r1", 2}, {"r2", 2}});
    return c;
}
ContextPtr g3ctx() {
    static ContextPtr c =
        make_static({{"a2", 2}, {"a4", 4}, {"a6", 6}, {"r1", 2}, {"r2", 2}, {"r3", 2}});
    return c;
}
ContextPtr wctx() {
    static ContextPtr c = make_static({{"a1", 1},
                                       {"a2", 2},
                                       {"a3", 3},
                                       {"a4", 4},
                                       {"a6", 6},
                                       {"r", 2},
                                       {"s", 1},
                                       {"t", 3},
                                       {"u", 0}});
    return c;
}
ContextPtr c4c6ctx() {
    static ContextPtr c = make_static({{"c4", 4}, {"c6", 6}, {"Delta", 12}});
    return c;
}

}  // namespace modseven
