#include "modseven/hopf.hpp"

#include <json.hpp>

#include "modseven/linalg.hpp"

namespace modseven {

namespace {

MultiPoly gen(const ContextPtr& c, const char* name) {
    return MultiPoly::generator(c, *c->index_of(name));
}

// eta_R images of a2, a4, a6 inside gctx().
std::vector<MultiPoly> eta_r_images() {
    auto g = gctx();
    MultiPoly a2 = gen(g, "a2"), a4 = gen(g, "a4"), a6 = gen(g, "a6"), r = gen(g, "r");
    MultiPoly e2 = a2 + r * 3;
    MultiPoly e4 = a4 + r * a2 * 2 + r * r * 3;
    MultiPoly e6 = a6 + r * a4 + r * r * a2 + r * r * r;
    return {e2, e4, e6};
}

}  // namespace

MultiPoly eta_r(const MultiPoly& p) {
    if (!(*p.context() == *actx())) throw Error("eta_r expects a polynomial in a2,a4,a6");
    return p.subst(gctx(), eta_r_images());
}

MultiPoly hopf_counit(const MultiPoly& g) {
    auto a = actx();
    std::vector<MultiPoly> img{gen(a, "a2"), gen(a, "a4"), gen(a, "a6"), MultiPoly(a)};
    return g.subst(a, img);
}

MultiPoly hopf_conj(const MultiPoly& g) {
    auto images = eta_r_images();
    images.push_back(-gen(gctx(), "r"));
    return g.subst(gctx(), images);
}

MultiPoly hopf_psi(const MultiPoly& g) {
    auto g2 = g2ctx();
    std::vector<MultiPoly> img{gen(g2, "a2"), gen(g2, "a4"), gen(g2, "a6"),
                               gen(g2, "r1") + gen(g2, "r2")};
    return g.subst(g2, img);
}

MultiPoly embed_left(const MultiPoly& g) {
    auto g2 = g2ctx();
    std::vector<MultiPoly> img{gen(g2, "a2"), gen(g2, "a4"), gen(g2, "a6"), gen(g2, "r1")};
    return g.subst(g2, img);
}

MultiPoly embed_right(const MultiPoly& g) {
    auto g2 = g2ctx();
    auto er = eta_r_images();  // in gctx; move them to g2 with r -> r1
    std::vector<MultiPoly> to_g2{gen(g2, "a2"), gen(g2, "a4"), gen(g2, "a6"), gen(g2, "r1")};
    std::vector<MultiPoly> img{er[0].subst(g2, to_g2), er[1].subst(g2, to_g2),
                               er[2].subst(g2, to_g2), gen(g2, "r2")};
    return g.subst(g2, img);
}

AxiomsCertificate hopf_axioms_check() {
    AxiomsCertificate cert;
    auto record = [&](bool ok, const std::string& what) {
        (ok ? cert.checks : cert.failures).push_back(what);
    };
    auto a = actx();
    auto g2 = g2ctx();
    std::vector<MultiPoly> agens{gen(a, "a2"), gen(a, "a4"), gen(a, "a6")};

    for (const auto& x : agens) {
        record(hopf_counit(x.extended_to(gctx())) == x, "counit(eta_L(" + x.str() + ")) = " + x.str());
        record(hopf_counit(eta_r(x)) == x, "counit(eta_R(" + x.str() + ")) = " + x.str());
    }

    // psi is compatible with the right unit: psi(eta_R(a)) = embed_right(eta_R(a)).
    for (const auto& x : agens)
        record(hopf_psi(eta_r(x)) == embed_right(eta_r(x)),
               "psi(eta_R(" + x.str() + ")) lands as the right tensor factor");

    // Counit laws for psi: collapsing either tensor leg returns the element.
    {
        auto collapse = [&](const MultiPoly& h, const char* keep) {
            std::vector<MultiPoly> img{gen(gctx(), "a2"), gen(gctx(), "a4"), gen(gctx(), "a6"),
                                       MultiPoly(gctx()), MultiPoly(gctx())};
            img[*g2->index_of(keep)] = gen(gctx(), "r");
            return h.subst(gctx(), img);
        };
        MultiPoly r = gen(gctx(), "r");
        for (const auto& x : {r, eta_r(agens[0]), eta_r(agens[1]), eta_r(agens[2])}) {
            record(collapse(hopf_psi(x), "r2") == x, "(eps (x) id) psi = id on " + x.str());
            record(collapse(hopf_psi(x), "r1") == x, "(id (x) eps) psi = id on " + x.str());
        }
    }

    // Coassociativity in A~[r1,r2,r3]: (psi (x) id) maps r1 -> r1+r2, r2 -> r3;
    // (id (x) psi) maps r1 -> r1, r2 -> r2+r3.
    {
        auto g3 = g3ctx();
        std::vector<MultiPoly> lhs_img{gen(g3, "a2"), gen(g3, "a4"), gen(g3, "a6"),
                                       gen(g3, "r1") + gen(g3, "r2"), gen(g3, "r3")};
        std::vector<MultiPoly> rhs_img{gen(g3, "a2"), gen(g3, "a4"), gen(g3, "a6"), gen(g3, "r1"),
                                       gen(g3, "r2") + gen(g3, "r3")};
        MultiPoly r = gen(gctx(), "r");
        for (const auto& x : {r, eta_r(agens[0]), eta_r(agens[1]), eta_r(agens[2])}) {
            MultiPoly p = hopf_psi(x);
            record(p.subst(g3, lhs_img) == p.subst(g3, rhs_img), "coassociativity on " + x.str());
        }
    }

    // Conjugation: c*c = id, c(eta_L) = eta_R, c(eta_R) = eta_L, eps*c = eps.
    {
        MultiPoly r = gen(gctx(), "r");
        record(hopf_conj(hopf_conj(r)) == r, "c(c(r)) = r");
        for (const auto& x : agens) {
            MultiPoly xl = x.extended_to(gctx());
            record(hopf_conj(hopf_conj(xl)) == xl, "c(c(" + x.str() + ")) = " + x.str());
            record(hopf_conj(xl) == eta_r(x), "c(eta_L(" + x.str() + ")) = eta_R(" + x.str() + ")");
            record(hopf_conj(eta_r(x)) == xl, "c(eta_R(" + x.str() + ")) = " + x.str());
            record(hopf_counit(hopf_conj(xl)) == x, "eps(c(" + x.str() + ")) = " + x.str());
        }
    }

    cert.pass = cert.failures.empty();
    return cert;
}

// ---- comodules -----------------------------------------------------------

void Comodule::check_counit() const {
    std::size_t n = rank();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            MultiPoly e = hopf_counit(mat[i][j]);
            MultiPoly want = i == j ? MultiPoly::constant(actx(), Coef(1)) : MultiPoly(actx());
            if (e != want)
                throw CheckFailure("counit fails at entry (" + names[i] + "," + names[j] + ")");
        }
}

void Comodule::check_coassociativity() const {
    std::size_t n = rank();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) {
            MultiPoly lhs = hopf_psi(mat[k][j]);
            MultiPoly rhs(g2ctx());
            for (std::size_t i = 0; i < n; ++i)
                rhs = rhs + embed_left(mat[i][j]) * embed_right(mat[k][i]);
            if (lhs != rhs)
                throw CheckFailure("coassociativity fails at entry (" + names[k] + "," + names[j] + ")");
        }
}

void Comodule::check_homogeneity() const {
    std::size_t n = rank();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (mat[i][j].is_zero()) continue;
            if (!mat[i][j].is_homogeneous_of(degrees[j] - degrees[i]))
                throw CheckFailure("entry (" + names[i] + "," + names[j] +
                                   ") is not homogeneous of degree " +
                                   std::to_string(degrees[j] - degrees[i]));
        }
}

void Comodule::check_all() const {
    check_counit();
    check_coassociativity();
    check_homogeneity();
}

Comodule Comodule::shifted(int k) const {
    Comodule s = *this;
    for (auto& d : s.degrees) d += k;
    for (auto& n : s.names) n += "[" + std::to_string(k) + "]";
    return s;
}

Comodule Comodule::dual() const {
    std::size_t n = rank();
    Comodule d;
    d.names.reserve(n);
    d.degrees.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        d.names.push_back(names[i] + "*");
        d.degrees.push_back(-degrees[i]);
    }
    d.mat.assign(n, std::vector<MultiPoly>(n, MultiPoly(gctx())));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d.mat[i][j] = hopf_conj(mat[j][i]);
    return d;
}

Comodule direct_sum(const std::vector<Comodule>& parts) {
    Comodule s;
    std::size_t total = 0;
    for (const auto& p : parts) total += p.rank();
    s.mat.assign(total, std::vector<MultiPoly>(total, MultiPoly(gctx())));
    std::size_t off = 0;
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < p.rank(); ++i) {
            s.names.push_back(p.names[i]);
            s.degrees.push_back(p.degrees[i]);
            for (std::size_t j = 0; j < p.rank(); ++j) s.mat[off + i][off + j] = p.mat[i][j];
        }
        off += p.rank();
    }
    return s;
}

Comodule trivial_comodule(int degree, const std::string& name) {
    Comodule c;
    c.names = {name};
    c.degrees = {degree};
    c.mat = {{MultiPoly::constant(gctx(), Coef(1))}};
    return c;
}

std::string comodule_json_string(const Comodule& c) {
    nlohmann::json basis = nlohmann::json::array();
    for (std::size_t i = 0; i < c.rank(); ++i)
        basis.push_back({{"name", c.names[i]}, {"degree", c.degrees[i]}});
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : c.mat) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& p : row) r.push_back(p.str());
        rows.push_back(std::move(r));
    }
    return nlohmann::json{{"basis", basis}, {"coaction", rows}}.dump();
}

Comodule mf12_comodule() {
    auto g = gctx();
    MultiPoly r = gen(g, "r"), one = MultiPoly::constant(g, Coef(1)), zero(g);
    Comodule c;
    c.names = {"w1", "w2", "w3"};
    c.degrees = {0, 2, 4};
    c.mat = {{one, r, r * r}, {zero, one, r * 2}, {zero, zero, one}};
    return c;
}

bool mf12_cubic_compatible() {
    auto g = gctx();
    MultiPoly r = gen(g, "r");
    MultiPoly cubic = gen(g, "a6").extended_to(g) + gen(g, "a4") * r + gen(g, "a2") * r * r + r * r * r;
    return hopf_psi(cubic) == embed_right(cubic);
}

MapCheck comodule_map_check(const std::vector<std::vector<MultiPoly>>& f, const Comodule& m,
                            const Comodule& n, int shift) {
    MapCheck out;
    out.shift = shift;
    if (f.size() != n.rank()) throw Error("map rows must match target rank");
    for (const auto& row : f)
        if (row.size() != m.rank()) throw Error("map columns must match source rank");

    out.homogeneous = true;
    for (std::size_t i = 0; i < n.rank(); ++i)
        for (std::size_t j = 0; j < m.rank(); ++j) {
            if (f[i][j].is_zero()) continue;
            if (!f[i][j].is_homogeneous_of(m.degrees[j] - n.degrees[i] - shift)) {
                out.homogeneous = false;
                out.detail += "entry (" + std::to_string(i) + "," + std::to_string(j) +
                              ") breaks the declared shift; ";
            }
        }

    // Psi_N . f = eta_R(f) . Psi_M over Gamma~.
    out.commutes = true;
    for (std::size_t k = 0; k < n.rank(); ++k)
        for (std::size_t j = 0; j < m.rank(); ++j) {
            MultiPoly lhs(gctx()), rhs(gctx());
            for (std::size_t i = 0; i < m.rank(); ++i) lhs = lhs + n.mat[k][i] * f[i][j].extended_to(gctx());
            for (std::size_t i = 0; i < m.rank(); ++i) rhs = rhs + eta_r(f[k][i]) * m.mat[i][j];
            if (lhs != rhs) {
                out.commutes = false;
                out.detail += "commutation fails at (" + n.names[k] + "," + m.names[j] + "); ";
            }
        }

    out.square = m.rank() == n.rank();
    if (out.square) {
        // A unit determinant in A~ means degree 0 and a 3-local unit.
        MultiPoly d = det_poly_matrix(f);
        Exp zero_exp(actx()->size(), 0);
        out.invertible = false;
        if (!d.is_zero() && d.term_count() == 1 && d.terms().begin()->first == zero_exp) {
            mpq_class q = d.terms().begin()->second.to_ring(Ring::Rat).rat();
            out.invertible =
                q != 0 && mpz_class(q.get_num() % 3) != 0 && mpz_class(q.get_den() % 3) != 0;
        }
    }
    return out;
}

std::vector<std::vector<std::vector<MultiPoly>>> solve_comodule_maps(const Comodule& m,
                                                                     const Comodule& n, int shift) {
    // Unknowns: one rational per (i, j, monomial in a2,a4,a6 of the right degree).
    struct Slot {
        std::size_t i, j;
        Exp mono;
    };
    std::vector<Slot> slots;
    auto amonos = [&](int w) {
        std::vector<Exp> out;
        if (w < 0 || w % 2) return out;
        for (int e6 = 0; 6 * e6 <= w; ++e6)
            for (int e4 = 0; 6 * e6 + 4 * e4 <= w; ++e4) {
                int rem = w - 6 * e6 - 4 * e4;
                if (rem % 2 == 0) out.push_back({rem / 2, e4, e6});
            }
        return out;
    };
    for (std::size_t i = 0; i < n.rank(); ++i)
        for (std::size_t j = 0; j < m.rank(); ++j)
            for (const auto& mono : amonos(m.degrees[j] - n.degrees[i] - shift))
                slots.push_back({i, j, mono});

    // Commutation residual is linear in the unknowns; expand per slot into
    // sparse columns keyed by (matrix entry, monomial of Gamma~).
    std::map<std::pair<std::pair<std::size_t, std::size_t>, Exp>, std::size_t> row_index;
    std::vector<std::map<std::size_t, Coef>> cols(slots.size());
    auto add_rows = [&](std::size_t s, const MultiPoly& p, std::size_t k, std::size_t j, int sgn) {
        for (const auto& [e, c] : p.terms()) {
            auto [it, fresh] = row_index.emplace(std::make_pair(std::make_pair(k, j), e), row_index.size());
            Coef& cell = cols[s][it->second];
            cell = cell + (sgn > 0 ? c : -c);
        }
    };
    for (std::size_t s = 0; s < slots.size(); ++s) {
        const auto& sl = slots[s];
        MultiPoly f_ij = MultiPoly::monomial(actx(), sl.mono, Coef(1));
        // lhs: entry (k, sl.j) picks up n.mat[k][sl.i] * f_ij
        for (std::size_t k = 0; k < n.rank(); ++k)
            add_rows(s, n.mat[k][sl.i] * f_ij.extended_to(gctx()), k, sl.j, +1);
        // rhs: entry (sl.i, j2) picks up eta_R(f_ij) * m.mat[sl.j][j2]
        for (std::size_t j2 = 0; j2 < m.rank(); ++j2)
            add_rows(s, eta_r(f_ij) * m.mat[sl.j][j2], sl.i, j2, -1);
    }
    Mat a(row_index.size(), Vec(slots.size(), Coef(0)));
    for (std::size_t s = 0; s < slots.size(); ++s)
        for (const auto& [r, c] : cols[s]) a[r][s] = c;
    std::vector<Vec> kernel = null_space(std::move(a));

    std::vector<std::vector<std::vector<MultiPoly>>> out;
    for (const auto& v : kernel) {
        std::vector<std::vector<MultiPoly>> f(n.rank(),
                                              std::vector<MultiPoly>(m.rank(), MultiPoly(actx())));
        for (std::size_t s = 0; s < slots.size(); ++s)
            if (!v[s].is_zero())
                f[slots[s].i][slots[s].j] =
                    f[slots[s].i][slots[s].j] + MultiPoly::monomial(actx(), slots[s].mono, v[s]);
        out.push_back(std::move(f));
    }
    return out;
}

DualCertificate dual_comodule_certificate() {
    DualCertificate cert;
    Comodule m = mf12_comodule();
    Comodule d = m.dual();
    d.check_all();

    auto a = actx();
    MultiPoly zero(a), one = MultiPoly::constant(a, Coef(1));
    MultiPoly mhalf = MultiPoly::constant(a, Coef::rational(-1, 2));
    // w1 -> w3*, w2 -> -1/2 w2*, w3 -> w1*; rows are d's basis (w1*,w2*,w3*).
    std::vector<std::vector<MultiPoly>> f{{zero, zero, one}, {zero, mhalf, zero}, {one, zero, zero}};
    cert.lemma_map = comodule_map_check(f, m, d, 4);

    auto fbad = f;
    fbad[1][1] = MultiPoly::constant(a, Coef::rational(1, 2));
    cert.negative = comodule_map_check(fbad, m, d, 4);

    Comodule dd = d.dual();
    dd.check_all();
    auto sols = solve_comodule_maps(m, dd, 0);
    bool found = false;
    for (const auto& sol : sols) {
        MapCheck mc = comodule_map_check(sol, m, dd, 0);
        if (mc.pass() && mc.invertible) {
            cert.double_dual = mc;
            found = true;
            break;
        }
    }
    if (!found && !sols.empty()) {
        // Try the sum of all solutions before giving up.
        auto sum = sols[0];
        for (std::size_t s = 1; s < sols.size(); ++s)
            for (std::size_t i = 0; i < sum.size(); ++i)
                for (std::size_t j = 0; j < sum[i].size(); ++j) sum[i][j] = sum[i][j] + sols[s][i][j];
        MapCheck mc = comodule_map_check(sum, m, dd, 0);
        if (mc.pass() && mc.invertible) {
            cert.double_dual = mc;
            found = true;
        }
    }
    cert.pass = cert.lemma_map.pass() && cert.lemma_map.invertible && cert.lemma_map.shift == 4 &&
                !cert.negative.commutes && found;
    cert.detail = "comodule map space dimension " + std::to_string(sols.size());
    return cert;
}

}  // namespace modseven
