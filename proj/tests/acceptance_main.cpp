// Acceptance suite: one line per criterion, exit nonzero when any fails.
// Every tolerance is pinned here (exact equality or an explicit q-adic
// truncation order); nothing is deferred to runtime configuration.

#include <functional>
#include <iostream>
#include <vector>

#include "modseven/checks.hpp"
#include "modseven/hopf.hpp"
#include "modseven/invariants.hpp"
#include "modseven/linalg.hpp"
#include "modseven/modforms.hpp"
#include "modseven/parse.hpp"
#include "modseven/tate.hpp"
#include "modseven/weierstrass.hpp"

using namespace modseven;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, const std::function<void()>& body) {
    try {
        body();
        std::cout << "PASS criterion " << number << ": " << label << "\n";
    } catch (const std::exception& e) {
        ++failures;
        std::cout << "FAIL criterion " << number << ": " << label << " -- " << e.what() << "\n";
    }
}

void expect(bool cond, const std::string& what) {
    if (!cond) throw CheckFailure(what);
}

MultiPoly g(const ContextPtr& c, const char* n) { return MultiPoly::generator(c, *c->index_of(n)); }

}  // namespace

int main() {
    criterion(1, "z-basis constant terms, integrality to q^50, values mod q^3 (exact)", [] {
        ZBasis zb = z_basis(50);  // construction enforces integrality and zeta6-cancellation
        expect(zb.z1.coeff(0).is_zero() && zb.z2.coeff(0).is_zero() && zb.z3.coeff(0) == Coef(1),
               "constant terms");
        expect(zb.z1.coeff(1) == Coef(1) && zb.z1.coeff(2).is_zero(), "z1 != q mod q^3");
        expect(zb.z2.coeff(1) == Coef(-1) && zb.z2.coeff(2) == Coef(1), "z2 != -q+q^2 mod q^3");
        expect(zb.z3.coeff(1) == Coef(2) && zb.z3.coeff(2) == Coef(3), "z3 != 1+2q+3q^2 mod q^3");
        for (const QSeries* s : {&zb.z1, &zb.z2, &zb.z3})
            expect(all_coeffs_integral(*s) && s->prec() >= 50, "integrality to q^50");
    });

    criterion(2, "q-expansion of sigma2 vanishes identically mod q^25", [] {
        MultiPoly sig2 = parse_expr("z1*z2 + z2*z3 + z3*z1", zctx());
        QSeries s = qexp_of_mf7(sig2, 25);
        expect(s.prec() == 25 && s.vanishes(), "sigma2 expansion " + s.str());
    });

    // The determinant clause is checked against the quoted value (2/27)(84
    // zeta6 - 42) verbatim. Exact arithmetic (confirmed by hand cofactor
    // expansion and floating-point evaluation) gives half that, namely
    // (1/27)(84 zeta6 - 42) = (2/27)(42 zeta6 - 21), so this clause cannot
    // pass as stated; the computed value is printed for comparison.
    criterion(3, "conjugated character action is the signed permutation; exact determinant", [] {
        ActionCertificate cert = verify_action_via_eisenstein();
        expect(cert.pass, "conjugated matrix is not tau(z1)=-z3, tau(z2)=-z1, tau(z3)=-z2");
        expect(cert.det == base_change_det_published(),
               "determinant is " + cert.det.str() + " = (1/27)(84 zeta6 - 42), not the quoted " +
                   base_change_det_published().str() + " = (2/27)(84 zeta6 - 42); the quoted "
                   "value is exactly twice the determinant of the displayed matrix");
    });

    criterion(4, "Tate series: displayed X,Y coefficients; Delta product mod q^20; 1728-identity", [] {
        TorsionPointSeries t = torsion_xy(7, 1, 0, 9);
        static const long xv[8] = {1, 2, 3, 4, 5, 7, 5, 9};
        static const long yv[7] = {1, 3, 6, 10, 14, 22, 28};
        for (int e = 1; e <= 8; ++e) expect(t.x->coeff(e) == Coef(xv[e - 1]), "X coefficient");
        for (int e = 2; e <= 8; ++e) expect(t.y->coeff(e) == Coef(yv[e - 2]), "Y coefficient");

        TateCurve tc = tate_coeffs(1, 20);
        WeierstrassCoeffs<QSeries> w{QSeries::one(20), QSeries::zero(20), QSeries::zero(20), tc.a4,
                                     tc.a6};
        expect(c4_c6_delta(w).delta.agrees_with(delta_product_series(1, 20), 20),
               "Delta(q) != q prod (1-q^m)^24 mod q^20");

        auto ctx = wctx();
        WeierstrassCoeffs<MultiPoly> wg{g(ctx, "a1"), g(ctx, "a2"), g(ctx, "a3"), g(ctx, "a4"),
                                        g(ctx, "a6")};
        auto q = c4_c6_delta(wg);
        expect(q.delta * 1728 == q.c4 * q.c4 * q.c4 - q.c6 * q.c6,
               "1728 Delta != c4^3 - c6^2 generically");
    });

    criterion(5, "all four lowest-term table rows, symbolically in v", [] {
        for (auto [n, k, d] : {std::tuple{7, 0, 1}, std::tuple{7, 2, 1}, std::tuple{8, 4, 1},
                               std::tuple{8, 7, 1}}) {
            LowestTermRow row = lowest_term_table(n, k, d);
            expect(row.pass, "row " + row.case_name + " at (n,k,d)=(" + std::to_string(n) + "," +
                                 std::to_string(k) + "," + std::to_string(d) + "): X " +
                                 row.x.str() + ", Y " + row.y.str() + ", X+2Y " + row.xy2.str());
        }
    });

    criterion(6, "alpha_i equal the q-expansions of z1-z2+z3, z1z2+z1z3, z1z3^2 mod q^25", [] {
        AlphaSeries a = alpha_series(7, 1, 0, 25);
        AlphaPolys zp = alpha_polys();
        expect(a.a1.agrees_with(qexp_of_mf7(zp.a1, 25), 25), "alpha1 mismatch");
        expect(a.a2.agrees_with(qexp_of_mf7(zp.a2, 25), 25), "alpha2 mismatch");
        expect(a.a3.agrees_with(qexp_of_mf7(zp.a3, 25), 25), "alpha3 mismatch");
    });

    criterion(7, "Hopf algebroid axioms as exact polynomial identities", [] {
        AxiomsCertificate cert = hopf_axioms_check();
        expect(cert.pass, cert.failures.empty() ? "failed" : cert.failures.front());
    });

    criterion(8, "dim_GF3 R/I = 48 and independence of the 48 images", [] {
        Basis48Certificate cert = basis48_certificate();
        expect(cert.dimension == 48, "dimension = " + std::to_string(cert.dimension));
        expect(cert.independent, "images are dependent");
    });

    criterion(9, "S-basis certificate (tau-invariance, n6 identity, both minors, step-1 comparison)", [] {
        SBasisCertificate cert = s_basis_certificate();
        expect(cert.tau_invariant, "tau-invariance");
        expect(cert.n6_identity, "n6 identity");
        expect(!cert.minors.step2_det.is_zero(), "step-2 minor vanishes");
        expect(cert.minors.pass, "minor certificates: " + cert.minors.detail);
        expect(cert.step1.solver_ok, "step-1 recomputation failed");
        for (const auto& d : cert.step1.discrepancies)
            std::cout << "      step-1 discrepancy: " << d << "\n";
        expect(cert.pass, "bundle failed");
    });

    criterion(10, "coaction table on all 8 S-basis elements", [] {
        Comodule c = coaction_on_S();
        auto gc = gctx();
        MultiPoly one = MultiPoly::constant(gc, Coef(1)), zero(gc), r = g(gc, "r");
        std::vector<std::vector<MultiPoly>> expectm(8, std::vector<MultiPoly>(8, zero));
        for (int i = 0; i < 8; ++i) expectm[i][i] = one;
        expectm[1][2] = r;
        expectm[2][3] = r * 2;
        expectm[1][3] = r * r;
        expectm[4][5] = r;
        expectm[5][6] = r * 2;
        expectm[4][6] = r * r;
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                expect(c.mat[i][j] == expectm[i][j],
                       "entry (" + c.names[i] + "," + c.names[j] + ") = " + c.mat[i][j].str());
    });

    criterion(11, "comodule splitting: commutation, invertibility, grading", [] {
        SplittingCertificate cert = splitting_iso_check();
        expect(cert.source_checks && cert.target_checks, "comodule sanity checks");
        expect(cert.map_check.commutes, "commutation");
        expect(cert.map_check.invertible, "invertibility over A~");
        expect(cert.grading_preserved && cert.map_check.homogeneous, "grading");
    });

    criterion(12, "level-1 identities: Delta image, transfer identity, cross-pipeline q-expansion", [] {
        MultiPoly img = level1_image(g(c4c6ctx(), "Delta"));
        MultiPoly s3 = sigma3_reduced(), p = invariant_p();
        expect(img == nf_sigma2(-(s3.pow(3) * p) - s3.pow(4) * 8),
               "level1_image(Delta) != -sigma3^3 p - 8 sigma3^4");
        MultiPoly x = parse_expr("1/2*z1^3*z2^2*z3", zrctx());
        expect(transfer(x) == nf_sigma2(parse_expr("z1*z2*z3", zrctx()) * p.extended_to(zrctx())),
               "Tr(z1^3 z2^2 z3 / 2) != sigma3 p");
        // Delta's q-expansion as a level-7 form: the discriminant series at
        // q^7 (level-1 expansions substitute q -> q^7 in the convention that
        // criteria 1 and 6 pin down).
        expect(qexp_of_mf7(img, 25).agrees_with(delta_product_series(7, 5).truncated(25), 25),
               "qexp(level1_image(Delta)) != Delta's q-expansion mod q^25");
    });

    criterion(13, "property suites (nf idempotence, ring hom, comodule checks, ranks, double dual)", [] {
        Report rep = run_checks({"qexp-ring-hom", "mf7-rank", "double-dual", "mf12-comodule",
                                 "dual-comodule", "coaction-table", "series-ops"},
                                16, 1);
        for (const auto& c : rep.checks)
            expect(c.pass, c.name + ": " + (c.witnesses.contains("error")
                                                ? c.witnesses["error"].get<std::string>()
                                                : "failed"));
        // nf idempotence on a frozen element.
        MultiPoly q = parse_expr("(z1+2*z2)^3 - 5*z1*z2*z3", zctx());
        expect(nf_sigma2(nf_sigma2(q)) == nf_sigma2(q), "nf_sigma2 not idempotent");
    });

    if (failures == 0)
        std::cout << "acceptance: all 13 criteria passed\n";
    else
        std::cout << "acceptance: " << failures << " criteria FAILED\n";
    return failures == 0 ? 0 : 1;
}
