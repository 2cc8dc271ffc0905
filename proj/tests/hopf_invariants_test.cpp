#include <doctest.h>

#include "modseven/hopf.hpp"
#include "modseven/invariants.hpp"
#include "modseven/parse.hpp"

using namespace modseven;

namespace {
MultiPoly g(const ContextPtr& c, const char* n) { return MultiPoly::generator(c, *c->index_of(n)); }
}  // namespace

TEST_CASE("eta_R on generators and products") {
    CHECK(eta_r(g(actx(), "a2")) == parse_expr("a2 + 3*r", gctx()));
    CHECK(eta_r(g(actx(), "a4")) == parse_expr("a4 + 2*r*a2 + 3*r^2", gctx()));
    CHECK(eta_r(g(actx(), "a6")) == parse_expr("a6 + r*a4 + r^2*a2 + r^3", gctx()));
    CHECK(eta_r(MultiPoly::constant(actx(), Coef(1))) == MultiPoly::constant(gctx(), Coef(1)));
    CHECK(eta_r(g(actx(), "a2").pow(2)) == parse_expr("(a2 + 3*r)^2", gctx()));
}

TEST_CASE("hopf axioms") {
    AxiomsCertificate cert = hopf_axioms_check();
    CHECK(cert.pass);
    CHECK(cert.failures.empty());
    // counit on eta_R: eps(eta_R(a4)) = a4
    CHECK(hopf_counit(eta_r(g(actx(), "a4"))) == g(actx(), "a4"));
    // c(eta_R(a2)) = a2: c(a2 + 3r) = (a2 + 3r) - 3r.
    CHECK(hopf_conj(eta_r(g(actx(), "a2"))) == g(actx(), "a2").extended_to(gctx()));
    // psi(r) = r1 + r2.
    CHECK(hopf_psi(g(gctx(), "r")) == g(g2ctx(), "r1") + g(g2ctx(), "r2"));
}

TEST_CASE("mf12 comodule") {
    Comodule c = mf12_comodule();
    c.check_all();
    CHECK(mf12_cubic_compatible());
    auto gc = gctx();
    CHECK(c.mat[0][0] == MultiPoly::constant(gc, Coef(1)));
    CHECK(c.mat[0][1] == g(gc, "r"));
    CHECK(c.mat[1][2] == g(gc, "r") * 2);
    CHECK(c.mat[0][2] == g(gc, "r") * g(gc, "r"));
    // Corrupting an entry must break coassociativity.
    Comodule bad = c;
    bad.mat[1][2] = g(gc, "r") * 3;
    CHECK_THROWS_AS(bad.check_coassociativity(), CheckFailure);
}

TEST_CASE("dual comodule and the grading-shift map") {
    Comodule m = mf12_comodule();
    Comodule d = m.dual();
    d.check_all();
    CHECK(d.degrees == std::vector<int>{0, -2, -4});
    auto gc = gctx();
    MultiPoly r = g(gc, "r");
    CHECK(d.mat[1][0] == -r);
    CHECK(d.mat[2][0] == r * r);
    CHECK(d.mat[2][1] == -(r * 2));

    DualCertificate cert = dual_comodule_certificate();
    CHECK(cert.pass);
    CHECK(cert.lemma_map.commutes);
    CHECK(cert.lemma_map.invertible);
    CHECK(cert.lemma_map.shift == 4);
    CHECK_FALSE(cert.negative.commutes);
    CHECK(cert.double_dual.commutes);
    CHECK(cert.double_dual.invertible);
}

TEST_CASE("lambda images") {
    LambdaImages l = lambda_images();
    CHECK(l.la2 == parse_expr("1/4*(z1-z2+z3)^2 - z2*z3 - 3*r", zrctx(), true));
    CHECK(l.la2.is_homogeneous_of(2));
    CHECK(l.la4.is_homogeneous_of(4));
    CHECK(l.la6.is_homogeneous_of(6));
}

TEST_CASE("tau on R and the transfer") {
    auto ctx = zrctx();
    MultiPoly r = g(ctx, "r");
    CHECK(tau_on_R(r) == r + g(ctx, "z2") * g(ctx, "z3"));
    MultiPoly cur = r;
    for (int i = 0; i < 3; ++i) cur = tau_on_R(cur);
    CHECK(cur == r);  // tau^3(r) = r + sigma2 = r

    LambdaImages l = lambda_images();
    CHECK(tau_on_R(l.la2) == l.la2);

    CHECK(transfer(MultiPoly::constant(ctx, Coef(1))) == MultiPoly::constant(ctx, Coef(6)));
    MultiPoly x = parse_expr("1/2*z1^3*z2^2*z3", ctx);
    MultiPoly expect = parse_expr("z1*z2*z3*(z1^2*z2 + z2^2*z3 + z3^2*z1)", ctx, true);
    CHECK(transfer(x) == expect);
}

TEST_CASE("48-element basis certificate") {
    CHECK(basis48_elements().size() == 48);
    Basis48Certificate cert = basis48_certificate();
    CHECK(cert.dimension == 48);
    CHECK(cert.independent);
    CHECK(cert.negative_control);
    CHECK(cert.pass);
    // Degrees 10 and 11 must be empty (so nothing hides above degree 9).
    CHECK(cert.dim_by_degree[10] == 0);
    CHECK(cert.dim_by_degree[11] == 0);
}

TEST_CASE("expansion of n4 over the 48 basis matches the published display") {
    const SBasisData& s = s_basis();
    Basis48Expansion e = expand_in_basis48(s.elems[2]);  // n4
    CHECK(e.loc3_integral);
    const auto& names = basis48_names();
    auto coord = [&](const char* name) {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return e.coords[i];
        throw Error("no such basis element");
    };
    // n4 = 1/2 s1^3 z3 + 4 s1^2 r - 6 s1 z3 r - 2 a2 s1 z3 + a2 s1^2 - 4 a2^2 + 12 a4
    CHECK(coord("s1^3*z3") == MultiPoly::constant(actx(), Coef::rational(1, 2)));
    CHECK(coord("s1^2*r") == MultiPoly::constant(actx(), Coef(4)));
    CHECK(coord("s1*z3*r") == MultiPoly::constant(actx(), Coef(-6)));
    CHECK(coord("s1*z3") == g(actx(), "a2") * -2);
    CHECK(coord("s1^2") == g(actx(), "a2"));
    CHECK(coord("1") == g(actx(), "a4") * 12 - g(actx(), "a2") * g(actx(), "a2") * 4);
    CHECK(coord("z2*z3").is_zero());

    Step1Comparison cmp = step1_comparison();
    CHECK(cmp.solver_ok);
    CHECK(cmp.discrepancies.empty());
}

TEST_CASE("S-basis certificate") {
    SBasisCertificate cert = s_basis_certificate();
    CHECK(cert.tau_invariant);
    CHECK(cert.n6_identity);
    CHECK(cert.degrees_match);
    CHECK(cert.minors.pass);
    CHECK_FALSE(cert.minors.step2_det.is_zero());
    CHECK(cert.minors.step2_pivots_match);
    CHECK(cert.pass);
}

TEST_CASE("coaction on S matches the table") {
    Comodule c = coaction_on_S();
    c.check_all();
    auto gc = gctx();
    MultiPoly one = MultiPoly::constant(gc, Coef(1)), r = g(gc, "r");
    CHECK(c.mat[2][2] == one);
    CHECK(c.mat[1][2] == r);            // psi(n4) = 1(x)n4 + r(x)s1^2
    CHECK(c.mat[2][3] == r * 2);        // psi(n6) = 1(x)n6 + 2r(x)n4 + ...
    CHECK(c.mat[1][3] == r * r);
    CHECK(c.mat[7][7] == one);          // psi(s3^2) = 1(x)s3^2
    for (int i = 0; i < 8; ++i) CHECK(c.mat[i][0] == (i == 0 ? one : MultiPoly(gc)));
}

TEST_CASE("splitting certificate") {
    SplittingCertificate cert = splitting_iso_check();
    CHECK(cert.source_checks);
    CHECK(cert.target_checks);
    CHECK(cert.map_check.commutes);
    CHECK(cert.map_check.homogeneous);
    CHECK(cert.map_check.invertible);
    CHECK(cert.grading_preserved);
    CHECK(cert.pass);
    // Degree bookkeeping: w3[2] sits in degree 6, matching n6.
    Comodule shifted = mf12_comodule().shifted(2);
    CHECK(shifted.degrees == std::vector<int>{2, 4, 6});
}

TEST_CASE("degree formula") {
    auto [d7, q7] = degree_formula(7);
    CHECK(d7 == 48);
    CHECK(q7 == 8);
    auto [d2, q2] = degree_formula(2);
    CHECK(d2 == 3);
    CHECK(q2 == 3);
    auto [d12, q12] = degree_formula(12);
    CHECK(d12 == 96);
    CHECK(q12 == 24);
    CHECK_THROWS_AS(degree_formula(1), Error);
}
