#include "modseven/weierstrass.hpp"

namespace modseven {

AlphaPolys alpha_polys() {
    auto ctx = zctx();
    MultiPoly z1 = MultiPoly::generator(ctx, 0);
    MultiPoly z2 = MultiPoly::generator(ctx, 1);
    MultiPoly z3 = MultiPoly::generator(ctx, 2);
    return {z1 - z2 + z3, nf_sigma2(z1 * z2 + z1 * z3), z1 * z3 * z3};
}

KappaImages kappa_images() {
    auto ctx = zctx();
    AlphaPolys al = alpha_polys();
    Coef half = Coef::rational(1, 2), quarter = Coef::rational(1, 4);
    KappaImages k;
    k.ka2 = nf_sigma2(al.a1 * al.a1 * quarter + al.a2);
    k.ka4 = nf_sigma2(al.a1 * al.a3 * half);
    k.ka6 = nf_sigma2(al.a3 * al.a3 * quarter);

    // Completing the square on the Tate normal form must reproduce them.
    MultiPoly zero(ctx);
    WeierstrassCoeffs<MultiPoly> tnf{al.a1, al.a2, al.a3, zero, zero};
    MultiPoly one = MultiPoly::constant(ctx, Coef(1));
    TransformParams<MultiPoly> p{zero, al.a1.scaled(Coef::rational(-1, 2)),
                                 al.a3.scaled(Coef::rational(-1, 2)), one, one};
    WeierstrassCoeffs<MultiPoly> sq = transform(tnf, p);
    if (!nf_sigma2(sq.a1).is_zero() || !nf_sigma2(sq.a3).is_zero())
        throw CheckFailure("completing the square left a1 or a3 nonzero");
    if (nf_sigma2(sq.a2) != k.ka2 || nf_sigma2(sq.a4) != k.ka4 || nf_sigma2(sq.a6) != k.ka6)
        throw CheckFailure("kappa images disagree with the completed square");
    return k;
}

MultiPoly level1_image(const MultiPoly& m) {
    if (!(*m.context() == *c4c6ctx())) throw Error("level1_image expects a polynomial in c4, c6, Delta");
    KappaImages k = kappa_images();
    auto ctx = zctx();
    MultiPoly zero(ctx);
    WeierstrassCoeffs<MultiPoly> w{zero, k.ka2, zero, k.ka4, k.ka6};
    CurveQuantities<MultiPoly> q = c4_c6_delta(w);
    std::vector<MultiPoly> images{nf_sigma2(q.c4), nf_sigma2(q.c6), nf_sigma2(q.delta)};
    return nf_sigma2(m.subst(ctx, images));
}

}  // namespace modseven
