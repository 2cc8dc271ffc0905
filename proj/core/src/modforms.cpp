#include "modseven/modforms.hpp"

namespace modseven {

Character Character::from_t_value(const Coef& w) {
    Character c;
    c.val[0] = Coef::cyc(0, 0);
    // powers of t = [3]: 3^0..3^5 = 1,3,2,6,4,5 mod 7
    static const int tpow[6] = {1, 3, 2, 6, 4, 5};
    for (int j = 0; j < 6; ++j) c.val[tpow[j]] = w.to_ring(Ring::CycQ6).pow(j);
    return c;
}

bool Character::is_multiplicative() const {
    for (int a = 1; a <= 6; ++a)
        for (int b = 1; b <= 6; ++b)
            if (!(val[a] * val[b] == val[(a * b) % 7])) return false;
    return true;
}

bool Character::is_odd() const { return val[6] == Coef::cyc(-1, 0); }

std::array<Character, 3> odd_characters() {
    return {Character::from_t_value(Coef::zeta6()),
            Character::from_t_value(Coef::cyc(-1, 0)),
            Character::from_t_value(Coef::cyc(1, -1))};
}

Coef character_weighted_sum(const Character& phi) {
    Coef s = Coef::cyc(0, 0);
    for (long n = 1; n <= 6; ++n) s = s + phi.val[n] * Coef(n);
    return s;
}

QSeries eisenstein_qexp(const Character& phi, int prec) {
    if (!phi.is_odd()) throw Error("eisenstein_qexp requires an odd character");
    std::vector<Coef> c(prec, Coef::cyc(0, 0));
    c[0] = character_weighted_sum(phi) * Coef::rational(-1, 14);
    for (int k = 1; k < prec; ++k) {
        Coef acc = Coef::cyc(0, 0);
        for (int l = 1; l <= k; ++l)
            if (k % l == 0) acc = acc + phi.val[l % 7];
        c[k] = acc;
    }
    return QSeries::from_coeffs(0, prec, std::move(c));
}

namespace {

// Base-change matrix from the displayed combinations; column j holds the
// E(phi_i)-coordinates of z_j.
Mat base_change_matrix() {
    auto mk = [](long a, long b) { return Coef::cyc(mpq_class(a, 3), mpq_class(b, 3)); };
    Mat m(3, Vec(3));
    m[0][0] = mk(-1, 3);
    m[1][0] = mk(2, 0);
    m[2][0] = mk(2, -3);
    m[0][1] = mk(-2, -1);
    m[1][1] = mk(2, 0);
    m[2][1] = mk(-3, 1);
    m[0][2] = mk(3, -2);
    m[1][2] = mk(2, 0);
    m[2][2] = mk(1, 2);
    return m;
}

QSeries combine(const Mat& m, int j, const std::array<QSeries, 3>& e) {
    QSeries s = e[0].scaled(m[0][j]);
    s = s + e[1].scaled(m[1][j]);
    s = s + e[2].scaled(m[2][j]);
    return s;
}

QSeries as_integer_series(const QSeries& s, const char* which) {
    std::vector<Coef> v;
    for (int e = 0; e < s.prec(); ++e) {
        Coef c = s.coeff(e);
        if (c.is_zero()) {
            v.push_back(Coef(0));
            continue;
        }
        Cyc cy = c.to_ring(Ring::CycQ6).cycq();
        if (cy.b != 0)
            throw CheckFailure(std::string(which) + ": zeta6-part did not cancel at q^" + std::to_string(e));
        if (cy.a.get_den() != 1)
            throw CheckFailure(std::string(which) + ": non-integral coefficient at q^" + std::to_string(e));
        v.push_back(Coef::integer(cy.a.get_num()));
    }
    return QSeries::from_coeffs(0, s.prec(), std::move(v));
}

}  // namespace

ZBasis z_basis(int prec) {
    if (prec < 3) throw Error("z_basis needs prec >= 3");
    auto chars = odd_characters();
    std::array<QSeries, 3> e{eisenstein_qexp(chars[0], prec), eisenstein_qexp(chars[1], prec),
                             eisenstein_qexp(chars[2], prec)};
    ZBasis zb;
    zb.prec = prec;
    zb.base_change = base_change_matrix();
    zb.det = mat_det(zb.base_change);
    zb.z1 = as_integer_series(combine(zb.base_change, 0, e), "z1");
    zb.z2 = as_integer_series(combine(zb.base_change, 1, e), "z2");
    zb.z3 = as_integer_series(combine(zb.base_change, 2, e), "z3");
    return zb;
}

QSeries qexp_of_mf7(const MultiPoly& e, int prec) {
    if (prec < 1) throw Error("qexp_of_mf7 needs prec >= 1");
    if (!(*e.context() == *zctx())) throw Error("qexp_of_mf7 expects a polynomial in z1,z2,z3");
    ZBasis zb = z_basis(prec);
    std::vector<QSeries> vals{zb.z1, zb.z2, zb.z3};
    return e.eval<QSeries>(
        vals, [&](const Coef& c) { return QSeries::monomial(0, c, prec); }, QSeries::zero(prec));
}

MultiPoly action_tau(const MultiPoly& e) {
    auto ctx = zctx();
    if (!(*e.context() == *ctx)) throw Error("action_tau expects a polynomial in z1,z2,z3");
    std::vector<MultiPoly> img{-MultiPoly::generator(ctx, 2), -MultiPoly::generator(ctx, 0),
                               -MultiPoly::generator(ctx, 1)};
    return nf_sigma2(e.subst(ctx, img));
}

ActionCertificate verify_action_via_eisenstein() {
    auto chars = odd_characters();
    Mat m = base_change_matrix();
    Mat d(3, Vec(3, Coef::cyc(0, 0)));
    for (int j = 0; j < 3; ++j) d[j][j] = chars[j].val[3];
    Mat conj = mat_mul(mat_inverse(m), mat_mul(d, m));

    // Expected signed permutation: t.z1 = -z3, t.z2 = -z1, t.z3 = -z2.
    Mat expect(3, Vec(3, Coef::cyc(0, 0)));
    expect[2][0] = Coef::cyc(-1, 0);
    expect[0][1] = Coef::cyc(-1, 0);
    expect[1][2] = Coef::cyc(-1, 0);

    ActionCertificate cert;
    cert.conjugated = conj;
    cert.pass = true;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!(conj[i][j] == expect[i][j])) cert.pass = false;
    cert.det = mat_det(m);
    cert.det_matches_display = cert.det == base_change_det_published();
    cert.note =
        "convention: the computed action matches the signed permutation t.z1=-z3, t.z2=-z1, "
        "t.z3=-z2 (the inverse convention also circulates); the determinant of the displayed "
        "base-change matrix is (1/27)(84 zeta6 - 42) = (2/27)(42 zeta6 - 21), half the value "
        "usually quoted alongside it";
    return cert;
}

Coef base_change_det_value() { return Coef::cyc(mpq_class(-14, 9), mpq_class(28, 9)); }

Coef base_change_det_published() { return Coef::cyc(mpq_class(-28, 9), mpq_class(56, 9)); }

MultiPoly invariant_p() {
    auto ctx = zctx();
    MultiPoly z1 = MultiPoly::generator(ctx, 0), z2 = MultiPoly::generator(ctx, 1),
              z3 = MultiPoly::generator(ctx, 2);
    return nf_sigma2(z1 * z1 * z2 + z2 * z2 * z3 + z3 * z3 * z1);
}

MultiPoly sigma1() {
    auto ctx = zctx();
    return MultiPoly::generator(ctx, 0) + MultiPoly::generator(ctx, 1) +
           MultiPoly::generator(ctx, 2);
}

MultiPoly sigma3_reduced() {
    auto ctx = zctx();
    return nf_sigma2(MultiPoly::generator(ctx, 0) * MultiPoly::generator(ctx, 1) *
                     MultiPoly::generator(ctx, 2));
}

namespace {

// Coordinates of a reduced polynomial in the normal-form monomials of degree k.
Vec nf_coords(const MultiPoly& p, const std::vector<Exp>& monos) {
    Vec v(monos.size(), Coef(0));
    std::size_t found = 0;
    for (std::size_t i = 0; i < monos.size(); ++i) {
        Coef c = p.coeff(monos[i]);
        v[i] = c;
        if (!c.is_zero()) ++found;
    }
    if (found != p.term_count()) throw Error("polynomial has terms outside the expected degree");
    return v;
}

}  // namespace

std::vector<MultiPoly> invariant_basis(int k) {
    if (k < 0) throw Error("invariant_basis needs k >= 0");
    auto ctx = zctx();
    std::vector<Exp> monos = nf_monomials(k);
    std::size_t n = monos.size();
    // Rows of (T - I): the coordinates of tau(mono_j) - mono_j form column j.
    Mat m(n, Vec(n, Coef(0)));
    for (std::size_t j = 0; j < n; ++j) {
        MultiPoly img = action_tau(MultiPoly::monomial(ctx, monos[j], Coef(1)));
        Vec col = nf_coords(img, monos);
        for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
        m[j][j] = m[j][j] - Coef(1);
    }
    std::vector<Vec> kernel = null_space(std::move(m));
    std::vector<MultiPoly> out;
    for (const auto& v : kernel) {
        // Clear denominators and divide by the integer content.
        mpz_class lcm = 1, gcd = 0;
        for (const auto& c : v)
            if (!c.is_zero()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.to_ring(Ring::Rat).rat().get_den().get_mpz_t());
        std::vector<mpz_class> ints(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            mpq_class q = v[i].to_ring(Ring::Rat).rat() * lcm;
            q.canonicalize();
            ints[i] = q.get_num();
            mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), ints[i].get_mpz_t());
        }
        MultiPoly p(ctx);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (ints[i] != 0) p = p + MultiPoly::monomial(ctx, monos[i], Coef::integer(ints[i] / gcd));
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<MultiPoly> invariant_expected_gens(int k) {
    std::vector<MultiPoly> out;
    if (k % 2 != 0) return out;
    MultiPoly s1 = sigma1(), s3 = sigma3_reduced(), p = invariant_p();
    for (int eps = 0; eps <= 1; ++eps)
        for (int b = 0; 3 * b + 3 * eps <= k; ++b) {
            int a = k - 3 * b - 3 * eps;
            MultiPoly g = nf_sigma2(s1.pow(a) * s3.pow(b) * (eps ? p : MultiPoly::constant(zctx(), Coef(1))));
            out.push_back(std::move(g));
        }
    return out;
}

}  // namespace modseven
