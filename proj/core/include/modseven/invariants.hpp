#pragma once

#include <utility>

#include "modseven/hopf.hpp"
#include "modseven/poly.hpp"

namespace modseven {

/// Images of a2, a4, a6 under the A~-module structure lambda on
/// R_A~ = mf_1(7)[r] (context zrctx()):
///   lambda(a2) = kappa(a2) - 3r
///   lambda(a4) = kappa(a4) - 2r lambda(a2) - 3r^2
///   lambda(a6) = kappa(a6) - r lambda(a4) - r^2 lambda(a2) - r^3
struct LambdaImages {
    MultiPoly la2, la4, la6;
};
LambdaImages lambda_images();

/// tau on R_A~: the signed permutation on the z_i together with
/// tau(r) = r + z2 z3; sigma2-reduced. Accepts zctx() or zrctx() input.
MultiPoly tau_on_R(const MultiPoly& e);

/// Transfer: sum of the six tau-orbit images.
MultiPoly transfer(const MultiPoly& e);

/// The 48-element A~-basis X u Xr u Xr^2 of R_A~ (context zrctx(), reduced).
const std::vector<MultiPoly>& basis48_elements();
const std::vector<std::string>& basis48_names();

struct Basis48Certificate {
    bool pass = false;
    int dimension = 0;                // dim_GF3 R_A~/I, expected 48
    std::vector<int> dim_by_degree;   // degrees 0..11
    bool independent = false;         // the 48 images are GF(3)-independent
    bool negative_control = false;    // dropping one element leaves 47 < 48
    std::string detail;
};

/// GF(3) certificate: imposes sigma2 = la2 = la4 = la6 = 0 mod 3, computes
/// the quotient dimension degree by degree, and checks independence of the
/// basis images.
Basis48Certificate basis48_certificate();

/// A~-coordinates of a homogeneous element of R_A~ on the 48 basis elements,
/// computed by an exact linear solve (coefficients act through lambda).
/// coords[b] is a polynomial in a2,a4,a6 (context actx()).
struct Basis48Expansion {
    std::vector<MultiPoly> coords;
    bool loc3_integral = true;  // all denominators prime to 3
};
Basis48Expansion expand_in_basis48(const MultiPoly& e);

/// The eight invariants in the splitting-compatible order
/// 1, s1^2, n4, n6, s1^4, s1^2 n4, s1^2 n6, s3^2.
struct SBasisData {
    std::vector<std::string> names;
    std::vector<MultiPoly> elems;  // zrctx(), reduced
    std::vector<int> degrees;      // 0,2,4,6,4,6,8,6
};
const SBasisData& s_basis();

struct MinorCertificates {
    bool pass = false;
    Coef step2_det;                 // nonzero rational
    bool step2_pivots_match = false;
    MultiPoly step5_det;            // a rational unit times a2
    Coef step5_unit;
    std::string detail;
};

/// The two 8x8 minors of the 48x8 coordinate matrix: the rational one
/// (nonvanishing) and the one whose determinant is a 3-local unit times a2.
MinorCertificates minor_certificates();

struct Step1Comparison {
    bool solver_ok = false;
    std::vector<std::string> discrepancies;  // reported, not fatal
};

/// Recomputes the eight coordinate expansions and compares them term by term
/// with the published displays; any mismatch is reported with both values.
Step1Comparison step1_comparison();

struct SBasisCertificate {
    bool pass = false;
    bool tau_invariant = false;
    bool n6_identity = false;
    bool degrees_match = false;
    MinorCertificates minors;
    Step1Comparison step1;
    std::string detail;
};
SBasisCertificate s_basis_certificate();

/// The rank-8 comodule structure on S_A~, computed inside Gamma~ (x) R_A~
/// and re-expressed over the S-basis. Throws if the coaction leaves the span.
Comodule coaction_on_S();

struct SplittingCertificate {
    bool pass = false;
    MapCheck map_check;
    bool source_checks = false;  // counit/coassociativity/homogeneity
    bool target_checks = false;
    bool grading_preserved = false;
    std::string detail;
};

/// The splitting A~ + (Gamma~ (x) mf_1(2))[2] + (Gamma~ (x) mf_1(2))[4] + A~[6]
/// -> S_A~ sending (1, w1[2], w2[2], w3[2], w1[4], w2[4], w3[4], 1[6]) to
/// (1, s1^2, n4, n6, s1^4, s1^2 n4, s1^2 n6, s3^2).
SplittingCertificate splitting_iso_check();

/// d_n = n^2 prod_{p|n} (1 - 1/p^2) and d_n / phi(n).
std::pair<mpz_class, mpz_class> degree_formula(long n);

}  // namespace modseven
