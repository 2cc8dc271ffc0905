#pragma once

#include <array>

#include "modseven/linalg.hpp"
#include "modseven/poly.hpp"
#include "modseven/series.hpp"

namespace modseven {

/// Character of (Z/7)^x with values in Q(zeta6), stored on residues 1..6 and
/// determined by its value on the fixed generator t = [3].
struct Character {
    std::array<Coef, 7> val;  // val[0] = 0

    static Character from_t_value(const Coef& w);
    bool is_multiplicative() const;
    bool is_odd() const;  // phi(-1) = phi(6) = -1
};

/// The three odd characters: phi1(t)=zeta6, phi2(t)=-1, phi3(t)=-zeta6+1.
std::array<Character, 3> odd_characters();

/// sum_{n=1..6} n*phi(n), the quantity entering the Eisenstein constant term.
Coef character_weighted_sum(const Character& phi);

/// E(phi) = -(1/14) sum n phi(n) + sum_k (sum_{l|k} phi(l)) q^k over CycQ6.
QSeries eisenstein_qexp(const Character& phi, int prec);

struct ZBasis {
    int prec;
    QSeries z1, z2, z3;  // integer coefficients
    Mat base_change;     // 3x3 over CycQ6; column j = coordinates of z_j in E(phi_i)
    Coef det;
};

/// Integral basis of weight-1 forms from the CycQ6-combinations of the
/// Eisenstein series; verifies that zeta6-parts cancel and coefficients land
/// in Z.
ZBasis z_basis(int prec);

/// q-expansion of a polynomial in z1,z2,z3 (context zctx()).
QSeries qexp_of_mf7(const MultiPoly& e, int prec);

/// The generator t = [3] acting by t.z1 = -z3, t.z2 = -z1, t.z3 = -z2;
/// result in sigma2-normal form. Context must be zctx().
MultiPoly action_tau(const MultiPoly& e);

struct ActionCertificate {
    bool pass;
    Mat conjugated;            // M^-1 diag(phi_j(t)) M over CycQ6
    Coef det;                  // computed base-change determinant
    bool det_matches_display;  // equals the published (2/27)(84 zeta6 - 42)?
    std::string note;
};

/// The determinant the base-change matrix actually has: (1/27)(84 zeta6 - 42),
/// i.e. -28/9 + (56/9) zeta6 halved.
Coef base_change_det_value();
/// The value printed in the source the matrix comes from, twice the above.
Coef base_change_det_published();

/// Conjugates the diagonal character action by the base-change matrix and
/// confirms the signed permutation above.
ActionCertificate verify_action_via_eisenstein();

/// Z-basis of the tau-invariants in degree k, by exact kernel computation on
/// the 2k+1 normal-form monomials.
std::vector<MultiPoly> invariant_basis(int k);

/// The monomials sigma1^a sigma3^b p^eps of degree k (eps in {0,1}, k even),
/// whose span the invariants must match.
std::vector<MultiPoly> invariant_expected_gens(int k);

/// p = z1^2 z2 + z2^2 z3 + z3^2 z1, sigma2-reduced.
MultiPoly invariant_p();
MultiPoly sigma1();
MultiPoly sigma3_reduced();

}  // namespace modseven
