#pragma once

#include <string>
#include <vector>

#include "modseven/poly.hpp"

namespace modseven {

// Structure maps of the graded Hopf algebroid (A~, Gamma~) with
// A~ = Z_(3)[a2,a4,a6] and Gamma~ = A~[r]. Everything is a substitution on
// the shared polynomial contexts actx()/gctx()/g2ctx().

/// eta_R on a polynomial in a2,a4,a6: a2 -> a2+3r, a4 -> a4+2r*a2+3r^2,
/// a6 -> a6+r*a4+r^2*a2+r^3.
MultiPoly eta_r(const MultiPoly& p);

MultiPoly hopf_counit(const MultiPoly& g);  // gctx -> actx, r -> 0
MultiPoly hopf_conj(const MultiPoly& g);    // r -> -r, a_i -> eta_R(a_i)
MultiPoly hopf_psi(const MultiPoly& g);     // gctx -> g2ctx, r -> r1 + r2

/// Embeddings into the model Gamma~ (x)_A~ Gamma~ = A~[r1,r2]: the left
/// factor goes in plainly (r -> r1); the right factor is eta_R-twisted
/// (r -> r2, a_i -> eta_R(a_i) with r -> r1).
MultiPoly embed_left(const MultiPoly& g);
MultiPoly embed_right(const MultiPoly& g);

struct AxiomsCertificate {
    bool pass = false;
    std::vector<std::string> checks;  // one line per verified identity
    std::vector<std::string> failures;
};

/// Counit, coassociativity, psi/eta_R compatibility and conjugation
/// identities, all as exact polynomial identities on generators.
AxiomsCertificate hopf_axioms_check();

/// Finitely generated free graded comodule, given by its coaction matrix:
/// column j lists the Gamma~ coefficients of psi(basis_j) on basis_i.
struct Comodule {
    std::vector<std::string> names;
    std::vector<int> degrees;
    std::vector<std::vector<MultiPoly>> mat;  // gctx entries

    std::size_t rank() const { return names.size(); }
    void check_counit() const;
    void check_coassociativity() const;
    void check_homogeneity() const;
    void check_all() const;

    Comodule shifted(int k) const;  // generator of M[k] sits in degree (old + k)
    Comodule dual() const;          // degrees negate; matrix is c(transpose)
};

Comodule direct_sum(const std::vector<Comodule>& parts);
Comodule trivial_comodule(int degree, const std::string& name);

/// JSON form: {basis: [{name, degree}], coaction: [[poly strings]]}.
std::string comodule_json_string(const Comodule& c);

/// The rank-3 comodule of Gamma~ (x) mf_1(2) = A~[r]/(a6+a4 r+a2 r^2+r^3)
/// on the basis w1, w2, w3 = 1, r, r^2 (degrees 0, 2, 4).
Comodule mf12_comodule();

/// Exact polynomial identity certifying that the coaction r -> 1(x)r + r(x)1
/// descends through the cubic relation above.
bool mf12_cubic_compatible();

struct MapCheck {
    bool commutes = false;
    bool homogeneous = false;
    bool square = false;
    bool invertible = false;
    int shift = 0;
    std::string detail;
    bool pass() const { return commutes && homogeneous; }
};

/// Checks Psi_N(f(m)) = (id (x) f)(Psi_M(m)) for f given over A~
/// (f[i][j] = coefficient of N-basis i in f(M-basis j)), plus homogeneity
/// deg f_ij = deg_M(j) - deg_N(i) - shift and invertibility of det(f) in A~.
/// Convention: deg f(m) = deg m - shift, so the Lemma-7.2 style dual map has
/// shift 4.
MapCheck comodule_map_check(const std::vector<std::vector<MultiPoly>>& f, const Comodule& m,
                            const Comodule& n, int shift);

/// All comodule maps M -> N of the given shift, found by solving the
/// commutation equations exactly; each solution is a matrix over A~.
std::vector<std::vector<std::vector<MultiPoly>>> solve_comodule_maps(const Comodule& m,
                                                                     const Comodule& n, int shift);

struct DualCertificate {
    bool pass = false;
    MapCheck lemma_map;       // w1 -> w3*, w2 -> -1/2 w2*, w3 -> w1*, shift 4
    MapCheck negative;        // corrupted map (w2 -> +1/2 w2*) must fail
    MapCheck double_dual;     // solved iso between mf12 and its double dual
    std::string detail;
};

/// Certificate for the dual comodule computations around the rank-3 comodule.
DualCertificate dual_comodule_certificate();

}  // namespace modseven
