// Command-line front end: expression parsing, check running, certificate
// output. Exit codes: 0 pass, 1 check failure, 2 usage error.

#include <chrono>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "modseven/checks.hpp"
#include "modseven/invariants.hpp"
#include "modseven/modforms.hpp"
#include "modseven/parse.hpp"
#include "modseven/tate.hpp"
#include "modseven/weierstrass.hpp"

using namespace modseven;
using nlohmann::json;

namespace {

json series_json(const QSeries& s) {
    json coeffs = json::array();
    for (int e = s.low(); e < s.prec(); ++e) coeffs.push_back(s.coeff(e).str());
    return {{"low", s.low()}, {"prec", s.prec()}, {"coeffs", coeffs}};
}

json series_json(const Series<VRat>& s) {
    json coeffs = json::array();
    for (int e = s.low(); e < s.prec(); ++e) coeffs.push_back(s.coeff(e).str());
    return {{"low", s.low()}, {"prec", s.prec()}, {"coeffs", coeffs}};
}

// Run a handful of registry checks and emit one certificate object each.
int emit_certificates(const std::vector<std::string>& names, int prec, bool as_json) {
    Report rep = run_checks(names, prec, 1);
    if (as_json) {
        json arr = json::array();
        for (const auto& c : rep.checks)
            arr.push_back({{"check", c.name},
                           {"status", c.pass ? "pass" : "fail"},
                           {"witnesses", c.witnesses},
                           {"precision", c.precision},
                           {"elapsed_ms", c.elapsed_ms}});
        std::cout << (arr.size() == 1 ? arr[0] : arr).dump(2) << "\n";
    } else {
        std::cout << rep.text();
    }
    return rep.aggregate_pass ? 0 : 1;
}

MultiPoly parse_or_exit(const std::string& text, const ContextPtr& ctx, bool reduce) {
    return parse_expr(text, ctx, reduce);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations around modular forms of level 7 and the cubical Hopf algebroid at 3"};
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
    app.require_subcommand(1);

    int prec = 16;
    int jobs = 1;
    bool as_json = false;
    app.add_option("--prec", prec, "q-adic working precision (checks raise it as needed)")
        ->capture_default_str();
    app.add_option("--jobs", jobs, "worker threads for verify")->capture_default_str();
    app.add_flag("--json", as_json, "emit JSON instead of text");

    // verify -------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run registered checks (all when none named)");
    std::vector<std::string> names;
    verify->add_option("names", names, "check names (see --list)");
    bool list_checks = false;
    verify->add_flag("--list", list_checks, "list check names and exit");

    // qexp ---------------------------------------------------------------
    auto* qexp = app.add_subcommand("qexp", "q-expansion of a polynomial in z1,z2,z3");
    std::string qexp_text;
    qexp->add_option("poly", qexp_text, "expression, e.g. \"z1*z3^2\"")->required();

    // mf7 ----------------------------------------------------------------
    auto* mf7 = app.add_subcommand("mf7", "level-7 modular forms");
    auto* mf7_qexp = mf7->add_subcommand("qexp", "q-expansion of a polynomial in z1,z2,z3");
    std::string mf7_text;
    mf7_qexp->add_option("poly", mf7_text)->required();
    auto* mf7_verify = mf7->add_subcommand("verify", "verify the (Z/7)^x action certificate");
    std::string mf7_what = "action";
    mf7_verify->add_option("what", mf7_what, "certificate name (action)");
    auto* mf7_inv = mf7->add_subcommand("invariants", "Z-basis of tau-invariants in a degree");
    int inv_degree = 0;
    mf7_inv->add_option("--degree", inv_degree, "weight k")->required();

    // tate ---------------------------------------------------------------
    auto* tate = app.add_subcommand("tate", "Tate curve series");
    int tn = 7, tk = 1, td = 0;
    auto* tate_xy = tate->add_subcommand("xy", "torsion-point coordinate series X, Y");
    tate_xy->add_option("--n", tn)->required();
    tate_xy->add_option("--k", tk)->required();
    tate_xy->add_option("--d", td)->capture_default_str();
    auto* tate_alpha = tate->add_subcommand("alpha", "Tate-normal-form coefficients alpha_i");
    tate_alpha->add_option("--n", tn)->required();
    tate_alpha->add_option("--k", tk)->required();
    tate_alpha->add_option("--d", td)->capture_default_str();
    auto* tate_coeff = tate->add_subcommand("coeffs", "a4, a6 and Delta of Tate(q^n)");
    tate_coeff->add_option("--n", tn)->capture_default_str();

    // wst ----------------------------------------------------------------
    auto* wst = app.add_subcommand("wst", "Weierstrass transformations");
    auto* wst_tr = wst->add_subcommand("transform", "apply (r,s,t,u) to a curve");
    std::string opt_r = "0", opt_s = "0", opt_t = "0", opt_u = "1";
    std::string a1s = "a1", a2s = "a2", a3s = "a3", a4s = "a4", a6s = "a6";
    wst_tr->add_option("--r", opt_r)->capture_default_str();
    wst_tr->add_option("--s", opt_s)->capture_default_str();
    wst_tr->add_option("--t", opt_t)->capture_default_str();
    wst_tr->add_option("--u", opt_u, "a nonzero rational")->capture_default_str();
    wst_tr->add_option("--a1", a1s)->capture_default_str();
    wst_tr->add_option("--a2", a2s)->capture_default_str();
    wst_tr->add_option("--a3", a3s)->capture_default_str();
    wst_tr->add_option("--a4", a4s)->capture_default_str();
    wst_tr->add_option("--a6", a6s)->capture_default_str();
    auto* wst_l1 = wst->add_subcommand("level1-image", "image of a polynomial in c4, c6, Delta");
    std::string l1_text;
    wst_l1->add_option("poly", l1_text, "e.g. \"Delta\" or \"c4^3 - c6^2\"")->required();

    // hopf ---------------------------------------------------------------
    auto* hopf = app.add_subcommand("hopf", "Hopf algebroid certificates");
    hopf->add_subcommand("axioms", "structure-map identities");
    hopf->add_subcommand("dual-check", "dual comodule certificates");

    // inv ----------------------------------------------------------------
    auto* inv = app.add_subcommand("inv", "invariants of the (Z/7)^x action on R_A~");
    inv->add_subcommand("basis48", "GF(3) basis certificate for R_A~");
    inv->add_subcommand("sbasis", "S_A~ basis certificate");
    inv->add_subcommand("splitting", "comodule splitting certificate");
    auto* inv_tr = inv->add_subcommand("transfer", "transfer of a polynomial in z1,z2,z3,r");
    std::string tr_text;
    inv_tr->add_option("poly", tr_text)->required();

    // Let --prec/--json/--jobs appear after any subcommand.
    auto enable_fallthrough = [](CLI::App* a, auto&& self) -> void {
        for (CLI::App* sub : a->get_subcommands({})) {
            sub->fallthrough(true);
            self(sub, self);
        }
    };
    enable_fallthrough(&app, enable_fallthrough);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) {
            if (list_checks) {
                for (const auto& d : check_registry())
                    std::cout << d.name << (d.min_prec ? " (min prec " + std::to_string(d.min_prec) + ")" : "")
                              << "\n";
                return 0;
            }
            Report rep = run_checks(names, prec, jobs);
            if (as_json)
                std::cout << rep.to_json().dump(2) << "\n";
            else
                std::cout << rep.text();
            return rep.aggregate_pass ? 0 : 1;
        }

        if (qexp->parsed() || mf7_qexp->parsed()) {
            const std::string& text = qexp->parsed() ? qexp_text : mf7_text;
            MultiPoly p = parse_or_exit(text, zctx(), true);
            QSeries s = qexp_of_mf7(p, prec);
            if (as_json)
                std::cout << series_json(s).dump(2) << "\n";
            else
                std::cout << s.str() << "\n";
            return 0;
        }
        if (mf7_verify->parsed()) {
            if (mf7_what != "action") throw Error("unknown certificate: " + mf7_what);
            return emit_certificates({"action-certificate"}, prec, as_json);
        }
        if (mf7_inv->parsed()) {
            auto basis = invariant_basis(inv_degree);
            if (as_json) {
                json arr = json::array();
                for (const auto& b : basis) arr.push_back(b.str());
                std::cout << json{{"degree", inv_degree}, {"rank", basis.size()}, {"basis", arr}}.dump(2)
                          << "\n";
            } else {
                std::cout << "rank " << basis.size() << " in degree " << inv_degree << "\n";
                for (const auto& b : basis) std::cout << "  " << b.str() << "\n";
            }
            return 0;
        }

        if (tate_xy->parsed()) {
            TorsionPointSeries t = torsion_xy(tn, tk, td, prec);
            if (as_json) {
                json j{{"n", tn}, {"k", tk}, {"d", td}};
                j["X"] = t.x ? series_json(*t.x) : series_json(*t.xv);
                j["Y"] = t.y ? series_json(*t.y) : series_json(*t.yv);
                std::cout << j.dump(2) << "\n";
            } else if (t.x) {
                std::cout << "X = " << t.x->str() << "\nY = " << t.y->str() << "\n";
            } else {
                std::cout << "X = " << t.xv->str() << "\nY = " << t.yv->str() << "\n";
            }
            return 0;
        }
        if (tate_alpha->parsed()) {
            if (((td % tn) + tn) % tn == 0) {
                AlphaSeries a = alpha_series(tn, tk, 0, prec);
                if (as_json)
                    std::cout << json{{"alpha1", series_json(a.a1)},
                                      {"alpha2", series_json(a.a2)},
                                      {"alpha3", series_json(a.a3)}}
                                     .dump(2)
                              << "\n";
                else
                    std::cout << "alpha1 = " << a.a1.str() << "\nalpha2 = " << a.a2.str()
                              << "\nalpha3 = " << a.a3.str() << "\n";
            } else {
                AlphaSeriesV a = alpha_series_v(tn, tk, td, prec);
                if (as_json)
                    std::cout << json{{"alpha1", series_json(a.a1)},
                                      {"alpha2", series_json(a.a2)},
                                      {"alpha3", series_json(a.a3)}}
                                     .dump(2)
                              << "\n";
                else
                    std::cout << "alpha1 = " << a.a1.str() << "\nalpha2 = " << a.a2.str()
                              << "\nalpha3 = " << a.a3.str() << "\n";
            }
            return 0;
        }
        if (tate_coeff->parsed()) {
            TateCurve tc = tate_coeffs(tn, std::max(prec, tn));
            if (as_json)
                std::cout << json{{"n", tn},
                                  {"a4", series_json(tc.a4)},
                                  {"a6", series_json(tc.a6)},
                                  {"Delta", series_json(tc.delta)}}
                                 .dump(2)
                          << "\n";
            else
                std::cout << "a4 = " << tc.a4.str() << "\na6 = " << tc.a6.str()
                          << "\nDelta = " << tc.delta.str() << "\n";
            return 0;
        }

        if (wst_tr->parsed()) {
            auto ctx = wctx();
            WeierstrassCoeffs<MultiPoly> w{parse_or_exit(a1s, ctx, false), parse_or_exit(a2s, ctx, false),
                                           parse_or_exit(a3s, ctx, false), parse_or_exit(a4s, ctx, false),
                                           parse_or_exit(a6s, ctx, false)};
            MultiPoly u = parse_or_exit(opt_u, ctx, false);
            Exp zero_exp(ctx->size(), 0);
            if (u.term_count() != 1 || u.terms().begin()->first != zero_exp)
                throw Error("--u must be a nonzero rational constant");
            Coef uc = u.terms().begin()->second;
            TransformParams<MultiPoly> p{parse_or_exit(opt_r, ctx, false), parse_or_exit(opt_s, ctx, false),
                                         parse_or_exit(opt_t, ctx, false), u,
                                         MultiPoly::constant(ctx, uc.inverse())};
            auto o = transform(w, p);
            if (as_json)
                std::cout << json{{"a1", o.a1.str()},
                                  {"a2", o.a2.str()},
                                  {"a3", o.a3.str()},
                                  {"a4", o.a4.str()},
                                  {"a6", o.a6.str()}}
                                 .dump(2)
                          << "\n";
            else
                std::cout << "a1' = " << o.a1.str() << "\na2' = " << o.a2.str() << "\na3' = " << o.a3.str()
                          << "\na4' = " << o.a4.str() << "\na6' = " << o.a6.str() << "\n";
            return 0;
        }
        if (wst_l1->parsed()) {
            MultiPoly m = parse_or_exit(l1_text, c4c6ctx(), false);
            MultiPoly img = level1_image(m);
            if (as_json)
                std::cout << json{{"input", l1_text}, {"image", img.str()}}.dump(2) << "\n";
            else
                std::cout << img.str() << "\n";
            return 0;
        }

        if (hopf->parsed()) {
            if (hopf->get_subcommand("axioms")->parsed())
                return emit_certificates({"hopf-axioms"}, prec, as_json);
            if (hopf->get_subcommand("dual-check")->parsed())
                return emit_certificates({"dual-comodule", "double-dual"}, prec, as_json);
            throw Error("hopf needs a subcommand (axioms | dual-check)");
        }

        if (inv->parsed()) {
            if (inv->get_subcommand("basis48")->parsed())
                return emit_certificates({"basis48"}, prec, as_json);
            if (inv->get_subcommand("sbasis")->parsed())
                return emit_certificates({"sbasis-certificate"}, prec, as_json);
            if (inv->get_subcommand("splitting")->parsed())
                return emit_certificates({"splitting", "coaction-table"}, prec, as_json);
            if (inv_tr->parsed()) {
                MultiPoly p = parse_or_exit(tr_text, zrctx(), true);
                MultiPoly tr = transfer(p);
                bool invariant = tau_on_R(tr) == tr;
                if (as_json)
                    std::cout << json{{"check", "transfer"},
                                      {"status", invariant ? "pass" : "fail"},
                                      {"witnesses", {{"input", tr_text}, {"transfer", tr.str()}}}}
                                     .dump(2)
                              << "\n";
                else
                    std::cout << tr.str() << "\n";
                return invariant ? 0 : 1;
            }
            throw Error("inv needs a subcommand (basis48 | sbasis | splitting | transfer)");
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CheckFailure& e) {
        std::cerr << "check failure: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
