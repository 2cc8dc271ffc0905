#include <doctest.h>

#include "modseven/checks.hpp"

using namespace modseven;

namespace {

nlohmann::json strip_elapsed(nlohmann::json j) {
    for (auto& c : j["checks"]) c.erase("elapsed_ms");
    return j;
}

}  // namespace

TEST_CASE("registry names are unique and sorted reports are deterministic") {
    const auto& defs = check_registry();
    for (std::size_t i = 0; i + 1 < defs.size(); ++i) CHECK(defs[i].name < defs[i + 1].name);

    std::vector<std::string> sample{"degree-formula", "mf7-rank", "eisenstein-sums",
                                    "zbasis-summand-table"};
    Report a = run_checks(sample, 16, 1);
    Report b = run_checks(sample, 16, 1);
    CHECK(strip_elapsed(a.to_json()) == strip_elapsed(b.to_json()));
    CHECK(strip_elapsed(a.to_json()).dump() == strip_elapsed(b.to_json()).dump());

    // Concurrent execution assembles the same report.
    Report c = run_checks(sample, 16, 3);
    CHECK(strip_elapsed(a.to_json()) == strip_elapsed(c.to_json()));
    CHECK(a.aggregate_pass);
}

TEST_CASE("unknown check names are usage errors") {
    CHECK_THROWS_AS(run_checks({"no-such-check"}, 16, 1), Error);
}

TEST_CASE("per-check precision floors are honored") {
    Report r = run_checks({"alpha-match"}, 5, 1);
    REQUIRE(r.checks.size() == 1);
    CHECK(r.checks[0].precision == 25);
    CHECK(r.checks[0].pass);
}
