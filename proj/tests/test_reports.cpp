#include <catch_amalgamated.hpp>

#include <cmath>

#include "sigroots/errors.hpp"
#include "sigroots/graph_polynomials.hpp"
#include "sigroots/reports.hpp"

using namespace sigroots;

TEST_CASE("H-family parameters") {
    CHECK(HFamilyParam::parse("n").resolve(7) == 7);
    CHECK(HFamilyParam::parse("3").resolve(7) == 3);
    CHECK_THROWS_AS(HFamilyParam::parse("-1"), domain_error);
    CHECK_THROWS_AS(HFamilyParam::parse("2x"), domain_error);
    CHECK_THROWS_AS(HFamilyParam::parse(""), domain_error);
}

TEST_CASE("H-family adjoint roots") {
    auto diagonal = h_family_roots(1, 7, HFamilyParam::parse("n"), HFamilyParam::parse("n"));
    REQUIRE(diagonal.size() == 7);
    for (const auto& r : diagonal) {
        CHECK_FALSE(r.skipped);
        CHECK(r.adjoint.degree() == r.spec.clique + r.spec.paths * r.spec.path_length);
        CHECK(r.has_nonreal == !r.nonreal_roots.empty());
        CHECK(r.nonreal_roots.size() % 2 == 0);
    }
    CHECK_FALSE(diagonal[0].has_nonreal);
    CHECK_FALSE(diagonal[1].has_nonreal);

    auto figure3 = h_family_roots(5, 5, {ParamRule::constant, 3}, {ParamRule::constant, 2});
    REQUIRE(figure3.size() == 1);
    CHECK_FALSE(figure3[0].skipped);
    CHECK(figure3[0].adjoint == adjoint_poly(h_graph({5, 3, 2})));

    for (const auto& r : h_family_roots(1, 10, HFamilyParam::parse("n"), HFamilyParam::parse("0"))) {
        CHECK(r.adjoint == edgeless_sigma(r.spec.clique));
        CHECK_FALSE(r.has_nonreal);
    }

    auto wide = h_family_roots(20, 23, HFamilyParam::parse("n"), HFamilyParam::parse("2"));
    REQUIRE(wide.size() == 4);
    CHECK_FALSE(wide[1].skipped);  // 21 + 42 = 63 vertices
    CHECK(wide[2].skipped);
    CHECK(wide[3].skipped);
    CHECK_FALSE(wide[2].skip_reason.empty());

    // k must not exceed n.
    auto invalid = h_family_roots(2, 2, {ParamRule::constant, 3}, {ParamRule::constant, 1});
    CHECK(invalid[0].skipped);

    const std::string roots = h_family_roots_csv(diagonal);
    CHECK(roots.rfind("#sigma-roots-v1\nn,k,t,re,im\n", 0) == 0);
    const std::string summary = h_family_summary_csv(wide);
    CHECK(summary.find("22,22,2,66,skipped,,\n") != std::string::npos);
}

TEST_CASE("conjugate pairs among the nonreal adjoint roots") {
    for (const auto& r : h_family_roots(3, 21, HFamilyParam::parse("n"), HFamilyParam::parse("2"))) {
        REQUIRE(r.has_nonreal);
        for (const auto& z : r.nonreal_roots) {
            bool paired = false;
            for (const auto& w : r.nonreal_roots) paired = paired || std::abs(w.value - std::conj(z.value)) < 1e-9;
            REQUIRE(paired);
        }
    }
}

TEST_CASE("least root of the edgeless sigma-polynomial") {
    auto rows = stirling_trend_report(30);
    REQUIRE(rows.size() == 29);
    CHECK(rows[0].n == 2);
    CHECK(std::abs(rows[0].min_root + 1) < 1e-11);
    CHECK(std::abs(rows[1].min_root - (-3 - std::sqrt(5.0)) / 2) < 1e-11);
    for (const auto& r : rows) {
        CHECK(r.all_real);
        CHECK(r.bracket.width() <= Rational(default_isolation_tolerance));
        CHECK(r.ratio == Catch::Approx(r.min_root / r.n));
    }
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].min_root < rows[i - 1].min_root);
    CHECK_THROWS_AS(stirling_trend_report(41), domain_error);
    CHECK(stirling_trend_csv(rows).rfind("#sigma-roots-v1\nn,min_root,ratio,ratio_over_e,all_real\n2,", 0) == 0);
}

TEST_CASE("edge deletion moves the least root left") {
    for (auto [u, v] : complete_graph(3).edges()) CHECK(deletion_keeps_min_root(complete_graph(3), u, v));
    CHECK(deletion_keeps_min_root(cycle_graph(5), 0, 1));

    auto report = monotonicity_suite(200, 8, 12345);
    CHECK(report.trials == 200);
    CHECK(report.checked == 200);
    CHECK(report.violations == 0);
    CHECK(report.counterexamples.empty());

    auto again = monotonicity_suite(200, 8, 12345);
    CHECK(again.skipped == report.skipped);
    CHECK_THROWS_AS(monotonicity_suite(10, 9, 1), domain_error);
}

TEST_CASE("identity suite") {
    auto checks = identity_suite();
    REQUIRE(checks.size() == 3);
    CHECK(checks[0].name == "triangle_free");
    CHECK(checks[0].checked == 65);
    CHECK(checks[1].name == "forest");
    CHECK(checks[1].checked == 95);
    CHECK(checks[2].name == "join");
    CHECK(checks[2].checked == 18 * 18);
    for (const auto& c : checks) {
        CHECK(c.failures == 0);
        CHECK(c.first_counterexample.empty());
    }
}
