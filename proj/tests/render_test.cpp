#include "doctest.h"

#include "rankone/render.hpp"

using namespace rankone;

TEST_CASE("ratfun rendering is canonical") {
    RatFun eps = RatFun::reciprocal({LinearFactor::alpha_plus(0), LinearFactor::beta_plus(0)},
                                    Rational(-1, 2));
    CHECK(eps.to_string() == "-1/2 / [(alpha) (beta)]");
    CHECK(latex_ratfun(eps) == "\\frac{-\\tfrac{1}{2}}{\\left(\\alpha\\right)\\left(\\beta\\right)}");
    Json j = json_ratfun(eps);
    CHECK(j["num"] == "-1/2");
    CHECK(j["den"].size() == 2);
}

TEST_CASE("bidiff json schema") {
    Json j = json_bidiff(bracket_operator(1));
    REQUIRE(j.size() == 3);
    for (const auto& e : j) {
        CHECK(e.contains("powA"));
        CHECK(e.contains("powB"));
        CHECK(e.contains("powC"));
        CHECK(e["coeff"].contains("num"));
        CHECK(e["coeff"].contains("den"));
        CHECK(e["powA"].get<int>() + e["powB"].get<int>() + e["powC"].get<int>() == 1);
    }
}

TEST_CASE("latex of the degree-1 bracket mentions the generators") {
    std::string tex = latex_bidiff(bracket_operator(1));
    CHECK(tex.find("\\mathcal{L}_x") != std::string::npos);
    CHECK(tex.find("\\nabla_x\\cdot\\nabla_y") != std::string::npos);
    CHECK(tex.find("\\frac") != std::string::npos);
}

TEST_CASE("verify report json") {
    Json j = json_verify(verify_kernel_reproduction(2));
    CHECK(j["pass"] == true);
    CHECK(j["checks"].size() == 3);
    Json bad = json_verify(verify_kernel_reproduction(2, RecursionDenominator::kRhoMinusOne));
    CHECK(bad["pass"] == false);
    CHECK(bad["first_failure"] == 2);
}

TEST_CASE("identical inputs give byte-identical reports") {
    auto r1 = run_bound_experiment(1, 0.2, 0.2, 0, 4, 64, 20.0, 5);
    auto r2 = run_bound_experiment(1, 0.2, 0.2, 0, 4, 64, 20.0, 5);
    CHECK(json_bound(r1).dump(2) == json_bound(r2).dump(2));
    auto m1 = run_mc_suite(1, 0, 0.2, 0.2, 20000, 11);
    auto m2 = run_mc_suite(1, 0, 0.2, 0.2, 20000, 11);
    CHECK(json_mc_suite(m1).dump() == json_mc_suite(m2).dump());
}

TEST_CASE("csv emitters") {
    auto rep = run_bound_experiment(1, 0.2, 0.2, 0, 3, 64, 20.0, 5);
    std::string csv = csv_bound(rep);
    CHECK(csv.rfind("trial,ratio,ratio_refined\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}
