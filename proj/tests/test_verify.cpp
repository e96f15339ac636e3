#include "doctest.h"

#include "hecke/redsim.hpp"
#include "hecke/verify.hpp"

using namespace hecke;

TEST_CASE("verification suites at small bounds") {
    VerifyOptions opt;
    opt.max_r = 3;
    opt.langlands_trials = 10;
    for (const auto& res : verify_all(opt)) {
        INFO(res.str());
        CHECK(res.ok);
    }
    CHECK(verify_suite_names().size() == 6);
    CHECK_THROWS_AS(run_suite("nope", opt), std::invalid_argument);
}

TEST_CASE("suite reports are deterministic") {
    VerifyOptions opt;
    opt.max_r = 2;
    opt.langlands_trials = 5;
    CHECK(verify_poly(opt).str() == verify_poly(opt).str());
    CHECK(verify_langlands(opt).str() == verify_langlands(opt).str());
}

TEST_CASE("flavor-specific orbit preconditions") {
    PrimePowerField F2(2);
    ModelPoint s = ModelPoint::siegel(F2, 2);
    CHECK_THROWS_AS(hecke_orbit(s, 1), std::invalid_argument);  // kernels are Lagrangian
    CHECK(hecke_orbit(s, 2).size() == 15);
}
