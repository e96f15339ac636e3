#include "doctest.h"

#include "hecke/degrees.hpp"
#include "hecke/redsim.hpp"

using namespace hecke;

namespace {

LaurentPoly qp(int e) {
    return LaurentPoly::variable(VarSet::symbols({}), "Q", e);
}

}  // namespace

TEST_CASE("closed-form profiles") {
    for (int r = 2; r <= 6; ++r) {
        BidegreeProfile psi1 = profile_Psi(1, r, 1);
        CHECK(psi1.d1s == qp(0));
        CHECK(psi1.d1ns == qp(0));
        CHECK(psi1.d2s == qp(0));
        CHECK(psi1.d2ns == qp(r - 1));
    }

    // summand values from the reduced-correspondence count
    BidegreeProfile s = profile_summand(1, 1, 4, 2);
    CHECK(s.d1s == gaussian_binomial(1, 2) * gaussian_binomial(1, 2));
    CHECK(s.d1ns == qp(1));

    auto sg = profile_siegel_phi(1, 2);
    CHECK(sg.d1s == gaussian_binomial(1, 2));
    CHECK(sg.d1ns == qp(1));
    CHECK(sg.d2ns == qp(1));

    CHECK_THROWS_AS(profile_Phi(3, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(profile_summand(3, 0, 4, 2), std::invalid_argument);
}

TEST_CASE("profile algebra") {
    BidegreeProfile a = profile_Psi(2, 4, 2);
    CHECK(a.swapped().swapped() == a);
    CHECK(profile_Phi(2, 4, 2).swapped() == profile_Psi(2, 4, 2));  // hat Phi_{r-n} = Psi_n
    CHECK(mul_profiles(a, profile_T(0, 4)) == a);
    BidegreeProfile scaled = scale_ns(a, 3);
    CHECK(scaled.d1ns == a.d1ns * qp(3));
    CHECK(scaled.d1s == a.d1s);
}

TEST_CASE("consistency reports") {
    for (int r = 1; r <= 6; ++r)
        for (int n = 0; n <= r; ++n) {
            ConsistencyReport rep = consistency_report(r, n);
            CHECK(rep.ok);
        }
    // the assembled text flags nothing
    CHECK(consistency_report(3, 1).str().find("FAIL") == std::string::npos);
}

TEST_CASE("profiles against the brute-force census") {
    for (int q : {2, 3}) {
        PrimePowerField F(q);
        ModelPoint t = ModelPoint::ordinary(F, 4, 2);
        for (int j = 0; j <= 4; ++j) {
            ReductionCensus cen = census(t, j);
            for (const auto& row : cen.rows) {
                auto prof = profile_summand(row.i, j - row.i, 4, 2).at(Rational(q));
                CHECK(prof[0] == Rational(static_cast<long>(row.classes)));
                CHECK(prof[1] == Rational(static_cast<long>(row.fiber)));
            }
        }
    }
}
