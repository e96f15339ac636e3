#include "doctest.h"

#include "hecke/redsim.hpp"

using namespace hecke;

TEST_CASE("hecke orbits") {
    PrimePowerField F2(2);
    ModelPoint t = ModelPoint::ordinary(F2, 2, 1);
    CHECK(hecke_orbit(t, 1).size() == 3);
    auto trivial = hecke_orbit(t, 0);
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0].dim() == 0);

    for (int r = 1; r <= 4; ++r) {
        ModelPoint tr = ModelPoint::ordinary(F2, r, std::min(1, r));
        for (int j = 0; j <= r; ++j)
            CHECK(hecke_orbit(tr, j).size() == gaussian_binomial_count(j, r, 2));
    }
    CHECK_THROWS_AS(hecke_orbit(ModelPoint::ordinary(F2, 4, 2), 2, 5), BudgetExceeded);
}

TEST_CASE("reduction types") {
    PrimePowerField F2(2);
    ModelPoint t = ModelPoint::ordinary(F2, 3, 1);
    int frobenius_kernels = 0;
    for (const auto& W : hecke_orbit(t, 1)) {
        int i = reduction_type(t, W);
        if (i == 1) {
            ++frobenius_kernels;
            CHECK(W == t.D());  // only the kernel equal to D meets it
        } else {
            CHECK(i == 0);
        }
    }
    CHECK(frobenius_kernels == 1);
}

TEST_CASE("closed point keys") {
    PrimePowerField F2(2);
    ModelPoint t = ModelPoint::ordinary(F2, 3, 1);
    // the Frobenius class (i = j = n) is a single key
    auto key = closed_point_key(t, t.D());
    CHECK(key.first == t.D());
    REQUIRE(key.second.has_value());
    CHECK(*key.second == t.D());

    ModelPoint s = ModelPoint::siegel(F2, 2);
    auto skey = closed_point_key(s, s.D());
    CHECK_FALSE(skey.second.has_value());  // intersection-only keys
}

TEST_CASE("ordinary censuses") {
    PrimePowerField F2(2);
    ModelPoint t21 = ModelPoint::ordinary(F2, 2, 1);
    ReductionCensus c = census(t21, 1);
    CHECK(c.all_match);
    REQUIRE(c.rows.size() == 2);
    CHECK(c.rows[0].i == 0);
    CHECK(c.rows[0].classes == 1);
    CHECK(c.rows[0].fiber == 2);
    CHECK(c.rows[1].i == 1);
    CHECK(c.rows[1].classes == 1);
    CHECK(c.rows[1].fiber == 1);
    CHECK(c.total == 3);

    ModelPoint t42 = ModelPoint::ordinary(F2, 4, 2);
    ReductionCensus c42 = census(t42, 2);
    CHECK(c42.all_match);
    REQUIRE(c42.rows.size() == 3);
    CHECK(c42.rows[0].classes == 1);   // i=0
    CHECK(c42.rows[0].fiber == 16);
    CHECK(c42.rows[1].classes == 9);   // i=1
    CHECK(c42.rows[1].fiber == 2);
    CHECK(c42.rows[2].classes == 1);   // i=2, the Frobenius point
    CHECK(c42.rows[2].fiber == 1);
    CHECK(c42.total == 35);

    // CSV rendering is stable
    CHECK(c.csv() ==
          "i,classes,fiber,formula_classes,formula_fiber,match\n"
          "0,1,2,1,2,yes\n"
          "1,1,1,1,1,yes\n");
}

TEST_CASE("siegel census") {
    for (int p : {2, 3}) {
        PrimePowerField F(p);
        ReductionCensus c = census(ModelPoint::siegel(F, 2), 2);
        CHECK(c.all_match);
        CHECK(c.total == static_cast<std::uint64_t>((p + 1) * (p * p + 1)));
    }
}

TEST_CASE("quadratic census runs over the extension field") {
    PrimePowerField F2(2);
    ModelPoint t = ModelPoint::quadratic(F2, 2, 1);
    CHECK(t.D().dim() == 2);                  // F_2-dimension of the F_4-line
    CHECK(t.structure().is_stable(t.D()));
    ReductionCensus c = census(t, 1);
    CHECK(c.q == 4);
    CHECK(c.all_match);
    CHECK(c.total == 5);  // lines of F_4^2

    // the unitary signature model fixes the quadratic D-dimension at
    // max(r-n, n); reduction types are then taken over the extension field
    ModelPoint u = ModelPoint::unitary(F2, 3, 1);
    CHECK(u.n() == 2);
    ReductionCensus cu = census(u, 1);
    CHECK(cu.q == 4);
    CHECK(cu.all_match);
    for (const auto& W : hecke_orbit(u, 1))
        CHECK(reduction_type(u, W) == intersect(W, u.D_quadratic()).dim());
}

TEST_CASE("nonordinary classification") {
    PrimePowerField F2(2);
    NonordinaryReport rep = nonordinary_census(ModelPoint::nonordinary(F2, 3));
    CHECK(rep.lines_in_d == 3);
    REQUIRE(rep.span_class_sizes.size() == 1);  // every outside line spans F^3
    CHECK(rep.span_class_sizes[0] == 4);
    CHECK(rep.conjectural);

    NonordinaryReport rep4 = nonordinary_census(ModelPoint::nonordinary(F2, 4));
    CHECK(rep4.lines_in_d == 3);
    CHECK(rep4.span_class_sizes == std::vector<std::uint64_t>({4, 4, 4}));

    PrimePowerField F3(3);
    NonordinaryReport rep3 = nonordinary_census(ModelPoint::nonordinary(F3, 3));
    CHECK(rep3.lines_in_d == 4);                // q + 1 lines inside D
    CHECK(rep3.span_class_sizes == std::vector<std::uint64_t>({9}));

    NonordinaryReport repq = nonordinary_census(ModelPoint::quadratic(F2, 2, 1));
    CHECK(repq.lines_in_d == 3);
    CHECK(repq.span_class_sizes == std::vector<std::uint64_t>({12}));

    // degenerate quadratic point (m = 1): D is the whole plane, so every
    // kernel line sits inside it and lands on the Frobenius-image class
    NonordinaryReport tiny = nonordinary_census(ModelPoint::quadratic(F2, 1, 1));
    CHECK(tiny.lines_in_d == 3);
    CHECK(tiny.span_class_sizes.empty());

    CHECK_THROWS_AS(nonordinary_census(ModelPoint::ordinary(F2, 3, 1)),
                    std::invalid_argument);
}
