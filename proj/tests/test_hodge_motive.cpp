#include "doctest.h"

#include "hecke/frobchar.hpp"
#include "hecke/hodge.hpp"
#include "hecke/motive_inv.hpp"

using namespace hecke;

TEST_CASE("siegel hodge vectors") {
    CHECK(siegel_hodge(1).h == std::vector<long long>({1, 1}));
    HodgeVector g2 = siegel_hodge(2);
    CHECK(g2.weight == 3);
    CHECK(g2.h == std::vector<long long>({1, 1, 1, 1}));
    // g=3: subset sums of {1,2,3} are 0,1,2,3,3,4,5,6
    HodgeVector g3 = siegel_hodge(3);
    CHECK(g3.weight == 6);
    CHECK(g3.h == std::vector<long long>({1, 1, 1, 2, 1, 1, 1}));
    CHECK(g3.total() == 8);

    for (int g = 1; g <= 8; ++g) {
        HodgeVector h = siegel_hodge(g);
        CHECK(h.total() == (1LL << g));
        CHECK(h.symmetric());
    }
}

TEST_CASE("unitary hodge vectors") {
    HodgeVector u31 = unitary_hodge(3, 1);
    CHECK(u31.weight == 2);
    CHECK(u31.h == std::vector<long long>({1, 1, 1}));

    HodgeVector u42 = unitary_hodge(4, 2);
    CHECK(u42.weight == 4);
    CHECK(u42.h == std::vector<long long>({1, 1, 2, 1, 1}));
    CHECK(u42.total() == 6);
    CHECK(u42.conjectural);  // functional reading is a conjecture

    for (int r = 1; r <= 10; ++r)
        for (int n = 1; n <= r; ++n) {
            HodgeVector h = unitary_hodge(r, n);
            CHECK(h.total() == static_cast<long long>(binomial(r, n)));
            CHECK(h.symmetric());
            CHECK(h.h == unitary_hodge(r, r - n).h);
        }
}

TEST_CASE("invariant validation") {
    CHECK(validate(1, {3, 2}, 5, 2).valid);             // nu=1: (r-n, n)
    CHECK(validate(2, {1, 0, 1}, 2, 2).valid);
    auto bad = validate(2, {2, 0, 0}, 2, 0);
    CHECK_FALSE(bad.valid);
    REQUIRE(bad.problems.size() == 1);
    CHECK(bad.problems[0].find("minimality") != std::string::npos);
    CHECK_FALSE(validate(1, {3, 2}, 4, 2).valid);       // wrong rank
    CHECK_FALSE(validate(1, {3, 2}, 5, 3).valid);       // wrong dimension
}

TEST_CASE("invariant enumeration") {
    auto only = enumerate_invariants(2, 1, 1);
    REQUIRE(only.size() == 1);
    CHECK(only[0].k == std::vector<long long>({1, 1}));

    auto r2n2 = enumerate_invariants(2, 2, 2);
    REQUIRE(r2n2.size() == 2);
    CHECK(r2n2[0].nu == 1);
    CHECK(r2n2[0].k == std::vector<long long>({0, 2}));
    CHECK(r2n2[1].nu == 2);
    CHECK(r2n2[1].k == std::vector<long long>({1, 0, 1}));

    auto r1 = enumerate_invariants(1, 0, 3);
    REQUIRE(r1.size() == 1);
    CHECK(r1[0].nu == 1);
    CHECK(r1[0].k == std::vector<long long>({1, 0}));

    for (int r = 1; r <= 10; ++r)
        for (int n = 0; n <= r; ++n) {
            auto level1 = enumerate_invariants(r, n, 1);
            REQUIRE(level1.size() == 1);
            CHECK(level1[0].k == std::vector<long long>({r - n, n}));
        }
}

TEST_CASE("weights and blocks") {
    NilpotentInvariants nu1{1, {2, 1}};  // r=3, n=1
    CHECK(to_weights(nu1) == std::vector<long long>({0, 0, -1}));
    CHECK(levi_blocks(nu1).sizes == std::vector<long long>({2, 1}));

    NilpotentInvariants nu2{2, {1, 0, 1}};
    CHECK(to_weights(nu2) == std::vector<long long>({0, -2}));
    LeviBlocks b = levi_blocks(nu2);
    CHECK(b.conjectural);
    CHECK(b.zero_block == std::vector<bool>({false, true, false}));

    for (int r = 1; r <= 8; ++r)
        for (int n = 0; n <= 2 * r; ++n)
            for (const auto& inv : enumerate_invariants(r, n, 3)) {
                auto w = to_weights(inv);
                long long sum = 0;
                for (long long x : w) sum += x;
                CHECK(sum == -n);
                CHECK(static_cast<long long>(w.size()) == r);
            }
}
