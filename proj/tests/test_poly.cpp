#include "doctest.h"

#include <random>

#include "hecke/poly.hpp"
#include "hecke/siegel.hpp"

using namespace hecke;

namespace {

LaurentPoly var(const VarSet& vs, const std::string& name, int exp = 1) {
    return LaurentPoly::variable(vs, name, exp);
}

}  // namespace

TEST_CASE("addition") {
    VarSet vs = VarSet::gl(2);
    CHECK((var(vs, "U1") - var(vs, "U1")).is_zero());

    LaurentPoly s1 = elementary_symmetric(vs, std::vector<int>{0, 1}, 1);
    CHECK(s1 + s1 == s1.scaled(Rational(2)));

    LaurentPoly a = var(vs, "U1") + var(vs, "Q", -1);
    LaurentPoly b = var(vs, "U2") - var(vs, "Q", -1);
    CHECK(a + b == var(vs, "U1") + var(vs, "U2"));

    VarSet other = VarSet::gl(3);
    CHECK_THROWS_AS((void)(LaurentPoly::zero(vs) + LaurentPoly::zero(other)),
                    std::invalid_argument);
}

TEST_CASE("multiplication") {
    VarSet vs = VarSet::gl(2);
    CHECK(var(vs, "U1") * var(vs, "U1", -1) == LaurentPoly::constant(vs, Rational(1)));
    CHECK((var(vs, "U1") + var(vs, "U2")) * (var(vs, "U1") - var(vs, "U2")) ==
          var(vs, "U1", 2) - var(vs, "U2", 2));

    VarSet wx = vs.adjoin("X");
    LaurentPoly x = var(wx, "X");
    LaurentPoly lhs = (x - var(wx, "U1")) * (x - var(wx, "U2"));
    LaurentPoly rhs = x * x - (var(wx, "U1") + var(wx, "U2")) * x +
                      var(wx, "U1") * var(wx, "U2");
    CHECK(lhs == rhs);
}

TEST_CASE("evaluate") {
    VarSet vs = VarSet::gl(2);
    LaurentPoly p = var(vs, "U1") + var(vs, "U2");
    CHECK(p.evaluate({{"U1", Rational(1)}, {"U2", Rational(2)}}) == Rational(3));

    LaurentPoly q = var(vs, "Q", -1) * var(vs, "U1") * var(vs, "U2");
    CHECK(q.evaluate({{"Q", Rational(3)}, {"U1", Rational(3)}, {"U2", Rational(2)}}) ==
          Rational(2));

    VarSet v3 = VarSet::gl(3);
    LaurentPoly s2 = elementary_symmetric(v3, std::vector<int>{0, 1, 2}, 2);
    CHECK(s2.evaluate({{"U1", Rational(1)}, {"U2", Rational(1)}, {"U3", Rational(1)}}) ==
          Rational(3));

    CHECK_THROWS_AS(p.evaluate({{"U1", Rational(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(q.evaluate({{"Q", Rational(0)}, {"U1", Rational(1)}, {"U2", Rational(1)}}),
                    std::domain_error);
}

TEST_CASE("elementary symmetric polynomials") {
    VarSet v3 = VarSet::gl(3);
    std::vector<int> all3{0, 1, 2};
    CHECK(elementary_symmetric(v3, all3, 1) ==
          var(v3, "U1") + var(v3, "U2") + var(v3, "U3"));
    CHECK(elementary_symmetric(v3, all3, 3) ==
          var(v3, "U1") * var(v3, "U2") * var(v3, "U3"));

    // count the quadratic monomials by direct enumeration
    VarSet v4 = VarSet::gl(4);
    LaurentPoly expected(v4);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            Monomial m(v4.size(), 0);
            m[i] = m[j] = 1;
            expected.add_term(m, Rational(1));
        }
    CHECK(elementary_symmetric(v4, std::vector<int>{0, 1, 2, 3}, 2) == expected);
    CHECK(expected.term_count() == 6);

    CHECK_THROWS_AS(elementary_symmetric(v3, all3, 4), std::invalid_argument);
    CHECK_THROWS_AS(elementary_symmetric(v3, all3, -1), std::invalid_argument);
}

TEST_CASE("sym_reduce basics") {
    VarSet vs = VarSet::gl(3);
    std::vector<int> all{0, 1, 2};

    VarSet v2 = VarSet::gl(2);
    LaurentPoly q2 = LaurentPoly::variable(v2, "U1", 2) + LaurentPoly::variable(v2, "U2", 2);
    LaurentPoly r2 = sym_reduce(q2, std::vector<int>{0, 1}, {"S1", "S2"});
    VarSet sv = r2.vars();
    CHECK(r2 == LaurentPoly::variable(sv, "S1", 2) -
                    LaurentPoly::variable(sv, "S2").scaled(Rational(2)));

    LaurentPoly s2 = elementary_symmetric(vs, all, 2);
    LaurentPoly rs2 = sym_reduce(s2, all, {"S1", "S2", "S3"});
    CHECK(rs2 == LaurentPoly::variable(rs2.vars(), "S2"));

    CHECK_THROWS_WITH_AS(sym_reduce(var(vs, "U1"), all, {"S1", "S2", "S3"}),
                         doctest::Contains("not symmetric"), std::invalid_argument);
    CHECK_THROWS_AS(
        sym_reduce(var(vs, "U1", -1) + var(vs, "U2", -1) + var(vs, "U3", -1), all,
                   {"S1", "S2", "S3"}),
        std::invalid_argument);
}

TEST_CASE("sym_reduce of a coefficient family with two oracles") {
    // coefficients of prod_{i<j<=3} (X - U_i U_j), reduced to sigma symbols,
    // verified by re-substitution and by evaluation at random points
    VarSet base = VarSet::gl(3);
    VarSet work = base.adjoin("X");
    std::vector<int> ublock{0, 1, 2};
    LaurentPoly prod = LaurentPoly::constant(work, Rational(1));
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            Monomial m(work.size(), 0);
            m[i] = m[j] = 1;
            prod = prod * (var(work, "X") - LaurentPoly::monomial(work, m, Rational(1)));
        }

    LaurentPoly reduced = sym_reduce(prod, ublock, {"S1", "S2", "S3"});

    std::map<std::string, LaurentPoly> back;
    for (int i = 1; i <= 3; ++i)
        back.emplace("S" + std::to_string(i), elementary_symmetric(work, ublock, i));
    CHECK(reduced.substitute(back, work) == prod);

    std::mt19937_64 rng(7);
    for (int round = 0; round < 20; ++round) {
        auto draw = [&] { return Rational(static_cast<long>(rng() % 17) - 8,
                                          static_cast<long>(rng() % 7) + 1); };
        Rational u1 = draw(), u2 = draw(), u3 = draw(), x = draw();
        std::map<std::string, Rational> pt{{"U1", u1}, {"U2", u2}, {"U3", u3}, {"X", x}};
        std::vector<Rational> sig{Rational(1),
                                  u1 + u2 + u3,
                                  u1 * u2 + u1 * u3 + u2 * u3,
                                  u1 * u2 * u3};
        std::map<std::string, Rational> pt_sig{
            {"S1", sig[1]}, {"S2", sig[2]}, {"S3", sig[3]}, {"X", x}};
        CHECK(prod.evaluate(pt) == reduced.evaluate(pt_sig));
    }
}

TEST_CASE("invariance witnesses") {
    VarSet v4 = VarSet::gl(4);
    std::vector<int> all4{0, 1, 2, 3};
    CHECK(is_invariant(elementary_symmetric(v4, all4, 2), GroupAction::symmetric(all4))
              .invariant);

    VarSet v2 = VarSet::gl(2);
    auto res = is_invariant(LaurentPoly::variable(v2, "U1"), GroupAction::symmetric({0, 1}));
    CHECK_FALSE(res.invariant);
    CHECK(res.witness == "swap(0,1)");

    // applying the full Weyl group (all 8 elements for g=2): the total sum
    // T_p is fixed, a single Phi_i is moved by the sign flips
    SiegelContext ctx(2);
    CHECK(is_invariant(satake_Tp(ctx).image(), siegel_weyl_action(ctx)).invariant);
    CHECK(weyl_orbit(satake_Tp(ctx)).size() == 1);
    auto flipped = is_invariant(satake_phi(ctx, 1).image(), siegel_weyl_action(ctx));
    CHECK_FALSE(flipped.invariant);
    CHECK(flipped.witness == "flip(1)");
    CHECK(weyl_orbit(satake_phi(ctx, 1)).size() == 2);

    CHECK(is_invariant(LaurentPoly::zero(v2), GroupAction::symmetric({0, 1})).invariant);
}

TEST_CASE("canonical form and serialization") {
    VarSet vs = VarSet::gl(2);
    LaurentPoly p = var(vs, "U1", 2) * var(vs, "Q", -1) + var(vs, "U2").scaled(Rational(1, 3));
    CHECK(p + LaurentPoly::zero(vs) == p);
    for (const auto& [m, c] : p.terms()) CHECK_FALSE(c.is_zero());

    CHECK(p.str() == "U1^2*Q^-1 + 1/3*U2");
    LaurentPoly round = LaurentPoly::from_json(p.to_json());
    CHECK(round == p);

    CHECK(LaurentPoly::zero(vs).str() == "0");
    CHECK(LaurentPoly::constant(vs, Rational(-7, 2)).str() == "-7/2");
}
