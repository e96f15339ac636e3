#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hecke/hecke_gl.hpp"
#include "hecke/poly.hpp"

namespace hecke {

// Characteristic polynomial of the Frobenius element Psi_n over the image of
// the level-G algebra, with coefficients written in the generator symbols
// T1..Tr (Q-Laurent coefficients). Degree C(r,n), leading coefficient 1.
struct HeckePolynomial {
    int r = 0;
    int n = 0;
    VarSet gen_vars = VarSet::symbols({});
    std::vector<LaurentPoly> coeffs;  // constant term first

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    std::string str() const;  // e.g. X^2 - T1*X + Q*T2
    nlohmann::json to_json() const;
};

std::uint64_t binomial(int r, int n);

// Degree of the Hecke polynomial: the binomial coefficient C(r,n), checked
// against the computed polynomial.
std::uint64_t charpoly_degree(int r, int n);

// Expands the Weyl-orbit product over n-subsets I of {1..r} of
// (X - Q^{-n(n-1)/2} U_I), eliminates each X-coefficient into T-generators,
// and verifies the result by exact re-substitution.
HeckePolynomial hecke_charpoly(int r, int n);

// One random comparison of the symbolic Hecke polynomial against a direct
// numeric expansion of the skew-power eigenvalue product.
struct LanglandsTrial {
    std::vector<Rational> alphas;
    Rational q;
    bool equal = false;
};

struct LanglandsReport {
    int r = 0, n = 0;
    std::uint64_t seed = 0;
    std::vector<LanglandsTrial> trials;
    bool all_equal = false;
    int passed = 0;

    std::string str() const;
    nlohmann::json to_json() const;
};

// Draws distinct nonzero rationals a_1..a_r and q != 0, evaluates the
// charpoly coefficients at T_i = Q^{-i(i-1)/2} sigma_i(a), Q = q, and checks
// exact equality against the numerically expanded product of
// (X - q^{-n(n-1)/2} prod_{i in I} a_i) over all n-subsets I.
LanglandsReport langlands_oracle_check(int r, int n, int trials, std::uint64_t seed);

}  // namespace hecke
