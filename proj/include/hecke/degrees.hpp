#pragma once

#include <string>
#include <vector>

#include "hecke/finvec.hpp"
#include "hecke/poly.hpp"

namespace hecke {

// Bidegree of a correspondence split into separable and non-separable parts,
// kept symbolic in Q so the identities hold for every prime power.
struct BidegreeProfile {
    LaurentPoly d1s, d1ns, d2s, d2ns;  // over the Q-only variable set

    LaurentPoly d1() const { return d1s * d1ns; }
    LaurentPoly d2() const { return d2s * d2ns; }
    BidegreeProfile swapped() const { return {d2s, d2ns, d1s, d1ns}; }

    friend bool operator==(const BidegreeProfile& a, const BidegreeProfile& b) {
        return a.d1s == b.d1s && a.d1ns == b.d1ns && a.d2s == b.d2s && a.d2ns == b.d2ns;
    }
    std::string str() const;
    std::vector<Rational> at(const Rational& q) const;  // (d1s, d1ns, d2s, d2ns)
};

BidegreeProfile mul_profiles(const BidegreeProfile& a, const BidegreeProfile& b);
BidegreeProfile scale_ns(const BidegreeProfile& p, int q_exponent);  // q^e into both ns parts

// Closed forms for the named families. All indices validated.
BidegreeProfile profile_T(int j, int r);                 // fully separable, g(j,r) each side
BidegreeProfile profile_Phi(int i, int r, int n);
BidegreeProfile profile_Psi(int i, int r, int n);
// The correspondence Q^{-ij} Psi_i Phi_j.
BidegreeProfile profile_summand(int psi_i, int phi_j, int r, int n);
BidegreeProfile profile_siegel_phi(int i, int g);

struct ConsistencyReport {
    int r = 0, n = 0;
    bool ok = false;
    std::vector<std::string> lines;  // one deterministic line per check
    std::string str() const;
};

// Symbolic cross-checks: the scalar bookkeeping between reduced-correspondence
// and algebra-level ns-degrees, the q-Vandermonde partition of the expansion
// of T_j, duality swaps, and the n=1 specializations.
ConsistencyReport consistency_report(int r, int n);

}  // namespace hecke
