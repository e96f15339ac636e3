#include "hecke/degrees.hpp"

#include <sstream>

namespace hecke {

namespace {

VarSet q_only() { return VarSet::symbols({}); }

LaurentPoly qpow(int e) {
    VarSet vs = q_only();
    Monomial m(vs.size(), 0);
    m[vs.q_index()] = e;
    return LaurentPoly::monomial(vs, m, Rational(1));
}

LaurentPoly one() { return qpow(0); }

}  // namespace

std::string BidegreeProfile::str() const {
    return "(" + d1s.str() + ", " + d1ns.str() + ", " + d2s.str() + ", " + d2ns.str() + ")";
}

std::vector<Rational> BidegreeProfile::at(const Rational& q) const {
    std::map<std::string, Rational> a{{"Q", q}};
    return {d1s.evaluate(a), d1ns.evaluate(a), d2s.evaluate(a), d2ns.evaluate(a)};
}

BidegreeProfile mul_profiles(const BidegreeProfile& a, const BidegreeProfile& b) {
    return {a.d1s * b.d1s, a.d1ns * b.d1ns, a.d2s * b.d2s, a.d2ns * b.d2ns};
}

BidegreeProfile scale_ns(const BidegreeProfile& p, int q_exponent) {
    LaurentPoly s = qpow(q_exponent);
    return {p.d1s, p.d1ns * s, p.d2s, p.d2ns * s};
}

BidegreeProfile profile_T(int j, int r) {
    if (j < 0 || j > r) throw std::invalid_argument("profile_T: index out of range");
    LaurentPoly g = gaussian_binomial(j, r);
    return {g, one(), g, one()};
}

BidegreeProfile profile_Phi(int i, int r, int n) {
    if (i < 0 || i > r - n) throw std::invalid_argument("profile_Phi: index out of range");
    LaurentPoly g = gaussian_binomial(i, r - n);
    return {g, qpow(i * n), g, one()};
}

BidegreeProfile profile_Psi(int i, int r, int n) {
    if (i < 0 || i > n) throw std::invalid_argument("profile_Psi: index out of range");
    LaurentPoly g = gaussian_binomial(i, n);
    return {g, one(), g, qpow(i * (r - n))};
}

BidegreeProfile profile_summand(int psi_i, int phi_j, int r, int n) {
    if (psi_i < 0 || psi_i > n || phi_j < 0 || phi_j > r - n)
        throw std::invalid_argument("profile_summand: index out of range");
    return scale_ns(mul_profiles(profile_Psi(psi_i, r, n), profile_Phi(phi_j, r, n)),
                    -psi_i * phi_j);
}

BidegreeProfile profile_siegel_phi(int i, int g) {
    if (i < 0 || i > g) throw std::invalid_argument("profile_siegel_phi: index out of range");
    LaurentPoly gb = gaussian_binomial(i, g);
    return {gb, qpow((g + 1 - i) * (g - i) / 2), gb, qpow((i + 1) * i / 2)};
}

ConsistencyReport consistency_report(int r, int n) {
    if (n < 0 || n > r) throw std::invalid_argument("consistency_report: need 0 <= n <= r");
    ConsistencyReport rep;
    rep.r = r;
    rep.n = n;
    rep.ok = true;
    auto check = [&rep](const std::string& label, bool cond) {
        rep.lines.push_back(std::string(cond ? "ok   " : "FAIL ") + label);
        rep.ok = rep.ok && cond;
    };

    // ns-degree bookkeeping: q^{ij} times the reduced-correspondence value
    // q^{(n-i)j} must give the algebra-level q^{nj}
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= r - n; ++j)
            check("scalar split i=" + std::to_string(i) + " j=" + std::to_string(j),
                  qpow(i * j) * qpow((n - i) * j) == qpow(n * j));

    // partition of the T_j expansion: sum of summand d1 equals g(j,r)
    for (int j = 0; j <= r; ++j) {
        LaurentPoly sum = LaurentPoly::zero(q_only());
        for (int i = std::max(0, j - (r - n)); i <= std::min(n, j); ++i) {
            BidegreeProfile p = profile_summand(i, j - i, r, n);
            sum += p.d1();
        }
        check("q-Vandermonde j=" + std::to_string(j), sum == profile_T(j, r).d1s);
    }

    // duality swaps: hat profiles computed through the generator relations
    // must be the swapped closed forms
    for (int i = 0; i <= r - n; ++i) {
        BidegreeProfile via_hat = scale_ns(
            mul_profiles(profile_Psi(n, r, n), profile_Phi(r - n - i, r, n)), -n * (r - n - i));
        check("dual swap Phi" + std::to_string(i), via_hat == profile_Phi(i, r, n).swapped());
    }
    for (int i = 0; i <= n; ++i) {
        BidegreeProfile via_hat = scale_ns(
            mul_profiles(profile_Psi(n - i, r, n), profile_Phi(r - n, r, n)), -(n - i) * (r - n));
        check("dual swap Psi" + std::to_string(i), via_hat == profile_Psi(i, r, n).swapped());
    }
    check("top duality Phi(r-n) <-> Psi(n)",
          profile_Phi(r - n, r, n).swapped() == profile_Psi(n, r, n));

    // n=1 closed forms agree with the general ones
    if (n == 1) {
        BidegreeProfile psi1 = profile_Psi(1, r, 1);
        check("n=1 Psi1", psi1.d1s == one() && psi1.d1ns == one() && psi1.d2s == one() &&
                              psi1.d2ns == qpow(r - 1));
        for (int i = 0; i <= r - 1; ++i) {
            BidegreeProfile phi = profile_Phi(i, r, 1);
            check("n=1 Phi" + std::to_string(i),
                  phi.d1s == gaussian_binomial(i, r - 1) && phi.d1ns == qpow(i) &&
                      phi.d2s == gaussian_binomial(i, r - 1) && phi.d2ns == one());
            // the n=1 expansion summand (1/q^i) fr Phi_i
            BidegreeProfile s = profile_summand(1, i, r, 1);
            check("n=1 summand fr*Phi" + std::to_string(i),
                  s.d1s == gaussian_binomial(i, r - 1) && s.d1ns == one() &&
                      s.d2s == gaussian_binomial(i, r - 1) && s.d2ns == qpow(r - 1 - i));
        }
    }
    return rep;
}

std::string ConsistencyReport::str() const {
    std::ostringstream os;
    os << "degrees consistency r=" << r << " n=" << n << (ok ? " [ok]" : " [FAIL]") << "\n";
    for (const auto& line : lines) os << "  " << line << "\n";
    return os.str();
}

}  // namespace hecke
