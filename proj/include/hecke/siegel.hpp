#pragma once

#include <string>
#include <vector>

#include "hecke/poly.hpp"

namespace hecke {

// GSp_2g reference side. The central relation (prod U_i V_i = Q^s) is off by
// default; its Satake-side constant is configurable because it is not pinned
// down by the generator formulas alone.
struct SiegelContext {
    explicit SiegelContext(int g, bool quotient = false, int central_exponent = 0);

    int g;
    bool quotient;
    int central_exponent;  // s in prod U_i V_i = Q^s
    VarSet vars;           // U1..Ug, V1..Vg, Q

    friend bool operator==(const SiegelContext& a, const SiegelContext& b) {
        return a.g == b.g && a.quotient == b.quotient &&
               a.central_exponent == b.central_exponent;
    }
};

enum class SiegelLevel { G, M, T };

// Weyl group of GSp_2g acting on the torus variables: S_g permutes the
// (U_i, V_i) pairs, the sign flips swap U_i with V_i.
GroupAction siegel_weyl_action(const SiegelContext& ctx);

// Monomial membership in the similitude subalgebra: a_i + b_i constant.
bool satisfies_similitude(const LaurentPoly& image, int g);

LaurentPoly siegel_normal_form(const LaurentPoly& image, const SiegelContext& ctx);

class SiegelHeckeElement {
public:
    SiegelHeckeElement(SiegelContext ctx, SiegelLevel level, LaurentPoly image);

    const SiegelContext& context() const { return ctx_; }
    SiegelLevel level() const { return level_; }
    const LaurentPoly& image() const { return image_; }

    friend SiegelHeckeElement operator*(const SiegelHeckeElement& a,
                                        const SiegelHeckeElement& b);
    friend bool operator==(const SiegelHeckeElement& a, const SiegelHeckeElement& b) {
        return a.ctx_ == b.ctx_ && a.level_ == b.level_ && a.image_ == b.image_;
    }

private:
    SiegelContext ctx_;
    SiegelLevel level_;
    LaurentPoly image_;
};

// U_I = prod_{i in I} U_i * prod_{i not in I} V_i summed over i-subsets;
// Phi_g is the Frobenius element.
SiegelHeckeElement satake_phi(const SiegelContext& ctx, int i);

// Image of T_p: the sum of all Phi_i.
SiegelHeckeElement satake_Tp(const SiegelContext& ctx);

// Full orbit of the image under the Weyl group, duplicates removed, in
// deterministic order.
std::vector<LaurentPoly> weyl_orbit(const SiegelHeckeElement& e);

// prod over all subsets I of (X - U_I): degree 2^g, coefficients checked
// Weyl-invariant.
struct SiegelCharpoly {
    int g = 0;
    VarSet vars = VarSet::symbols({});  // U*, V*, Q (coefficient variables)
    std::vector<LaurentPoly> coeffs;    // constant first, length 2^g + 1

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    std::string str() const;
    nlohmann::json to_json() const;
};
SiegelCharpoly siegel_frob_charpoly(int g);

// The involution: swaps U_i with V_i on images; hat(Phi_i) = Phi_{g-i},
// hat(T_p) = T_p.
SiegelHeckeElement hat_siegel(const SiegelHeckeElement& e);

}  // namespace hecke
