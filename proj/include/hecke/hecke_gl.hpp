#pragma once

#include <string>
#include <vector>

#include "hecke/poly.hpp"

namespace hecke {

// GL_r with Levi blocks (r-n, n); `quotient` imposes the central relation
// U_1...U_r = Q^{r(r-1)/2} (the scalar double coset acting trivially).
struct GLContext {
    GLContext(int r, int n, bool quotient = false);

    int r;
    int n;
    bool quotient;
    VarSet vars;  // U1..Ur, Q

    std::vector<int> all_indices() const;    // 0..r-1
    std::vector<int> first_block() const;    // 0..r-n-1
    std::vector<int> second_block() const;   // r-n..r-1

    friend bool operator==(const GLContext& a, const GLContext& b) {
        return a.r == b.r && a.n == b.n && a.quotient == b.quotient;
    }
};

enum class Level { G, M, T };

// Rewrites each monomial U^a Q^b with t = min_i a_i to
// Q^{b + t r(r-1)/2} U^{a - t(1,..,1)}; idempotent.
LaurentPoly central_normal_form(const LaurentPoly& image, int r);

// Hecke-algebra element represented by its Satake image. Level G images must
// be S_r-invariant, level M images invariant under the block subgroup
// S_{r-n} x S_n. Images are stored as constructed; in a quotient context,
// equality is equality of central normal forms.
class HeckeElement {
public:
    HeckeElement(GLContext ctx, Level level, LaurentPoly image);

    const GLContext& context() const { return ctx_; }
    Level level() const { return level_; }
    const LaurentPoly& image() const { return image_; }
    LaurentPoly normal_image() const {
        return ctx_.quotient ? central_normal_form(image_, ctx_.r) : image_;
    }

    friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b);
    friend HeckeElement operator+(const HeckeElement& a, const HeckeElement& b);
    friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
        if (!(a.ctx_ == b.ctx_) || a.level_ != b.level_) return false;
        return a.normal_image() == b.normal_image();
    }

private:
    GLContext ctx_;
    Level level_;
    LaurentPoly image_;
};

// Satake images of the standard generators.
HeckeElement satake_T(const GLContext& ctx, int i);     // level G, 0 <= i <= r
HeckeElement satake_Phi(const GLContext& ctx, int i);   // level M, 0 <= i <= r-n
HeckeElement satake_Psi(const GLContext& ctx, int i);   // level M, 0 <= i <= n

// One summand Q^{-i(j-i)} Psi_i Phi_{j-i} of the Levi expansion of T_j.
struct LeviTerm {
    int q_exponent;   // -i(j-i)
    int psi_index;    // i
    int phi_index;    // j-i
    HeckeElement value;  // the summand as a level-M element
};

// Terms of the image of T_j in the Levi algebra, restricted to index pairs in
// range; their sum is checked against satake_T(j) on every call.
std::vector<LeviTerm> levi_expand(const GLContext& ctx, int j);

HeckeElement central_normal_form(const HeckeElement& e);

// The duality involution, realized on images as U_j -> Q^{r-1} U_j^{-1}
// followed by central normal form. Quotient contexts only.
HeckeElement dual(const HeckeElement& e);

// Level-G elements as polynomials in the generator symbols T1..Tr with
// Q-Laurent coefficients (sigma_i -> Q^{i(i-1)/2} T_i after elimination).
// Genuinely Laurent images are cleared through the central relation and
// therefore require a quotient context.
LaurentPoly express_in_T_generators(const HeckeElement& e);

// Level-M analog over Phi1.., Psi1.., Q; the top generators Phi_{r-n}, Psi_n
// absorb negative powers through Psi_n Phi_{r-n} = Q^{n(r-n)}.
LaurentPoly express_in_levi_generators(const HeckeElement& e);

// Images of the generator symbols, for round-trip substitution.
std::map<std::string, LaurentPoly> t_generator_images(const GLContext& ctx);
std::map<std::string, LaurentPoly> levi_generator_images(const GLContext& ctx);

}  // namespace hecke
