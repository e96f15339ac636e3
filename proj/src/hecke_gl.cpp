#include "hecke/hecke_gl.hpp"

#include <algorithm>
#include <numeric>

namespace hecke {

namespace {

LaurentPoly q_power(const VarSet& vs, int e) {
    Monomial m(vs.size(), 0);
    m[vs.q_index()] = e;
    return LaurentPoly::monomial(vs, m, Rational(1));
}

GroupAction level_action(const GLContext& ctx, Level level) {
    switch (level) {
        case Level::G:
            return GroupAction::symmetric(ctx.all_indices());
        case Level::M:
            return GroupAction::product_symmetric({ctx.first_block(), ctx.second_block()});
        case Level::T:
            return GroupAction::product_symmetric({});
    }
    throw std::logic_error("level_action: bad level");
}

}  // namespace

GLContext::GLContext(int r, int n, bool quotient) : r(r), n(n), quotient(quotient),
                                                    vars(VarSet::gl(std::max(r, 1))) {
    if (r < 1) throw std::invalid_argument("GLContext: r must be >= 1");
    if (n < 0 || n > r) throw std::invalid_argument("GLContext: need 0 <= n <= r");
}

std::vector<int> GLContext::all_indices() const {
    std::vector<int> idx(r);
    std::iota(idx.begin(), idx.end(), 0);
    return idx;
}

std::vector<int> GLContext::first_block() const {
    std::vector<int> idx(r - n);
    std::iota(idx.begin(), idx.end(), 0);
    return idx;
}

std::vector<int> GLContext::second_block() const {
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), r - n);
    return idx;
}

LaurentPoly central_normal_form(const LaurentPoly& image, int r) {
    const VarSet& vs = image.vars();
    LaurentPoly out(vs);
    for (const auto& [m, c] : image.terms()) {
        int t = m[0];
        for (int i = 1; i < r; ++i) t = std::min(t, m[i]);
        Monomial nm = m;
        for (int i = 0; i < r; ++i) nm[i] -= t;
        nm[vs.q_index()] += t * (r * (r - 1) / 2);
        out.add_term(nm, c);
    }
    return out;
}

HeckeElement::HeckeElement(GLContext ctx, Level level, LaurentPoly image)
    : ctx_(std::move(ctx)), level_(level), image_(std::move(image)) {
    if (image_.vars() != ctx_.vars)
        throw std::invalid_argument("HeckeElement: image not over the context torus");
    auto inv = is_invariant(image_, level_action(ctx_, level_));
    if (!inv.invariant)
        throw std::invalid_argument("HeckeElement: image not invariant at its level, generator " +
                                    inv.witness);
}

HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) {
    if (!(a.ctx_ == b.ctx_)) throw std::invalid_argument("HeckeElement: context mismatch");
    // products live at the deeper of the two levels
    Level level = (a.level_ == Level::T || b.level_ == Level::T) ? Level::T
                  : (a.level_ == Level::M || b.level_ == Level::M) ? Level::M
                                                                   : Level::G;
    return HeckeElement(a.ctx_, level, a.image_ * b.image_);
}

HeckeElement operator+(const HeckeElement& a, const HeckeElement& b) {
    if (!(a.ctx_ == b.ctx_)) throw std::invalid_argument("HeckeElement: context mismatch");
    Level level = (a.level_ == Level::T || b.level_ == Level::T) ? Level::T
                  : (a.level_ == Level::M || b.level_ == Level::M) ? Level::M
                                                                   : Level::G;
    return HeckeElement(a.ctx_, level, a.image_ + b.image_);
}

HeckeElement satake_T(const GLContext& ctx, int i) {
    if (i < 0 || i > ctx.r) throw std::invalid_argument("satake_T: index out of range");
    auto idx = ctx.all_indices();
    LaurentPoly sigma = elementary_symmetric(ctx.vars, idx, i);
    return HeckeElement(ctx, Level::G, q_power(ctx.vars, -i * (i - 1) / 2) * sigma);
}

HeckeElement satake_Phi(const GLContext& ctx, int i) {
    if (i < 0 || i > ctx.r - ctx.n) throw std::invalid_argument("satake_Phi: index out of range");
    auto idx = ctx.first_block();
    LaurentPoly sigma = elementary_symmetric(ctx.vars, idx, i);
    return HeckeElement(ctx, Level::M, q_power(ctx.vars, -i * (i - 1) / 2) * sigma);
}

HeckeElement satake_Psi(const GLContext& ctx, int i) {
    if (i < 0 || i > ctx.n) throw std::invalid_argument("satake_Psi: index out of range");
    auto idx = ctx.second_block();
    LaurentPoly sigma = elementary_symmetric(ctx.vars, idx, i);
    return HeckeElement(ctx, Level::M, q_power(ctx.vars, -i * (i - 1) / 2) * sigma);
}

std::vector<LeviTerm> levi_expand(const GLContext& ctx, int j) {
    if (j < 0 || j > ctx.r) throw std::invalid_argument("levi_expand: index out of range");
    std::vector<LeviTerm> terms;
    LaurentPoly sum(ctx.vars);
    for (int i = std::max(0, j - (ctx.r - ctx.n)); i <= std::min(ctx.n, j); ++i) {
        HeckeElement summand = satake_Psi(ctx, i) * satake_Phi(ctx, j - i);
        LaurentPoly scaled = q_power(ctx.vars, -i * (j - i)) * summand.image();
        sum += scaled;
        terms.push_back({-i * (j - i), i, j - i,
                         HeckeElement(ctx, Level::M, std::move(scaled))});
    }
    if (sum != satake_T(ctx, j).image())
        throw std::logic_error("levi_expand: summands do not reproduce the T image");
    return terms;
}

HeckeElement central_normal_form(const HeckeElement& e) {
    if (!e.context().quotient)
        throw std::invalid_argument("central_normal_form: non-quotient context");
    return HeckeElement(e.context(), e.level(), central_normal_form(e.image(), e.context().r));
}

HeckeElement dual(const HeckeElement& e) {
    const GLContext& ctx = e.context();
    if (!ctx.quotient) throw std::invalid_argument("dual: non-quotient context");
    std::map<std::string, LaurentPoly> repl;
    for (int i = 0; i < ctx.r; ++i) {
        Monomial m(ctx.vars.size(), 0);
        m[i] = -1;
        m[ctx.vars.q_index()] = ctx.r - 1;
        repl.emplace(ctx.vars.name(i), LaurentPoly::monomial(ctx.vars, m, Rational(1)));
    }
    LaurentPoly substituted = e.image().substitute(repl, ctx.vars);
    return HeckeElement(ctx, e.level(), central_normal_form(substituted, ctx.r));
}

namespace {

// Shared machinery for the two express operations: clear negative exponents
// on a variable block with powers of its top sigma, reduce, then shift that
// sigma's exponent back.
struct BlockReduction {
    std::vector<int> indices;
    std::vector<std::string> sigma_names;
    int clearing_power = 0;
};

int clearing_power(const LaurentPoly& p, const std::vector<int>& indices) {
    int worst = 0;
    for (const auto& [m, c] : p.terms()) {
        int mn = m[indices[0]];
        for (int idx : indices) mn = std::min(mn, m[idx]);
        worst = std::min(worst, mn);
    }
    return -worst;
}

}  // namespace

LaurentPoly express_in_T_generators(const HeckeElement& e) {
    const GLContext& ctx = e.context();
    if (e.level() != Level::G)
        throw std::invalid_argument("express_in_T_generators: level G required");
    const int r = ctx.r;
    auto idx = ctx.all_indices();

    LaurentPoly p = e.image();
    int k = clearing_power(p, idx);
    if (k > 0) {
        if (!ctx.quotient)
            throw std::invalid_argument(
                "express_in_T_generators: Laurent image requires the quotient relation");
        p = p * elementary_symmetric(ctx.vars, idx, r).pow(k);
    }

    std::vector<std::string> sig_names;
    for (int i = 1; i <= r; ++i) sig_names.push_back("#s" + std::to_string(i));
    LaurentPoly reduced = sym_reduce(p, idx, sig_names);

    // sigma_i -> Q^{i(i-1)/2} T_i; negative top powers resolve through
    // sigma_r = Q^{r(r-1)/2}
    std::vector<std::string> t_names;
    for (int i = 1; i <= r; ++i) t_names.push_back("T" + std::to_string(i));
    VarSet out_vs = VarSet::symbols(t_names);
    const VarSet& red_vs = reduced.vars();
    std::vector<int> sig_slot(r);
    for (int i = 0; i < r; ++i) sig_slot[i] = red_vs.index_of(sig_names[i]);

    LaurentPoly out(out_vs);
    for (const auto& [m, c] : reduced.terms()) {
        Monomial t(out_vs.size(), 0);
        long q_shift = 0;
        int top = m[sig_slot[r - 1]] - k;
        if (top < 0) {
            if (!ctx.quotient)
                throw std::logic_error("express_in_T_generators: negative top sigma power");
            q_shift += static_cast<long>(top) * (r * (r - 1) / 2);
            top = 0;
        }
        for (int i = 0; i < r; ++i) {
            int e_i = (i == r - 1) ? top : m[sig_slot[i]];
            t[i] = e_i;
            q_shift += static_cast<long>(e_i) * (i * (i + 1) / 2);  // i(i-1)/2 with i 1-based
        }
        t[out_vs.q_index()] = m[red_vs.q_index()] + static_cast<int>(q_shift);
        out.add_term(t, c);
    }
    return out;
}

LaurentPoly express_in_levi_generators(const HeckeElement& e) {
    const GLContext& ctx = e.context();
    if (e.level() != Level::M && e.level() != Level::G)
        throw std::invalid_argument("express_in_levi_generators: level M (or G) required");
    const int r = ctx.r, n = ctx.n;
    const int phi_top = r - n, psi_top = n;
    auto first = ctx.first_block();
    auto second = ctx.second_block();

    LaurentPoly p = e.image();
    int k1 = phi_top > 0 ? clearing_power(p, first) : 0;
    int k2 = psi_top > 0 ? clearing_power(p, second) : 0;
    if ((k1 > 0 || k2 > 0) && !ctx.quotient)
        throw std::invalid_argument(
            "express_in_levi_generators: Laurent image requires the quotient relation");
    if (k1 > 0) p = p * elementary_symmetric(ctx.vars, first, phi_top).pow(k1);
    if (k2 > 0) p = p * elementary_symmetric(ctx.vars, second, psi_top).pow(k2);

    std::vector<std::string> f_names, s_names;
    for (int i = 1; i <= phi_top; ++i) f_names.push_back("#f" + std::to_string(i));
    for (int i = 1; i <= psi_top; ++i) s_names.push_back("#p" + std::to_string(i));
    LaurentPoly reduced = p;
    if (phi_top > 0) reduced = sym_reduce(reduced, first, f_names);
    if (psi_top > 0) {
        const VarSet& vs1 = reduced.vars();
        std::vector<int> second_now;
        for (int idx : second) second_now.push_back(vs1.index_of(ctx.vars.name(idx)));
        reduced = sym_reduce(reduced, second_now, s_names);
    }

    std::vector<std::string> gen_names;
    for (int i = 1; i <= phi_top; ++i) gen_names.push_back("Phi" + std::to_string(i));
    for (int i = 1; i <= psi_top; ++i) gen_names.push_back("Psi" + std::to_string(i));
    VarSet out_vs = VarSet::symbols(gen_names);
    const VarSet& red_vs = reduced.vars();
    std::vector<int> f_slot(phi_top), s_slot(psi_top);
    for (int i = 0; i < phi_top; ++i) f_slot[i] = red_vs.index_of(f_names[i]);
    for (int i = 0; i < psi_top; ++i) s_slot[i] = red_vs.index_of(s_names[i]);

    const int central = r * (r - 1) / 2;
    LaurentPoly out(out_vs);
    for (const auto& [m, c] : reduced.terms()) {
        long q_shift = 0;
        int a = phi_top > 0 ? m[f_slot[phi_top - 1]] - k1 : 0;
        int b = psi_top > 0 ? m[s_slot[psi_top - 1]] - k2 : 0;
        if (a < 0 || b < 0) {
            if (!ctx.quotient)
                throw std::logic_error("express_in_levi_generators: negative top sigma power");
            if (phi_top > 0 && psi_top > 0) {
                // sigma-phi-top * sigma-psi-top = Q^{r(r-1)/2}
                int mn = std::min(a, b);
                q_shift += static_cast<long>(mn) * central;
                a -= mn;
                b -= mn;
            } else {
                // one empty block: the top sigma alone is the full product
                q_shift += static_cast<long>(std::min(a, 0) + std::min(b, 0)) * central;
                a = std::max(a, 0);
                b = std::max(b, 0);
            }
        }
        Monomial t(out_vs.size(), 0);
        for (int i = 0; i < phi_top; ++i) {
            int e_i = (i == phi_top - 1) ? a : m[f_slot[i]];
            t[i] = e_i;
            q_shift += static_cast<long>(e_i) * (i * (i + 1) / 2);
        }
        for (int i = 0; i < psi_top; ++i) {
            int e_i = (i == psi_top - 1) ? b : m[s_slot[i]];
            t[phi_top + i] = e_i;
            q_shift += static_cast<long>(e_i) * (i * (i + 1) / 2);
        }
        t[out_vs.q_index()] = m[red_vs.q_index()] + static_cast<int>(q_shift);
        out.add_term(t, c);
    }
    return out;
}

std::map<std::string, LaurentPoly> t_generator_images(const GLContext& ctx) {
    std::map<std::string, LaurentPoly> images;
    for (int i = 1; i <= ctx.r; ++i)
        images.emplace("T" + std::to_string(i), satake_T(ctx, i).image());
    return images;
}

std::map<std::string, LaurentPoly> levi_generator_images(const GLContext& ctx) {
    std::map<std::string, LaurentPoly> images;
    for (int i = 1; i <= ctx.r - ctx.n; ++i)
        images.emplace("Phi" + std::to_string(i), satake_Phi(ctx, i).image());
    for (int i = 1; i <= ctx.n; ++i)
        images.emplace("Psi" + std::to_string(i), satake_Psi(ctx, i).image());
    return images;
}

}  // namespace hecke
