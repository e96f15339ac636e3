#include "hecke/siegel.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hecke {

namespace {

std::vector<int> u_slots(int g) {
    std::vector<int> idx(g);
    for (int i = 0; i < g; ++i) idx[i] = i;
    return idx;
}

std::vector<int> v_slots(int g) {
    std::vector<int> idx(g);
    for (int i = 0; i < g; ++i) idx[i] = g + i;
    return idx;
}

}  // namespace

SiegelContext::SiegelContext(int g, bool quotient, int central_exponent)
    : g(g), quotient(quotient), central_exponent(central_exponent),
      vars(VarSet::siegel(std::max(g, 1))) {
    if (g < 1) throw std::invalid_argument("SiegelContext: g must be >= 1");
}

GroupAction siegel_weyl_action(const SiegelContext& ctx) {
    return GroupAction::siegel_weyl(u_slots(ctx.g), v_slots(ctx.g));
}

bool satisfies_similitude(const LaurentPoly& image, int g) {
    for (const auto& [m, c] : image.terms()) {
        int level = m[0] + m[g];
        for (int i = 1; i < g; ++i)
            if (m[i] + m[g + i] != level) return false;
    }
    return true;
}

LaurentPoly siegel_normal_form(const LaurentPoly& image, const SiegelContext& ctx) {
    if (!ctx.quotient) return image;
    const int g = ctx.g;
    const int qi = image.vars().q_index();
    LaurentPoly out(image.vars());
    for (const auto& [m, c] : image.terms()) {
        int t = m[0];
        for (int i = 0; i < 2 * g; ++i) t = std::min(t, m[i]);
        Monomial nm = m;
        for (int i = 0; i < 2 * g; ++i) nm[i] -= t;
        nm[qi] += t * ctx.central_exponent;
        out.add_term(nm, c);
    }
    return out;
}

SiegelHeckeElement::SiegelHeckeElement(SiegelContext ctx, SiegelLevel level, LaurentPoly image)
    : ctx_(std::move(ctx)), level_(level), image_(std::move(image)) {
    if (image_.vars() != ctx_.vars)
        throw std::invalid_argument("SiegelHeckeElement: image not over the context torus");
    image_ = siegel_normal_form(image_, ctx_);
    if (!satisfies_similitude(image_, ctx_.g))
        throw std::invalid_argument("SiegelHeckeElement: image violates the similitude condition");
    if (level_ == SiegelLevel::G) {
        auto inv = is_invariant(image_, siegel_weyl_action(ctx_));
        if (!inv.invariant)
            throw std::invalid_argument("SiegelHeckeElement: level-G image not Weyl invariant, "
                                        "generator " + inv.witness);
    } else if (level_ == SiegelLevel::M) {
        // invariance under the diagonal S_g only
        GroupAction weyl = siegel_weyl_action(ctx_);
        for (const auto& [name, perm] : weyl.generators(ctx_.vars.size())) {
            if (name.rfind("perm", 0) != 0) continue;
            if (image_.apply_permutation(perm) != image_)
                throw std::invalid_argument(
                    "SiegelHeckeElement: level-M image not S_g invariant, generator " + name);
        }
    }
}

SiegelHeckeElement operator*(const SiegelHeckeElement& a, const SiegelHeckeElement& b) {
    if (!(a.ctx_ == b.ctx_)) throw std::invalid_argument("SiegelHeckeElement: context mismatch");
    SiegelLevel level = (a.level_ == SiegelLevel::T || b.level_ == SiegelLevel::T)
                            ? SiegelLevel::T
                        : (a.level_ == SiegelLevel::M || b.level_ == SiegelLevel::M)
                            ? SiegelLevel::M
                            : SiegelLevel::G;
    return SiegelHeckeElement(a.ctx_, level, a.image_ * b.image_);
}

SiegelHeckeElement satake_phi(const SiegelContext& ctx, int i) {
    if (i < 0 || i > ctx.g) throw std::invalid_argument("satake_phi: index out of range");
    const int g = ctx.g;
    LaurentPoly sum(ctx.vars);
    // iterate over i-subsets by bitmask; g stays desk-scale
    for (unsigned mask = 0; mask < (1u << g); ++mask) {
        if (__builtin_popcount(mask) != i) continue;
        Monomial m(ctx.vars.size(), 0);
        for (int b = 0; b < g; ++b) {
            if (mask & (1u << b))
                m[b] = 1;
            else
                m[g + b] = 1;
        }
        sum.add_term(m, Rational(1));
    }
    return SiegelHeckeElement(ctx, SiegelLevel::M, sum);
}

SiegelHeckeElement satake_Tp(const SiegelContext& ctx) {
    LaurentPoly sum(ctx.vars);
    for (int i = 0; i <= ctx.g; ++i) sum += satake_phi(ctx, i).image();
    return SiegelHeckeElement(ctx, SiegelLevel::G, sum);
}

std::vector<LaurentPoly> weyl_orbit(const SiegelHeckeElement& e) {
    auto gens = siegel_weyl_action(e.context()).generators(e.context().vars.size());
    std::set<LaurentPoly> seen{e.image()};
    std::vector<LaurentPoly> frontier{e.image()};
    while (!frontier.empty()) {
        std::vector<LaurentPoly> next;
        for (const auto& p : frontier) {
            for (const auto& [name, perm] : gens) {
                LaurentPoly q = p.apply_permutation(perm);
                if (seen.insert(q).second) next.push_back(std::move(q));
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

SiegelCharpoly siegel_frob_charpoly(int g) {
    SiegelContext ctx(g);
    VarSet work = ctx.vars.adjoin("X");
    const int xi = work.index_of("X");

    LaurentPoly prod = LaurentPoly::constant(work, Rational(1));
    for (unsigned mask = 0; mask < (1u << g); ++mask) {
        Monomial root(work.size(), 0);
        for (int b = 0; b < g; ++b) {
            if (mask & (1u << b))
                root[b] = 1;
            else
                root[g + b] = 1;
        }
        prod = prod * (LaurentPoly::variable(work, "X") -
                       LaurentPoly::monomial(work, root, Rational(1)));
    }

    SiegelCharpoly P;
    P.g = g;
    P.vars = ctx.vars;
    P.coeffs.assign((1u << g) + 1, LaurentPoly::zero(ctx.vars));
    for (const auto& [m, c] : prod.terms()) {
        Monomial t(ctx.vars.size(), 0);
        for (int i = 0; i < 2 * g; ++i) t[i] = m[i];
        t[ctx.vars.q_index()] = m[work.q_index()];
        P.coeffs[m[xi]].add_term(t, c);
    }
    for (const auto& c : P.coeffs) {
        auto inv = is_invariant(c, siegel_weyl_action(ctx));
        if (!inv.invariant)
            throw std::logic_error("siegel_frob_charpoly: coefficient not Weyl invariant");
    }
    return P;
}

SiegelHeckeElement hat_siegel(const SiegelHeckeElement& e) {
    const int g = e.context().g;
    std::vector<int> perm(e.context().vars.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    for (int i = 0; i < g; ++i) std::swap(perm[i], perm[g + i]);
    return SiegelHeckeElement(e.context(), e.level(), e.image().apply_permutation(perm));
}

std::string SiegelCharpoly::str() const { return poly_in_x_string(coeffs, "X"); }

nlohmann::json SiegelCharpoly::to_json() const {
    nlohmann::json j;
    j["g"] = g;
    j["degree"] = degree();
    auto& cs = j["coeffs"] = nlohmann::json::array();
    for (const auto& c : coeffs) cs.push_back(c.to_json());
    return j;
}

}  // namespace hecke
