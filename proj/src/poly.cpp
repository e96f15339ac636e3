#include "hecke/poly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace hecke {

namespace {

std::vector<std::string> numbered(const std::string& stem, int count, int first = 1) {
    std::vector<std::string> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) out.push_back(stem + std::to_string(first + i));
    return out;
}

void check_distinct(const std::vector<std::string>& names) {
    std::vector<std::string> sorted = names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("VarSet: duplicate variable name");
}

}  // namespace

VarSet VarSet::gl(int r) {
    if (r < 1) throw std::invalid_argument("VarSet::gl: r must be >= 1");
    auto names = numbered("U", r);
    names.push_back("Q");
    return VarSet(Kind::GL, r, std::move(names));
}

VarSet VarSet::siegel(int g) {
    if (g < 1) throw std::invalid_argument("VarSet::siegel: g must be >= 1");
    auto names = numbered("U", g);
    auto vs = numbered("V", g);
    names.insert(names.end(), vs.begin(), vs.end());
    names.push_back("Q");
    return VarSet(Kind::Siegel, g, std::move(names));
}

VarSet VarSet::symbols(std::vector<std::string> names) {
    for (const auto& n : names)
        if (n == "Q") throw std::invalid_argument("VarSet::symbols: Q is reserved");
    names.push_back("Q");
    check_distinct(names);
    return VarSet(Kind::Custom, 0, std::move(names));
}

VarSet VarSet::adjoin(const std::string& name) const {
    auto names = names_;
    names.insert(names.end() - 1, name);
    check_distinct(names);
    return VarSet(kind_, rank_, std::move(names));
}

int VarSet::index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (names_[i] == name) return i;
    return -1;
}

GroupAction GroupAction::symmetric(std::vector<int> block) {
    return GroupAction{Kind::Symmetric, {std::move(block)}};
}

GroupAction GroupAction::product_symmetric(std::vector<std::vector<int>> blocks) {
    return GroupAction{Kind::ProductSymmetric, std::move(blocks)};
}

GroupAction GroupAction::siegel_weyl(std::vector<int> u_slots, std::vector<int> v_slots) {
    if (u_slots.size() != v_slots.size())
        throw std::invalid_argument("siegel_weyl: U/V blocks must pair up");
    return GroupAction{Kind::SiegelWeyl, {std::move(u_slots), std::move(v_slots)}};
}

std::vector<std::pair<std::string, std::vector<int>>> GroupAction::generators(int nvars) const {
    std::vector<std::pair<std::string, std::vector<int>>> gens;
    auto identity = [nvars] {
        std::vector<int> id(nvars);
        for (int i = 0; i < nvars; ++i) id[i] = i;
        return id;
    };
    auto add_transpositions = [&](const std::vector<int>& block) {
        for (size_t k = 0; k + 1 < block.size(); ++k) {
            auto perm = identity();
            std::swap(perm[block[k]], perm[block[k + 1]]);
            gens.push_back({"swap(" + std::to_string(block[k]) + "," +
                                std::to_string(block[k + 1]) + ")",
                            perm});
        }
    };
    switch (kind) {
        case Kind::Symmetric:
            add_transpositions(blocks[0]);
            break;
        case Kind::ProductSymmetric:
            for (const auto& b : blocks) add_transpositions(b);
            break;
        case Kind::SiegelWeyl: {
            const auto& us = blocks[0];
            const auto& vs = blocks[1];
            // index permutations move the (U_k, V_k) pair together
            for (size_t k = 0; k + 1 < us.size(); ++k) {
                auto perm = identity();
                std::swap(perm[us[k]], perm[us[k + 1]]);
                std::swap(perm[vs[k]], perm[vs[k + 1]]);
                gens.push_back({"perm(" + std::to_string(k + 1) + "," +
                                    std::to_string(k + 2) + ")",
                                perm});
            }
            for (size_t k = 0; k < us.size(); ++k) {
                auto perm = identity();
                std::swap(perm[us[k]], perm[vs[k]]);
                gens.push_back({"flip(" + std::to_string(k + 1) + ")", perm});
            }
            break;
        }
    }
    return gens;
}

LaurentPoly LaurentPoly::constant(const VarSet& vs, Rational c) {
    LaurentPoly p(vs);
    p.add_term(Monomial(vs.size(), 0), c);
    return p;
}

LaurentPoly LaurentPoly::variable(const VarSet& vs, const std::string& name, int exp) {
    int idx = vs.index_of(name);
    if (idx < 0) throw std::invalid_argument("LaurentPoly::variable: unknown variable " + name);
    Monomial m(vs.size(), 0);
    m[idx] = exp;
    return monomial(vs, std::move(m), Rational(1));
}

LaurentPoly LaurentPoly::monomial(const VarSet& vs, Monomial m, Rational c) {
    if (static_cast<int>(m.size()) != vs.size())
        throw std::invalid_argument("LaurentPoly::monomial: exponent length mismatch");
    LaurentPoly p(vs);
    p.add_term(m, c);
    return p;
}

void LaurentPoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (vars_ != o.vars_) throw std::invalid_argument("LaurentPoly: variable set mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (vars_ != o.vars_) throw std::invalid_argument("LaurentPoly: variable set mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.vars_ != b.vars_) throw std::invalid_argument("LaurentPoly: variable set mismatch");
    LaurentPoly out(a.vars_);
    const int n = a.vars_.size();
    Monomial m(n);
    // iterate over the smaller factor outside for fewer map rebuilds
    const LaurentPoly& small = a.term_count() <= b.term_count() ? a : b;
    const LaurentPoly& big = a.term_count() <= b.term_count() ? b : a;
    for (const auto& [ma, ca] : small.terms_) {
        for (const auto& [mb, cb] : big.terms_) {
            for (int i = 0; i < n; ++i) m[i] = ma[i] + mb[i];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(vars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    LaurentPoly out(vars_);
    if (c.is_zero()) return out;
    for (const auto& [m, coef] : terms_) out.terms_.emplace(m, coef * c);
    return out;
}

LaurentPoly LaurentPoly::pow(int e) const {
    if (e == 0) return constant(vars_, Rational(1));
    if (e < 0) {
        if (term_count() != 1)
            throw std::domain_error("LaurentPoly::pow: negative power of a non-monomial");
        const auto& [m, c] = *terms_.begin();
        Monomial inv(m.size());
        for (size_t i = 0; i < m.size(); ++i) inv[i] = -m[i];
        return monomial(vars_, inv, Rational(1) / c).pow(-e);
    }
    LaurentPoly acc = constant(vars_, Rational(1));
    LaurentPoly sq = *this;
    int k = e;
    while (k) {
        if (k & 1) acc = acc * sq;
        if (k >>= 1) sq = sq * sq;
    }
    return acc;
}

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.vars_.names() != b.vars_.names()) return a.vars_.names() < b.vars_.names();
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == a.terms_.end() && ib != b.terms_.end();
}

Rational LaurentPoly::evaluate(const std::map<std::string, Rational>& assignment) const {
    std::vector<std::optional<Rational>> values(vars_.size());
    for (const auto& [name, val] : assignment) {
        int idx = vars_.index_of(name);
        if (idx >= 0) values[idx] = val;
    }
    Rational sum(0);
    for (const auto& [m, c] : terms_) {
        Rational prod = c;
        for (int i = 0; i < vars_.size(); ++i) {
            if (m[i] == 0) continue;
            if (!values[i])
                throw std::invalid_argument("evaluate: missing assignment for " + vars_.name(i));
            if (m[i] < 0 && values[i]->is_zero())
                throw std::domain_error("evaluate: zero raised to negative power (" +
                                        vars_.name(i) + ")");
            prod *= values[i]->pow(m[i]);
        }
        sum += prod;
    }
    return sum;
}

LaurentPoly LaurentPoly::substitute(const std::map<std::string, LaurentPoly>& repl,
                                    const VarSet& target) const {
    // precompute replacement polys (or identity images) per slot
    std::vector<const LaurentPoly*> map(vars_.size(), nullptr);
    std::vector<LaurentPoly> owned;
    owned.reserve(vars_.size());
    for (int i = 0; i < vars_.size(); ++i) {
        auto it = repl.find(vars_.name(i));
        if (it != repl.end()) {
            if (it->second.vars() != target)
                throw std::invalid_argument("substitute: replacement for " + vars_.name(i) +
                                            " not over target variables");
            owned.push_back(it->second);
        } else {
            int idx = target.index_of(vars_.name(i));
            if (idx < 0)
                throw std::invalid_argument("substitute: variable " + vars_.name(i) +
                                            " missing from target");
            owned.push_back(variable(target, vars_.name(i)));
        }
    }
    for (int i = 0; i < vars_.size(); ++i) map[i] = &owned[i];

    LaurentPoly out(target);
    std::map<std::pair<int, int>, LaurentPoly> power_cache;
    auto power = [&](int slot, int e) -> const LaurentPoly& {
        auto key = std::make_pair(slot, e);
        auto it = power_cache.find(key);
        if (it == power_cache.end())
            it = power_cache.emplace(key, map[slot]->pow(e)).first;
        return it->second;
    };
    for (const auto& [m, c] : terms_) {
        LaurentPoly prod = constant(target, c);
        for (int i = 0; i < vars_.size(); ++i)
            if (m[i] != 0) prod = prod * power(i, m[i]);
        out += prod;
    }
    return out;
}

LaurentPoly LaurentPoly::reorder(const VarSet& target) const {
    std::vector<int> where(vars_.size());
    for (int i = 0; i < vars_.size(); ++i) {
        where[i] = target.index_of(vars_.name(i));
        if (where[i] < 0)
            throw std::invalid_argument("reorder: variable " + vars_.name(i) +
                                        " missing from target");
    }
    LaurentPoly out(target);
    Monomial t(target.size());
    for (const auto& [m, c] : terms_) {
        std::fill(t.begin(), t.end(), 0);
        for (int i = 0; i < vars_.size(); ++i) t[where[i]] = m[i];
        out.add_term(t, c);
    }
    return out;
}

LaurentPoly LaurentPoly::apply_permutation(const std::vector<int>& perm) const {
    LaurentPoly out(vars_);
    Monomial t(vars_.size());
    for (const auto& [m, c] : terms_) {
        for (int i = 0; i < vars_.size(); ++i) t[perm[i]] = m[i];
        out.terms_[t] = c;  // permutation is a bijection on monomials
    }
    return out;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print in descending lex order so U1 leads
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        std::string varpart;
        for (int i = 0; i < vars_.size(); ++i) {
            if (m[i] == 0) continue;
            if (!varpart.empty()) varpart += "*";
            varpart += vars_.name(i);
            if (m[i] != 1) varpart += "^" + std::to_string(m[i]);
        }
        if (varpart.empty()) {
            os << a.str();
        } else if (a.is_one()) {
            os << varpart;
        } else {
            os << a.str() << "*" << varpart;
        }
    }
    return os.str();
}

nlohmann::json LaurentPoly::to_json() const {
    nlohmann::json j;
    j["vars"] = vars_.names();
    auto& terms = j["terms"] = nlohmann::json::array();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        nlohmann::json t;
        t["coeff"] = {{"num", it->second.num_string()}, {"den", it->second.den_string()}};
        nlohmann::json exps = nlohmann::json::object();
        for (int i = 0; i < vars_.size(); ++i)
            if (it->first[i] != 0) exps[vars_.name(i)] = it->first[i];
        t["exps"] = exps;
        terms.push_back(t);
    }
    return j;
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
    std::vector<std::string> names = j.at("vars").get<std::vector<std::string>>();
    if (names.empty() || names.back() != "Q")
        throw std::invalid_argument("from_json: expected Q-terminated variable list");
    names.pop_back();
    VarSet vs = VarSet::symbols(names);
    LaurentPoly p(vs);
    for (const auto& t : j.at("terms")) {
        Rational c = Rational::from_strings(t.at("coeff").at("num").get<std::string>(),
                                            t.at("coeff").at("den").get<std::string>());
        Monomial m(vs.size(), 0);
        for (const auto& [name, e] : t.at("exps").items()) {
            int idx = vs.index_of(name);
            if (idx < 0) throw std::invalid_argument("from_json: unknown variable " + name);
            m[idx] = e.get<int>();
        }
        p.add_term(m, c);
    }
    return p;
}

std::string poly_in_x_string(const std::vector<LaurentPoly>& coeffs, const std::string& xname) {
    std::ostringstream os;
    bool first = true;
    for (int d = static_cast<int>(coeffs.size()) - 1; d >= 0; --d) {
        const LaurentPoly& c = coeffs[d];
        if (c.is_zero()) continue;
        std::string xs = d == 0 ? "" : (d == 1 ? xname : xname + "^" + std::to_string(d));

        std::string body;
        bool negative = false;
        if (c.term_count() == 1) {
            const auto& [m, coef] = *c.terms().begin();
            Rational mag = coef;
            if (mag.sign() < 0) {
                negative = true;
                mag = -mag;
            }
            const VarSet& vs = c.vars();
            std::vector<std::string> parts;
            if (!mag.is_one()) parts.push_back(mag.str());
            int qe = m[vs.q_index()];
            if (qe != 0)
                parts.push_back(qe == 1 ? "Q" : "Q^" + std::to_string(qe));
            for (int i = 0; i + 1 < vs.size(); ++i) {
                if (m[i] == 0) continue;
                parts.push_back(m[i] == 1 ? vs.name(i)
                                          : vs.name(i) + "^" + std::to_string(m[i]));
            }
            if (!xs.empty()) parts.push_back(xs);
            if (parts.empty()) parts.push_back("1");
            for (size_t i = 0; i < parts.size(); ++i) body += (i ? "*" : "") + parts[i];
        } else {
            body = "(" + c.str() + ")";
            if (!xs.empty()) body += "*" + xs;
        }

        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        os << body;
    }
    if (first) os << "0";
    return os.str();
}

LaurentPoly elementary_symmetric(const VarSet& vs, std::span<const int> var_idx, int i) {
    const int k = static_cast<int>(var_idx.size());
    if (i < 0 || i > k)
        throw std::invalid_argument("elementary_symmetric: index out of range");
    // DP over variables: e[d] accumulates sigma_d of the vars seen so far
    std::vector<LaurentPoly> e(i + 1, LaurentPoly::zero(vs));
    e[0] = LaurentPoly::constant(vs, Rational(1));
    for (int v = 0; v < k; ++v) {
        LaurentPoly x = LaurentPoly::variable(vs, vs.name(var_idx[v]));
        for (int d = std::min(i, v + 1); d >= 1; --d) e[d] += e[d - 1] * x;
    }
    return e[i];
}

InvarianceResult is_invariant(const LaurentPoly& p, const GroupAction& action) {
    for (const auto& [name, perm] : action.generators(p.vars().size())) {
        if (p.apply_permutation(perm) != p) return {false, name};
    }
    return {true, ""};
}

LaurentPoly sym_reduce(const LaurentPoly& p, std::span<const int> var_idx,
                       const std::vector<std::string>& sigma_names) {
    const int k = static_cast<int>(var_idx.size());
    if (static_cast<int>(sigma_names.size()) != k)
        throw std::invalid_argument("sym_reduce: need one sigma name per variable");
    if (k == 0) return p;

    auto inv = is_invariant(p, GroupAction::symmetric({var_idx.begin(), var_idx.end()}));
    if (!inv.invariant)
        throw std::invalid_argument("sym_reduce: input not symmetric, violating generator " +
                                    inv.witness);
    for (const auto& [m, c] : p.terms())
        for (int idx : var_idx)
            if (m[idx] < 0)
                throw std::invalid_argument("sym_reduce: negative exponent on " +
                                            p.vars().name(idx));

    // output variable set: sigma names replace the reduced block at the
    // position of its first variable
    const VarSet& vs = p.vars();
    std::vector<bool> reduced(vs.size(), false);
    for (int idx : var_idx) reduced[idx] = true;
    int first_reduced = *std::min_element(var_idx.begin(), var_idx.end());
    std::vector<std::string> out_names;
    for (int i = 0; i < vs.size() - 1; ++i) {
        if (i == first_reduced)
            out_names.insert(out_names.end(), sigma_names.begin(), sigma_names.end());
        if (!reduced[i]) out_names.push_back(vs.name(i));
    }
    VarSet out_vs = VarSet::symbols(out_names);

    // passthrough slot map for non-reduced variables (Q included)
    std::vector<int> pass(vs.size(), -1);
    for (int i = 0; i < vs.size(); ++i)
        if (!reduced[i]) pass[i] = out_vs.index_of(vs.name(i));
    std::vector<int> sigma_slot(k);
    for (int i = 0; i < k; ++i) sigma_slot[i] = out_vs.index_of(sigma_names[i]);

    // cache of expanded sigma products keyed by the sigma exponent vector
    std::map<std::vector<int>, LaurentPoly> prod_cache;
    prod_cache.emplace(std::vector<int>(k, 0), LaurentPoly::constant(vs, Rational(1)));
    std::vector<LaurentPoly> sigmas;
    sigmas.reserve(k);
    for (int i = 1; i <= k; ++i) sigmas.push_back(elementary_symmetric(vs, var_idx, i));
    std::function<const LaurentPoly&(const std::vector<int>&)> sigma_product =
        [&](const std::vector<int>& e) -> const LaurentPoly& {
        auto it = prod_cache.find(e);
        if (it != prod_cache.end()) return it->second;
        auto prev = e;
        int last = k - 1;
        while (prev[last] == 0) --last;
        --prev[last];
        LaurentPoly val = sigma_product(prev) * sigmas[last];
        return prod_cache.emplace(e, std::move(val)).first->second;
    };

    LaurentPoly rest = p;
    LaurentPoly result(out_vs);
    while (!rest.is_zero()) {
        // lex-largest exponent pattern on the reduced block
        std::vector<int> lead;
        for (const auto& [m, c] : rest.terms()) {
            std::vector<int> pat(k);
            for (int i = 0; i < k; ++i) pat[i] = m[var_idx[i]];
            if (lead.empty() || pat > lead) lead = pat;
        }
        for (int i = 0; i + 1 < k; ++i)
            if (lead[i] < lead[i + 1])
                throw std::logic_error("sym_reduce: non-dominant leading term");

        // coefficient of the leading pattern, exponents on the block cleared
        LaurentPoly coeff(vs);
        for (const auto& [m, c] : rest.terms()) {
            bool match = true;
            for (int i = 0; i < k && match; ++i) match = m[var_idx[i]] == lead[i];
            if (!match) continue;
            Monomial cleared = m;
            for (int idx : var_idx) cleared[idx] = 0;
            coeff.add_term(cleared, c);
        }

        std::vector<int> sig_exp(k);
        for (int i = 0; i < k; ++i)
            sig_exp[i] = lead[i] - (i + 1 < k ? lead[i + 1] : 0);

        // emit coeff * prod sigma_i^{sig_exp_i} into the output variables
        Monomial sig_mono(out_vs.size(), 0);
        for (int i = 0; i < k; ++i) sig_mono[sigma_slot[i]] = sig_exp[i];
        for (const auto& [m, c] : coeff.terms()) {
            Monomial t = sig_mono;
            for (int i = 0; i < vs.size(); ++i)
                if (pass[i] >= 0) t[pass[i]] += m[i];
            result.add_term(t, c);
        }

        rest -= coeff * sigma_product(sig_exp);
    }
    return result;
}

}  // namespace hecke
