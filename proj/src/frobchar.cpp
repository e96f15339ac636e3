#include "hecke/frobchar.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace hecke {

namespace {

std::vector<std::vector<int>> subsets_of_size(int r, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(n);
    for (int i = 0; i < n; ++i) cur[i] = i;
    if (n == 0) return {std::vector<int>{}};
    while (true) {
        out.push_back(cur);
        int i = n - 1;
        while (i >= 0 && cur[i] == r - n + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int t = i + 1; t < n; ++t) cur[t] = cur[t - 1] + 1;
    }
    return out;
}

}  // namespace

std::uint64_t binomial(int r, int n) {
    if (n < 0 || n > r) return 0;
    std::uint64_t acc = 1;
    for (int i = 1; i <= n; ++i) acc = acc * (r - n + i) / i;
    return acc;
}

std::uint64_t charpoly_degree(int r, int n) {
    if (n < 1 || n > r) throw std::invalid_argument("charpoly_degree: need 1 <= n <= r");
    return binomial(r, n);
}

HeckePolynomial hecke_charpoly(int r, int n) {
    if (n < 1 || n > r) throw std::invalid_argument("hecke_charpoly: need 1 <= n <= r");
    GLContext ctx(r, n, false);
    VarSet work = ctx.vars.adjoin("X");
    const int xi = work.index_of("X");
    const int qi = work.q_index();

    // product over the Weyl orbit of the Satake image of Psi_n
    LaurentPoly prod = LaurentPoly::constant(work, Rational(1));
    const int twist = -n * (n - 1) / 2;
    for (const auto& I : subsets_of_size(r, n)) {
        Monomial root(work.size(), 0);
        for (int v : I) root[v] = 1;
        root[qi] = twist;
        LaurentPoly factor = LaurentPoly::variable(work, "X") -
                             LaurentPoly::monomial(work, root, Rational(1));
        prod = prod * factor;
    }

    const int deg = static_cast<int>(binomial(r, n));
    // split off X-degrees
    std::vector<LaurentPoly> raw(deg + 1, LaurentPoly::zero(ctx.vars));
    for (const auto& [m, c] : prod.terms()) {
        Monomial g(ctx.vars.size(), 0);
        for (int i = 0; i < r; ++i) g[i] = m[i];
        g[ctx.vars.q_index()] = m[qi];
        raw[m[xi]].add_term(g, c);
    }

    HeckePolynomial P;
    P.r = r;
    P.n = n;
    std::vector<std::string> t_names;
    for (int i = 1; i <= r; ++i) t_names.push_back("T" + std::to_string(i));
    P.gen_vars = VarSet::symbols(t_names);
    P.coeffs.reserve(deg + 1);
    for (int d = 0; d <= deg; ++d) {
        HeckeElement coeff(ctx, Level::G, raw[d]);
        P.coeffs.push_back(express_in_T_generators(coeff));
    }

    // exact round trip: substituting generator images must reproduce the
    // defining product
    auto images = t_generator_images(ctx);
    std::map<std::string, LaurentPoly> repl;
    for (auto& [name, img] : images) repl.emplace(name, img.reorder(work));
    LaurentPoly rebuilt(work);
    for (int d = 0; d <= deg; ++d) {
        LaurentPoly c = P.coeffs[d].substitute(repl, work);
        rebuilt += c * LaurentPoly::variable(work, "X", d);
    }
    if (rebuilt != prod)
        throw std::logic_error("hecke_charpoly: re-substitution failed");
    if (P.coeffs[deg] != LaurentPoly::constant(P.gen_vars, Rational(1)))
        throw std::logic_error("hecke_charpoly: leading coefficient is not 1");
    return P;
}

std::string HeckePolynomial::str() const { return poly_in_x_string(coeffs, "X"); }

nlohmann::json HeckePolynomial::to_json() const {
    nlohmann::json j;
    j["r"] = r;
    j["n"] = n;
    j["degree"] = degree();
    auto& cs = j["coeffs"] = nlohmann::json::array();
    for (const auto& c : coeffs) cs.push_back(c.to_json());
    return j;
}

namespace {

// deterministic small rational from raw engine words (avoids distribution
// implementation differences)
Rational draw_rational(std::mt19937_64& rng, bool nonzero) {
    while (true) {
        long num = static_cast<long>(rng() % 19) - 9;  // -9..9
        long den = static_cast<long>(rng() % 9) + 1;   // 1..9
        if (nonzero && num == 0) continue;
        return Rational(num, den);
    }
}

}  // namespace

LanglandsReport langlands_oracle_check(int r, int n, int trials, std::uint64_t seed) {
    if (n < 1 || n > r) throw std::invalid_argument("langlands_oracle_check: need 1 <= n <= r");
    if (trials < 1) throw std::invalid_argument("langlands_oracle_check: trials must be >= 1");

    HeckePolynomial P = hecke_charpoly(r, n);
    auto subsets = subsets_of_size(r, n);

    LanglandsReport report;
    report.r = r;
    report.n = n;
    report.seed = seed;
    report.passed = 0;
    std::mt19937_64 rng(seed);

    for (int t = 0; t < trials; ++t) {
        LanglandsTrial trial;
        // distinct nonzero eigenvalues; repeats are redrawn
        while (static_cast<int>(trial.alphas.size()) < r) {
            Rational a = draw_rational(rng, true);
            bool dup = std::any_of(trial.alphas.begin(), trial.alphas.end(),
                                   [&](const Rational& b) { return b == a; });
            if (!dup) trial.alphas.push_back(a);
        }
        trial.q = draw_rational(rng, true);

        // a_i = q^{-i(i-1)/2} sigma_i(alpha), the Hecke eigenvalues
        std::map<std::string, Rational> assign{{"Q", trial.q}};
        std::vector<Rational> e(r + 1, Rational(0));
        e[0] = Rational(1);
        for (int v = 0; v < r; ++v)
            for (int d = std::min(r, v + 1); d >= 1; --d)
                e[d] += e[d - 1] * trial.alphas[v];
        for (int i = 1; i <= r; ++i)
            assign["T" + std::to_string(i)] = trial.q.pow(-static_cast<long>(i) * (i - 1) / 2) * e[i];

        std::vector<Rational> lhs;
        lhs.reserve(P.coeffs.size());
        for (const auto& c : P.coeffs) lhs.push_back(c.evaluate(assign));

        // oracle: expand the eigenvalue product directly
        Rational twist = trial.q.pow(-static_cast<long>(n) * (n - 1) / 2);
        std::vector<Rational> rhs{Rational(1)};
        for (const auto& I : subsets) {
            Rational root = twist;
            for (int v : I) root *= trial.alphas[v];
            std::vector<Rational> next(rhs.size() + 1, Rational(0));
            for (size_t d = 0; d < rhs.size(); ++d) {
                next[d + 1] += rhs[d];
                next[d] -= rhs[d] * root;
            }
            rhs = std::move(next);
        }

        trial.equal = lhs.size() == rhs.size() && std::equal(lhs.begin(), lhs.end(), rhs.begin());
        if (trial.equal) ++report.passed;
        report.trials.push_back(std::move(trial));
    }
    report.all_equal = report.passed == trials;
    return report;
}

std::string LanglandsReport::str() const {
    std::ostringstream os;
    os << "langlands r=" << r << " n=" << n << " seed=" << seed << ": " << passed << "/"
       << trials.size() << " exact coefficient matches"
       << (all_equal ? "" : " [MISMATCH]");
    return os.str();
}

nlohmann::json LanglandsReport::to_json() const {
    nlohmann::json j;
    j["r"] = r;
    j["n"] = n;
    j["seed"] = seed;
    j["trials"] = trials.size();
    j["passed"] = passed;
    j["all_equal"] = all_equal;
    return j;
}

}  // namespace hecke
