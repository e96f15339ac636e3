#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hecke/rational.hpp"

#include "json.hpp"

namespace hecke {

// Ordered variable list with the formal invertible prime-size symbol Q always
// in the last slot. The order is fixed for the lifetime of every polynomial
// built over the set.
class VarSet {
public:
    enum class Kind { GL, Siegel, Custom };

    static VarSet gl(int r);             // U1..Ur, Q
    static VarSet siegel(int g);         // U1..Ug, V1..Vg, Q
    static VarSet symbols(std::vector<std::string> names);  // names..., Q

    VarSet adjoin(const std::string& name) const;  // insert just before Q

    Kind kind() const { return kind_; }
    int rank() const { return rank_; }
    int size() const { return static_cast<int>(names_.size()); }
    int q_index() const { return size() - 1; }
    const std::string& name(int i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    int index_of(const std::string& name) const;  // -1 if absent

    friend bool operator==(const VarSet& a, const VarSet& b) { return a.names_ == b.names_; }
    friend bool operator!=(const VarSet& a, const VarSet& b) { return !(a == b); }

private:
    VarSet(Kind kind, int rank, std::vector<std::string> names)
        : kind_(kind), rank_(rank), names_(std::move(names)) {}

    Kind kind_ = Kind::Custom;
    int rank_ = 0;
    std::vector<std::string> names_;
};

// Exponent vector indexed by a VarSet (Q included, last). Entries may be
// negative.
using Monomial = std::vector<int>;

// Symmetry-group descriptor for is_invariant: either the full symmetric group
// on one block of variables, a product of symmetric groups on disjoint
// blocks, or the signed-permutation Weyl group of GSp acting on paired
// (U_i, V_i) slots.
struct GroupAction {
    enum class Kind { Symmetric, ProductSymmetric, SiegelWeyl };
    Kind kind;
    // Symmetric: one block of var indices. ProductSymmetric: several blocks.
    // SiegelWeyl: exactly two blocks of equal length, U-slots then V-slots,
    // paired by position.
    std::vector<std::vector<int>> blocks;

    static GroupAction symmetric(std::vector<int> block);
    static GroupAction product_symmetric(std::vector<std::vector<int>> blocks);
    static GroupAction siegel_weyl(std::vector<int> u_slots, std::vector<int> v_slots);

    // Generators as permutations of the full variable index range
    // (value = where each slot goes), with printable names.
    std::vector<std::pair<std::string, std::vector<int>>> generators(int nvars) const;
};

struct InvarianceResult {
    bool invariant;
    std::string witness;  // violating generator when not invariant
};

// Exact multivariate Laurent polynomial with rational coefficients. Terms are
// held in a sorted map keyed by exponent vector, no zero coefficients ever
// stored, so equality is structural and printing is deterministic.
class LaurentPoly {
public:
    explicit LaurentPoly(VarSet vars) : vars_(std::move(vars)) {}

    static LaurentPoly zero(const VarSet& vs) { return LaurentPoly(vs); }
    static LaurentPoly constant(const VarSet& vs, Rational c);
    static LaurentPoly variable(const VarSet& vs, const std::string& name, int exp = 1);
    static LaurentPoly monomial(const VarSet& vs, Monomial m, Rational c);

    const VarSet& vars() const { return vars_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    void add_term(const Monomial& m, const Rational& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;
    LaurentPoly scaled(const Rational& c) const;

    // Integer power. Negative exponents require a single invertible term.
    LaurentPoly pow(int e) const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
    // Deterministic total order (by variable names, then term sequence);
    // used for orbit sets and stable grouping.
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b);

    // Exact evaluation. Every variable occurring with nonzero exponent must
    // be assigned; zero values are rejected under negative exponents.
    Rational evaluate(const std::map<std::string, Rational>& assignment) const;

    // Maps variables into `target`. Unmapped variables must exist in target
    // under the same name. Replacements raised to negative powers must be
    // single invertible terms.
    LaurentPoly substitute(const std::map<std::string, LaurentPoly>& repl,
                           const VarSet& target) const;

    // Same variable names, possibly different order / extra vars in target.
    LaurentPoly reorder(const VarSet& target) const;

    // Permutes variable slots: result has exponent perm[i] taken from slot i.
    LaurentPoly apply_permutation(const std::vector<int>& perm) const;

    std::string str() const;
    nlohmann::json to_json() const;
    static LaurentPoly from_json(const nlohmann::json& j);

private:
    VarSet vars_;
    std::map<Monomial, Rational> terms_;
};

// sigma_i over the given variable subset; sigma_0 = 1.
LaurentPoly elementary_symmetric(const VarSet& vs, std::span<const int> var_idx, int i);

InvarianceResult is_invariant(const LaurentPoly& p, const GroupAction& action);

// Rewrites a polynomial symmetric in the chosen variables as a polynomial in
// their elementary symmetric polynomials (classical lex-leading-term
// elimination). The reduced variables are replaced by `sigma_names` in the
// output variable set, inserted at the position of the first reduced
// variable; all other variables pass through as coefficients.
LaurentPoly sym_reduce(const LaurentPoly& p, std::span<const int> var_idx,
                       const std::vector<std::string>& sigma_names);

// Classical display of a polynomial in `xname` with polynomial coefficients
// (constant term first): signs pulled out of single-term coefficients,
// Q-powers printed before the generator symbols.
std::string poly_in_x_string(const std::vector<LaurentPoly>& coeffs,
                             const std::string& xname);

}  // namespace hecke
