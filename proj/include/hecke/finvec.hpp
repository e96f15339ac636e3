#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hecke/poly.hpp"

namespace hecke {

// Thrown when an enumeration would exceed the configured budget; carries the
// required object count so callers can report it.
struct BudgetExceeded : std::runtime_error {
    BudgetExceeded(std::uint64_t required, std::uint64_t budget)
        : std::runtime_error("enumeration budget exceeded: need " + std::to_string(required) +
                             " objects, budget " + std::to_string(budget)),
          required(required),
          budget(budget) {}
    std::uint64_t required;
    std::uint64_t budget;
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

// F_p or F_{p^2} for small p, with exhaustive operation tables. For p^d <= 9
// the field axioms are re-verified on construction.
class PrimePowerField {
public:
    explicit PrimePowerField(int p, int degree = 1);

    int characteristic() const { return p_; }
    int degree() const { return d_; }
    int size() const { return size_; }

    int add(int a, int b) const { return add_[a * size_ + b]; }
    int sub(int a, int b) const { return add_[a * size_ + neg_[b]]; }
    int mul(int a, int b) const { return mul_[a * size_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int inv(int a) const;
    int frobenius(int a) const { return frob_[a]; }  // a^p

    // For degree 2: x^2 = quad_c1 * x + quad_c0 defines the extension,
    // elements are encoded a + b*x -> a + b*p.
    int quad_c0() const { return quad_c0_; }
    int quad_c1() const { return quad_c1_; }

    friend bool operator==(const PrimePowerField& a, const PrimePowerField& b) {
        return a.p_ == b.p_ && a.d_ == b.d_;
    }

private:
    void verify_axioms() const;
    int p_, d_, size_;
    int quad_c0_ = 0, quad_c1_ = 0;
    std::vector<int> add_, mul_, neg_, inv_, frob_;
};

// Subspace of F^r in canonical reduced row-echelon form. Two equal subspaces
// have identical representations, so ordering and hashing by rows is sound.
class Subspace {
public:
    static Subspace zero(const PrimePowerField& F, int ambient);
    static Subspace from_rows(const PrimePowerField& F, int ambient,
                              std::vector<std::vector<int>> rows);
    static Subspace full(const PrimePowerField& F, int ambient);

    int dim() const { return static_cast<int>(rows_.size()); }
    int ambient() const { return ambient_; }
    const PrimePowerField& field() const { return *F_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    bool contains(const std::vector<int>& v) const;
    bool contains(const Subspace& other) const;

    // Rows as digit strings joined by '|'; "0" for the zero space.
    std::string str() const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
    }
    friend bool operator<(const Subspace& a, const Subspace& b) {
        if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_;
        return a.rows_ < b.rows_;
    }

private:
    Subspace(const PrimePowerField& F, int ambient) : F_(&F), ambient_(ambient) {}
    const PrimePowerField* F_;
    int ambient_;
    std::vector<std::vector<int>> rows_;  // RREF, pivots strictly increasing
};

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace span_of(const Subspace& a, const Subspace& b);

// Gaussian binomial g(k,l): number of k-dimensional subspaces of an
// l-dimensional space. Zero outside 0 <= k <= l. The symbolic form is a
// polynomial in Q computed by the defining product with exact division.
LaurentPoly gaussian_binomial(int k, int l);              // symbolic in Q
Rational gaussian_binomial(int k, int l, const Rational& q);
std::uint64_t gaussian_binomial_count(int k, int l, int q);

// All j-dimensional subspaces of F^r in lexicographic order of their echelon
// matrices. Refuses (BudgetExceeded) rather than truncating.
std::vector<Subspace> enumerate_subspaces(int r, int j, const PrimePowerField& F,
                                          std::uint64_t budget = kDefaultBudget);

// Brute-force census of j-dimensional subspaces W with dim(W & D) = i,
// grouped by the pair (W & D, span(W, D)); checks that all fibers agree.
struct ProfileCount {
    std::uint64_t classes;
    std::uint64_t fiber;
};
ProfileCount profile_count(const Subspace& D, int i, int j,
                           std::uint64_t budget = kDefaultBudget);

// Standard symplectic structure on F^(2g): form J(e_a, e_{g+a}) = 1.
bool is_isotropic(const Subspace& s, int g);
std::vector<Subspace> enumerate_isotropic(int g, int j, const PrimePowerField& F,
                                          std::uint64_t budget = kDefaultBudget);
std::uint64_t count_lagrangian(int g, const PrimePowerField& F,
                               std::uint64_t budget = kDefaultBudget);

// F_{q^2}-structure on F_p^(2m): coordinates (2i, 2i+1) encode the i-th
// F_{q^2}-coordinate a + b*x, scalar x acts blockwise by the companion
// matrix of the defining quadratic.
class Fq2Structure {
public:
    Fq2Structure(const PrimePowerField& base, int m);

    const PrimePowerField& base_field() const { return *Fp_; }
    const PrimePowerField& extension_field() const { return Fq2_; }
    int quadratic_dim() const { return m_; }
    int ambient() const { return 2 * m_; }

    std::vector<int> scalar_action(const std::vector<int>& v) const;  // x . v
    bool is_stable(const Subspace& w) const;
    Subspace quadratic_span(const Subspace& w) const;  // smallest stable overspace
    int quadratic_dim_of(const Subspace& stable) const;

    // Converts a subspace of F_{q^2}^m (over the extension field) into the
    // corresponding stable F_p-subspace of F_p^(2m).
    Subspace to_base(const Subspace& over_extension) const;

private:
    const PrimePowerField* Fp_;
    PrimePowerField Fq2_;
    int m_;
};

}  // namespace hecke
