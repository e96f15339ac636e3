#include "hecke/finvec.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace hecke {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

PrimePowerField::PrimePowerField(int p, int degree) : p_(p), d_(degree) {
    if (!is_prime(p)) throw std::invalid_argument("PrimePowerField: characteristic not prime");
    if (degree < 1 || degree > 2)
        throw std::invalid_argument("PrimePowerField: only degrees 1 and 2 supported");
    size_ = degree == 1 ? p : p * p;

    if (d_ == 2) {
        // find a monic irreducible x^2 - c1*x - c0 by exhausting roots
        bool found = false;
        for (int c1 = 0; c1 < p && !found; ++c1) {
            for (int c0 = 0; c0 < p && !found; ++c0) {
                bool has_root = false;
                for (int x = 0; x < p; ++x)
                    if (((x * x - c1 * x - c0) % p + p) % p == 0) has_root = true;
                if (!has_root) {
                    quad_c1_ = c1;
                    quad_c0_ = c0;
                    found = true;
                }
            }
        }
        if (!found) throw std::logic_error("PrimePowerField: no irreducible quadratic found");
    }

    add_.resize(size_ * size_);
    mul_.resize(size_ * size_);
    neg_.resize(size_);
    inv_.assign(size_, 0);
    frob_.resize(size_);

    auto pair_of = [&](int e) { return std::pair{e % p_, e / p_}; };
    auto of_pair = [&](int a, int b) { return a + b * p_; };

    for (int a = 0; a < size_; ++a) {
        auto [a0, a1] = pair_of(a);
        neg_[a] = d_ == 1 ? (p_ - a) % p_ : of_pair((p_ - a0) % p_, (p_ - a1) % p_);
        for (int b = 0; b < size_; ++b) {
            auto [b0, b1] = pair_of(b);
            if (d_ == 1) {
                add_[a * size_ + b] = (a + b) % p_;
                mul_[a * size_ + b] = (a * b) % p_;
            } else {
                add_[a * size_ + b] = of_pair((a0 + b0) % p_, (a1 + b1) % p_);
                // (a0 + a1 x)(b0 + b1 x) with x^2 = c1 x + c0
                int lo = (a0 * b0 + a1 * b1 * quad_c0_) % p_;
                int hi = (a0 * b1 + a1 * b0 + a1 * b1 * quad_c1_) % p_;
                mul_[a * size_ + b] = of_pair(lo, hi);
            }
        }
    }
    for (int a = 1; a < size_; ++a)
        for (int b = 1; b < size_; ++b)
            if (mul_[a * size_ + b] == 1) inv_[a] = b;
    for (int a = 0; a < size_; ++a) {
        int acc = 1;
        for (int i = 0; i < p_; ++i) acc = mul_[acc * size_ + a];
        frob_[a] = acc;
    }

    if (size_ <= 9) verify_axioms();
}

int PrimePowerField::inv(int a) const {
    if (a == 0) throw std::domain_error("PrimePowerField: inverse of zero");
    return inv_[a];
}

void PrimePowerField::verify_axioms() const {
    for (int a = 0; a < size_; ++a) {
        if (add(a, 0) != a || mul(a, 1) != a) throw std::logic_error("field: identity fails");
        if (add(a, neg(a)) != 0) throw std::logic_error("field: negation fails");
        if (a != 0 && mul(a, inv_[a]) != 1) throw std::logic_error("field: inverse fails");
        for (int b = 0; b < size_; ++b) {
            if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a))
                throw std::logic_error("field: commutativity fails");
            for (int c = 0; c < size_; ++c) {
                if (add(add(a, b), c) != add(a, add(b, c)))
                    throw std::logic_error("field: additive associativity fails");
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw std::logic_error("field: multiplicative associativity fails");
                if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
                    throw std::logic_error("field: distributivity fails");
            }
        }
    }
}

namespace {

// In-place reduction to canonical RREF; returns the rank.
int rref(const PrimePowerField& F, std::vector<std::vector<int>>& rows, int cols) {
    int rank = 0;
    for (int col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        int s = F.inv(rows[rank][col]);
        for (int c = 0; c < cols; ++c) rows[rank][c] = F.mul(rows[rank][c], s);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            int f = rows[r][col];
            for (int c = 0; c < cols; ++c)
                rows[r][c] = F.sub(rows[r][c], F.mul(f, rows[rank][c]));
        }
        ++rank;
    }
    rows.resize(rank);
    return rank;
}

}  // namespace

Subspace Subspace::zero(const PrimePowerField& F, int ambient) {
    return Subspace(F, ambient);
}

Subspace Subspace::full(const PrimePowerField& F, int ambient) {
    std::vector<std::vector<int>> rows(ambient, std::vector<int>(ambient, 0));
    for (int i = 0; i < ambient; ++i) rows[i][i] = 1;
    Subspace s(F, ambient);
    s.rows_ = std::move(rows);
    return s;
}

Subspace Subspace::from_rows(const PrimePowerField& F, int ambient,
                             std::vector<std::vector<int>> rows) {
    for (const auto& row : rows)
        if (static_cast<int>(row.size()) != ambient)
            throw std::invalid_argument("Subspace: row length mismatch");
    rref(F, rows, ambient);
    Subspace s(F, ambient);
    s.rows_ = std::move(rows);
    return s;
}

bool Subspace::contains(const std::vector<int>& v) const {
    std::vector<int> w = v;
    for (const auto& row : rows_) {
        int pc = 0;
        while (row[pc] == 0) ++pc;
        if (w[pc] != 0) {
            int f = w[pc];
            for (int c = 0; c < ambient_; ++c) w[c] = F_->sub(w[c], F_->mul(f, row[c]));
        }
    }
    return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& row : other.rows_)
        if (!contains(row)) return false;
    return true;
}

std::string Subspace::str() const {
    if (rows_.empty()) return "0";
    std::string out;
    for (size_t r = 0; r < rows_.size(); ++r) {
        if (r) out += "|";
        for (int x : rows_[r]) out += std::to_string(x);
    }
    return out;
}

Subspace span_of(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient() || !(a.field() == b.field()))
        throw std::invalid_argument("span_of: ambient mismatch");
    auto rows = a.rows();
    rows.insert(rows.end(), b.rows().begin(), b.rows().end());
    return Subspace::from_rows(a.field(), a.ambient(), std::move(rows));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient() || !(a.field() == b.field()))
        throw std::invalid_argument("intersect: ambient mismatch");
    const PrimePowerField& F = a.field();
    const int n = a.ambient();
    // Zassenhaus: rref of [A|A; B|0]; rows with zero left half carry the
    // intersection in the right half.
    std::vector<std::vector<int>> rows;
    for (const auto& r : a.rows()) {
        std::vector<int> row(2 * n, 0);
        for (int c = 0; c < n; ++c) row[c] = row[n + c] = r[c];
        rows.push_back(std::move(row));
    }
    for (const auto& r : b.rows()) {
        std::vector<int> row(2 * n, 0);
        for (int c = 0; c < n; ++c) row[c] = r[c];
        rows.push_back(std::move(row));
    }
    rref(F, rows, 2 * n);
    std::vector<std::vector<int>> inter;
    for (const auto& row : rows) {
        bool left_zero = std::all_of(row.begin(), row.begin() + n, [](int x) { return x == 0; });
        if (left_zero) inter.emplace_back(row.begin() + n, row.end());
    }
    return Subspace::from_rows(F, n, std::move(inter));
}

LaurentPoly gaussian_binomial(int k, int l) {
    VarSet vs = VarSet::symbols({});
    if (k < 0 || k > l) return LaurentPoly::zero(vs);
    auto qpow = [&](int e) {
        Monomial m(vs.size(), 0);
        m[vs.q_index()] = e;
        return LaurentPoly::monomial(vs, m, Rational(1));
    };
    // product formula with exact univariate division
    LaurentPoly num = LaurentPoly::constant(vs, Rational(1));
    LaurentPoly den = LaurentPoly::constant(vs, Rational(1));
    for (int i = 1; i <= k; ++i) {
        num = num * (qpow(l) - qpow(i - 1));
        den = den * (qpow(k) - qpow(i - 1));
    }
    // long division in Q; the quotient is exact by construction
    LaurentPoly quot(vs);
    auto deg = [&](const LaurentPoly& p) { return p.terms().rbegin()->first.back(); };
    auto lead = [&](const LaurentPoly& p) { return p.terms().rbegin()->second; };
    while (!num.is_zero()) {
        int d = deg(num) - deg(den);
        if (d < 0) throw std::logic_error("gaussian_binomial: inexact division");
        LaurentPoly t = qpow(d).scaled(lead(num) / lead(den));
        quot += t;
        num -= t * den;
    }
    return quot;
}

Rational gaussian_binomial(int k, int l, const Rational& q) {
    if (k < 0 || k > l) return Rational(0);
    return gaussian_binomial(k, l).evaluate({{"Q", q}});
}

std::uint64_t gaussian_binomial_count(int k, int l, int q) {
    if (k < 0 || k > l) return 0;
    // recurrence in integers; counts stay tiny at desk scale
    std::vector<std::vector<std::uint64_t>> g(l + 1, std::vector<std::uint64_t>(k + 1, 0));
    for (int ll = 0; ll <= l; ++ll) {
        g[ll][0] = 1;
        for (int kk = 1; kk <= std::min(ll, k); ++kk) {
            std::uint64_t qk = 1;
            for (int i = 0; i < kk; ++i) qk *= static_cast<std::uint64_t>(q);
            g[ll][kk] = (kk == ll ? 1 : g[ll - 1][kk - 1] + qk * g[ll - 1][kk]);
        }
    }
    return g[l][k];
}

std::vector<Subspace> enumerate_subspaces(int r, int j, const PrimePowerField& F,
                                          std::uint64_t budget) {
    if (j < 0 || j > r) throw std::invalid_argument("enumerate_subspaces: j out of range");
    std::uint64_t total = gaussian_binomial_count(j, r, F.size());
    if (total > budget) throw BudgetExceeded(total, budget);

    std::vector<Subspace> out;
    out.reserve(total);
    if (j == 0) {
        out.push_back(Subspace::zero(F, r));
        return out;
    }

    // pivot column combinations, then odometer over free entries
    std::vector<int> pivots(j);
    std::iota(pivots.begin(), pivots.end(), 0);
    auto next_combination = [&]() {
        int i = j - 1;
        while (i >= 0 && pivots[i] == r - j + i) --i;
        if (i < 0) return false;
        ++pivots[i];
        for (int t = i + 1; t < j; ++t) pivots[t] = pivots[t - 1] + 1;
        return true;
    };
    do {
        std::vector<bool> is_pivot(r, false);
        for (int p : pivots) is_pivot[p] = true;
        std::vector<std::pair<int, int>> free_cells;  // (row, col)
        for (int row = 0; row < j; ++row)
            for (int col = pivots[row] + 1; col < r; ++col)
                if (!is_pivot[col]) free_cells.push_back({row, col});

        std::vector<int> values(free_cells.size(), 0);
        while (true) {
            std::vector<std::vector<int>> rows(j, std::vector<int>(r, 0));
            for (int row = 0; row < j; ++row) rows[row][pivots[row]] = 1;
            for (size_t c = 0; c < free_cells.size(); ++c)
                rows[free_cells[c].first][free_cells[c].second] = values[c];
            out.push_back(Subspace::from_rows(F, r, std::move(rows)));

            int pos = static_cast<int>(values.size()) - 1;
            while (pos >= 0 && values[pos] == F.size() - 1) values[pos--] = 0;
            if (pos < 0) break;
            ++values[pos];
        }
    } while (next_combination());

    std::sort(out.begin(), out.end());
    if (out.size() != total) throw std::logic_error("enumerate_subspaces: count mismatch");
    return out;
}

ProfileCount profile_count(const Subspace& D, int i, int j, std::uint64_t budget) {
    const PrimePowerField& F = D.field();
    const int r = D.ambient();
    const int n = D.dim();
    std::map<std::pair<Subspace, Subspace>, std::uint64_t> fibers;
    for (const auto& W : enumerate_subspaces(r, j, F, budget)) {
        Subspace meet = intersect(W, D);
        if (meet.dim() != i) continue;
        ++fibers[{meet, span_of(W, D)}];
    }
    ProfileCount pc{fibers.size(), 0};
    for (const auto& [key, count] : fibers) {
        if (pc.fiber == 0) pc.fiber = count;
        if (count != pc.fiber)
            throw std::logic_error("profile_count: unequal fibers within one type");
    }
    std::uint64_t expect_classes =
        gaussian_binomial_count(i, n, F.size()) * gaussian_binomial_count(j - i, r - n, F.size());
    if (pc.classes != expect_classes)
        throw std::logic_error("profile_count: class count disagrees with the closed form");
    if (pc.classes > 0) {
        std::uint64_t expect_fiber = 1;
        for (int e = 0; e < (j - i) * (n - i); ++e) expect_fiber *= F.size();
        if (pc.fiber != expect_fiber)
            throw std::logic_error("profile_count: fiber size disagrees with the closed form");
    }
    return pc;
}

bool is_isotropic(const Subspace& s, int g) {
    if (s.ambient() != 2 * g) throw std::invalid_argument("is_isotropic: ambient != 2g");
    const PrimePowerField& F = s.field();
    auto form = [&](const std::vector<int>& x, const std::vector<int>& y) {
        int acc = 0;
        for (int a = 0; a < g; ++a) {
            acc = F.add(acc, F.mul(x[a], y[g + a]));
            acc = F.sub(acc, F.mul(x[g + a], y[a]));
        }
        return acc;
    };
    const auto& rows = s.rows();
    for (size_t a = 0; a < rows.size(); ++a)
        for (size_t b = a + 1; b < rows.size(); ++b)
            if (form(rows[a], rows[b]) != 0) return false;
    return true;
}

std::vector<Subspace> enumerate_isotropic(int g, int j, const PrimePowerField& F,
                                          std::uint64_t budget) {
    if (j < 0 || j > g) throw std::invalid_argument("enumerate_isotropic: j out of range");
    std::vector<Subspace> out;
    for (auto& s : enumerate_subspaces(2 * g, j, F, budget))
        if (is_isotropic(s, g)) out.push_back(std::move(s));
    return out;
}

std::uint64_t count_lagrangian(int g, const PrimePowerField& F, std::uint64_t budget) {
    return enumerate_isotropic(g, g, F, budget).size();
}

Fq2Structure::Fq2Structure(const PrimePowerField& base, int m)
    : Fp_(&base), Fq2_(base.characteristic(), 2), m_(m) {
    if (base.degree() != 1)
        throw std::invalid_argument("Fq2Structure: base field must be prime");
    if (m < 1) throw std::invalid_argument("Fq2Structure: m must be >= 1");
}

std::vector<int> Fq2Structure::scalar_action(const std::vector<int>& v) const {
    if (static_cast<int>(v.size()) != ambient())
        throw std::invalid_argument("Fq2Structure: vector length mismatch");
    const PrimePowerField& F = *Fp_;
    const int c0 = Fq2_.quad_c0(), c1 = Fq2_.quad_c1();
    std::vector<int> out(v.size());
    for (int i = 0; i < m_; ++i) {
        int a = v[2 * i], b = v[2 * i + 1];
        // x * (a + b x) = b c0 + (a + b c1) x
        out[2 * i] = F.mul(b, c0);
        out[2 * i + 1] = F.add(a, F.mul(b, c1));
    }
    return out;
}

bool Fq2Structure::is_stable(const Subspace& w) const {
    for (const auto& row : w.rows())
        if (!w.contains(scalar_action(row))) return false;
    return true;
}

Subspace Fq2Structure::quadratic_span(const Subspace& w) const {
    if (w.ambient() != ambient())
        throw std::invalid_argument("Fq2Structure: ambient mismatch");
    auto rows = w.rows();
    for (const auto& row : w.rows()) rows.push_back(scalar_action(row));
    // x generates the extension, so one application closes the span
    return Subspace::from_rows(*Fp_, ambient(), std::move(rows));
}

int Fq2Structure::quadratic_dim_of(const Subspace& stable) const {
    if (!is_stable(stable))
        throw std::invalid_argument("Fq2Structure: subspace is not stable");
    return stable.dim() / 2;
}

Subspace Fq2Structure::to_base(const Subspace& over_extension) const {
    if (over_extension.ambient() != m_ || !(over_extension.field() == Fq2_))
        throw std::invalid_argument("Fq2Structure: expected subspace of the extension space");
    const int p = Fp_->characteristic();
    std::vector<std::vector<int>> rows;
    for (const auto& row : over_extension.rows()) {
        std::vector<int> flat(ambient());
        for (int i = 0; i < m_; ++i) {
            flat[2 * i] = row[i] % p;
            flat[2 * i + 1] = row[i] / p;
        }
        rows.push_back(flat);
        rows.push_back(scalar_action(flat));
    }
    return Subspace::from_rows(*Fp_, ambient(), std::move(rows));
}

}  // namespace hecke
