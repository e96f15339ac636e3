#include "hecke/motive_inv.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hecke {

long long NilpotentInvariants::rank() const {
    return std::accumulate(k.begin(), k.end(), 0LL);
}

long long NilpotentInvariants::dimension() const {
    long long n = 0;
    for (size_t i = 0; i < k.size(); ++i) n += static_cast<long long>(i) * k[i];
    return n;
}

std::string NilpotentInvariants::str() const {
    std::ostringstream os;
    os << "nu=" << nu << " k=(";
    for (size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
    os << ")";
    return os.str();
}

InvariantDiagnostics validate(int nu, const std::vector<long long>& k, long long r,
                              long long n) {
    InvariantDiagnostics d;
    if (nu < 1) d.problems.push_back("nu must be >= 1");
    if (static_cast<int>(k.size()) != nu + 1)
        d.problems.push_back("expected nu+1 entries, got " + std::to_string(k.size()));
    for (long long ki : k)
        if (ki < 0) d.problems.push_back("negative block size");
    if (!d.problems.empty()) return d;

    NilpotentInvariants inv{nu, k};
    if (inv.rank() != r)
        d.problems.push_back("rank sum " + std::to_string(inv.rank()) + " != r=" +
                             std::to_string(r));
    if (inv.dimension() != n)
        d.problems.push_back("dimension sum " + std::to_string(inv.dimension()) +
                             " != n=" + std::to_string(n));
    if (nu > 1 && k.back() == 0)
        d.problems.push_back("k_{nu+1}=0 contradicts minimality of nu");
    d.valid = d.problems.empty();
    return d;
}

namespace {

void enumerate_rec(int slot, int slots, long long r_left, long long n_left,
                   std::vector<long long>& k, std::vector<NilpotentInvariants>& out, int nu) {
    if (slot == slots) {
        if (r_left == 0 && n_left == 0) {
            if (nu > 1 && k.back() == 0) return;
            out.push_back(NilpotentInvariants{nu, k});
        }
        return;
    }
    // slot index i contributes i * k to the dimension
    for (long long v = 0; v <= r_left; ++v) {
        long long contrib = static_cast<long long>(slot) * v;
        if (contrib > n_left) break;
        k[slot] = v;
        enumerate_rec(slot + 1, slots, r_left - v, n_left - contrib, k, out, nu);
    }
    k[slot] = 0;
}

}  // namespace

std::vector<NilpotentInvariants> enumerate_invariants(long long r, long long n, int nu_max) {
    if (r < 1) throw std::invalid_argument("enumerate_invariants: r must be >= 1");
    if (n < 0) throw std::invalid_argument("enumerate_invariants: n must be >= 0");
    if (nu_max < 1) throw std::invalid_argument("enumerate_invariants: nu_max must be >= 1");
    std::vector<NilpotentInvariants> out;
    for (int nu = 1; nu <= nu_max; ++nu) {
        std::vector<NilpotentInvariants> level;
        std::vector<long long> k(nu + 1, 0);
        enumerate_rec(0, nu + 1, r, n, k, level, nu);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;  // recursion yields each nu-level in ascending k-lex order
}

std::vector<long long> to_weights(const NilpotentInvariants& inv) {
    auto d = validate(inv.nu, inv.k, inv.rank(), inv.dimension());
    if (!d.valid) throw std::invalid_argument("to_weights: invalid invariants");
    std::vector<long long> w;
    for (size_t i = 0; i < inv.k.size(); ++i)
        for (long long c = 0; c < inv.k[i]; ++c) w.push_back(-static_cast<long long>(i));
    return w;  // built in descending order: zeros first, then -1s, ...
}

LeviBlocks levi_blocks(const NilpotentInvariants& inv) {
    auto d = validate(inv.nu, inv.k, inv.rank(), inv.dimension());
    if (!d.valid) throw std::invalid_argument("levi_blocks: invalid invariants");
    LeviBlocks b;
    b.sizes = inv.k;
    for (long long ki : inv.k) b.zero_block.push_back(ki == 0);
    return b;
}

nlohmann::json LeviBlocks::to_json() const {
    nlohmann::json j;
    j["sizes"] = sizes;
    j["zero_blocks"] = zero_block;
    j["conjectural"] = conjectural;
    return j;
}

}  // namespace hecke
