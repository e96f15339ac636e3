#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace hecke {

// Discrete invariants of a t-motive with nilpotency order nu: nonnegative
// k_1..k_{nu+1} with rank r = sum k_i and dimension n = sum (i-1) k_i.
// Minimality of nu forces k_{nu+1} >= 1 once nu > 1.
struct NilpotentInvariants {
    int nu = 1;
    std::vector<long long> k;

    long long rank() const;
    long long dimension() const;
    friend bool operator==(const NilpotentInvariants& a, const NilpotentInvariants& b) {
        return a.nu == b.nu && a.k == b.k;
    }
    std::string str() const;
};

struct InvariantDiagnostics {
    bool valid = false;
    std::vector<std::string> problems;
};

InvariantDiagnostics validate(int nu, const std::vector<long long>& k, long long r,
                              long long n);

// All valid invariant tuples with nu <= nu_max, ordered by nu then
// lexicographically by the k-list.
std::vector<NilpotentInvariants> enumerate_invariants(long long r, long long n, int nu_max);

// Hodge-Pink weight multiset: the value -(i-1) appears k_i times; sorted
// descending so zeros lead. The weight sum is always -n.
std::vector<long long> to_weights(const NilpotentInvariants& inv);

// Predicted Levi block sizes: the k-list itself. Zero blocks are kept and
// flagged rather than collapsed; the prediction is conjectural.
struct LeviBlocks {
    std::vector<long long> sizes;
    std::vector<bool> zero_block;
    bool conjectural = true;
    nlohmann::json to_json() const;
};
LeviBlocks levi_blocks(const NilpotentInvariants& inv);

}  // namespace hecke
