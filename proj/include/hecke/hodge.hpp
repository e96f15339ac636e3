#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace hecke {

// Hodge numbers h^{0,d}..h^{d,0} of a weight-d generic submotive, produced by
// subset-sum counts. The functional reading of the unitary formula is
// conjectural and flagged as such in output.
struct HodgeVector {
    int weight = 0;
    std::vector<long long> h;
    bool conjectural = false;

    long long total() const;
    bool symmetric() const;
    std::string str() const;
    nlohmann::json to_json() const;
};

// weight g(g+1)/2; h^{i,d-i} counts subsets of {1..g} with element sum i.
HodgeVector siegel_hodge(int g);

// weight (r-n)n; h^{i,d-i} counts n-subsets of {1..r} with sum (1+..+n)+i.
// n = 0 is allowed (the complement of n = r) and gives the single class.
HodgeVector unitary_hodge(int r, int n);

}  // namespace hecke
