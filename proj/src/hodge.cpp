#include "hecke/hodge.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hecke {

long long HodgeVector::total() const {
    return std::accumulate(h.begin(), h.end(), 0LL);
}

bool HodgeVector::symmetric() const {
    for (size_t i = 0; i < h.size(); ++i)
        if (h[i] != h[h.size() - 1 - i]) return false;
    return true;
}

std::string HodgeVector::str() const {
    std::ostringstream os;
    os << "weight " << weight << ": (";
    for (size_t i = 0; i < h.size(); ++i) os << (i ? "," : "") << h[i];
    os << ")";
    if (conjectural) os << " [CONJECTURAL for the functional case]";
    return os.str();
}

nlohmann::json HodgeVector::to_json() const {
    nlohmann::json j;
    j["weight"] = weight;
    j["h"] = h;
    if (conjectural) j["conjectural"] = true;
    return j;
}

HodgeVector siegel_hodge(int g) {
    if (g < 1) throw std::invalid_argument("siegel_hodge: g must be >= 1");
    const int d = g * (g + 1) / 2;
    // subset-sum count over {1..g}; the empty subset contributes h^{0,d}
    std::vector<long long> count(d + 1, 0);
    count[0] = 1;
    for (int v = 1; v <= g; ++v)
        for (int s = d; s >= v; --s) count[s] += count[s - v];
    return HodgeVector{d, std::move(count), false};
}

HodgeVector unitary_hodge(int r, int n) {
    if (n < 0 || n > r) throw std::invalid_argument("unitary_hodge: need 0 <= n <= r");
    const int d = (r - n) * n;
    const int base = n * (n + 1) / 2;  // minimal n-subset sum
    // dp[k][s] = number of k-subsets of {1..r} with sum s
    std::vector<std::vector<long long>> dp(n + 1, std::vector<long long>(base + d + 1, 0));
    dp[0][0] = 1;
    for (int v = 1; v <= r; ++v)
        for (int k = n; k >= 1; --k)
            for (int s = base + d; s >= v; --s) dp[k][s] += dp[k - 1][s - v];
    std::vector<long long> h(d + 1);
    for (int i = 0; i <= d; ++i) h[i] = dp[n][base + i];
    return HodgeVector{d, std::move(h), true};
}

}  // namespace hecke
