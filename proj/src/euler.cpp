#include "digitop/euler.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace digitop {

namespace {

// Every clique {v1 < ... < vk} is reached exactly once by growing from
// its least vertex through higher-indexed common neighbors.
void grow(const std::vector<std::vector<std::size_t>>& adj, const std::vector<std::size_t>& cand,
          std::size_t size, std::vector<long long>& counts) {
    if (counts.size() <= size) counts.resize(size + 1, 0);
    for (std::size_t i = 0; i < cand.size(); ++i) {
        const std::size_t w = cand[i];
        ++counts[size];
        std::vector<std::size_t> next;
        std::set_intersection(cand.begin() + static_cast<std::ptrdiff_t>(i) + 1, cand.end(),
                              std::upper_bound(adj[w].begin(), adj[w].end(), w), adj[w].end(),
                              std::back_inserter(next));
        if (!next.empty()) grow(adj, next, size + 1, counts);
    }
}

}  // namespace

std::vector<long long> clique_counts(const DigitalImage& x) {
    const auto& adj = x.adjacency();
    std::vector<long long> counts{static_cast<long long>(x.size())};
    for (std::size_t v = 0; v < x.size(); ++v) {
        std::vector<std::size_t> cand(std::upper_bound(adj[v].begin(), adj[v].end(), v),
                                      adj[v].end());
        if (!cand.empty()) grow(adj, cand, 1, counts);
    }
    return counts;
}

long long euler_characteristic(const DigitalImage& x) {
    const std::vector<long long> counts = clique_counts(x);
    long long chi = 0;
    int sign = 1;
    for (long long c : counts) {
        chi += sign * c;
        sign = -sign;
    }
    return chi;
}

long long euler_diff(const DigitalImage& a, const DigitalImage& b) {
    return std::llabs(euler_characteristic(a) - euler_characteristic(b));
}

}  // namespace digitop
