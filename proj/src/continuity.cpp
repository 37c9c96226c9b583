#include "digitop/continuity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "digitop/metrics.hpp"

namespace digitop {

PointMap::PointMap(DigitalImage src, DigitalImage tgt, std::vector<std::size_t> assign)
    : source(std::move(src)), target(std::move(tgt)), assignment(std::move(assign)) {
    if (assignment.size() != source.size())
        throw std::invalid_argument("PointMap: assignment must cover every source point");
    for (std::size_t j : assignment)
        if (j >= target.size())
            throw std::invalid_argument("PointMap: assignment leaves the target");
}

PointMap PointMap::identity(const DigitalImage& x) {
    std::vector<std::size_t> assign(x.size());
    std::iota(assign.begin(), assign.end(), std::size_t{0});
    return PointMap(x, x, std::move(assign));
}

const Point& PointMap::apply(const Point& x) const {
    return target.point(assignment[source.index_of(x)]);
}

bool is_continuous(const PointMap& f) {
    const auto& adj = f.source.adjacency();
    const auto& tadj = f.target.adjacency();
    for (std::size_t i = 0; i < f.source.size(); ++i) {
        const std::size_t fi = f.assignment[i];
        for (std::size_t j : adj[i]) {
            if (j < i) continue;  // each edge once
            const std::size_t fj = f.assignment[j];
            if (fi == fj) continue;
            if (!std::binary_search(tadj[fi].begin(), tadj[fi].end(), fj)) return false;
        }
    }
    return true;
}

BudgetExceeded::BudgetExceeded(std::uint64_t budget)
    : std::runtime_error("homomorphism search budget exceeded (" + std::to_string(budget) +
                         " node expansions)") {}

namespace {

using Domain = std::vector<std::size_t>;

// Closed-neighborhood incidence of the target graph: equal-or-adjacent.
std::vector<std::vector<char>> closed_adjacency(const DigitalImage& y) {
    std::vector<std::vector<char>> m(y.size(), std::vector<char>(y.size(), 0));
    for (std::size_t i = 0; i < y.size(); ++i) {
        m[i][i] = 1;
        for (std::size_t j : y.adjacency()[i]) m[i][j] = 1;
    }
    return m;
}

// AC-3 over the X-edges: y stays in dom[i] only while some z in dom[k]
// supports it for every neighbor k.
bool arc_consistent(const DigitalImage& x, const std::vector<std::vector<char>>& closed,
                    std::vector<Domain>& dom) {
    std::vector<std::pair<std::size_t, std::size_t>> work;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t k : x.adjacency()[i]) work.emplace_back(i, k);

    while (!work.empty()) {
        const auto [i, k] = work.back();
        work.pop_back();
        bool revised = false;
        Domain kept;
        kept.reserve(dom[i].size());
        for (std::size_t y : dom[i]) {
            const bool supported = std::any_of(dom[k].begin(), dom[k].end(),
                                               [&](std::size_t z) { return closed[y][z]; });
            if (supported)
                kept.push_back(y);
            else
                revised = true;
        }
        if (revised) {
            dom[i] = std::move(kept);
            if (dom[i].empty()) return false;
            for (std::size_t k2 : x.adjacency()[i])
                work.emplace_back(k2, i);
        }
    }
    return true;
}

// BFS assignment order from the lexicographically least root of each
// component, so each new variable (after the roots) has an assigned
// neighbor constraining it.
std::vector<std::size_t> bfs_order(const DigitalImage& x) {
    std::vector<std::size_t> order;
    std::vector<char> seen(x.size(), 0);
    for (std::size_t root = 0; root < x.size(); ++root) {
        if (seen[root]) continue;
        seen[root] = 1;
        std::size_t head = order.size();
        order.push_back(root);
        while (head < order.size()) {
            const std::size_t v = order[head++];
            for (std::size_t w : x.adjacency()[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    order.push_back(w);
                }
        }
    }
    return order;
}

struct Searcher {
    const DigitalImage& x;
    const std::vector<std::vector<char>>& closed;
    const std::vector<std::size_t>& order;
    std::vector<Domain>& dom;
    std::vector<std::size_t>& assign;
    std::vector<char>& assigned;
    std::uint64_t budget;
    std::uint64_t nodes = 0;

    bool solve(std::size_t depth) {
        if (depth == order.size()) return true;
        const std::size_t v = order[depth];
        const Domain candidates = dom[v];
        for (std::size_t y : candidates) {
            if (++nodes > budget) throw BudgetExceeded(budget);
            assign[v] = y;
            assigned[v] = 1;

            // forward-check unassigned neighbors, remembering removals
            std::vector<std::pair<std::size_t, Domain>> saved;
            bool dead = false;
            for (std::size_t w : x.adjacency()[v]) {
                if (assigned[w]) continue;
                Domain filtered;
                filtered.reserve(dom[w].size());
                for (std::size_t z : dom[w])
                    if (closed[y][z]) filtered.push_back(z);
                if (filtered.size() != dom[w].size()) {
                    saved.emplace_back(w, std::move(dom[w]));
                    dom[w] = std::move(filtered);
                }
                if (dom[w].empty()) {
                    dead = true;
                    break;
                }
            }
            if (!dead && solve(depth + 1)) return true;
            for (auto& [w, d] : saved) dom[w] = std::move(d);
            assigned[v] = 0;
        }
        return false;
    }
};

std::optional<PointMap> search_at_power(const DigitalImage& x, const DigitalImage& y,
                                        double power_threshold, double p, SearchBudget budget) {
    std::vector<Domain> dom(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < y.size(); ++j)
            if (lp_power_sum(x.point(i), y.point(j), p) <= power_threshold)
                dom[i].push_back(j);
        if (dom[i].empty()) return std::nullopt;
    }

    const std::vector<std::vector<char>> closed = closed_adjacency(y);
    if (!arc_consistent(x, closed, dom)) return std::nullopt;

    const std::vector<std::size_t> order = bfs_order(x);
    std::vector<std::size_t> assign(x.size(), 0);
    std::vector<char> assigned(x.size(), 0);
    Searcher searcher{x, closed, order, dom, assign, assigned, budget.max_nodes};
    if (!searcher.solve(0)) return std::nullopt;
    return PointMap(x, y, std::move(assign));
}

double power_of(double t, double p) {
    if (p == 1.0) return t;
    if (p == 2.0) return t * t;
    return std::pow(t, p);
}

double root_of(double s, double p) {
    if (p == 1.0) return s;
    if (p == 2.0) return std::sqrt(s);
    return std::pow(s, 1.0 / p);
}

}  // namespace

std::optional<PointMap> feasible_at_threshold(const DigitalImage& x, const DigitalImage& y,
                                              double t, double p, SearchBudget budget) {
    if (t < 0.0) throw std::invalid_argument("feasible_at_threshold: t must be >= 0");
    if (p < 1.0) throw std::invalid_argument("feasible_at_threshold: p must be >= 1");
    // Realized power sums of lattice points are integers for integral p;
    // the slack only guards against roundoff in t^p itself.
    const double power = power_of(t, p) * (1.0 + 1e-12) + 1e-12;
    return search_at_power(x, y, power, p, budget);
}

DisplacementResult one_sided_displacement(const DigitalImage& x, const DigitalImage& y, double p,
                                          SearchBudget budget) {
    if (x.dim() != y.dim())
        throw std::invalid_argument("one_sided_displacement: dimension mismatch");
    if (x.u() != y.u())
        throw std::invalid_argument("one_sided_displacement: adjacency parameters differ");
    if (p < 1.0) throw std::invalid_argument("one_sided_displacement: p must be >= 1");

    // Candidate thresholds: the realized distances, in power space.
    std::vector<double> values;
    values.reserve(x.size() * y.size());
    double lower = 0.0;  // directed max-min: no threshold below it is feasible
    for (std::size_t i = 0; i < x.size(); ++i) {
        double nearest = -1.0;
        for (std::size_t j = 0; j < y.size(); ++j) {
            const double s = lp_power_sum(x.point(i), y.point(j), p);
            values.push_back(s);
            if (nearest < 0.0 || s < nearest) nearest = s;
        }
        lower = std::max(lower, nearest);
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    values.erase(values.begin(),
                 std::lower_bound(values.begin(), values.end(), lower));

    // Feasibility is monotone in the threshold; the largest candidate
    // admits every map, so the search space is never empty.
    std::size_t lo = 0, hi = values.size() - 1;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (search_at_power(x, y, values[mid], p, budget))
            hi = mid;
        else
            lo = mid + 1;
    }
    std::optional<PointMap> witness = search_at_power(x, y, values[lo], p, budget);
    if (!witness)
        throw std::logic_error("one_sided_displacement: no feasible threshold found");
    return {ExtDist(root_of(values[lo], p)), std::move(*witness)};
}

ContinuityMetricResult continuity_metric(const DigitalImage& x, const DigitalImage& y, double p,
                                         SearchBudget budget) {
    DisplacementResult forward = one_sided_displacement(x, y, p, budget);
    DisplacementResult backward = one_sided_displacement(y, x, p, budget);
    ExtDist value = std::max(forward.value, backward.value);
    return {value, forward.value, backward.value, std::move(forward.witness),
            std::move(backward.witness)};
}

}  // namespace digitop
