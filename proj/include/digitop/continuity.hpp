#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "digitop/image.hpp"
#include "digitop/point.hpp"

namespace digitop {

// An explicit total map between two digital images. assignment[i] is the
// index (into target.points()) of the image of source point i.
struct PointMap {
    DigitalImage source;
    DigitalImage target;
    std::vector<std::size_t> assignment;

    // Throws std::invalid_argument if the assignment is not total or maps
    // outside the target.
    PointMap(DigitalImage src, DigitalImage tgt, std::vector<std::size_t> assign);

    static PointMap identity(const DigitalImage& x);

    const Point& apply(const Point& x) const;
    const Point& apply_index(std::size_t i) const { return target.point(assignment[i]); }
};

// True iff adjacent source points map to equal or adjacent target points.
bool is_continuous(const PointMap& f);

// Thrown when the homomorphism search exceeds its node-expansion budget
// instead of returning a possibly wrong answer.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(std::uint64_t budget);
};

struct SearchBudget {
    std::uint64_t max_nodes = 2'000'000;
};

// Decision procedure behind the metric of continuity: is there a
// continuous f: X -> Y moving no point farther than t under l_p?
// Candidate lists per source point are pruned by arc consistency, then a
// backtracking search assigns points in BFS order from the
// lexicographically least root, tie-breaking candidates lexicographically,
// so the returned witness is deterministic.
std::optional<PointMap> feasible_at_threshold(const DigitalImage& x, const DigitalImage& y,
                                              double t, double p,
                                              SearchBudget budget = {});

struct DisplacementResult {
    ExtDist value;
    PointMap witness;
};

// min over continuous f: X -> Y of max_x d_p(x, f(x)). The optimum is
// attained on the finite set of realized distances; a binary search over
// that set drives feasible_at_threshold. Always finite (constant maps are
// continuous). Requires equal dimension and equal u.
DisplacementResult one_sided_displacement(const DigitalImage& x, const DigitalImage& y,
                                          double p, SearchBudget budget = {});

struct ContinuityMetricResult {
    ExtDist value;  // max of the two one-sided displacements
    ExtDist forward_displacement;
    ExtDist backward_displacement;
    PointMap forward_witness;
    PointMap backward_witness;
};

// Borsuk's metric of continuity under l_p: the least t admitting
// continuous maps X -> Y and Y -> X that move no point farther than t.
// The two constraints share no variables, so the optimum is the max of
// the one-sided optima.
ContinuityMetricResult continuity_metric(const DigitalImage& x, const DigitalImage& y,
                                         double p, SearchBudget budget = {});

}  // namespace digitop
