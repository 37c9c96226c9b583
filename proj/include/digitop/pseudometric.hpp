#pragma once

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "digitop/ext_dist.hpp"
#include "digitop/image.hpp"
#include "digitop/point.hpp"

namespace digitop {

// A description of a pseudometric on pairs of nonempty point sets:
// a Hausdorff distance (l_p or path-based), a diameter difference,
// an Euler-characteristic difference, or a positively weighted sum of
// such terms. A sum of pseudometrics is again a pseudometric, and it is
// a metric as soon as one term is (e.g. any Hausdorff-l_p term).
class PseudometricSpec {
public:
    struct HausdorffLp {
        double p;
    };
    struct HausdorffPath {
        DigitalImage ambient;
    };
    struct DiamDiffLp {
        double p;
    };
    // With an ambient, both diameters are taken inside it; without one,
    // each set is measured as its own image under c_u (the s_kappa of the
    // worked examples).
    struct DiamDiffPath {
        std::optional<DigitalImage> ambient;
        int u = 1;
    };
    struct EulerDiff {
        int u = 1;  // adjacency under which both sets are read as images
    };
    struct Term;         // { weight, spec }, defined after the class
    struct WeightedSum;  // { vector<Term> }
    struct Node;

    static PseudometricSpec hausdorff_lp(double p);
    static PseudometricSpec hausdorff_path(DigitalImage ambient);
    static PseudometricSpec diam_diff_lp(double p);
    static PseudometricSpec diam_diff_path(int u);                    // each set in itself
    static PseudometricSpec diam_diff_path_in(DigitalImage ambient);  // fixed ambient
    static PseudometricSpec euler_diff(int u);
    // Throws std::invalid_argument when terms are empty or a weight is <= 0.
    static PseudometricSpec weighted_sum(std::vector<Term> terms);

    const Node& node() const { return *node_; }

private:
    explicit PseudometricSpec(Node n);
    std::shared_ptr<const Node> node_;
};

struct PseudometricSpec::Term {
    double weight;
    PseudometricSpec spec;
};

struct PseudometricSpec::WeightedSum {
    std::vector<Term> terms;
};

struct PseudometricSpec::Node {
    std::variant<HausdorffLp, HausdorffPath, DiamDiffLp, DiamDiffPath, EulerDiff, WeightedSum>
        value;
};

// Evaluates the spec on two nonempty point sets. Leaf preconditions
// (ambient containment, dimension agreement) propagate as
// std::invalid_argument.
ExtDist eval_pseudometric(const PseudometricSpec& spec, const std::vector<Point>& a,
                          const std::vector<Point>& b);

}  // namespace digitop
