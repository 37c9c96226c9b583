#include "digitop/pseudometric.hpp"

#include <stdexcept>

#include "digitop/euler.hpp"
#include "digitop/hausdorff.hpp"
#include "digitop/metrics.hpp"

namespace digitop {

PseudometricSpec::PseudometricSpec(Node n)
    : node_(std::make_shared<const Node>(std::move(n))) {}

PseudometricSpec PseudometricSpec::hausdorff_lp(double p) {
    if (p < 1.0) throw std::invalid_argument("PseudometricSpec: p must be >= 1");
    return PseudometricSpec(Node{HausdorffLp{p}});
}

PseudometricSpec PseudometricSpec::hausdorff_path(DigitalImage ambient) {
    return PseudometricSpec(Node{HausdorffPath{std::move(ambient)}});
}

PseudometricSpec PseudometricSpec::diam_diff_lp(double p) {
    if (p < 1.0) throw std::invalid_argument("PseudometricSpec: p must be >= 1");
    return PseudometricSpec(Node{DiamDiffLp{p}});
}

PseudometricSpec PseudometricSpec::diam_diff_path(int u) {
    if (u < 1) throw std::invalid_argument("PseudometricSpec: u must be >= 1");
    return PseudometricSpec(Node{DiamDiffPath{std::nullopt, u}});
}

PseudometricSpec PseudometricSpec::diam_diff_path_in(DigitalImage ambient) {
    const int u = ambient.u();
    return PseudometricSpec(Node{DiamDiffPath{std::move(ambient), u}});
}

PseudometricSpec PseudometricSpec::euler_diff(int u) {
    if (u < 1) throw std::invalid_argument("PseudometricSpec: u must be >= 1");
    return PseudometricSpec(Node{EulerDiff{u}});
}

PseudometricSpec PseudometricSpec::weighted_sum(std::vector<Term> terms) {
    if (terms.empty())
        throw std::invalid_argument("PseudometricSpec: weighted sum needs at least one term");
    for (const Term& t : terms)
        if (!(t.weight > 0.0))
            throw std::invalid_argument("PseudometricSpec: weights must be positive");
    return PseudometricSpec(Node{WeightedSum{std::move(terms)}});
}

ExtDist eval_pseudometric(const PseudometricSpec& spec, const std::vector<Point>& a,
                          const std::vector<Point>& b) {
    struct Eval {
        const std::vector<Point>& a;
        const std::vector<Point>& b;

        ExtDist operator()(const PseudometricSpec::HausdorffLp& s) const {
            return hausdorff_lp(a, b, s.p).value;
        }
        ExtDist operator()(const PseudometricSpec::HausdorffPath& s) const {
            return hausdorff_path(s.ambient, a, b).value;
        }
        ExtDist operator()(const PseudometricSpec::DiamDiffLp& s) const {
            return diam_diff(a, b, PointMetric::lp(s.p));
        }
        ExtDist operator()(const PseudometricSpec::DiamDiffPath& s) const {
            const PointMetric m = s.ambient ? PointMetric::path_in(*s.ambient)
                                            : PointMetric::intrinsic_path(s.u);
            return diam_diff(a, b, m);
        }
        ExtDist operator()(const PseudometricSpec::EulerDiff& s) const {
            const DigitalImage ia(a, s.u);
            const DigitalImage ib(b, s.u);
            return ExtDist(static_cast<double>(euler_diff(ia, ib)));
        }
        ExtDist operator()(const PseudometricSpec::WeightedSum& s) const {
            ExtDist total(0.0);
            for (const PseudometricSpec::Term& t : s.terms)
                total = total + t.weight * eval_pseudometric(t.spec, a, b);
            return total;
        }
    };
    return std::visit(Eval{a, b}, spec.node().value);
}

}  // namespace digitop
