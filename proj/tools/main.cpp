// digitop: metrics and pseudometrics on digital images.
//
// Subcommands:
//   dist          distance between two images under a metric spec
//   gen           write a named shape family to grid/coords files
//   verify-paper  run the built-in verification harness

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "digitop/continuity.hpp"
#include "digitop/hausdorff.hpp"
#include "digitop/io.hpp"
#include "digitop/metrics.hpp"
#include "digitop/pseudometric.hpp"
#include "digitop/shapes.hpp"
#include "verify_paper.hpp"

namespace {

using namespace digitop;

io::Format resolve_format(const std::string& flag, const std::filesystem::path& path) {
    if (flag == "grid") return io::Format::Grid;
    if (flag == "coords") return io::Format::Coords;
    return io::format_from_path(path);
}

struct DistFlags {
    std::string metric = "hausdorff";
    double p = 1.0;
    int u = 1;
    std::string ambient_path;
    std::string format = "auto";
    bool witness = false;
    std::uint64_t budget = SearchBudget{}.max_nodes;
    std::string file_a;
    std::string file_b;
};

struct MetricTerm {
    double weight = 1.0;
    bool weighted = false;
    std::string name;
};

std::vector<MetricTerm> split_metric(const std::string& spec) {
    std::vector<MetricTerm> terms;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        const std::size_t comma = spec.find(',', pos);
        const std::string piece =
            spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (piece.empty()) throw std::invalid_argument("dist: empty metric term in '" + spec + "'");
        MetricTerm term;
        const std::size_t star = piece.find('*');
        if (star == std::string::npos) {
            term.name = piece;
        } else {
            std::size_t used = 0;
            term.weight = std::stod(piece.substr(0, star), &used);
            if (used != star || term.weight <= 0.0)
                throw std::invalid_argument("dist: bad weight in metric term '" + piece + "'");
            term.weighted = true;
            term.name = piece.substr(star + 1);
        }
        terms.push_back(term);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return terms;
}

PseudometricSpec make_leaf(const MetricTerm& term, const DistFlags& flags,
                           const std::optional<DigitalImage>& ambient) {
    if (term.name == "hausdorff") return PseudometricSpec::hausdorff_lp(flags.p);
    if (term.name == "hausdorff-path") {
        if (!ambient)
            throw std::invalid_argument("dist: --metric hausdorff-path requires --ambient");
        return PseudometricSpec::hausdorff_path(*ambient);
    }
    if (term.name == "diam-diff") return PseudometricSpec::diam_diff_lp(flags.p);
    if (term.name == "diam-diff-path") {
        if (ambient) return PseudometricSpec::diam_diff_path_in(*ambient);
        return PseudometricSpec::diam_diff_path(flags.u);
    }
    if (term.name == "euler-diff") return PseudometricSpec::euler_diff(flags.u);
    throw std::invalid_argument("dist: unknown metric '" + term.name + "'");
}

int cmd_dist(const DistFlags& flags) {
    const DigitalImage a =
        io::parse_image_file(flags.file_a, resolve_format(flags.format, flags.file_a), flags.u);
    const DigitalImage b =
        io::parse_image_file(flags.file_b, resolve_format(flags.format, flags.file_b), flags.u);
    std::optional<DigitalImage> ambient;
    if (!flags.ambient_path.empty())
        ambient = io::parse_image_file(flags.ambient_path,
                                       resolve_format(flags.format, flags.ambient_path), flags.u);

    // The continuity metric is a standalone metric on whole images, not a
    // pseudometric-spec leaf, so it gets its own path.
    if (flags.metric == "continuity") {
        const ContinuityMetricResult r =
            continuity_metric(a, b, flags.p, SearchBudget{flags.budget});
        std::cout << to_display_string(r.value) << '\n';
        return 0;
    }

    const std::vector<MetricTerm> terms = split_metric(flags.metric);

    if (flags.witness) {
        if (terms.size() != 1 || terms[0].weighted ||
            (terms[0].name != "hausdorff" && terms[0].name != "hausdorff-path"))
            throw std::invalid_argument(
                "dist: --witness needs a single unweighted hausdorff or hausdorff-path metric");
        const HausdorffResult result =
            terms[0].name == "hausdorff"
                ? hausdorff_lp(a.points(), b.points(), flags.p)
                : hausdorff_path(*ambient, a.points(), b.points());
        std::cout << to_display_string(result.value) << '\n'
                  << "witness_a=" << result.witness_a << " witness_b=" << result.witness_b
                  << '\n';
        return 0;
    }

    PseudometricSpec spec = [&] {
        if (terms.size() == 1 && !terms[0].weighted) return make_leaf(terms[0], flags, ambient);
        std::vector<PseudometricSpec::Term> sum;
        for (const MetricTerm& t : terms) sum.push_back({t.weight, make_leaf(t, flags, ambient)});
        return PseudometricSpec::weighted_sum(std::move(sum));
    }();
    std::cout << to_display_string(eval_pseudometric(spec, a.points(), b.points())) << '\n';
    return 0;
}

struct GenFlags {
    std::string family;
    int n = 0;
    int u = 1;
    std::string format = "auto";
    std::string output;
};

void write_or_print(const std::string& body, const std::string& path) {
    if (path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("gen: cannot write to " + path);
    out << body;
    std::cout << "wrote " << path << '\n';
}

int cmd_gen(const GenFlags& flags) {
    const bool paired = flags.family == "square-annulus" || flags.family == "rect-and-c";

    // Annulus families live around the origin, which a grid cannot encode.
    const bool negative_coords =
        flags.family == "square-annulus" || flags.family == "punctured-annulus";
    std::string format = flags.format;
    if (format == "auto") format = negative_coords ? "coords" : "grid";

    auto serialize = [&](const DigitalImage& img) {
        try {
            return format == "grid" ? io::to_grid(img.points()) : io::to_coords(img.points());
        } catch (const io::ParseError& e) {
            throw std::invalid_argument(e.what());
        }
    };

    if (paired) {
        if (flags.output.empty())
            throw std::invalid_argument("gen: " + flags.family +
                                        " writes two files; pass -o PREFIX");
        const auto [first, second] = flags.family == "square-annulus"
                                         ? shapes::annulus_pair(flags.n, flags.u)
                                         : shapes::rect_and_c(flags.n, flags.u);
        const char* tags = flags.family == "square-annulus" ? "XY" : "AB";
        const std::string ext = format == "grid" ? ".grid" : ".coords";
        write_or_print(serialize(first), flags.output + "-" + tags[0] + ext);
        write_or_print(serialize(second), flags.output + "-" + tags[1] + ext);
        return 0;
    }

    const auto family = shapes::parse_family(flags.family);
    if (!family) throw std::invalid_argument("gen: unknown family '" + flags.family + "'");
    write_or_print(serialize(shapes::make(*family, flags.n, flags.u)), flags.output);
    return 0;
}

int cmd_verify(const verify::Options& opt) {
    const std::vector<verify::Claim> claims = verify::run_paper_claims(opt);
    const int fails = verify::print_report(std::cout, claims);
    return fails > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"metrics and pseudometrics on digital images"};
    app.require_subcommand(1);

    DistFlags dist;
    CLI::App* dist_cmd = app.add_subcommand("dist", "distance between two images");
    dist_cmd->add_option("--metric", dist.metric,
                         "metric spec: hausdorff | hausdorff-path | diam-diff | diam-diff-path | "
                         "euler-diff | continuity, or a comma-separated weighted sum like "
                         "'1*hausdorff,2*diam-diff'");
    dist_cmd->add_option("--budget", dist.budget, "node budget for the continuity search");
    dist_cmd->add_option("--p", dist.p, "l_p exponent for lp-based metrics (>= 1)");
    dist_cmd->add_option("--u", dist.u, "adjacency parameter c_u");
    dist_cmd->add_option("--ambient", dist.ambient_path, "ambient image for path-based metrics");
    dist_cmd->add_option("--format", dist.format, "grid | coords | auto (by extension)");
    dist_cmd->add_flag("--witness", dist.witness, "also print Hausdorff witness points");
    dist_cmd->add_option("fileA", dist.file_a, "first image")->required();
    dist_cmd->add_option("fileB", dist.file_b, "second image")->required();

    GenFlags gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate a named shape");
    gen_cmd->add_option("family", gen.family,
                        "full-square | square-snake | rect-bar | c-bar | baseline | "
                        "square-annulus | punctured-annulus | rect-and-c")
        ->required();
    gen_cmd->add_option("--n", gen.n, "size parameter")->required();
    gen_cmd->add_option("--u", gen.u, "adjacency parameter c_u");
    gen_cmd->add_option("--format", gen.format, "grid | coords | auto");
    gen_cmd->add_option("-o,--output", gen.output, "output file (or prefix for paired families)");

    verify::Options vopt;
    CLI::App* verify_cmd = app.add_subcommand("verify-paper", "run the verification harness");
    verify_cmd->add_option("--n-snake", vopt.n_snake, "snake size (even, >= 2)");
    verify_cmd->add_option("--n-rect", vopt.n_rect, "rectangle size (>= 2)");
    verify_cmd->add_option("--n-annulus", vopt.n_annulus, "annulus size (>= 1)");
    verify_cmd->add_option("--budget", vopt.budget, "node budget for the continuity search");
    verify_cmd
        ->add_flag("--self-test-corrupt", vopt.corrupt_one_expectation,
                   "corrupt one expectation to prove FAIL detection works")
        ->group("");  // hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (dist_cmd->parsed()) return cmd_dist(dist);
        if (gen_cmd->parsed()) return cmd_gen(gen);
        return cmd_verify(vopt);
    } catch (const digitop::io::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const digitop::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
