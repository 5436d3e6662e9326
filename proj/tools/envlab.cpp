// Command-line front end: build or load a space, print it, verify the
// stable-envelope axioms for the mC candidate, or rerun the worked examples.
//
// Exit codes: 0 success, 1 verification failure, 2 input or usage error.

#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "envlab/report.hpp"
#include "envlab/space_io.hpp"

using namespace envlab;

namespace {

struct Options {
    std::string builtin;
    std::string space_file;
    std::vector<std::string> weights;
    std::string sigma;
    std::string slope = "trivial";
    std::string format = "pretty";
    bool weak_c = false;
};

std::vector<std::int64_t> parse_csv(const std::string& s, const std::string& what) {
    std::vector<std::int64_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stoll(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InputError("bad integer '" + item + "' in " + what);
        }
    }
    if (out.empty()) throw InputError("empty " + what);
    return out;
}

std::vector<ExpVec> standard_characters(std::size_t n, std::size_t rank, std::size_t offset) {
    std::vector<ExpVec> chi;
    for (std::size_t i = 0; i <= n; ++i) {
        ExpVec e = ExpVec::zero(rank);
        if (i > 0) e.a[offset + i - 1] = 1;
        chi.push_back(e);
    }
    return chi;
}

GKMSpace build_space(const Options& o) {
    if (o.builtin.empty() == o.space_file.empty())
        throw InputError("give exactly one of --builtin and --space-file");
    if (!o.space_file.empty()) {
        if (!o.weights.empty()) throw InputError("--weights applies to builtin spaces only");
        return load_space_file(o.space_file);
    }
    std::vector<ExpVec> given;
    for (const auto& w : o.weights) given.push_back(ExpVec(parse_csv(w, "--weights")));

    std::smatch m;
    static const std::regex single(R"(P(\d+))"), prod(R"(P(\d+)xP(\d+))");
    if (std::regex_match(o.builtin, m, single)) {
        const std::size_t n = std::stoul(m[1]);
        if (n > 6) throw InputError("builtin P^n is limited to n <= 6");
        if (given.empty()) return projective_space(n, standard_characters(n, n, 0));
        if (given.size() != n + 1) throw InputError("P" + std::to_string(n) + " needs " + std::to_string(n + 1) + " weights");
        return projective_space(n, given);
    }
    if (std::regex_match(o.builtin, m, prod)) {
        const std::size_t n = std::stoul(m[1]), k = std::stoul(m[2]);
        if (n + k > 6) throw InputError("builtin products are limited to total dimension 6");
        std::vector<ExpVec> cx, cy;
        if (given.empty()) {
            cx = standard_characters(n, n + k, 0);
            cy = standard_characters(k, n + k, n);
        } else {
            if (given.size() != n + k + 2)
                throw InputError(o.builtin + " needs " + std::to_string(n + k + 2) + " weights");
            cx.assign(given.begin(), given.begin() + static_cast<long>(n + 1));
            cy.assign(given.begin() + static_cast<long>(n + 1), given.end());
        }
        return product(projective_space(n, cx), projective_space(k, cy));
    }
    throw InputError("unknown builtin '" + o.builtin + "' (P1, P2, P3, PnxPm)");
}

Chamber choose_chamber(const GKMSpace& x, const std::string& sigma) {
    if (!sigma.empty()) {
        Chamber c(parse_csv(sigma, "--sigma"));
        x.require_generic(c);
        return c;
    }
    Cochar def(x.rank());
    for (std::size_t i = 0; i < def.size(); ++i) def[i] = static_cast<std::int64_t>(i + 1);
    if (x.rank() > 0 && x.is_generic(Chamber(def))) return Chamber(def);
    const auto reps = chamber_representatives(x);
    if (reps.empty()) throw InputError("no generic cocharacter found; pass --sigma");
    return reps.front();
}

void add_space_options(CLI::App* cmd, Options& o) {
    cmd->add_option("--builtin", o.builtin, "P1, P2, P3 or PnxPm");
    cmd->add_option("--space-file", o.space_file, "JSON space definition");
    cmd->add_option("--weights", o.weights, "coordinate characters of a builtin, one CSV vector each");
    cmd->add_option("--sigma", o.sigma, "chamber cocharacter as CSV");
    cmd->add_option("--format", o.format, "json, tsv or pretty");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stable envelopes and motivic Chern classes of cells: exact checks"};
    app.require_subcommand(1);
    Options o;

    auto* space = app.add_subcommand("space", "describe a space: points, weights, cells, order, bundles");
    add_space_options(space, o);
    auto* verify = app.add_subcommand("verify", "check the stable-envelope axioms for the mC candidate");
    add_space_options(verify, o);
    verify->add_option("--slope", o.slope, "trivial | NAME | NAME/N | NAME/search");
    verify->add_flag("--weak-c", o.weak_c, "drop the excluded point from axiom c");
    auto* examples = app.add_subcommand("paper-examples", "recompute the P2 and T*P1 examples against golden data");
    examples->add_option("--format", o.format, "json, tsv or pretty");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const Format fmt = format_from_string(o.format);
        if (space->parsed()) {
            const GKMSpace x = build_space(o);
            std::vector<Chamber> chambers;
            if (!o.sigma.empty())
                chambers.push_back(choose_chamber(x, o.sigma));
            else
                chambers = chamber_representatives(x);
            std::cout << render_space(x, chambers, fmt);
            return 0;
        }
        if (verify->parsed()) {
            const GKMSpace x = build_space(o);
            const Chamber c = choose_chamber(x, o.sigma);
            const VerifyOutcome v = run_verify(x, c, SlopeSpec::parse(o.slope), !o.weak_c);
            std::cout << render_verify(v, fmt);
            return v.pass() ? 0 : 1;
        }
        if (examples->parsed()) {
            const ExampleRun run = run_paper_examples();
            std::cout << render_examples(run, fmt);
            return run.ok() ? 0 : 1;
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SearchCapExceeded& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
