/**
 * @file report.hpp
 * @brief Verification runs and their JSON / TSV / pretty renderings.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "envlab/envelope.hpp"
#include "envlab/golden.hpp"
#include "envlab/limits.hpp"

namespace envlab {

enum class Format { Json, Tsv, Pretty };

/// Throws InputError for anything but json, tsv, pretty.
Format format_from_string(const std::string& s);

/// "trivial", "NAME", "NAME/N" or "NAME/search".
struct SlopeSpec {
    std::string name = "trivial";
    std::int64_t n = 1;
    bool search = false;

    static SlopeSpec parse(const std::string& s);
    Slope resolve(const GKMSpace& x) const;
};

struct PairFacets {
    PointId f = 0, g = 0;
    std::vector<FacetRow> rows;
};

struct VerifyOutcome {
    const GKMSpace* space = nullptr;
    Chamber chamber;
    Slope slope;
    bool strong = true;
    AxiomReport report;
    std::optional<MinimalN> minimal;
    std::vector<PairFacets> facets; // nontrivial slopes only

    bool pass() const;
};

/// Builds the mC candidate and checks it. With spec.search the slope
/// denominator is the minimal n found; facet analysis runs for nontrivial
/// slopes.
VerifyOutcome run_verify(const GKMSpace& x, const Chamber& c, const SlopeSpec& spec, bool strong);

std::string render_space(const GKMSpace& x, const std::vector<Chamber>& chambers, Format fmt);
std::string render_verify(const VerifyOutcome& v, Format fmt);
std::string render_examples(const ExampleRun& run, Format fmt);

/// Summary lines of a worked-example run, e.g. "P2 example: 9/9 golden values match".
std::vector<std::string> example_summary(const ExampleRun& run);

} // namespace envlab
