/**
 * @file golden.hpp
 * @brief Embedded reference values for the P^2 and T*P^1 examples and the
 *        routine that recomputes and compares them.
 *
 * P^2 setup: A = (C^*)^2 acting with coordinate characters (0, a, b), chamber
 * sigma = (1, 2), F = e1, F' = e2, slope O(-1).
 * T*P^1 setup: coordinate characters (a, 0), chamber sigma = (1). The two
 * printed candidate families are
 *   family 1:  Stab(e0) = 1 - O(-1),  Stab(e1) = 1/y - O(-1)/a
 *   family 2:  Stab(e0) = 1 - O(-1),  Stab(e1) = O(-1)/y - O(-2)/a
 */
#pragma once

#include <string>
#include <vector>

#include "envlab/envelope.hpp"
#include "envlab/limits.hpp"

namespace envlab {

struct GoldenCheck {
    std::string name;
    bool pass = false;
    std::string expected;
    std::string actual;
    std::vector<std::string> diff; // term-level differences on mismatch
};

struct P2Example {
    std::vector<GoldenCheck> checks;
    std::vector<FacetRow> facet_rows;

    std::size_t matched() const;
    bool ok() const { return matched() == checks.size(); }
};

struct TP1Example {
    bool family1_weak = false, family2_weak = false;
    bool family1_strong = false, family2_strong = false;
    int strong_passer = 0; // 1 or 2 when exactly one passes, else 0
    bool passer_equals_mc = false;
    StabCandidate family1, family2, mc;

    bool ok() const;
};

struct ExampleRun {
    P2Example p2;
    TP1Example tp1;

    bool ok() const { return p2.ok() && tp1.ok(); }
};

/// The P^2 space and chamber of the worked example.
GKMSpace p2_example_space();
Chamber p2_example_chamber();
/// P^1 with coordinate characters (a, 0).
GKMSpace tp1_example_space();
Chamber tp1_example_chamber();

/// The two printed T*P^1 families as candidates on `x` (which must be the
/// space returned by tp1_example_space()).
StabCandidate tp1_family(const GKMSpace& x, int which);

ExampleRun run_paper_examples();

/// Term-level differences, "missing C @ [..]" or "extra C @ [..]".
std::vector<std::string> term_diff(const LaurentPoly& expected, const LaurentPoly& actual);

} // namespace envlab
