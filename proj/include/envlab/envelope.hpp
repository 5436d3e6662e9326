/**
 * @file envelope.hpp
 * @brief Stable-envelope candidates and checks of the three axioms.
 *
 * Entry (F, F') of a candidate is the value at F' of the class attached to F.
 * Axiom a is checked only through fixed-point consequences (vanishing outside
 * the closure order and divisibility by lambda_{-y} of the conormal of the
 * cell), which are necessary conditions for the support statement.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "envlab/kclasses.hpp"
#include "envlab/polytope.hpp"
#include "envlab/spaces.hpp"

namespace envlab {

/// Rational slope s/n, s a linearized line bundle given by its restrictions.
struct Slope {
    std::string name = "trivial";
    std::vector<ExpVec> values; // s restricted to each fixed point
    std::int64_t n = 1;
    Ampleness ampleness = Ampleness::Trivial;

    static Slope trivial(const GKMSpace& x);
    /// Throws InputError for an unknown bundle or n < 1.
    static Slope from_bundle(const GKMSpace& x, const std::string& name, std::int64_t n = 1);

    Slope with_n(std::int64_t n) const;
    /// (s|_f - s|_g) / n
    QVec difference(PointId f, PointId g) const;
    bool is_trivial() const;
    std::string tag() const;
};

struct StabCandidate {
    const GKMSpace* space = nullptr;
    Chamber chamber;
    PartialOrder order;
    std::vector<std::vector<LaurentPoly>> table; // table[F][F']
    std::string label;

    const LaurentPoly& entry(PointId f, PointId g) const { return table.at(f).at(g); }
    bool same_table(const StabCandidate& o) const { return table == o.table; }
};

/// Entry (F, F') = mC_{-y}(cell F)|_{F'} / y^{dim cell F}.
StabCandidate candidate_from_mc(const GKMSpace& x, const Chamber& c);

/// Per-check evidence. Which fields are filled depends on the check.
struct Witness {
    std::optional<LaurentPoly> entry;
    std::optional<LaurentPoly> quotient;
    std::optional<LaurentPoly> lhs, rhs;
    std::vector<QVec> polytope;       // translated entry polytope
    std::vector<QVec> bound;          // containing polytope
    std::optional<QVec> excluded;     // the point that must be avoided
    std::optional<QVec> counterexample;
    std::string note;
};

enum class Axiom { Vanishing, Divisibility, Normalization, Smallness };

std::string to_string(Axiom a);

struct PairRecord {
    PointId f = 0, g = 0;
    Axiom axiom = Axiom::Vanishing;
    bool pass = true;
    Witness witness;
};

struct AxiomReport {
    std::string slope;
    bool strong = true;
    std::vector<PairRecord> records;

    bool passes(Axiom a) const;
    bool verdict() const;
    void append(const AxiomReport& o);
};

AxiomReport check_axiom_a(const StabCandidate& cand);
AxiomReport check_axiom_b(const StabCandidate& cand);
AxiomReport check_axiom_c(const StabCandidate& cand, const Slope& s, bool strong = true);
/// a, b and c together.
AxiomReport check_all(const StabCandidate& cand, const Slope& s, bool strong = true);

/// Multiplies entry (F, F') by e^{s|_{F'} - s|_F}. Requires n == 1.
StabCandidate slope_translate(const StabCandidate& cand, const Slope& s);

/// Cap for minimal_n: ENVLAB_SEARCH_CAP if set, else 10^4.
std::int64_t search_cap();

struct MinimalN {
    std::int64_t n = 1;
    std::vector<std::pair<std::int64_t, bool>> probe; // n+1..n+5 and their verdicts

    bool stable() const;
};

/// Least n >= 1 for which strong axiom c holds for s/n. Throws
/// SearchCapExceeded when no n up to the cap works; InputError when s is not
/// anti-ample (a trivial slope returns 1).
MinimalN minimal_n(const StabCandidate& cand, const Slope& s, std::optional<std::int64_t> cap = std::nullopt);

struct Perturbation {
    PointId f = 0, g = 0;
    LaurentPoly delta;
    std::string kind;
};

/// Single-entry perturbations: the excluded-vertex monomial on every
/// off-diagonal pair below the diagonal plus multiples of eu(tangent F')
/// by small characters. At least `min_count` entries when the space has a
/// pair; deterministic.
std::vector<Perturbation> perturbation_family(const StabCandidate& cand, std::size_t min_count = 50);

struct UniquenessReport {
    std::size_t tried = 0;
    std::size_t broken = 0; // perturbations rejected by some axiom
    std::vector<Perturbation> survivors; // nonzero perturbations passing every check
    bool passing_candidates_agree = true;

    bool ok() const { return survivors.empty() && passing_candidates_agree; }
};

/// Applies each perturbation to `cand` and runs all checks with the trivial
/// slope (strong c). Every candidate in `others` that passes all checks must
/// equal `cand` entry by entry.
UniquenessReport uniqueness_probe(const StabCandidate& cand, const std::vector<Perturbation>& perturbations,
                                  const std::vector<StabCandidate>& others = {});

} // namespace envlab
