/**
 * @file limits.hpp
 * @brief Limits t -> 0 along one-parameter subtori and the facet analysis
 *        for rational slopes.
 *
 * A subtorus sigma_H and a character gamma with <sigma_H, gamma> = 1 split
 * the character lattice as Z*gamma + ker(sigma_H). The limit of num/den keeps
 * the lowest sigma_H-degree parts and moves them into ker(sigma_H) by a power
 * of gamma.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "envlab/envelope.hpp"
#include "envlab/polytope.hpp"

namespace envlab {

struct FacetContext {
    HalfSpace facet;
    Cochar sigma_h;      // pi_H(x) = <sigma_h, x>, nonnegative towards E_H
    Cochar direction;    // sigma_h up to sign, first nonzero entry positive
    int orientation = 1; // sigma_h = orientation * direction
    ExpVec gamma;        // <sigma_h, gamma> = 1
};

/// Character with pairing 1 against a primitive cocharacter (extended gcd).
ExpVec splitting_character(const Cochar& sigma);

FacetContext subtorus_from_facet(const HalfSpace& facet);
/// Context for a bare cocharacter (made primitive); `facet` is left empty.
FacetContext subtorus_from_cochar(const Cochar& sigma);

struct LimitResult {
    enum class Kind { Zero, Value, Fraction, Divergent };
    Kind kind = Kind::Zero;
    LaurentPoly num; // Value: the limit; Fraction: numerator
    LaurentPoly den; // Fraction only

    bool is_zero() const { return kind == Kind::Zero; }
    /// Same limit as a rational function: equal kinds and num*den' == num'*den.
    bool same_limit(const LimitResult& o) const;
};

std::string to_string(LimitResult::Kind k);

/// Lowest sigma-degree part of p and that degree. Precondition: p nonzero.
std::pair<LaurentPoly, std::int64_t> lowest_part(const LaurentPoly& p, const Cochar& sigma);

/// Throws std::invalid_argument when den is zero.
LimitResult limit_fraction(const LaurentPoly& num, const LaurentPoly& den, const FacetContext& ctx);
/// Denominator given as a product of factors; factors whose lowest part divides
/// the numerator's lowest part are cancelled.
LimitResult limit_fraction(const LaurentPoly& num, const std::vector<LaurentPoly>& den_factors,
                           const FacetContext& ctx);

struct FacetRow {
    std::string label;   // "tau1", ... or "span1", ... for span equations
    bool span_equation = false;
    FacetContext ctx;
    Rational pi_of_slope; // pi_H(s|_F - s|_F')
    LimitResult limit;
    bool verdict = true;
};

/// For each facet of N(eu(tangent of g)): the limit of
/// mC(cell f)|_g / eu(tangent g) across sigma_H, pi_H of the slope difference,
/// and the verdict "limit zero or pi >= 0". Equations of the affine span
/// require pi == 0. Requires g < f in the chamber order.
std::vector<FacetRow> facet_slope_analysis(const GKMSpace& x, const Chamber& c, PointId f, PointId g,
                                           const Slope& s);

struct SigmaProjection {
    Cochar sigma;
    Interval interval;
    bool consistent = true; // interval equals the exponent range of restrict_cochar
};

/// Deterministic search, by increasing max-norm, for a cocharacter in the
/// chamber of c separating all vertices of N(a) and generic for x.
SigmaProjection generic_sigma_projection(const LaurentPoly& a, const GKMSpace& x, const Chamber& c);

} // namespace envlab
