/**
 * @file kclasses.hpp
 * @brief Lambda operations, Euler classes and motivic Chern classes of cells.
 *
 * Sign conventions, for a weight list W of a representation:
 *   euler(W)         = prod (1 - e^{-w})        (lambda_{-1} of the dual)
 *   lambda_y_dual(W) = prod (1 - y e^{-w})      (lambda_{-y} of the dual)
 *   lambda_minus_one(W) = prod (1 - e^{w})      (lambda_{-1} of W itself)
 */
#pragma once

#include <vector>

#include "envlab/laurent.hpp"
#include "envlab/spaces.hpp"

namespace envlab {

/// Throws InputError if some weight is the zero character.
LaurentPoly euler(const WeightList& w, std::size_t rank);
LaurentPoly lambda_y_dual(const WeightList& w, std::size_t rank);
LaurentPoly lambda_minus_one(const WeightList& w, std::size_t rank);

/// Adds k to the y part of every weight.
WeightList twist_y(const WeightList& w, std::int64_t k);

struct WeightSplit {
    WeightList plus, minus, zero;
};

/// Split by the sign of <sigma, a_part>.
WeightSplit attracting_part(const WeightList& w, const Cochar& sigma);
/// Variant for a cocharacter of A x C^*: sigma_y pairs with the y part.
WeightSplit attracting_part(const WeightList& w, const Cochar& sigma, std::int64_t sigma_y);

ExpVec det_character(const WeightList& w, std::size_t rank);

/// Multiset difference; throws std::invalid_argument if `sub` is not contained.
WeightList weight_difference(const WeightList& all, const WeightList& sub);

/// Values of a K-class at every fixed point.
struct LocalizedClass {
    std::vector<LaurentPoly> values;

    const LaurentPoly& at(PointId p) const { return values.at(p); }
    friend bool operator==(const LocalizedClass&, const LocalizedClass&) = default;
};

/// mC_{-y} of the closure of the cell of p (smooth by certification).
LocalizedClass mc_closure(const GKMSpace& x, const Chamber& c, const PartialOrder& ord, PointId p);

/// mC_{-y}(cell(p) -> X) for every p, by inclusion-exclusion over closures.
std::vector<LocalizedClass> mc_table_closures(const GKMSpace& x, const Chamber& c);
/// Same table, computed on each factor and multiplied. Requires a product.
std::vector<LocalizedClass> mc_table_factorwise(const GKMSpace& x, const Chamber& c);
/// Factorwise on products, closures otherwise. Throws UncertifiedSpace when
/// closures are not certified smooth.
std::vector<LocalizedClass> mc_table(const GKMSpace& x, const Chamber& c);

LocalizedClass mc_cell(const GKMSpace& x, const Chamber& c, PointId p);

/// True iff the given limit value is zero.
bool chi_empty_check(const LaurentPoly& limit);

} // namespace envlab
