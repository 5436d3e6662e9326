// Exact rational linear algebra used by the polytope kernel.
#pragma once

#include <cstdint>
#include <vector>

#include "envlab/laurent.hpp"

namespace envlab::linear {

using RVec = std::vector<Rational>;
using RMat = std::vector<RVec>;

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(RMat& m);

/// Basis of {x : m x = 0}; m has `cols` columns.
RMat nullspace(const RMat& m, std::size_t cols);

std::size_t rank(RMat m);

/// Scales a nonzero rational vector to the primitive integer vector on the
/// same ray (positive multiple).
std::vector<std::int64_t> primitive(const RVec& v);

Rational dot(const RVec& u, const RVec& v);
Rational dot(const std::vector<std::int64_t>& u, const RVec& v);

/// Linear inequality sum coeffs[i] x_i <= bound.
struct Inequality {
    RVec coeffs;
    Rational bound;
};

/// Decides whether {x : every inequality holds} is nonempty by Fourier-Motzkin
/// elimination of all variables.
bool fm_feasible(std::vector<Inequality> system, std::size_t vars);

/// Decides whether {x >= 0 : A x = b} is nonempty with a phase-one simplex
/// (Bland's rule, exact arithmetic).
bool simplex_feasible(const RMat& a, const RVec& b);

} // namespace envlab::linear
