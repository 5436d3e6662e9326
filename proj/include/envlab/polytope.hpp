/**
 * @file polytope.hpp
 * @brief Exact rational convex geometry for Newton polytopes.
 *
 * Polytopes are stored by their minimal vertex set, sorted lexicographically,
 * so equality is structural. Half-space descriptions are derived on demand.
 * Ambient dimension is small (the rank of the torus A), which keeps subset
 * enumeration for facets affordable.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "envlab/laurent.hpp"

namespace envlab {

/// Point of Hom(A, C^*) (x) Q.
class QVec {
public:
    QVec() = default;
    explicit QVec(std::size_t dim) : c_(dim, 0) {}
    explicit QVec(std::vector<Rational> coords) : c_(std::move(coords)) {}
    static QVec from_ints(const std::vector<std::int64_t>& v);

    std::size_t dim() const { return c_.size(); }
    const Rational& operator[](std::size_t i) const { return c_[i]; }
    Rational& operator[](std::size_t i) { return c_[i]; }
    const std::vector<Rational>& coords() const { return c_; }
    bool is_zero() const;

    QVec operator+(const QVec& o) const;
    QVec operator-(const QVec& o) const;
    QVec operator-() const;
    QVec operator/(const Rational& k) const;
    QVec operator*(const Rational& k) const;

    friend bool operator==(const QVec& u, const QVec& v) { return u.c_ == v.c_; }
    friend bool operator<(const QVec& u, const QVec& v);

private:
    std::vector<Rational> c_;
};

std::string to_string(const Rational& q);
std::string to_string(const QVec& v);

class QPolytope {
public:
    /// The empty polytope in Q^dim.
    explicit QPolytope(std::size_t dim = 0) : dim_(dim) {}

    /// Convex hull of a finite point set.
    static QPolytope hull(std::size_t dim, std::vector<QVec> points);
    static QPolytope point(const QVec& p) { return hull(p.dim(), {p}); }

    std::size_t dim() const { return dim_; }
    bool empty() const { return vertices_.empty(); }
    const std::vector<QVec>& vertices() const { return vertices_; }

    friend bool operator==(const QPolytope& p, const QPolytope& q) {
        return p.dim_ == q.dim_ && p.vertices_ == q.vertices_;
    }

private:
    std::size_t dim_;
    std::vector<QVec> vertices_;
};

/// {x : <normal, x> <= offset}; normal is a primitive integer vector.
struct HalfSpace {
    std::vector<std::int64_t> normal;
    Rational offset;

    bool contains(const QVec& x) const;
    bool on_boundary(const QVec& x) const;
    friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

/// Affine span: base + span(directions). `equations` cut it out of Q^r as
/// {x : <n, x> = offset} for each entry.
struct AffineSpan {
    QVec base;
    std::vector<std::vector<std::int64_t>> directions;
    std::vector<HalfSpace> equations;

    std::size_t dimension() const { return directions.size(); }
};

struct Facet {
    HalfSpace half_space;
    std::vector<QVec> vertices;
};

/// Irredundant description P = aff(P) ∩ (intersection of facet half-spaces).
struct FacetList {
    std::vector<Facet> facets;
    AffineSpan span;
};

/// Closed rational interval; nullopt bounds mean empty.
struct Interval {
    std::optional<Rational> lo, hi;

    bool empty() const { return !lo.has_value(); }
    friend bool operator==(const Interval&, const Interval&) = default;
};

Interval operator+(const Interval& a, const Interval& b);

/// Hull of the A-exponents of the nonzero terms; y is discarded.
QPolytope newton_A(const LaurentPoly& p);

QPolytope minkowski_sum(const QPolytope& p, const QPolytope& q);
/// conv(P ∪ Q).
QPolytope convex_union(const QPolytope& p, const QPolytope& q);
QPolytope translate(const QPolytope& p, const QVec& v);

/// Exact membership, decided by Fourier-Motzkin feasibility of the
/// convex-combination system. With more than four free multipliers the
/// same system goes to the exact simplex instead.
bool contains_point(const QPolytope& p, const QVec& x);
bool contains_polytope(const QPolytope& outer, const QPolytope& inner);

/// Throws std::invalid_argument on the empty polytope.
FacetList facets(const QPolytope& p);
AffineSpan affine_span(const QPolytope& p);

Interval project_sigma(const QPolytope& p, const Cochar& sigma);

} // namespace envlab
