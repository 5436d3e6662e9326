/**
 * @file spaces.hpp
 * @brief Fixed-point (GKM-style) models of smooth projective A-varieties.
 *
 * A GKMSpace records, for each isolated fixed point, its tangent weights and
 * (optionally) the fixed point at the other end of the invariant curve in each
 * weight direction. Cells and their closure order are never computed from
 * equations; they come from this combinatorial data:
 *
 *  - the attracting/repelling split of tangent(F) is the sign of <sigma, w>;
 *  - F > G whenever G is the far end of an attracting curve at F, closed
 *    transitively;
 *  - the tangent space of the closure of the cell of F at a point G in that
 *    closure is spanned by the curves from G that stay inside the closure.
 *
 * Spaces loaded from files may instead carry an explicit order per chamber.
 */
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "envlab/laurent.hpp"

namespace envlab {

using PointId = std::size_t;
using WeightList = std::vector<ExpVec>;

/// A weight chamber, represented by one generic cocharacter in it.
class Chamber {
public:
    Chamber() = default;
    explicit Chamber(Cochar sigma);

    const Cochar& sigma() const { return sigma_; }
    std::size_t rank() const { return sigma_.size(); }

private:
    Cochar sigma_;
};

enum class Ampleness { Ample, AntiAmple, Trivial, Other };

std::string to_string(Ampleness a);
Ampleness ampleness_from_string(const std::string& s);

struct LineBundle {
    std::string name;
    std::vector<ExpVec> restriction; // per fixed point, y part 0
    Ampleness ampleness = Ampleness::Other;
};

/// Strict partial order on fixed points: less[i][j] means i < j.
class PartialOrder {
public:
    PartialOrder() = default;
    explicit PartialOrder(std::size_t n) : lt_(n, std::vector<bool>(n, false)) {}

    /// Transitive closure of the given (less, greater) pairs. Throws InputError
    /// when the relation has a cycle.
    static PartialOrder from_relations(std::size_t n, const std::vector<std::pair<PointId, PointId>>& rel);

    std::size_t size() const { return lt_.size(); }
    bool less(PointId a, PointId b) const { return lt_[a][b]; }
    bool leq(PointId a, PointId b) const { return a == b || lt_[a][b]; }

    /// Points ordered so that every point comes after all points below it.
    std::vector<PointId> linear_extension() const;

    friend bool operator==(const PartialOrder&, const PartialOrder&) = default;

private:
    std::vector<std::vector<bool>> lt_;
};

struct CellData {
    PointId point = 0;
    WeightList attracting;
    WeightList repelling;

    std::size_t dim() const { return attracting.size(); }
};

/// Explicit order data for one chamber sign class (file-loaded spaces).
struct OrderEntry {
    Cochar representative;
    std::vector<std::pair<PointId, PointId>> relations; // (less, greater)
};

class GKMSpace;

/// Factor data kept by product(); point i*|Y|+j is (i, j).
struct ProductFactors {
    std::shared_ptr<const GKMSpace> left;
    std::shared_ptr<const GKMSpace> right;
};

class GKMSpace {
public:
    struct Data {
        std::size_t rank = 0;
        std::vector<std::string> names;
        std::vector<WeightList> tangent;
        std::optional<std::vector<std::vector<PointId>>> edges;
        std::vector<OrderEntry> orders;
        std::vector<LineBundle> bundles;
        bool smooth_closure_certified = false;
        bool local_product_certified = false;
        std::shared_ptr<const ProductFactors> factors;
    };

    /// Validates every invariant; throws InputError on violation.
    explicit GKMSpace(Data d);

    std::size_t rank() const { return d_.rank; }
    std::size_t size() const { return d_.names.size(); }
    std::size_t dim() const { return d_.tangent.empty() ? 0 : d_.tangent.front().size(); }
    const std::string& name(PointId p) const { return d_.names.at(p); }
    PointId index_of(const std::string& name) const;
    const WeightList& tangent(PointId p) const { return d_.tangent.at(p); }
    bool has_edges() const { return d_.edges.has_value(); }
    /// Far end of the invariant curve through p in direction tangent(p)[k].
    PointId edge(PointId p, std::size_t k) const;
    const std::vector<OrderEntry>& explicit_orders() const { return d_.orders; }
    const std::vector<LineBundle>& bundles() const { return d_.bundles; }
    const LineBundle& bundle(const std::string& name) const;
    bool has_bundle(const std::string& name) const;
    bool smooth_closure_certified() const { return d_.smooth_closure_certified; }
    bool local_product_certified() const { return d_.local_product_certified; }
    const ProductFactors* factors() const { return d_.factors.get(); }
    const Data& data() const { return d_; }

    bool is_generic(const Chamber& c) const;
    /// Throws NonGenericChamber unless is_generic(c).
    void require_generic(const Chamber& c) const;

    /// Signs of <sigma, w> over all tangent weights, point by point. Two
    /// cocharacters lie in the same chamber iff these agree.
    std::vector<int> sign_vector(const Chamber& c) const;

    /// BB closure order for the chamber.
    PartialOrder order(const Chamber& c) const;

    /// Tangent weights at q of the closure of the cell of p, for q <= p.
    WeightList closure_tangent(const Chamber& c, const PartialOrder& ord, PointId p, PointId q) const;

private:
    Data d_;
};

/// P^n with the given coordinate characters (y part 0, common rank).
GKMSpace projective_space(std::size_t n, const std::vector<ExpVec>& coordinate_weights);
/// P^n in rank n with characters (0, e_1, ..., e_n).
GKMSpace projective_space(std::size_t n);

GKMSpace product(const GKMSpace& x, const GKMSpace& y);

CellData cell_data(const GKMSpace& x, const Chamber& c, PointId p);

/// tangent(p) followed by y - w for each tangent weight w (the cotangent fibre
/// twisted by the symplectic character).
WeightList cotangent_weights(const GKMSpace& x, PointId p);

/// Representatives of every chamber sign class, found among cocharacters with
/// entries in [-bound, bound]; deterministic order.
std::vector<Chamber> chamber_representatives(const GKMSpace& x, std::int64_t bound = 3);

} // namespace envlab
