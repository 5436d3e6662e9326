#include "envlab/kclasses.hpp"

#include <algorithm>
#include <stdexcept>

namespace envlab {

namespace {

ExpVec y_times(const ExpVec& e, std::int64_t k) {
    ExpVec out = e;
    out.y += k;
    return out;
}

void require_certified(const GKMSpace& x) {
    if (!x.smooth_closure_certified())
        throw UncertifiedSpace("motivic Chern classes need certified smooth cell closures; the space does not "
                               "certify them");
}

} // namespace

LaurentPoly euler(const WeightList& w, std::size_t rank) {
    LaurentPoly out = LaurentPoly::constant(rank, 1);
    for (const auto& v : w) {
        if (v.is_zero()) throw InputError("Euler class of a list containing the zero weight vanishes");
        out = out * LaurentPoly::one_minus(-v);
    }
    return out;
}

LaurentPoly lambda_y_dual(const WeightList& w, std::size_t rank) {
    LaurentPoly out = LaurentPoly::constant(rank, 1);
    for (const auto& v : w) out = out * LaurentPoly::one_minus(y_times(-v, 1));
    return out;
}

LaurentPoly lambda_minus_one(const WeightList& w, std::size_t rank) {
    LaurentPoly out = LaurentPoly::constant(rank, 1);
    for (const auto& v : w) out = out * LaurentPoly::one_minus(v);
    return out;
}

WeightList twist_y(const WeightList& w, std::int64_t k) {
    WeightList out;
    for (const auto& v : w) out.push_back(y_times(v, k));
    return out;
}

WeightSplit attracting_part(const WeightList& w, const Cochar& sigma) { return attracting_part(w, sigma, 0); }

WeightSplit attracting_part(const WeightList& w, const Cochar& sigma, std::int64_t sigma_y) {
    WeightSplit s;
    for (const auto& v : w) {
        const std::int64_t p = pairing(sigma, v) + sigma_y * v.y;
        (p > 0 ? s.plus : (p < 0 ? s.minus : s.zero)).push_back(v);
    }
    return s;
}

ExpVec det_character(const WeightList& w, std::size_t rank) {
    ExpVec out = ExpVec::zero(rank);
    for (const auto& v : w) out = out + v;
    return out;
}

WeightList weight_difference(const WeightList& all, const WeightList& sub) {
    WeightList rest = all;
    for (const auto& v : sub) {
        auto it = std::find(rest.begin(), rest.end(), v);
        if (it == rest.end()) throw std::invalid_argument("weight_difference: not a sub-multiset");
        rest.erase(it);
    }
    return rest;
}

LocalizedClass mc_closure(const GKMSpace& x, const Chamber& c, const PartialOrder& ord, PointId p) {
    require_certified(x);
    const std::size_t r = x.rank();
    const std::size_t dim_cell = cell_data(x, c, p).dim();
    LocalizedClass out;
    for (PointId q = 0; q < x.size(); ++q) {
        if (!ord.leq(q, p)) {
            out.values.emplace_back(r);
            continue;
        }
        const WeightList tz = x.closure_tangent(c, ord, p, q);
        if (tz.size() != dim_cell)
            throw Error("closure of the cell of '" + x.name(p) + "' is not smooth at '" + x.name(q) + "'");
        const WeightList normal = weight_difference(x.tangent(q), tz);
        out.values.push_back(lambda_y_dual(tz, r) * euler(normal, r));
    }
    return out;
}

std::vector<LocalizedClass> mc_table_closures(const GKMSpace& x, const Chamber& c) {
    require_certified(x);
    const PartialOrder ord = x.order(c);
    std::vector<LocalizedClass> table(x.size());
    for (PointId p : ord.linear_extension()) {
        LocalizedClass cls = mc_closure(x, c, ord, p);
        for (PointId q = 0; q < x.size(); ++q) {
            if (!ord.less(q, p)) continue;
            for (PointId z = 0; z < x.size(); ++z) cls.values[z] = cls.values[z] - table[q].values[z];
        }
        table[p] = std::move(cls);
    }
    return table;
}

std::vector<LocalizedClass> mc_table_factorwise(const GKMSpace& x, const Chamber& c) {
    require_certified(x);
    const ProductFactors* f = x.factors();
    if (!f) throw std::invalid_argument("mc_table_factorwise: not a product space");
    x.require_generic(c);
    const auto left = mc_table(*f->left, c);
    const auto right = mc_table(*f->right, c);
    const std::size_t nl = f->left->size(), nr = f->right->size();
    std::vector<LocalizedClass> table(x.size());
    for (PointId i = 0; i < nl; ++i)
        for (PointId j = 0; j < nr; ++j)
            for (PointId k = 0; k < nl; ++k)
                for (PointId l = 0; l < nr; ++l)
                    table[i * nr + j].values.push_back(left[i].values[k] * right[j].values[l]);
    return table;
}

std::vector<LocalizedClass> mc_table(const GKMSpace& x, const Chamber& c) {
    require_certified(x);
    if (x.factors()) return mc_table_factorwise(x, c);
    return mc_table_closures(x, c);
}

LocalizedClass mc_cell(const GKMSpace& x, const Chamber& c, PointId p) { return mc_table(x, c).at(p); }

bool chi_empty_check(const LaurentPoly& limit) { return limit.is_zero(); }

} // namespace envlab
