#include "envlab/spaces.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace envlab {

namespace {

std::int64_t gcd_all(const Cochar& v) {
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
    return g;
}

std::string merge_bundle_names(const std::string& x, const std::string& y) {
    auto is_o = [](const std::string& s) { return s.size() > 3 && s.rfind("O(", 0) == 0 && s.back() == ')'; };
    if (is_o(x) && is_o(y)) return x.substr(0, x.size() - 1) + "," + y.substr(2);
    return x + "#" + y;
}

Ampleness merge_ampleness(Ampleness a, Ampleness b) {
    if (a == b && a != Ampleness::Other) return a;
    return Ampleness::Other;
}

} // namespace

Chamber::Chamber(Cochar sigma) : sigma_(std::move(sigma)) {
    const auto g = gcd_all(sigma_);
    if (g == 0) throw NonGenericChamber("chamber cocharacter must be nonzero");
    for (auto& x : sigma_) x /= g;
}

std::string to_string(Ampleness a) {
    switch (a) {
    case Ampleness::Ample: return "ample";
    case Ampleness::AntiAmple: return "anti-ample";
    case Ampleness::Trivial: return "trivial";
    case Ampleness::Other: return "other";
    }
    return "other";
}

Ampleness ampleness_from_string(const std::string& s) {
    if (s == "ample") return Ampleness::Ample;
    if (s == "anti-ample") return Ampleness::AntiAmple;
    if (s == "trivial") return Ampleness::Trivial;
    if (s == "other") return Ampleness::Other;
    throw InputError("unknown ampleness tag '" + s + "'");
}

PartialOrder PartialOrder::from_relations(std::size_t n, const std::vector<std::pair<PointId, PointId>>& rel) {
    PartialOrder o(n);
    for (auto [a, b] : rel) {
        if (a >= n || b >= n) throw InputError("order relation refers to an unknown point");
        o.lt_[a][b] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (o.lt_[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (o.lt_[k][j]) o.lt_[i][j] = true;
    for (std::size_t i = 0; i < n; ++i)
        if (o.lt_[i][i]) throw InputError("closure order has a cycle");
    return o;
}

std::vector<PointId> PartialOrder::linear_extension() const {
    const std::size_t n = size();
    std::vector<PointId> out;
    std::vector<bool> placed(n, false);
    while (out.size() < n) {
        for (PointId i = 0; i < n; ++i) {
            if (placed[i]) continue;
            bool ready = true;
            for (PointId j = 0; j < n; ++j)
                if (!placed[j] && lt_[j][i]) ready = false;
            if (ready) {
                placed[i] = true;
                out.push_back(i);
                break;
            }
        }
    }
    return out;
}

GKMSpace::GKMSpace(Data d) : d_(std::move(d)) {
    const std::size_t n = d_.names.size();
    if (n == 0) throw InputError("space has no fixed points");
    if (d_.tangent.size() != n) throw InputError("tangent data missing for some fixed point");
    std::set<std::string> seen;
    for (const auto& nm : d_.names)
        if (!seen.insert(nm).second) throw InputError("duplicate fixed point name '" + nm + "'");

    const std::size_t dm = d_.tangent.front().size();
    for (PointId p = 0; p < n; ++p) {
        if (d_.tangent[p].size() != dm)
            throw InputError("tangent dimension differs at '" + d_.names[p] + "'");
        for (const auto& w : d_.tangent[p]) {
            if (w.rank() != d_.rank) throw RankMismatch("tangent weight of wrong rank at '" + d_.names[p] + "'");
            if (w.y != 0) throw InputError("tangent weights carry no y part");
            if (w.a_is_zero())
                throw InputError("zero tangent weight at '" + d_.names[p] + "': fixed point is not isolated");
        }
    }

    if (d_.edges) {
        const auto& e = *d_.edges;
        if (e.size() != n) throw InputError("curve data missing for some fixed point");
        for (PointId p = 0; p < n; ++p) {
            if (e[p].size() != dm) throw InputError("curve data does not match tangent weights at '" + d_.names[p] + "'");
            for (std::size_t k = 0; k < dm; ++k) {
                const PointId q = e[p][k];
                if (q >= n || q == p) throw InputError("bad curve endpoint at '" + d_.names[p] + "'");
                const ExpVec back = -d_.tangent[p][k];
                const auto& tq = d_.tangent[q];
                if (std::find(tq.begin(), tq.end(), back) == tq.end())
                    throw InputError("curve " + d_.names[p] + " -> " + d_.names[q] +
                                     ": far end lacks the opposite weight");
            }
        }
    }

    for (const auto& o : d_.orders) {
        if (o.representative.size() != d_.rank) throw RankMismatch("order representative of wrong rank");
        PartialOrder::from_relations(n, o.relations);
    }

    std::set<std::string> bnames;
    for (const auto& b : d_.bundles) {
        if (!bnames.insert(b.name).second) throw InputError("duplicate bundle name '" + b.name + "'");
        if (b.restriction.size() != n) throw InputError("bundle '" + b.name + "' misses fixed points");
        bool all_zero = true;
        for (const auto& r : b.restriction) {
            if (r.rank() != d_.rank) throw RankMismatch("bundle '" + b.name + "' has a character of wrong rank");
            if (r.y != 0) throw InputError("bundle characters carry no y part");
            if (!r.a_is_zero()) all_zero = false;
        }
        if (b.ampleness == Ampleness::Trivial && !all_zero)
            throw InputError("bundle '" + b.name + "' tagged trivial has nonzero restrictions");
        if (!d_.edges || dm == 0) continue;
        // On each invariant curve the restriction difference is deg * weight.
        bool pos = true, neg = true;
        for (PointId p = 0; p < n; ++p) {
            for (std::size_t k = 0; k < dm; ++k) {
                const ExpVec& w = d_.tangent[p][k];
                const ExpVec diff = b.restriction[p] - b.restriction[(*d_.edges)[p][k]];
                std::size_t i = 0;
                while (w.a[i] == 0) ++i;
                if (diff.a[i] % w.a[i] != 0 || diff != w.scaled(diff.a[i] / w.a[i]))
                    throw InputError("bundle '" + b.name + "' is not a linearization compatible with the curves");
                const std::int64_t deg = diff.a[i] / w.a[i];
                if (deg <= 0) pos = false;
                if (deg >= 0) neg = false;
            }
        }
        if (b.ampleness == Ampleness::Ample && !pos) throw InputError("bundle '" + b.name + "' tagged ample is not ample");
        if (b.ampleness == Ampleness::AntiAmple && !neg)
            throw InputError("bundle '" + b.name + "' tagged anti-ample is not anti-ample");
    }
}

PointId GKMSpace::index_of(const std::string& name) const {
    auto it = std::find(d_.names.begin(), d_.names.end(), name);
    if (it == d_.names.end()) throw InputError("unknown fixed point '" + name + "'");
    return static_cast<PointId>(it - d_.names.begin());
}

PointId GKMSpace::edge(PointId p, std::size_t k) const {
    if (!d_.edges) throw InputError("space carries no invariant-curve data");
    return (*d_.edges).at(p).at(k);
}

const LineBundle& GKMSpace::bundle(const std::string& name) const {
    for (const auto& b : d_.bundles)
        if (b.name == name) return b;
    throw InputError("unknown line bundle '" + name + "'");
}

bool GKMSpace::has_bundle(const std::string& name) const {
    return std::any_of(d_.bundles.begin(), d_.bundles.end(), [&](const LineBundle& b) { return b.name == name; });
}

bool GKMSpace::is_generic(const Chamber& c) const {
    if (c.rank() != d_.rank) return false;
    for (const auto& t : d_.tangent)
        for (const auto& w : t)
            if (pairing(c.sigma(), w) == 0) return false;
    return true;
}

void GKMSpace::require_generic(const Chamber& c) const {
    if (c.rank() != d_.rank)
        throw RankMismatch("chamber cocharacter has rank " + std::to_string(c.rank()) + ", space has rank " +
                           std::to_string(d_.rank));
    for (PointId p = 0; p < size(); ++p)
        for (const auto& w : d_.tangent[p])
            if (pairing(c.sigma(), w) == 0)
                throw NonGenericChamber("cocharacter is orthogonal to tangent weight " + to_string(w) + " at '" +
                                        d_.names[p] + "'");
}

std::vector<int> GKMSpace::sign_vector(const Chamber& c) const {
    std::vector<int> s;
    for (const auto& t : d_.tangent)
        for (const auto& w : t) {
            const auto x = pairing(c.sigma(), w);
            s.push_back(x > 0 ? 1 : (x < 0 ? -1 : 0));
        }
    return s;
}

PartialOrder GKMSpace::order(const Chamber& c) const {
    require_generic(c);
    std::optional<PartialOrder> from_edges, from_file;
    if (d_.edges) {
        std::vector<std::pair<PointId, PointId>> rel;
        for (PointId p = 0; p < size(); ++p)
            for (std::size_t k = 0; k < dim(); ++k)
                if (pairing(c.sigma(), d_.tangent[p][k]) > 0) rel.emplace_back((*d_.edges)[p][k], p);
        from_edges = PartialOrder::from_relations(size(), rel);
    }
    const auto sv = sign_vector(c);
    for (const auto& o : d_.orders) {
        if (sign_vector(Chamber(o.representative)) == sv) {
            from_file = PartialOrder::from_relations(size(), o.relations);
            break;
        }
    }
    if (from_edges && from_file && !(*from_edges == *from_file))
        throw InputError("supplied closure order disagrees with the invariant-curve data");
    if (from_file) return *from_file;
    if (from_edges) return *from_edges;
    throw InputError("no closure order known for this chamber");
}

WeightList GKMSpace::closure_tangent(const Chamber& c, const PartialOrder& ord, PointId p, PointId q) const {
    (void)c;
    if (!ord.leq(q, p)) throw std::invalid_argument("closure_tangent: point is outside the cell closure");
    WeightList out;
    for (std::size_t k = 0; k < dim(); ++k)
        if (ord.leq(edge(q, k), p)) out.push_back(d_.tangent[q][k]);
    return out;
}

GKMSpace projective_space(std::size_t n, const std::vector<ExpVec>& chi) {
    if (chi.size() != n + 1) throw InputError("P^n needs n+1 coordinate characters");
    const std::size_t r = chi.front().rank();
    for (std::size_t i = 0; i <= n; ++i) {
        if (chi[i].rank() != r) throw RankMismatch("coordinate characters of different rank");
        if (chi[i].y != 0) throw InputError("coordinate characters carry no y part");
        for (std::size_t j = 0; j < i; ++j)
            if (chi[i] == chi[j]) throw InputError("repeated coordinate characters: fixed points are not isolated");
    }
    GKMSpace::Data d;
    d.rank = r;
    std::vector<std::vector<PointId>> edges(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        d.names.push_back("e" + std::to_string(i));
        WeightList t;
        for (std::size_t j = 0; j <= n; ++j) {
            if (j == i) continue;
            t.push_back(chi[j] - chi[i]);
            edges[i].push_back(j);
        }
        d.tangent.push_back(std::move(t));
    }
    d.edges = std::move(edges);
    // O(-1) restricts to e_i as chi_i, so O(k) restricts as -k chi_i.
    for (int k = -3; k <= 3; ++k) {
        LineBundle b;
        b.name = "O(" + std::to_string(k) + ")";
        for (std::size_t i = 0; i <= n; ++i) b.restriction.push_back(chi[i].scaled(-k));
        b.ampleness = k > 0 ? Ampleness::Ample : (k < 0 ? Ampleness::AntiAmple : Ampleness::Trivial);
        d.bundles.push_back(std::move(b));
    }
    d.smooth_closure_certified = true;
    d.local_product_certified = true;
    return GKMSpace(std::move(d));
}

GKMSpace projective_space(std::size_t n) {
    std::vector<ExpVec> chi;
    for (std::size_t i = 0; i <= n; ++i) {
        ExpVec e = ExpVec::zero(n);
        if (i > 0) e.a[i - 1] = 1;
        chi.push_back(e);
    }
    return projective_space(n, chi);
}

GKMSpace product(const GKMSpace& x, const GKMSpace& y) {
    if (x.rank() != y.rank()) throw RankMismatch("product: factors must share the torus");
    if (!x.has_edges() || !y.has_edges()) throw InputError("product: both factors need invariant-curve data");
    GKMSpace::Data d;
    d.rank = x.rank();
    std::vector<std::vector<PointId>> edges;
    const std::size_t ny = y.size();
    for (PointId i = 0; i < x.size(); ++i) {
        for (PointId j = 0; j < ny; ++j) {
            d.names.push_back("(" + x.name(i) + "," + y.name(j) + ")");
            WeightList t = x.tangent(i);
            t.insert(t.end(), y.tangent(j).begin(), y.tangent(j).end());
            d.tangent.push_back(std::move(t));
            std::vector<PointId> e;
            for (std::size_t k = 0; k < x.dim(); ++k) e.push_back(x.edge(i, k) * ny + j);
            for (std::size_t k = 0; k < y.dim(); ++k) e.push_back(i * ny + y.edge(j, k));
            edges.push_back(std::move(e));
        }
    }
    d.edges = std::move(edges);
    for (const auto& bx : x.bundles()) {
        for (const auto& by : y.bundles()) {
            LineBundle b;
            b.name = merge_bundle_names(bx.name, by.name);
            for (PointId i = 0; i < x.size(); ++i)
                for (PointId j = 0; j < ny; ++j) b.restriction.push_back(bx.restriction[i] + by.restriction[j]);
            b.ampleness = merge_ampleness(bx.ampleness, by.ampleness);
            d.bundles.push_back(std::move(b));
        }
    }
    d.smooth_closure_certified = x.smooth_closure_certified() && y.smooth_closure_certified();
    d.local_product_certified = x.local_product_certified() && y.local_product_certified();
    auto f = std::make_shared<ProductFactors>();
    f->left = std::make_shared<const GKMSpace>(x);
    f->right = std::make_shared<const GKMSpace>(y);
    d.factors = std::move(f);
    return GKMSpace(std::move(d));
}

CellData cell_data(const GKMSpace& x, const Chamber& c, PointId p) {
    x.require_generic(c);
    CellData cd;
    cd.point = p;
    for (const auto& w : x.tangent(p)) {
        if (pairing(c.sigma(), w) > 0)
            cd.attracting.push_back(w);
        else
            cd.repelling.push_back(w);
    }
    return cd;
}

WeightList cotangent_weights(const GKMSpace& x, PointId p) {
    WeightList out = x.tangent(p);
    for (const auto& w : x.tangent(p)) out.push_back(ExpVec((-w).a, 1));
    return out;
}

std::vector<Chamber> chamber_representatives(const GKMSpace& x, std::int64_t bound) {
    const std::size_t r = x.rank();
    std::vector<Cochar> candidates;
    Cochar v(r, -bound);
    while (true) {
        if (gcd_all(v) == 1) candidates.push_back(v);
        std::size_t i = r;
        while (i > 0) {
            --i;
            if (v[i] < bound) {
                ++v[i];
                break;
            }
            v[i] = -bound;
            if (i == 0) {
                i = r + 1;
                break;
            }
        }
        if (i == r + 1 || r == 0) break;
    }
    auto maxnorm = [](const Cochar& c) {
        std::int64_t m = 0;
        for (auto e : c) m = std::max(m, e < 0 ? -e : e);
        return m;
    };
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](const Cochar& a, const Cochar& b) { return maxnorm(a) < maxnorm(b); });
    std::vector<Chamber> out;
    std::set<std::vector<int>> classes;
    for (const auto& cand : candidates) {
        Chamber c(cand);
        if (!x.is_generic(c)) continue;
        if (classes.insert(x.sign_vector(c)).second) out.push_back(c);
    }
    return out;
}

} // namespace envlab
