#include "envlab/polytope.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "envlab/linear.hpp"

namespace envlab {

using linear::RMat;
using linear::RVec;

QVec QVec::from_ints(const std::vector<std::int64_t>& v) {
    QVec q(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) q.c_[i] = Rational(static_cast<long>(v[i]));
    return q;
}

bool QVec::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
}

QVec QVec::operator+(const QVec& o) const {
    if (dim() != o.dim()) throw RankMismatch("QVec +: dimension mismatch");
    QVec r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

QVec QVec::operator-(const QVec& o) const { return *this + (-o); }

QVec QVec::operator-() const {
    QVec r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

QVec QVec::operator/(const Rational& k) const {
    QVec r = *this;
    for (auto& x : r.c_) x /= k;
    return r;
}

QVec QVec::operator*(const Rational& k) const {
    QVec r = *this;
    for (auto& x : r.c_) x *= k;
    return r;
}

bool operator<(const QVec& u, const QVec& v) {
    return std::lexicographical_compare(u.c_.begin(), u.c_.end(), v.c_.begin(), v.c_.end());
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const QVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.dim(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s + ")";
}

namespace {

// Affine frame of a point set: base point and the RREF basis of the direction
// space. Local coordinates of p are (p - base) read at the pivot columns.
struct Frame {
    QVec base;
    RMat rows;
    std::vector<std::size_t> pivots;

    RVec local(const QVec& p) const {
        RVec out;
        out.reserve(pivots.size());
        for (auto c : pivots) out.push_back(p[c] - base[c]);
        return out;
    }
};

Frame frame_of(std::size_t dim, const std::vector<QVec>& pts) {
    Frame f;
    f.base = pts.front();
    for (std::size_t i = 1; i < pts.size(); ++i) f.rows.push_back((pts[i] - f.base).coords());
    if (f.rows.empty()) return f;
    f.pivots = linear::rref(f.rows);
    f.rows.resize(f.pivots.size()); // drop zero rows
    (void)dim;
    return f;
}

void sort_unique(std::vector<QVec>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
        if (depth == k) {
            fn(idx);
            return;
        }
        for (std::size_t i = start; i + (k - depth) <= n; ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
}

} // namespace

QPolytope QPolytope::hull(std::size_t dim, std::vector<QVec> points) {
    QPolytope p(dim);
    for (const auto& x : points)
        if (x.dim() != dim) throw RankMismatch("QPolytope::hull: point of wrong dimension");
    sort_unique(points);
    if (points.size() <= 1) {
        p.vertices_ = std::move(points);
        return p;
    }
    const Frame f = frame_of(dim, points);
    const std::size_t d = f.pivots.size();
    std::vector<RVec> loc;
    loc.reserve(points.size());
    for (const auto& x : points) loc.push_back(f.local(x));

    if (d == 1) {
        auto [lo, hi] = std::minmax_element(loc.begin(), loc.end(),
                                            [](const RVec& a, const RVec& b) { return a[0] < b[0]; });
        p.vertices_ = {points[lo - loc.begin()], points[hi - loc.begin()]};
        sort_unique(p.vertices_);
        return p;
    }

    // A point is a vertex iff it is not a convex combination of the others.
    const std::size_t n = points.size();
    std::vector<QVec> verts;
    for (std::size_t k = 0; k < n; ++k) {
        RMat a(d + 1, RVec(n - 1));
        RVec b(d + 1);
        std::size_t col = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == k) continue;
            for (std::size_t i = 0; i < d; ++i) a[i][col] = loc[j][i];
            a[d][col] = 1;
            ++col;
        }
        for (std::size_t i = 0; i < d; ++i) b[i] = loc[k][i];
        b[d] = 1;
        if (!linear::simplex_feasible(a, b)) verts.push_back(points[k]);
    }
    p.vertices_ = std::move(verts);
    return p;
}

bool HalfSpace::contains(const QVec& x) const { return linear::dot(normal, x.coords()) <= offset; }

bool HalfSpace::on_boundary(const QVec& x) const { return linear::dot(normal, x.coords()) == offset; }

Interval operator+(const Interval& a, const Interval& b) {
    if (a.empty() || b.empty()) return {};
    return {*a.lo + *b.lo, *a.hi + *b.hi};
}

QPolytope newton_A(const LaurentPoly& p) {
    std::vector<QVec> pts;
    pts.reserve(p.size());
    for (const auto& [e, c] : p.terms()) pts.push_back(QVec::from_ints(e.a));
    return QPolytope::hull(p.rank(), std::move(pts));
}

QPolytope minkowski_sum(const QPolytope& p, const QPolytope& q) {
    if (p.dim() != q.dim()) throw RankMismatch("minkowski_sum: dimension mismatch");
    std::vector<QVec> pts;
    for (const auto& u : p.vertices())
        for (const auto& v : q.vertices()) pts.push_back(u + v);
    return QPolytope::hull(p.dim(), std::move(pts));
}

QPolytope convex_union(const QPolytope& p, const QPolytope& q) {
    if (p.dim() != q.dim()) throw RankMismatch("convex_union: dimension mismatch");
    std::vector<QVec> pts = p.vertices();
    pts.insert(pts.end(), q.vertices().begin(), q.vertices().end());
    return QPolytope::hull(p.dim(), std::move(pts));
}

QPolytope translate(const QPolytope& p, const QVec& v) {
    if (p.dim() != v.dim()) throw RankMismatch("translate: dimension mismatch");
    std::vector<QVec> pts;
    for (const auto& u : p.vertices()) pts.push_back(u + v);
    return QPolytope::hull(p.dim(), std::move(pts));
}

// Largest number of free multipliers handed to Fourier-Motzkin.
constexpr std::size_t kMaxEliminated = 4;

bool contains_point(const QPolytope& p, const QVec& x) {
    if (p.empty()) return false;
    if (p.dim() != x.dim()) throw RankMismatch("contains_point: dimension mismatch");
    const auto& verts = p.vertices();
    const std::size_t k = verts.size();
    const std::size_t r = p.dim();

    // lambda >= 0, sum lambda = 1, sum lambda_i v_i = x. Eliminate the
    // equalities first, then run Fourier-Motzkin on the free multipliers.
    RMat m(r + 1, RVec(k + 1));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < k; ++j) m[i][j] = verts[j][i];
        m[i][k] = x[i];
    }
    for (std::size_t j = 0; j < k; ++j) m[r][j] = 1;
    m[r][k] = 1;
    const auto pivots = linear::rref(m);
    if (!pivots.empty() && pivots.back() == k) return false; // inconsistent equalities

    std::vector<bool> is_pivot(k, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_vars;
    for (std::size_t j = 0; j < k; ++j)
        if (!is_pivot[j]) free_vars.push_back(j);

    const std::size_t nf = free_vars.size();
    if (nf > kMaxEliminated) {
        // Elimination blows up doubly exponentially; use the exact simplex.
        RMat a(r + 1, RVec(k));
        RVec b(r + 1);
        for (std::size_t j = 0; j < k; ++j) {
            for (std::size_t i = 0; i < r; ++i) a[i][j] = verts[j][i];
            a[r][j] = 1;
        }
        for (std::size_t i = 0; i < r; ++i) b[i] = x[i];
        b[r] = 1;
        return linear::simplex_feasible(a, b);
    }
    std::vector<linear::Inequality> sys;
    // pivot lambda = rhs - sum coef * free >= 0
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        linear::Inequality q;
        q.coeffs.resize(nf);
        for (std::size_t f = 0; f < nf; ++f) q.coeffs[f] = m[i][free_vars[f]];
        q.bound = m[i][k];
        sys.push_back(std::move(q));
    }
    for (std::size_t f = 0; f < nf; ++f) {
        linear::Inequality q;
        q.coeffs.assign(nf, 0);
        q.coeffs[f] = -1;
        q.bound = 0;
        sys.push_back(std::move(q));
    }
    return linear::fm_feasible(std::move(sys), nf);
}

bool contains_polytope(const QPolytope& outer, const QPolytope& inner) {
    if (outer.dim() != inner.dim()) throw RankMismatch("contains_polytope: dimension mismatch");
    return std::all_of(inner.vertices().begin(), inner.vertices().end(),
                       [&](const QVec& v) { return contains_point(outer, v); });
}

namespace {

AffineSpan span_of(std::size_t r, const Frame& f) {
    AffineSpan s;
    s.base = f.base;
    for (const auto& row : f.rows) s.directions.push_back(linear::primitive(row));
    if (!f.rows.empty()) {
        for (const auto& n : linear::nullspace(f.rows, r)) {
            HalfSpace h;
            h.normal = linear::primitive(n);
            h.offset = linear::dot(h.normal, f.base.coords());
            s.equations.push_back(std::move(h));
        }
    } else {
        // A single point: the coordinate hyperplanes through it.
        for (std::size_t i = 0; i < r; ++i) {
            HalfSpace h;
            h.normal.assign(r, 0);
            h.normal[i] = 1;
            h.offset = f.base[i];
            s.equations.push_back(std::move(h));
        }
    }
    return s;
}

// Orders integer vectors of Q^2 by angle, starting at the positive x-axis.
bool angle_less(const std::vector<std::int64_t>& u, const std::vector<std::int64_t>& v) {
    auto half = [](const std::vector<std::int64_t>& w) { return (w[1] < 0 || (w[1] == 0 && w[0] < 0)) ? 1 : 0; };
    const int hu = half(u), hv = half(v);
    if (hu != hv) return hu < hv;
    return u[0] * v[1] - u[1] * v[0] > 0;
}

} // namespace

AffineSpan affine_span(const QPolytope& p) {
    if (p.empty()) throw std::invalid_argument("affine_span: empty polytope");
    return span_of(p.dim(), frame_of(p.dim(), p.vertices()));
}

FacetList facets(const QPolytope& p) {
    if (p.empty()) throw std::invalid_argument("facets: empty polytope");
    const std::size_t r = p.dim();
    const auto& verts = p.vertices();
    const Frame f = frame_of(r, verts);
    FacetList out;
    out.span = span_of(r, f);
    const std::size_t d = f.pivots.size();
    if (d == 0) return out;

    std::vector<RVec> loc;
    for (const auto& v : verts) loc.push_back(f.local(v));

    // Supporting functionals in local coordinates: (ell, c) with ell.x <= c.
    std::vector<std::pair<RVec, std::size_t>> found; // functional, a vertex on it
    if (d == 1) {
        std::size_t lo = 0, hi = 0;
        for (std::size_t i = 1; i < loc.size(); ++i) {
            if (loc[i][0] < loc[lo][0]) lo = i;
            if (loc[i][0] > loc[hi][0]) hi = i;
        }
        found.push_back({RVec{-1}, lo});
        found.push_back({RVec{1}, hi});
    } else {
        for_each_subset(verts.size(), d, [&](const std::vector<std::size_t>& idx) {
            RMat m;
            for (auto i : idx) {
                RVec row = loc[i];
                row.push_back(-1);
                m.push_back(std::move(row));
            }
            const RMat ns = linear::nullspace(m, d + 1);
            if (ns.size() != 1) return;
            RVec ell(ns[0].begin(), ns[0].begin() + d);
            const Rational c = ns[0][d];
            bool le = true, ge = true;
            for (const auto& x : loc) {
                const Rational s = linear::dot(ell, x) - c;
                if (s > 0) le = false;
                if (s < 0) ge = false;
            }
            if (!le && !ge) return;
            if (!le)
                for (auto& x : ell) x = -x;
            found.push_back({std::move(ell), idx[0]});
        });
    }

    for (const auto& [ell, anchor] : found) {
        RVec amb(r, 0);
        for (std::size_t i = 0; i < d; ++i) amb[f.pivots[i]] = ell[i];
        HalfSpace h;
        h.normal = linear::primitive(amb);
        h.offset = linear::dot(h.normal, verts[anchor].coords());
        if (std::any_of(out.facets.begin(), out.facets.end(),
                        [&](const Facet& g) { return g.half_space == h; }))
            continue;
        Facet fc;
        fc.half_space = h;
        for (const auto& v : verts)
            if (h.on_boundary(v)) fc.vertices.push_back(v);
        out.facets.push_back(std::move(fc));
    }

    std::sort(out.facets.begin(), out.facets.end(), [r](const Facet& a, const Facet& b) {
        const auto& u = a.half_space.normal;
        const auto& v = b.half_space.normal;
        if (r == 2 && u != v) return angle_less(u, v);
        if (u != v) return u < v;
        return a.half_space.offset < b.half_space.offset;
    });
    return out;
}

Interval project_sigma(const QPolytope& p, const Cochar& sigma) {
    if (p.dim() != sigma.size()) throw RankMismatch("project_sigma: dimension mismatch");
    Interval out;
    std::vector<std::int64_t> s(sigma.begin(), sigma.end());
    for (const auto& v : p.vertices()) {
        const Rational x = linear::dot(s, v.coords());
        if (!out.lo || x < *out.lo) out.lo = x;
        if (!out.hi || x > *out.hi) out.hi = x;
    }
    return out;
}

} // namespace envlab
