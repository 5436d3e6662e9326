#include "envlab/limits.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

#include "envlab/linear.hpp"

namespace envlab {

namespace {

struct Egcd {
    std::int64_t g, u, v; // g = u*a + v*b, g >= 0
};

Egcd egcd(std::int64_t a, std::int64_t b) {
    std::int64_t r0 = a, r1 = b, u0 = 1, u1 = 0, v0 = 0, v1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(u0, u1) = std::make_pair(u1, u0 - q * u1);
        std::tie(v0, v1) = std::make_pair(v1, v0 - q * v1);
    }
    if (r0 < 0) return {-r0, -u0, -v0};
    return {r0, u0, v0};
}

std::int64_t degree(const Cochar& sigma, const ExpVec& e) { return pairing(sigma, e); }

ExpVec gamma_power(const ExpVec& gamma, std::int64_t k) { return gamma.scaled(k); }

Cochar primitive_cochar(const Cochar& s) {
    std::int64_t g = 0;
    for (auto x : s) g = std::gcd(g, x < 0 ? -x : x);
    if (g == 0) throw std::invalid_argument("zero cocharacter");
    Cochar out = s;
    for (auto& x : out) x /= g;
    return out;
}

FacetContext context_for(const Cochar& sigma_h) {
    FacetContext ctx;
    ctx.sigma_h = sigma_h;
    ctx.direction = sigma_h;
    for (auto x : sigma_h) {
        if (x == 0) continue;
        if (x < 0) {
            ctx.orientation = -1;
            for (auto& d : ctx.direction) d = -d;
        }
        break;
    }
    ctx.gamma = splitting_character(sigma_h);
    return ctx;
}

LimitResult make(LimitResult::Kind k, LaurentPoly num, LaurentPoly den) {
    LimitResult r;
    r.kind = k;
    r.num = std::move(num);
    r.den = std::move(den);
    return r;
}

} // namespace

ExpVec splitting_character(const Cochar& sigma) {
    const std::size_t r = sigma.size();
    std::vector<std::int64_t> coeffs(r, 0);
    std::int64_t g = 0;
    for (std::size_t i = 0; i < r; ++i) {
        const Egcd e = egcd(g, sigma[i]);
        for (auto& c : coeffs) c *= e.u;
        coeffs[i] += e.v;
        g = e.g;
    }
    if (g != 1) throw std::invalid_argument("splitting_character: cocharacter is not primitive");
    return ExpVec(coeffs, 0);
}

FacetContext subtorus_from_facet(const HalfSpace& facet) {
    Cochar s;
    for (auto x : facet.normal) s.push_back(-x);
    FacetContext ctx = context_for(primitive_cochar(s));
    ctx.facet = facet;
    return ctx;
}

FacetContext subtorus_from_cochar(const Cochar& sigma) { return context_for(primitive_cochar(sigma)); }

std::string to_string(LimitResult::Kind k) {
    switch (k) {
    case LimitResult::Kind::Zero: return "zero";
    case LimitResult::Kind::Value: return "value";
    case LimitResult::Kind::Fraction: return "fraction";
    case LimitResult::Kind::Divergent: return "divergent";
    }
    return "?";
}

bool LimitResult::same_limit(const LimitResult& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
    case Kind::Zero:
    case Kind::Divergent: return true;
    case Kind::Value: return num == o.num;
    case Kind::Fraction: return num * o.den == o.num * den;
    }
    return false;
}

std::pair<LaurentPoly, std::int64_t> lowest_part(const LaurentPoly& p, const Cochar& sigma) {
    if (p.is_zero()) throw std::invalid_argument("lowest_part: zero polynomial");
    std::int64_t k = 0;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const auto d = degree(sigma, e);
        if (first || d < k) k = d;
        first = false;
    }
    LaurentPoly::TermMap t;
    for (const auto& [e, c] : p.terms())
        if (degree(sigma, e) == k) t.emplace(e, c);
    return {LaurentPoly::from_terms(p.rank(), std::move(t)), k};
}

LimitResult limit_fraction(const LaurentPoly& num, const LaurentPoly& den, const FacetContext& ctx) {
    if (den.is_zero()) throw std::invalid_argument("limit_fraction: zero denominator");
    const std::size_t r = den.rank();
    if (num.is_zero()) return make(LimitResult::Kind::Zero, LaurentPoly(r), LaurentPoly(r));
    auto [ln, kn] = lowest_part(num, ctx.sigma_h);
    auto [ld, kd] = lowest_part(den, ctx.sigma_h);
    if (kn > kd) return make(LimitResult::Kind::Zero, LaurentPoly(r), LaurentPoly(r));
    if (kn < kd) return make(LimitResult::Kind::Divergent, num, den);
    const ExpVec back = gamma_power(ctx.gamma, -kd);
    ln = shift(ln, back);
    ld = shift(ld, back);
    if (auto q = exact_quotient(ln, ld)) return make(LimitResult::Kind::Value, *q, LaurentPoly(r));
    return make(LimitResult::Kind::Fraction, ln, ld);
}

LimitResult limit_fraction(const LaurentPoly& num, const std::vector<LaurentPoly>& den_factors,
                           const FacetContext& ctx) {
    if (den_factors.empty()) throw std::invalid_argument("limit_fraction: no denominator factors");
    const std::size_t r = den_factors.front().rank();
    std::int64_t kd = 0;
    std::vector<LaurentPoly> lows;
    for (const auto& f : den_factors) {
        if (f.is_zero()) throw std::invalid_argument("limit_fraction: zero denominator");
        auto [l, k] = lowest_part(f, ctx.sigma_h);
        lows.push_back(shift(l, gamma_power(ctx.gamma, -k)));
        kd += k;
    }
    if (num.is_zero()) return make(LimitResult::Kind::Zero, LaurentPoly(r), LaurentPoly(r));
    auto [ln, kn] = lowest_part(num, ctx.sigma_h);
    if (kn > kd) return make(LimitResult::Kind::Zero, LaurentPoly(r), LaurentPoly(r));
    if (kn < kd) {
        LaurentPoly den = LaurentPoly::constant(r, 1);
        for (const auto& f : den_factors) den = den * f;
        return make(LimitResult::Kind::Divergent, num, den);
    }
    LaurentPoly cur = shift(ln, gamma_power(ctx.gamma, -kd));
    LaurentPoly rest = LaurentPoly::constant(r, 1);
    bool all_cancelled = true;
    for (const auto& l : lows) {
        if (auto q = exact_quotient(cur, l)) {
            cur = *q;
        } else {
            rest = rest * l;
            all_cancelled = false;
        }
    }
    if (all_cancelled) return make(LimitResult::Kind::Value, cur, LaurentPoly(r));
    if (auto q = exact_quotient(cur, rest)) return make(LimitResult::Kind::Value, *q, LaurentPoly(r));
    return make(LimitResult::Kind::Fraction, cur, rest);
}

std::vector<FacetRow> facet_slope_analysis(const GKMSpace& x, const Chamber& c, PointId f, PointId g,
                                           const Slope& s) {
    const PartialOrder ord = x.order(c);
    if (!ord.less(g, f)) throw InputError("facet analysis needs a pair with F' < F");
    const std::size_t r = x.rank();
    const LaurentPoly num = mc_table(x, c).at(f).at(g);
    std::vector<LaurentPoly> den;
    for (const auto& w : x.tangent(g)) den.push_back(LaurentPoly::one_minus(-w));
    const FacetList fl = facets(newton_A(euler(x.tangent(g), r)));
    const QVec v = (QVec::from_ints(s.values.at(f).a) - QVec::from_ints(s.values.at(g).a));

    std::vector<FacetRow> rows;
    std::size_t i = 0;
    for (const auto& fc : fl.facets) {
        FacetRow row;
        row.label = "tau" + std::to_string(++i);
        row.ctx = subtorus_from_facet(fc.half_space);
        row.pi_of_slope = linear::dot(row.ctx.sigma_h, v.coords());
        row.limit = limit_fraction(num, den, row.ctx);
        if (row.limit.kind == LimitResult::Kind::Divergent)
            row.verdict = false;
        else
            row.verdict = row.limit.is_zero() || row.pi_of_slope >= 0;
        rows.push_back(std::move(row));
    }
    i = 0;
    for (const auto& eq : fl.span.equations) {
        FacetRow row;
        row.label = "span" + std::to_string(++i);
        row.span_equation = true;
        row.ctx = subtorus_from_facet(eq);
        row.pi_of_slope = linear::dot(row.ctx.sigma_h, v.coords());
        row.limit = limit_fraction(num, den, row.ctx);
        row.verdict = row.pi_of_slope == 0;
        rows.push_back(std::move(row));
    }
    return rows;
}

SigmaProjection generic_sigma_projection(const LaurentPoly& a, const GKMSpace& x, const Chamber& c) {
    if (a.is_zero()) throw std::invalid_argument("generic_sigma_projection: zero polynomial");
    x.require_generic(c);
    const std::size_t r = x.rank();
    std::set<std::vector<std::int64_t>> pts;
    for (const auto& [e, coef] : a.terms()) pts.insert(e.a);
    const std::vector<std::vector<std::int64_t>> exps(pts.begin(), pts.end());
    const auto target = x.sign_vector(c);

    auto separates = [&](const Cochar& s) {
        std::set<std::int64_t> vals;
        for (const auto& p : exps) vals.insert(pairing(s, ExpVec(p)));
        return vals.size() == exps.size();
    };

    for (std::int64_t b = 1; b <= 64; ++b) {
        Cochar s(r, -b);
        while (true) {
            std::int64_t m = 0;
            for (auto e : s) m = std::max(m, e < 0 ? -e : e);
            if (m == b) {
                Chamber cand(s);
                if (cand.sigma() == s && x.is_generic(cand) && x.sign_vector(cand) == target && separates(s)) {
                    SigmaProjection out;
                    out.sigma = s;
                    out.interval = project_sigma(newton_A(a), s);
                    const LaurentPoly restricted = restrict_cochar(a, s);
                    Interval direct;
                    for (const auto& [e, coef] : restricted.terms()) {
                        const Rational t(static_cast<long>(e.a[0]));
                        if (!direct.lo || t < *direct.lo) direct.lo = t;
                        if (!direct.hi || t > *direct.hi) direct.hi = t;
                    }
                    out.consistent = direct == out.interval;
                    return out;
                }
            }
            std::size_t i = r;
            bool done = true;
            while (i > 0) {
                --i;
                if (s[i] < b) {
                    ++s[i];
                    done = false;
                    break;
                }
                s[i] = -b;
            }
            if (done) break;
        }
    }
    throw Error("generic_sigma_projection: no separating cocharacter with entries up to 64");
}

} // namespace envlab
