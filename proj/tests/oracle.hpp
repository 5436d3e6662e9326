// Independent reference computations for the tests. Nothing here calls the
// library's arithmetic: polynomials are compared by evaluation modulo a prime
// and by a naive term map, and P^n cell classes come from explicit coordinate
// subspaces instead of the curve data.
#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "envlab/kclasses.hpp"
#include "envlab/laurent.hpp"

namespace oracle {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 P = (u64(1) << 61) - 1;

inline u64 mulmod(u64 a, u64 b) {
    u128 z = u128(a) * b;
    u64 lo = u64(z & P), hi = u64(z >> 61);
    u64 s = lo + hi;
    return s >= P ? s - P : s;
}

inline u64 powmod(u64 a, u64 e) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

inline u64 inv(u64 a) { return powmod(a, P - 2); }

inline u64 ipow(u64 a, std::int64_t e) { return e >= 0 ? powmod(a, u64(e)) : powmod(inv(a), u64(-e)); }

inline u64 reduce(const envlab::Integer& c) {
    envlab::Integer m = c % envlab::Integer(std::to_string(P));
    if (m < 0) m += envlab::Integer(std::to_string(P));
    return u64(std::stoull(m.get_str()));
}

/// Value of p at a_i = pt[i], y = pt.back(), modulo P.
inline u64 eval(const envlab::LaurentPoly& p, const std::vector<u64>& pt) {
    u64 s = 0;
    for (const auto& [e, c] : p.terms()) {
        u64 t = reduce(c);
        for (std::size_t i = 0; i < e.a.size(); ++i) t = mulmod(t, ipow(pt[i], e.a[i]));
        t = mulmod(t, ipow(pt.back(), e.y));
        s = (s + t) % P;
    }
    return s;
}

inline std::vector<u64> random_point(std::mt19937_64& rng, std::size_t rank) {
    std::uniform_int_distribution<u64> d(2, P - 2);
    std::vector<u64> pt(rank + 1);
    for (auto& x : pt) x = d(rng);
    return pt;
}

/// Naive product on an ordinary std::map keyed by concatenated exponents.
inline std::map<std::vector<std::int64_t>, long long> naive_mul(const envlab::LaurentPoly& p,
                                                                const envlab::LaurentPoly& q) {
    std::map<std::vector<std::int64_t>, long long> out;
    for (const auto& [e1, c1] : p.terms())
        for (const auto& [e2, c2] : q.terms()) {
            std::vector<std::int64_t> k;
            for (std::size_t i = 0; i < e1.a.size(); ++i) k.push_back(e1.a[i] + e2.a[i]);
            k.push_back(e1.y + e2.y);
            out[k] += c1.get_si() * c2.get_si();
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

inline std::map<std::vector<std::int64_t>, long long> as_map(const envlab::LaurentPoly& p) {
    std::map<std::vector<std::int64_t>, long long> out;
    for (const auto& [e, c] : p.terms()) {
        std::vector<std::int64_t> k = e.a;
        k.push_back(e.y);
        out[k] = c.get_si();
    }
    return out;
}

inline envlab::LaurentPoly random_poly(std::mt19937_64& rng, std::size_t rank, int max_terms, int max_exp = 3,
                                       int max_coeff = 5) {
    std::uniform_int_distribution<int> nt(1, max_terms), ex(-max_exp, max_exp), co(-max_coeff, max_coeff);
    envlab::LaurentPoly::TermMap m;
    const int n = nt(rng);
    for (int i = 0; i < n; ++i) {
        std::vector<std::int64_t> a(rank);
        for (auto& x : a) x = ex(rng);
        m[envlab::ExpVec(a, ex(rng))] += co(rng);
    }
    return envlab::LaurentPoly::from_terms(rank, std::move(m));
}

inline envlab::WeightList random_weights(std::mt19937_64& rng, std::size_t rank, int size, int max_exp = 3,
                                         bool with_y = false) {
    std::uniform_int_distribution<int> ex(-max_exp, max_exp);
    envlab::WeightList w;
    while (static_cast<int>(w.size()) < size) {
        std::vector<std::int64_t> a(rank);
        for (auto& x : a) x = ex(rng);
        envlab::ExpVec e(a, with_y ? ex(rng) : 0);
        if (e.a_is_zero()) continue;
        w.push_back(e);
    }
    return w;
}

/// mC_{-y} of the cell of e_i on P^n, from coordinate subspaces. Cells are
/// ordered by sigma-value of the coordinate characters: the closure of the
/// cell of e_i is the span of {e_j : <sigma, chi_j> >= <sigma, chi_i>}.
/// Value at e_k: prod over subspace directions (1 - y e^{-w}) times prod over
/// normal directions (1 - e^{-w}), minus the same for the next smaller span.
inline envlab::LaurentPoly pn_cell_oracle(const std::vector<envlab::ExpVec>& chi, const envlab::Cochar& sigma,
                                          std::size_t i, std::size_t k) {
    using namespace envlab;
    const std::size_t n1 = chi.size(), r = chi[0].rank();
    auto val = [&](std::size_t j) { return pairing(sigma, chi[j]); };
    auto closure_value = [&](const std::vector<bool>& in) {
        LaurentPoly out = LaurentPoly::constant(r, 1);
        if (!in[k]) return LaurentPoly(r);
        for (std::size_t l = 0; l < n1; ++l) {
            if (l == k) continue;
            const ExpVec w = chi[l] - chi[k];
            ExpVec m = -w;
            if (in[l]) m.y = 1;
            out = out * LaurentPoly::one_minus(m);
        }
        return out;
    };
    std::vector<bool> z(n1), zs(n1);
    for (std::size_t j = 0; j < n1; ++j) {
        z[j] = val(j) >= val(i);
        zs[j] = val(j) > val(i);
    }
    bool any = false;
    for (bool b : zs) any = any || b;
    LaurentPoly v = closure_value(z);
    if (any) v = v - closure_value(zs);
    return v;
}

} // namespace oracle
