#include "envlab/linear.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace envlab::linear {

std::vector<std::size_t> rref(RMat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        const Rational inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    return pivots;
}

RMat nullspace(const RMat& m, std::size_t cols) {
    RMat red = m;
    for (const auto& row : red)
        if (row.size() != cols) throw std::invalid_argument("nullspace: ragged matrix");
    const auto pivots = rref(red);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    RMat basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RVec v(cols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(RMat m) { return rref(m).size(); }

std::vector<std::int64_t> primitive(const RVec& v) {
    Integer l = 1;
    for (const auto& x : v) {
        Integer d = x.get_den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<Integer> ints;
    Integer g = 0;
    for (const auto& x : v) {
        Rational s = x * l;
        ints.push_back(s.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
    }
    if (g == 0) throw std::invalid_argument("primitive: zero vector");
    std::vector<std::int64_t> out;
    for (auto& x : ints) {
        Integer q = x / g;
        if (!q.fits_slong_p()) throw std::overflow_error("primitive: entry does not fit in 64 bits");
        out.push_back(q.get_si());
    }
    return out;
}

Rational dot(const RVec& u, const RVec& v) {
    Rational s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

Rational dot(const std::vector<std::int64_t>& u, const RVec& v) {
    Rational s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += Rational(static_cast<long>(u[i])) * v[i];
    return s;
}

namespace {

// Scales so the first nonzero coefficient has absolute value one. Returns
// false for an all-zero row.
bool normalize(Inequality& q) {
    auto it = std::find_if(q.coeffs.begin(), q.coeffs.end(), [](const Rational& x) { return x != 0; });
    if (it == q.coeffs.end()) return false;
    const Rational s = abs(*it);
    for (auto& x : q.coeffs) x /= s;
    q.bound /= s;
    return true;
}

struct CoeffLess {
    bool operator()(const RVec& a, const RVec& b) const {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

// Keeps the tightest bound per coefficient vector; reports infeasibility of
// trivial rows through `ok`.
std::vector<Inequality> prune(std::vector<Inequality> sys, bool& ok) {
    std::map<RVec, Rational, CoeffLess> best;
    for (auto& q : sys) {
        if (!normalize(q)) {
            if (q.bound < 0) {
                ok = false;
                return {};
            }
            continue;
        }
        auto [it, inserted] = best.try_emplace(q.coeffs, q.bound);
        if (!inserted && q.bound < it->second) it->second = q.bound;
    }
    std::vector<Inequality> out;
    out.reserve(best.size());
    for (auto& [c, b] : best) out.push_back({c, b});
    return out;
}

} // namespace

bool fm_feasible(std::vector<Inequality> system, std::size_t vars) {
    bool ok = true;
    system = prune(std::move(system), ok);
    if (!ok) return false;
    std::vector<bool> done(vars, false);
    for (std::size_t step = 0; step < vars; ++step) {
        // Eliminate the variable producing the fewest new rows.
        std::size_t best_var = vars;
        std::size_t best_cost = 0;
        for (std::size_t k = 0; k < vars; ++k) {
            if (done[k]) continue;
            std::size_t pos = 0, neg = 0;
            for (const auto& q : system) {
                if (q.coeffs[k] > 0) ++pos;
                if (q.coeffs[k] < 0) ++neg;
            }
            const std::size_t cost = pos * neg;
            if (best_var == vars || cost < best_cost) {
                best_var = k;
                best_cost = cost;
            }
        }
        const std::size_t k = best_var;
        done[k] = true;
        std::vector<Inequality> pos, neg, next;
        for (auto& q : system) {
            if (q.coeffs[k] > 0)
                pos.push_back(std::move(q));
            else if (q.coeffs[k] < 0)
                neg.push_back(std::move(q));
            else
                next.push_back(std::move(q));
        }
        for (const auto& p : pos) {
            for (const auto& n : neg) {
                const Rational fp = 1 / p.coeffs[k];
                const Rational fn = -1 / n.coeffs[k];
                Inequality c;
                c.coeffs.resize(vars);
                for (std::size_t j = 0; j < vars; ++j) c.coeffs[j] = p.coeffs[j] * fp + n.coeffs[j] * fn;
                c.coeffs[k] = 0;
                c.bound = p.bound * fp + n.bound * fn;
                next.push_back(std::move(c));
            }
        }
        system = prune(std::move(next), ok);
        if (!ok) return false;
    }
    return true;
}

bool simplex_feasible(const RMat& a, const RVec& b) {
    const std::size_t m = a.size();
    if (m == 0) return true;
    const std::size_t n = a[0].size();
    const std::size_t cols = n + m; // structural + artificial
    RMat t(m, RVec(cols + 1, 0));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
        t[i][n + i] = 1;
        t[i][cols] = flip ? Rational(-b[i]) : b[i];
        basis[i] = n + i;
    }
    // Phase one: minimise the sum of artificials.
    RVec cost(cols + 1, 0);
    for (std::size_t j = 0; j <= cols; ++j) {
        if (j >= n && j < cols) continue;
        for (std::size_t i = 0; i < m; ++i) cost[j] -= t[i][j];
    }
    while (true) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        if (enter == cols) break;
        std::size_t leave = m;
        Rational best_ratio;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][cols] / t[i][enter];
            if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m) break; // unbounded direction; cannot happen in phase one
        const Rational inv = 1 / t[leave][enter];
        for (auto& x : t[leave]) x *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            const Rational f = t[i][enter];
            for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
        }
        if (cost[enter] != 0) {
            const Rational f = cost[enter];
            for (std::size_t j = 0; j <= cols; ++j) cost[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    Rational infeasibility = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= n) infeasibility += t[i][cols];
    return infeasibility == 0;
}

} // namespace envlab::linear
