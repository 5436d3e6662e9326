#include "envlab/laurent.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace envlab {

namespace {

void require_same_rank(std::size_t r1, std::size_t r2, const char* op) {
    if (r1 != r2) {
        throw RankMismatch(std::string(op) + ": rank mismatch (" + std::to_string(r1) +
                           " vs " + std::to_string(r2) + ")");
    }
}

void accumulate(LaurentPoly::TermMap& terms, const ExpVec& e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

} // namespace

bool ExpVec::is_zero() const { return y == 0 && a_is_zero(); }

bool ExpVec::a_is_zero() const {
    return std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x == 0; });
}

ExpVec ExpVec::operator+(const ExpVec& o) const {
    require_same_rank(rank(), o.rank(), "ExpVec +");
    ExpVec r = *this;
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
    r.y += o.y;
    return r;
}

ExpVec ExpVec::operator-(const ExpVec& o) const { return *this + (-o); }

ExpVec ExpVec::operator-() const { return scaled(-1); }

ExpVec ExpVec::scaled(std::int64_t k) const {
    ExpVec r = *this;
    for (auto& x : r.a) x *= k;
    r.y *= k;
    return r;
}

std::int64_t pairing(const Cochar& sigma, const ExpVec& v) {
    require_same_rank(sigma.size(), v.rank(), "pairing");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < sigma.size(); ++i) s += sigma[i] * v.a[i];
    return s;
}

LaurentPoly LaurentPoly::from_terms(std::size_t rank, TermMap terms) {
    LaurentPoly p(rank);
    for (auto it = terms.begin(); it != terms.end();) {
        require_same_rank(rank, it->first.rank(), "LaurentPoly");
        if (it->second == 0)
            it = terms.erase(it);
        else
            ++it;
    }
    p.terms_ = std::move(terms);
    return p;
}

LaurentPoly LaurentPoly::constant(std::size_t rank, const Integer& c) {
    return monomial(ExpVec::zero(rank), c);
}

LaurentPoly LaurentPoly::monomial(const ExpVec& e, const Integer& c) {
    LaurentPoly p(e.rank());
    if (c != 0) p.terms_.emplace(e, c);
    return p;
}

LaurentPoly LaurentPoly::one_minus(const ExpVec& v) {
    LaurentPoly p = constant(v.rank(), 1);
    accumulate(p.terms_, v, -1);
    return p;
}

Integer LaurentPoly::coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
}

const std::pair<const ExpVec, Integer>& LaurentPoly::leading() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return *terms_.rbegin();
}

const std::pair<const ExpVec, Integer>& LaurentPoly::trailing() const {
    if (terms_.empty()) throw std::logic_error("trailing term of zero polynomial");
    return *terms_.begin();
}

LaurentPoly LaurentPoly::operator-() const { return scale(*this, -1); }

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) {
    require_same_rank(p.rank(), q.rank(), "add");
    LaurentPoly::TermMap t = p.terms();
    for (const auto& [e, c] : q.terms()) accumulate(t, e, c);
    return LaurentPoly::from_terms(p.rank(), std::move(t));
}

LaurentPoly sub(const LaurentPoly& p, const LaurentPoly& q) {
    require_same_rank(p.rank(), q.rank(), "sub");
    LaurentPoly::TermMap t = p.terms();
    for (const auto& [e, c] : q.terms()) accumulate(t, e, -c);
    return LaurentPoly::from_terms(p.rank(), std::move(t));
}

LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) {
    require_same_rank(p.rank(), q.rank(), "mul");
    LaurentPoly::TermMap t;
    for (const auto& [e1, c1] : p.terms())
        for (const auto& [e2, c2] : q.terms()) accumulate(t, e1 + e2, c1 * c2);
    return LaurentPoly::from_terms(p.rank(), std::move(t));
}

LaurentPoly scale(const LaurentPoly& p, const Integer& c) {
    LaurentPoly::TermMap t;
    if (c != 0)
        for (const auto& [e, x] : p.terms()) t.emplace(e, x * c);
    return LaurentPoly::from_terms(p.rank(), std::move(t));
}

LaurentPoly shift(const LaurentPoly& p, const ExpVec& v) {
    require_same_rank(p.rank(), v.rank(), "shift");
    LaurentPoly::TermMap t;
    for (const auto& [e, c] : p.terms()) t.emplace(e + v, c);
    return LaurentPoly::from_terms(p.rank(), std::move(t));
}

LaurentPoly power(const LaurentPoly& p, unsigned k) {
    LaurentPoly r = LaurentPoly::constant(p.rank(), 1);
    for (unsigned i = 0; i < k; ++i) r = mul(r, p);
    return r;
}

LaurentPoly subst_y(const LaurentPoly& p, std::int64_t v) {
    if (v != 1 && v != -1) throw std::invalid_argument("subst_y: only y -> 1 and y -> -1 are supported");
    LaurentPoly::TermMap t;
    for (const auto& [e, c] : p.terms()) {
        ExpVec f(e.a, 0);
        const bool odd = (e.y % 2) != 0;
        accumulate(t, f, (v == -1 && odd) ? Integer(-c) : c);
    }
    return LaurentPoly::from_terms(p.rank(), std::move(t));
}

std::optional<LaurentPoly> exact_quotient(const LaurentPoly& p, const LaurentPoly& d) {
    if (d.is_zero()) throw std::invalid_argument("exact_quotient: division by zero polynomial");
    require_same_rank(p.rank(), d.rank(), "exact_quotient");
    const std::size_t r = p.rank();
    if (p.is_zero()) return LaurentPoly(r);

    // Over a domain N(d*q) = N(d) + N(q), so every exponent of a quotient lies
    // in the box [min(p) - min(d), max(p) - max(d)] coordinatewise. The box is
    // finite, which bounds the elimination below.
    auto bounds = [r](const LaurentPoly& f) {
        std::vector<std::int64_t> lo(r + 1, std::numeric_limits<std::int64_t>::max());
        std::vector<std::int64_t> hi(r + 1, std::numeric_limits<std::int64_t>::min());
        for (const auto& [e, c] : f.terms()) {
            for (std::size_t i = 0; i < r; ++i) {
                lo[i] = std::min(lo[i], e.a[i]);
                hi[i] = std::max(hi[i], e.a[i]);
            }
            lo[r] = std::min(lo[r], e.y);
            hi[r] = std::max(hi[r], e.y);
        }
        return std::pair{lo, hi};
    };
    const auto [plo, phi] = bounds(p);
    const auto [dlo, dhi] = bounds(d);
    std::vector<std::int64_t> qlo(r + 1), qhi(r + 1);
    for (std::size_t i = 0; i <= r; ++i) {
        qlo[i] = plo[i] - dlo[i];
        qhi[i] = phi[i] - dhi[i];
        if (qlo[i] > qhi[i]) return std::nullopt;
    }
    auto in_box = [&](const ExpVec& m) {
        for (std::size_t i = 0; i < r; ++i)
            if (m.a[i] < qlo[i] || m.a[i] > qhi[i]) return false;
        return m.y >= qlo[r] && m.y <= qhi[r];
    };

    const auto& [dlead_e, dlead_c] = d.leading();
    LaurentPoly::TermMap rem = p.terms();
    LaurentPoly::TermMap quot;
    while (!rem.empty()) {
        const auto& [lead_e, lead_c] = *rem.rbegin();
        ExpVec m = lead_e - dlead_e;
        if (!in_box(m)) return std::nullopt;
        if (!mpz_divisible_p(lead_c.get_mpz_t(), dlead_c.get_mpz_t())) return std::nullopt;
        Integer c = lead_c / dlead_c;
        for (const auto& [e, x] : d.terms()) accumulate(rem, e + m, -c * x);
        quot.emplace(std::move(m), c);
    }
    return LaurentPoly::from_terms(r, std::move(quot));
}

LaurentPoly restrict_cochar(const LaurentPoly& p, const Cochar& sigma) {
    require_same_rank(p.rank(), sigma.size(), "restrict_cochar");
    LaurentPoly::TermMap t;
    for (const auto& [e, c] : p.terms()) accumulate(t, ExpVec({pairing(sigma, e)}, e.y), c);
    return LaurentPoly::from_terms(1, std::move(t));
}

VarNames VarNames::ascii(std::size_t rank) {
    VarNames n;
    for (std::size_t i = 0; i < rank; ++i) {
        if (i < 4)
            n.a.push_back(std::string(1, static_cast<char>('a' + i)));
        else
            n.a.push_back("a" + std::to_string(i + 1));
    }
    return n;
}

VarNames VarNames::greek(std::size_t rank) {
    static const char* letters[] = {"α", "β", "γ", "δ"};
    VarNames n;
    for (std::size_t i = 0; i < rank; ++i) {
        if (i < 4)
            n.a.push_back(letters[i]);
        else
            n.a.push_back("α" + std::to_string(i + 1));
    }
    return n;
}

namespace {

std::string factor(const std::string& name, std::int64_t e) {
    return e == 1 ? name : name + "^" + std::to_string(e);
}

} // namespace

std::string to_pretty(const LaurentPoly& p, const VarNames& names) {
    if (p.is_zero()) return "0";
    if (names.a.size() < p.rank()) throw std::invalid_argument("to_pretty: not enough variable names");
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        std::vector<std::string> num, den;
        if (e.y > 0) num.push_back(factor(names.y, e.y));
        if (e.y < 0) den.push_back(factor(names.y, -e.y));
        for (std::size_t i = 0; i < e.a.size(); ++i) {
            if (e.a[i] > 0) num.push_back(factor(names.a[i], e.a[i]));
            if (e.a[i] < 0) den.push_back(factor(names.a[i], -e.a[i]));
        }
        Integer mag = abs(c);
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        first = false;

        std::string body;
        for (std::size_t i = 0; i < num.size(); ++i) body += (i ? "*" : "") + num[i];
        if (body.empty()) {
            body = mag.get_str();
        } else if (mag != 1) {
            body = mag.get_str() + "*" + body;
        }
        if (!den.empty()) {
            std::string d;
            for (std::size_t i = 0; i < den.size(); ++i) d += (i ? "*" : "") + den[i];
            body += den.size() > 1 ? "/(" + d + ")" : "/" + d;
        }
        out << body;
    }
    return out.str();
}

std::string to_pretty(const LaurentPoly& p) { return to_pretty(p, VarNames::ascii(p.rank())); }

std::string to_string(const ExpVec& e) {
    std::string s = "[";
    for (std::size_t i = 0; i < e.a.size(); ++i) s += (i ? "," : "") + std::to_string(e.a[i]);
    s += "; " + std::to_string(e.y) + "]";
    return s;
}

std::string to_text(const LaurentPoly& p) {
    std::string s;
    for (const auto& [e, c] : p.terms()) s += c.get_str() + " @ " + to_string(e) + "\n";
    return s;
}

LaurentPoly parse_text(const std::string& text, std::size_t rank) {
    LaurentPoly::TermMap t;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto fail = [&](const std::string& why) {
            throw InputError("parse_text line " + std::to_string(lineno) + ": " + why);
        };
        const auto at = line.find('@');
        const auto lb = line.find('[', at == std::string::npos ? 0 : at);
        const auto semi = line.find(';', lb == std::string::npos ? 0 : lb);
        const auto rb = line.find(']', semi == std::string::npos ? 0 : semi);
        if (at == std::string::npos || lb == std::string::npos || semi == std::string::npos ||
            rb == std::string::npos)
            fail("expected 'coeff @ [e1,...,er; ey]'");
        std::string cs = line.substr(0, at);
        cs.erase(std::remove_if(cs.begin(), cs.end(), ::isspace), cs.end());
        Integer c;
        if (cs.empty() || c.set_str(cs, 10) != 0) fail("bad coefficient '" + cs + "'");
        if (c == 0) fail("zero coefficient");

        std::vector<std::int64_t> a;
        std::string list = line.substr(lb + 1, semi - lb - 1);
        std::istringstream ls(list);
        std::string tok;
        while (std::getline(ls, tok, ',')) {
            tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
            if (tok.empty()) {
                if (list.find_first_not_of(" ") == std::string::npos) break;
                fail("empty exponent");
            }
            try {
                std::size_t used = 0;
                a.push_back(std::stoll(tok, &used));
                if (used != tok.size()) fail("bad exponent '" + tok + "'");
            } catch (const std::logic_error&) {
                fail("bad exponent '" + tok + "'");
            }
        }
        if (a.size() != rank) fail("expected " + std::to_string(rank) + " A-exponents");
        std::int64_t y = 0;
        try {
            std::string ys = line.substr(semi + 1, rb - semi - 1);
            std::size_t used = 0;
            y = std::stoll(ys, &used);
            if (ys.find_first_not_of(" ", used) != std::string::npos) fail("bad y exponent");
        } catch (const std::logic_error&) {
            fail("bad y exponent");
        }
        ExpVec e(std::move(a), y);
        if (t.count(e)) fail("repeated monomial");
        t.emplace(std::move(e), c);
    }
    return LaurentPoly::from_terms(rank, std::move(t));
}

} // namespace envlab
