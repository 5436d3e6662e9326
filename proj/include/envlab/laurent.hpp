/**
 * @file laurent.hpp
 * @brief Sparse Laurent polynomials over Z in r torus characters and y.
 *
 * A LaurentPoly is the value of an equivariant K-class at one isolated fixed
 * point: an element of Z[a_1^{+-1},...,a_r^{+-1}][y^{+-1}]. Coefficients are
 * arbitrary precision integers. Terms are kept in canonical form (no zero
 * coefficients) so equality is structural.
 *
 * Monomial order: lexicographic on (y_part, a_part). It is a total group order
 * on Z^{r+1}, compatible with multiplication.
 */
#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "envlab/errors.hpp"

namespace envlab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Integer cocharacter of the torus A (a one-parameter subgroup).
using Cochar = std::vector<std::int64_t>;

/// Character of T = A x C^*: A-exponents plus the exponent of y.
struct ExpVec {
    // Declaration order fixes the monomial order used by operator<=>.
    std::int64_t y = 0;
    std::vector<std::int64_t> a;

    ExpVec() = default;
    explicit ExpVec(std::vector<std::int64_t> a_part, std::int64_t y_part = 0)
        : y(y_part), a(std::move(a_part)) {}

    static ExpVec zero(std::size_t rank) { return ExpVec(std::vector<std::int64_t>(rank, 0), 0); }

    std::size_t rank() const { return a.size(); }
    bool is_zero() const;
    bool a_is_zero() const;

    ExpVec operator+(const ExpVec& o) const;
    ExpVec operator-(const ExpVec& o) const;
    ExpVec operator-() const;
    ExpVec scaled(std::int64_t k) const;

    friend bool operator==(const ExpVec&, const ExpVec&) = default;
    friend std::strong_ordering operator<=>(const ExpVec&, const ExpVec&) = default;
};

/// <sigma, a_part>; y_part is ignored.
std::int64_t pairing(const Cochar& sigma, const ExpVec& v);

class LaurentPoly {
public:
    using TermMap = std::map<ExpVec, Integer>;

    explicit LaurentPoly(std::size_t rank = 0) : rank_(rank) {}

    /// Builds from an arbitrary term map; zero coefficients are dropped.
    static LaurentPoly from_terms(std::size_t rank, TermMap terms);
    static LaurentPoly constant(std::size_t rank, const Integer& c);
    static LaurentPoly monomial(const ExpVec& e, const Integer& c = 1);
    /// 1 - e^{v}
    static LaurentPoly one_minus(const ExpVec& v);

    std::size_t rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Integer coeff(const ExpVec& e) const;

    /// Greatest and least terms in the monomial order. Precondition: nonzero.
    const std::pair<const ExpVec, Integer>& leading() const;
    const std::pair<const ExpVec, Integer>& trailing() const;

    bool is_monomial() const { return terms_.size() == 1; }

    friend bool operator==(const LaurentPoly& p, const LaurentPoly& q) {
        return p.rank_ == q.rank_ && p.terms_ == q.terms_;
    }

    LaurentPoly operator-() const;

private:
    std::size_t rank_;
    TermMap terms_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly sub(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly scale(const LaurentPoly& p, const Integer& c);
/// Multiplication by the monomial e^{v}.
LaurentPoly shift(const LaurentPoly& p, const ExpVec& v);
LaurentPoly power(const LaurentPoly& p, unsigned k);

inline LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) { return add(p, q); }
inline LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) { return sub(p, q); }
inline LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) { return mul(p, q); }

/// y -> v for v in {1, -1}; the result has no y.
LaurentPoly subst_y(const LaurentPoly& p, std::int64_t v);

/// Exact quotient p / d in the Laurent ring, if one exists. Throws
/// std::invalid_argument when d is zero.
std::optional<LaurentPoly> exact_quotient(const LaurentPoly& p, const LaurentPoly& d);

inline bool divides(const LaurentPoly& d, const LaurentPoly& p) {
    return exact_quotient(p, d).has_value();
}

/// Restriction to the one-dimensional subtorus sigma: e^{v} -> t^{<sigma, v>}.
/// The result has rank 1 (the variable t); y is kept.
LaurentPoly restrict_cochar(const LaurentPoly& p, const Cochar& sigma);

/// Variable names used by the human readable renderer.
struct VarNames {
    std::vector<std::string> a;
    std::string y = "y";

    static VarNames ascii(std::size_t rank);
    static VarNames greek(std::size_t rank);
};

/// Multiplicative rendering, e.g. "1 - y*b/a". Terms in increasing monomial order.
std::string to_pretty(const LaurentPoly& p, const VarNames& names);
std::string to_pretty(const LaurentPoly& p);

/// Line format "coeff @ [e1,...,er; ey]", one term per line, increasing order.
std::string to_text(const LaurentPoly& p);
/// Inverse of to_text. An empty input is the zero polynomial of the given rank.
LaurentPoly parse_text(const std::string& text, std::size_t rank);

std::string to_string(const ExpVec& e);

} // namespace envlab
