#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "fibhess/gaussian.hpp"

namespace fibhess {

/// Exponent vector of one Laurent monomial: exps[j] is the (possibly
/// negative) exponent of t_{j+1}. Length must match the ambient variable
/// count of the polynomial it lives in.
using MultiIndex = std::vector<int>;

/// Orders monomials by total degree descending, ties broken by comparing
/// exponent sequences lexicographically, larger first. Iterating a term map
/// in this order yields the canonical (graded-lex descending) term sequence.
struct GrlexDescending {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        const long da = std::accumulate(a.begin(), a.end(), 0L);
        const long db = std::accumulate(b.begin(), b.end(), 0L);
        if (da != db) return da > db;
        return a > b;
    }
};

/// Sparse multivariate Laurent polynomial in t_1..t_k over GaussianRational.
/// Stored coefficients are never zero and every key has length k, so the
/// term map is a canonical form: two polynomials are equal iff their maps are.
class LaurentPoly {
public:
    using TermMap = std::map<MultiIndex, GaussianRational, GrlexDescending>;

    /// Zero polynomial in k variables.
    explicit LaurentPoly(int k);

    static LaurentPoly constant(int k, GaussianRational c);
    static LaurentPoly monomial(int k, GaussianRational coeff, MultiIndex exps);
    /// t_j (1-based), j in [1, k].
    static LaurentPoly variable(int k, int j);

    int var_count() const { return k_; }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Coefficient of the given monomial (zero if absent).
    GaussianRational coefficient(const MultiIndex& exps) const;

    /// True iff no stored exponent is negative. The zero polynomial counts
    /// as a true polynomial (empty term set).
    bool is_true_polynomial() const;

    /// { sum_j (j+1)*exps[j] : term of p } with weight(t_j) = j.
    std::set<long> weighted_degree_set() const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    bool operator==(const LaurentPoly& o) const { return k_ == o.k_ && terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    /// Exact substitution t_j := assignment[j-1]. A zero value for a variable
    /// occurring with negative exponent raises EvaluationError.
    GaussianRational evaluate(std::span<const GaussianRational> assignment) const;

    /// Canonical text form, e.g. "t1^4 + 3*t1^2*t2 + 2*t1*t3 + t2^2 + t4".
    std::string to_string() const;

private:
    void add_term(const MultiIndex& exps, const GaussianRational& c);
    void check_same_ring(const LaurentPoly& o) const;

    int k_;
    TermMap terms_;
};

} // namespace fibhess
