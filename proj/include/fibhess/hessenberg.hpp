#pragma once

#include <algorithm>
#include <concepts>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fibhess/errors.hpp"

namespace fibhess {

/// Commutative-ring element contract used by the determinant/permanent code.
template <typename R>
concept RingElement = std::copyable<R> && requires(const R a, const R b) {
    { a + b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a == b } -> std::convertible_to<bool>;
};

/// Lower Hessenberg matrix of order n over a ring: entry(r, s) = 0 whenever
/// s - r > 1. Entries are produced on demand by a rule; the accessor enforces
/// the zero pattern (and the band, when one is declared) structurally.
///
/// Zero/one exemplars are stored because some rings need context to build
/// their identities (a LaurentPoly zero carries a variable count).
template <RingElement R>
class HessMatrix {
public:
    using EntryFn = std::function<R(int, int)>;

    HessMatrix(int n, EntryFn entry, R zero, R one, std::optional<int> band = std::nullopt)
        : n_(n),
          entry_(std::move(entry)),
          zero_(std::move(zero)),
          one_(std::move(one)),
          band_(band) {
        if (n < 0) throw ParameterError("matrix order must be nonnegative");
        if (band && *band < 1) throw ParameterError("band width must be positive");
    }

    int order() const { return n_; }
    const R& zero() const { return zero_; }
    const R& one() const { return one_; }
    std::optional<int> band() const { return band_; }

    /// 1-based access. Returns ring zero above the superdiagonal and, when a
    /// band k is declared, for r - s >= k, without consulting the rule.
    R entry(int r, int s) const {
        if (r < 1 || r > n_ || s < 1 || s > n_)
            throw std::out_of_range("matrix index out of range");
        if (s - r > 1) return zero_;
        if (band_ && r - s >= *band_) return zero_;
        return entry_(r, s);
    }

    /// Same matrix with the band annotation dropped; entries are unchanged.
    HessMatrix without_band() const { return HessMatrix(n_, entry_, zero_, one_, std::nullopt); }

private:
    int n_;
    EntryFn entry_;
    R zero_;
    R one_;
    std::optional<int> band_;
};

/// det by the lower-Hessenberg recursion
///   det(A_0) = 1,
///   det(A_m) = a_{m,m} det(A_{m-1})
///            + sum_{r=1}^{m-1} (-1)^{m-r} a_{m,r} prod_{j=r}^{m-1} a_{j,j+1} det(A_{r-1}),
/// computed in one forward pass over the leading principal minors. When the
/// matrix declares band k (a_{m,r} = 0 for m - r >= k) the sum is truncated
/// to r >= m - k + 1; the dropped terms have a zero a_{m,r} factor. The
/// superdiagonal prefix product is extended incrementally as r decreases.
template <RingElement R>
R det_hessenberg(const HessMatrix<R>& a) {
    const int n = a.order();
    std::vector<R> minors;
    minors.reserve(static_cast<std::size_t>(n) + 1);
    minors.push_back(a.one());
    for (int m = 1; m <= n; ++m) {
        R acc = a.entry(m, m) * minors[static_cast<std::size_t>(m - 1)];
        R prefix = a.one();
        const int r_min = a.band() ? std::max(1, m - *a.band() + 1) : 1;
        for (int r = m - 1; r >= r_min; --r) {
            prefix = prefix * a.entry(r, r + 1);
            const R term = a.entry(m, r) * prefix * minors[static_cast<std::size_t>(r - 1)];
            acc = ((m - r) % 2 != 0) ? acc + (-term) : acc + term;
        }
        minors.push_back(std::move(acc));
    }
    return minors.back();
}

/// per by the same forward recursion with every term taken positively:
///   per(A_m) = a_{m,m} per(A_{m-1})
///            + sum_{r=1}^{m-1} a_{m,r} prod_{j=r}^{m-1} a_{j,j+1} per(A_{r-1}).
template <RingElement R>
R per_hessenberg(const HessMatrix<R>& a) {
    const int n = a.order();
    std::vector<R> minors;
    minors.reserve(static_cast<std::size_t>(n) + 1);
    minors.push_back(a.one());
    for (int m = 1; m <= n; ++m) {
        R acc = a.entry(m, m) * minors[static_cast<std::size_t>(m - 1)];
        R prefix = a.one();
        const int r_min = a.band() ? std::max(1, m - *a.band() + 1) : 1;
        for (int r = m - 1; r >= r_min; --r) {
            prefix = prefix * a.entry(r, r + 1);
            acc = acc + a.entry(m, r) * prefix * minors[static_cast<std::size_t>(r - 1)];
        }
        minors.push_back(std::move(acc));
    }
    return minors.back();
}

/// Dense square matrix used by the brute-force oracles. Kept separate from
/// HessMatrix so the oracles accept arbitrary square inputs.
template <RingElement R>
class DenseMatrix {
public:
    DenseMatrix(int n, R zero, R one)
        : n_(n), zero_(std::move(zero)), one_(std::move(one)),
          a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), zero_) {
        if (n < 0) throw ParameterError("matrix order must be nonnegative");
    }

    static DenseMatrix from_hessenberg(const HessMatrix<R>& h) {
        DenseMatrix d(h.order(), h.zero(), h.one());
        for (int r = 1; r <= h.order(); ++r)
            for (int s = 1; s <= h.order(); ++s) d.at(r, s) = h.entry(r, s);
        return d;
    }

    int order() const { return n_; }
    const R& zero() const { return zero_; }
    const R& one() const { return one_; }

    R& at(int r, int s) { return a_[index(r, s)]; }
    const R& at(int r, int s) const { return a_[index(r, s)]; }

    /// Minor with row r and column s removed (1-based).
    DenseMatrix minor_matrix(int r, int s) const {
        DenseMatrix m(n_ - 1, zero_, one_);
        for (int i = 1, mi = 1; i <= n_; ++i) {
            if (i == r) continue;
            for (int j = 1, mj = 1; j <= n_; ++j) {
                if (j == s) continue;
                m.at(mi, mj) = at(i, j);
                ++mj;
            }
            ++mi;
        }
        return m;
    }

private:
    std::size_t index(int r, int s) const {
        if (r < 1 || r > n_ || s < 1 || s > n_)
            throw std::out_of_range("matrix index out of range");
        return static_cast<std::size_t>(r - 1) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(s - 1);
    }

    int n_;
    R zero_;
    R one_;
    std::vector<R> a_;
};

inline constexpr int kDefaultOracleBound = 8;

namespace detail {

template <RingElement R>
void check_oracle_bound(const DenseMatrix<R>& a, int bound) {
    if (a.order() > bound)
        throw SizeError("matrix order exceeds oracle bound of " + std::to_string(bound));
}

template <RingElement R>
R det_cofactor_rec(const DenseMatrix<R>& a) {
    const int n = a.order();
    if (n == 0) return a.one();
    if (n == 1) return a.at(1, 1);
    R acc = a.zero();
    for (int s = 1; s <= n; ++s) {
        const R term = a.at(1, s) * det_cofactor_rec(a.minor_matrix(1, s));
        acc = (s % 2 == 0) ? acc + (-term) : acc + term;
    }
    return acc;
}

template <RingElement R>
R per_minor_rec(const DenseMatrix<R>& a) {
    const int n = a.order();
    if (n == 0) return a.one();
    if (n == 1) return a.at(1, 1);
    R acc = a.zero();
    for (int s = 1; s <= n; ++s) acc = acc + a.at(1, s) * per_minor_rec(a.minor_matrix(1, s));
    return acc;
}

} // namespace detail

/// Determinant by first-row Laplace expansion. Independent of the Hessenberg
/// recursion; rejects orders past the bound (factorial cost).
template <RingElement R>
R det_cofactor_oracle(const DenseMatrix<R>& a, int bound = kDefaultOracleBound) {
    detail::check_oracle_bound(a, bound);
    return detail::det_cofactor_rec(a);
}

/// Permanent as the full Leibniz sum over all n! permutations.
template <RingElement R>
R per_leibniz_oracle(const DenseMatrix<R>& a, int bound = kDefaultOracleBound) {
    detail::check_oracle_bound(a, bound);
    const int n = a.order();
    if (n == 0) return a.one();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    R acc = a.zero();
    do {
        R prod = a.one();
        for (int i = 1; i <= n; ++i) prod = prod * a.at(i, perm[static_cast<std::size_t>(i - 1)]);
        acc = acc + prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

enum class Axis { Row, Column };

/// Permanent via minor expansion per(A) = sum_k a_{i,k} per(A_{i,k}) along the
/// chosen row, or the column analogue. Sub-permanents expand along row 1.
template <RingElement R>
R per_minor_expansion(const DenseMatrix<R>& a, Axis axis, int index,
                      int bound = kDefaultOracleBound) {
    detail::check_oracle_bound(a, bound);
    const int n = a.order();
    if (index < 1 || index > std::max(n, 1))
        throw std::out_of_range("expansion index out of range");
    if (n == 0) return a.one();
    R acc = a.zero();
    for (int j = 1; j <= n; ++j) {
        if (axis == Axis::Row)
            acc = acc + a.at(index, j) * detail::per_minor_rec(a.minor_matrix(index, j));
        else
            acc = acc + a.at(j, index) * detail::per_minor_rec(a.minor_matrix(j, index));
    }
    return acc;
}

} // namespace fibhess
