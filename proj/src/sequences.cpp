#include "fibhess/sequences.hpp"

#include <random>

namespace fibhess {

namespace {

void check_order(int k) {
    if (k < 2) throw ParameterError("recurrence order k must be at least 2");
}

void check_index(int k, int i) {
    if (i < 1 || i > k) throw ParameterError("sequence index i must lie in [1, k]");
}

} // namespace

LaurentPoly fib_poly(int k, long n) {
    check_order(k);
    if (n < 1) return LaurentPoly(k);
    std::vector<LaurentPoly> vars;
    vars.reserve(static_cast<std::size_t>(k));
    for (int j = 1; j <= k; ++j) vars.push_back(LaurentPoly::variable(k, j));

    // window[j] holds F_{k, m-j}; shifted forward one step at a time.
    std::vector<LaurentPoly> window(static_cast<std::size_t>(k), LaurentPoly(k));
    LaurentPoly current = LaurentPoly::constant(k, GaussianRational(1)); // F_{k,1}
    for (long m = 1; m < n; ++m) {
        LaurentPoly next(k);
        next += vars[0] * current;
        for (int j = 2; j <= k; ++j) next += vars[static_cast<std::size_t>(j - 1)] *
                                              window[static_cast<std::size_t>(j - 2)];
        for (std::size_t j = window.size() - 1; j > 0; --j) window[j] = std::move(window[j - 1]);
        window[0] = std::move(current);
        current = std::move(next);
    }
    return current;
}

BigInt miles(int k, long n) {
    check_order(k);
    if (n < 1) throw ParameterError("Miles numbers are defined for n >= 1");
    // Boundary block f_{k,1}..f_{k,k}: zeros, then ones at k-1 and k.
    std::vector<BigInt> window(static_cast<std::size_t>(k), BigInt(0));
    for (int j = 1; j <= k; ++j) {
        BigInt value = (j >= k - 1) ? 1 : 0;
        if (j == n) return value;
        window[static_cast<std::size_t>(j - 1)] = value;
    }
    BigInt current;
    for (long m = k + 1; m <= n; ++m) {
        current = 0;
        for (const BigInt& v : window) current += v;
        for (std::size_t j = 0; j + 1 < window.size(); ++j) window[j] = window[j + 1];
        window.back() = current;
    }
    return current;
}

GaussianRational er(int k, int i, long n, std::span<const GaussianRational> coeffs) {
    check_order(k);
    check_index(k, i);
    if (n < 1 - static_cast<long>(k))
        throw ParameterError("Er sequence index n must be at least 1-k");
    if (coeffs.size() != static_cast<std::size_t>(k))
        throw ParameterError("Er sequence needs exactly k coefficients");
    // window[j] = f^i_{k, m-k+j} while advancing m from 0; start with the
    // indicator initials on [1-k, 0]: value 1 exactly at n = 1-i.
    std::vector<GaussianRational> window(static_cast<std::size_t>(k));
    for (long m = 1 - k; m <= 0; ++m)
        window[static_cast<std::size_t>(m + k - 1)] =
            (m == 1 - i) ? GaussianRational(1) : GaussianRational();
    if (n <= 0) return window[static_cast<std::size_t>(n + k - 1)];
    GaussianRational current;
    for (long m = 1; m <= n; ++m) {
        current = GaussianRational();
        for (int j = 1; j <= k; ++j)
            current += coeffs[static_cast<std::size_t>(j - 1)] *
                       window[static_cast<std::size_t>(k - j)];
        for (std::size_t j = 0; j + 1 < window.size(); ++j) window[j] = window[j + 1];
        window.back() = current;
    }
    return current;
}

namespace {

// Shared driver for the Pell and Van der Laan integer recurrences: both use
// the same indicator initials, they differ only in the lag weights.
BigInt indicator_recurrence(int k, int i, long n, long initial_one_at,
                            const std::vector<long>& weights) {
    std::vector<BigInt> window(static_cast<std::size_t>(k));
    for (long m = 1 - k; m <= 0; ++m)
        window[static_cast<std::size_t>(m + k - 1)] = (m == initial_one_at) ? 1 : 0;
    if (n <= 0) return window[static_cast<std::size_t>(n + k - 1)];
    BigInt current;
    for (long m = 1; m <= n; ++m) {
        current = 0;
        for (int j = 1; j <= k; ++j)
            if (weights[static_cast<std::size_t>(j - 1)] != 0)
                current += weights[static_cast<std::size_t>(j - 1)] *
                           window[static_cast<std::size_t>(k - j)];
        for (std::size_t j = 0; j + 1 < window.size(); ++j) window[j] = window[j + 1];
        window.back() = current;
    }
    return current;
}

} // namespace

BigInt pell(int k, int i, long n) {
    check_order(k);
    check_index(k, i);
    if (n < 1 - static_cast<long>(k))
        throw ParameterError("Pell sequence index n must be at least 1-k");
    std::vector<long> weights(static_cast<std::size_t>(k), 1);
    weights[0] = 2;
    return indicator_recurrence(k, i, n, 1 - i, weights);
}

BigInt van_der_laan(int k, int i, long n) {
    check_order(k);
    check_index(k, i);
    if (n < 1 - static_cast<long>(k))
        throw ParameterError("Van der Laan sequence index n must be at least 1-k");
    std::vector<long> weights(static_cast<std::size_t>(k), 1);
    weights[0] = 0; // sum starts at lag 2
    return indicator_recurrence(k, i, n, i - k, weights);
}

namespace {

void record_mismatch(ClauseResult& clause, int k, long n, const std::string& lhs,
                     const std::string& rhs) {
    if (!clause.pass) return; // keep the first mismatch
    clause.pass = false;
    clause.detail = "first mismatch at (k=" + std::to_string(k) + ", n=" + std::to_string(n) +
                    "): " + lhs + " != " + rhs;
}

} // namespace

Remark1Report remark1_check(int k, long n_max, std::uint64_t seed) {
    check_order(k);
    if (n_max < 1) throw ParameterError("n_max must be at least 1");

    Remark1Report report;
    report.er_substitution.name = "remark1(i): F_{k,n}(c) = er(k,1,n-1,c)";
    report.pell_substitution.name = "remark1(ii): F_{k,n}(2,1,...,1) = pell(k,k,n)";
    report.vdl_as_stated.name = "remark1(iii) as stated: F_{k,n}(0,1,...,1) = vdl(k,k,n)";
    report.vdl_shifted.name = "remark1(iii) shifted: F_{k,n}(0,1,...,1) = vdl(k,k,n-1)";
    report.miles_substitution.name = "remark1(iv): F_{k,n}(1,...,1) = miles(k,k+n-2)";

    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(k));
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    std::vector<GaussianRational> random_c;
    random_c.reserve(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j)
        random_c.emplace_back(BigRational(num(rng), den(rng)), BigRational(num(rng), den(rng)));

    const std::vector<GaussianRational> pell_point = [&] {
        std::vector<GaussianRational> v(static_cast<std::size_t>(k), GaussianRational(1));
        v[0] = GaussianRational(2);
        return v;
    }();
    const std::vector<GaussianRational> vdl_point = [&] {
        std::vector<GaussianRational> v(static_cast<std::size_t>(k), GaussianRational(1));
        v[0] = GaussianRational(0);
        return v;
    }();
    const std::vector<GaussianRational> ones(static_cast<std::size_t>(k), GaussianRational(1));

    for (long n = 1; n <= n_max; ++n) {
        const LaurentPoly f = fib_poly(k, n);

        const GaussianRational at_c = f.evaluate(random_c);
        const GaussianRational er_val = er(k, 1, n - 1, random_c);
        if (at_c != er_val)
            record_mismatch(report.er_substitution, k, n, at_c.to_string(), er_val.to_string());

        const GaussianRational at_pell = f.evaluate(pell_point);
        const BigInt p = pell(k, k, n);
        if (at_pell != GaussianRational(BigRational(p)))
            record_mismatch(report.pell_substitution, k, n, at_pell.to_string(), p.get_str());

        const GaussianRational at_vdl = f.evaluate(vdl_point);
        const BigInt v_stated = van_der_laan(k, k, n);
        if (at_vdl != GaussianRational(BigRational(v_stated)))
            record_mismatch(report.vdl_as_stated, k, n, at_vdl.to_string(), v_stated.get_str());
        const BigInt v_shifted = van_der_laan(k, k, n - 1);
        if (at_vdl != GaussianRational(BigRational(v_shifted)))
            record_mismatch(report.vdl_shifted, k, n, at_vdl.to_string(), v_shifted.get_str());

        const GaussianRational at_ones = f.evaluate(ones);
        const BigInt fm = miles(k, k + n - 2);
        if (at_ones != GaussianRational(BigRational(fm)))
            record_mismatch(report.miles_substitution, k, n, at_ones.to_string(), fm.get_str());
    }
    return report;
}

} // namespace fibhess
