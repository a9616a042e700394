#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fibhess/laurent.hpp"

namespace fibhess {

/// Generalized Fibonacci polynomial F_{k,n}(t) in t_1..t_k:
///   F_{k,n} = 0 for n < 1,  F_{k,1} = 1,  F_{k,2} = t_1,
///   F_{k,n+1} = t_1 F_{k,n} + ... + t_k F_{k,n-k+1}.
LaurentPoly fib_poly(int k, long n);

/// Miles generalized order-k Fibonacci number f_{k,n} (n >= 1):
/// f_{k,1} = ... = f_{k,k-2} = 0, f_{k,k-1} = f_{k,k} = 1, then the order-k sum.
BigInt miles(int k, long n);

/// Er's i-th sequence of generalized order-k Fibonacci numbers with
/// coefficients c_1..c_k. Defined for n >= 1-k; the indicator initial values
/// (1 at n = 1-i, 0 elsewhere in [1-k, 0]) are returned directly.
GaussianRational er(int k, int i, long n, std::span<const GaussianRational> coeffs);

/// i-th sequence of generalized order-k Pell numbers, n >= 1-k:
/// p_{k,n} = 2 p_{k,n-1} + p_{k,n-2} + ... + p_{k,n-k} with indicator initials.
BigInt pell(int k, int i, long n);

/// i-th sequence of generalized order-k Van der Laan numbers, n >= 1-k:
/// v_{k,n} = v_{k,n-2} + ... + v_{k,n-k} (sum starts at lag 2), initial value
/// 1 where i - n = k and 0 elsewhere in [1-k, 0].
BigInt van_der_laan(int k, int i, long n);

/// Outcome of one specialization identity checked over n in [1, n_max].
struct ClauseResult {
    std::string name;
    bool pass = true;
    std::string detail; // first mismatch, empty when pass
};

/// Report for the four substitution identities relating F_{k,n} to the
/// integer sequences. Clause (iii) is evaluated both as stated (v^k_{k,n})
/// and with the index shift (v^k_{k,n-1}) that the recurrences actually
/// satisfy; both outcomes are recorded.
struct Remark1Report {
    ClauseResult er_substitution;       // F_{k,n}(c) = f^1_{k,n-1}
    ClauseResult pell_substitution;     // F_{k,n}(2,1,...,1) = p^k_{k,n}
    ClauseResult vdl_as_stated;         // F_{k,n}(0,1,...,1) = v^k_{k,n}
    ClauseResult vdl_shifted;           // F_{k,n}(0,1,...,1) = v^k_{k,n-1}
    ClauseResult miles_substitution;    // F_{k,n}(1,...,1) = f_{k,k+n-2}

    std::vector<const ClauseResult*> clauses() const {
        return {&er_substitution, &pell_substitution, &vdl_as_stated, &vdl_shifted,
                &miles_substitution};
    }
};

/// Runs the Remark-1 identity checks for one k over n in [1, n_max]. The er
/// clause uses pseudo-random rational coefficients drawn from the seed.
Remark1Report remark1_check(int k, long n_max, std::uint64_t seed = 20240229);

} // namespace fibhess
