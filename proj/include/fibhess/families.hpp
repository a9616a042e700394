#pragma once

#include <string>
#include <string_view>

#include "fibhess/hessenberg.hpp"
#include "fibhess/laurent.hpp"

namespace fibhess {

/// The seven matrix families: Q, B, H, L are symbolic (entries in the
/// Laurent ring over t_1..t_k); C, M, D are their all-ones specializations
/// with entries in Q(i).
enum class Family { Q, B, H, L, C, M, D };

bool family_is_symbolic(Family f);
std::string to_string(Family f);
/// Accepts the single-letter names, case-insensitively. Throws ParameterError.
Family family_from_string(std::string_view name);

/// One concrete matrix: family letter plus the order-k / size-n parameters.
struct FamilySpec {
    Family family;
    int k; // recurrence order, >= 2
    int n; // matrix order, >= 0

    void validate() const;
};

// Entry rules, 1-based (r, s), zero outside -1 <= r-s < k. All four symbolic
// rules share the band monomial i^e * t_{m+1} / t_2^m with m = r-s and the
// convention t_0 = 1 (which turns the m = -1 case into a t_2 multiple).
LaurentPoly entry_q(int k, int r, int s); // coefficient i^|m|
LaurentPoly entry_b(int k, int r, int s); // superdiagonal -t_2, band coefficient 1
LaurentPoly entry_h(int k, int r, int s); // coefficient i^m (signed, i^-1 = -i)
LaurentPoly entry_l(int k, int r, int s); // coefficient 1 throughout

GaussianRational entry_c(int k, int r, int s); // i^|r-s| in band
GaussianRational entry_m(int k, int r, int s); // superdiagonal -1, band 1
GaussianRational entry_d(int k, int r, int s); // 1 in band

/// n x n matrix of a symbolic family (Q, B, H, L), band k.
HessMatrix<LaurentPoly> build_symbolic(const FamilySpec& spec);

/// n x n matrix of a numeric family (C, M, D), band k.
HessMatrix<GaussianRational> build_numeric(const FamilySpec& spec);

} // namespace fibhess
