#include "fibhess/families.hpp"

#include <cctype>
#include <cstdlib>

namespace fibhess {

bool family_is_symbolic(Family f) {
    switch (f) {
        case Family::Q:
        case Family::B:
        case Family::H:
        case Family::L: return true;
        case Family::C:
        case Family::M:
        case Family::D: return false;
    }
    throw ParameterError("unknown family");
}

std::string to_string(Family f) {
    switch (f) {
        case Family::Q: return "Q";
        case Family::B: return "B";
        case Family::H: return "H";
        case Family::L: return "L";
        case Family::C: return "C";
        case Family::M: return "M";
        case Family::D: return "D";
    }
    throw ParameterError("unknown family");
}

Family family_from_string(std::string_view name) {
    if (name.size() == 1) {
        switch (std::toupper(static_cast<unsigned char>(name[0]))) {
            case 'Q': return Family::Q;
            case 'B': return Family::B;
            case 'H': return Family::H;
            case 'L': return Family::L;
            case 'C': return Family::C;
            case 'M': return Family::M;
            case 'D': return Family::D;
            default: break;
        }
    }
    throw ParameterError("unknown family name: " + std::string(name));
}

void FamilySpec::validate() const {
    if (k < 2) throw ParameterError("family parameter k must be at least 2");
    if (n < 0) throw ParameterError("matrix order n must be nonnegative");
}

namespace {

bool in_band(int k, int m) { return m >= -1 && m < k; }

// coeff * t_{m+1} * t_2^(-m) with t_0 = 1, for band offset m = r-s in
// [-1, k). m+1 = 0 contributes no numerator variable, which is exactly how
// the superdiagonal turns into a plain t_2 multiple.
LaurentPoly band_monomial(int k, const GaussianRational& coeff, int m) {
    MultiIndex e(static_cast<std::size_t>(k), 0);
    if (m + 1 >= 1) e[static_cast<std::size_t>(m)] += 1;
    e[1] -= m;
    return LaurentPoly::monomial(k, coeff, std::move(e));
}

} // namespace

LaurentPoly entry_q(int k, int r, int s) {
    const int m = r - s;
    if (!in_band(k, m)) return LaurentPoly(k);
    return band_monomial(k, i_pow(std::abs(m)), m);
}

LaurentPoly entry_b(int k, int r, int s) {
    const int m = r - s;
    if (m == -1) return band_monomial(k, GaussianRational(-1), -1); // -t_2
    if (!in_band(k, m)) return LaurentPoly(k);
    return band_monomial(k, GaussianRational(1), m);
}

LaurentPoly entry_h(int k, int r, int s) {
    const int m = r - s;
    if (!in_band(k, m)) return LaurentPoly(k);
    return band_monomial(k, i_pow(m), m);
}

LaurentPoly entry_l(int k, int r, int s) {
    const int m = r - s;
    if (!in_band(k, m)) return LaurentPoly(k);
    return band_monomial(k, GaussianRational(1), m);
}

GaussianRational entry_c(int k, int r, int s) {
    const int m = r - s;
    if (!in_band(k, m)) return GaussianRational();
    return i_pow(std::abs(m));
}

GaussianRational entry_m(int k, int r, int s) {
    const int m = r - s;
    if (m == -1) return GaussianRational(-1);
    if (!in_band(k, m)) return GaussianRational();
    return GaussianRational(1);
}

GaussianRational entry_d(int k, int r, int s) {
    const int m = r - s;
    if (!in_band(k, m)) return GaussianRational();
    return GaussianRational(1);
}

HessMatrix<LaurentPoly> build_symbolic(const FamilySpec& spec) {
    spec.validate();
    if (!family_is_symbolic(spec.family))
        throw ParameterError("family " + to_string(spec.family) + " is numeric, not symbolic");
    const int k = spec.k;
    LaurentPoly (*rule)(int, int, int) = nullptr;
    switch (spec.family) {
        case Family::Q: rule = entry_q; break;
        case Family::B: rule = entry_b; break;
        case Family::H: rule = entry_h; break;
        case Family::L: rule = entry_l; break;
        default: break;
    }
    return HessMatrix<LaurentPoly>(
        spec.n, [rule, k](int r, int s) { return rule(k, r, s); }, LaurentPoly(k),
        LaurentPoly::constant(k, GaussianRational(1)), k);
}

HessMatrix<GaussianRational> build_numeric(const FamilySpec& spec) {
    spec.validate();
    if (family_is_symbolic(spec.family))
        throw ParameterError("family " + to_string(spec.family) + " is symbolic, not numeric");
    const int k = spec.k;
    GaussianRational (*rule)(int, int, int) = nullptr;
    switch (spec.family) {
        case Family::C: rule = entry_c; break;
        case Family::M: rule = entry_m; break;
        case Family::D: rule = entry_d; break;
        default: break;
    }
    return HessMatrix<GaussianRational>(
        spec.n, [rule, k](int r, int s) { return rule(k, r, s); }, GaussianRational(),
        GaussianRational(1), k);
}

} // namespace fibhess
