#include "fibhess/laurent.hpp"

#include <sstream>

namespace fibhess {

LaurentPoly::LaurentPoly(int k) : k_(k) {
    if (k < 1) throw ParameterError("LaurentPoly needs at least one variable");
}

LaurentPoly LaurentPoly::constant(int k, GaussianRational c) {
    return monomial(k, std::move(c), MultiIndex(static_cast<std::size_t>(k), 0));
}

LaurentPoly LaurentPoly::monomial(int k, GaussianRational coeff, MultiIndex exps) {
    LaurentPoly p(k);
    if (exps.size() != static_cast<std::size_t>(k))
        throw DimensionError("monomial exponent vector has wrong length");
    if (!coeff.is_zero()) p.terms_.emplace(std::move(exps), std::move(coeff));
    return p;
}

LaurentPoly LaurentPoly::variable(int k, int j) {
    if (j < 1 || j > k) throw ParameterError("variable index out of range");
    MultiIndex e(static_cast<std::size_t>(k), 0);
    e[static_cast<std::size_t>(j - 1)] = 1;
    return monomial(k, GaussianRational(1), std::move(e));
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    for (int x : e)
        if (x != 0) return false;
    return true;
}

GaussianRational LaurentPoly::coefficient(const MultiIndex& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? GaussianRational() : it->second;
}

bool LaurentPoly::is_true_polynomial() const {
    for (const auto& [e, c] : terms_)
        for (int x : e)
            if (x < 0) return false;
    return true;
}

std::set<long> LaurentPoly::weighted_degree_set() const {
    std::set<long> w;
    for (const auto& [e, c] : terms_) {
        long acc = 0;
        for (std::size_t j = 0; j < e.size(); ++j) acc += static_cast<long>(j + 1) * e[j];
        w.insert(acc);
    }
    return w;
}

void LaurentPoly::check_same_ring(const LaurentPoly& o) const {
    if (k_ != o.k_) throw DimensionError("polynomials live in different variable counts");
}

void LaurentPoly::add_term(const MultiIndex& exps, const GaussianRational& c) {
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(exps, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(k_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    check_same_ring(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    check_same_ring(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_same_ring(o);
    LaurentPoly r(k_);
    MultiIndex e(static_cast<std::size_t>(k_));
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

GaussianRational LaurentPoly::evaluate(std::span<const GaussianRational> assignment) const {
    if (assignment.size() != static_cast<std::size_t>(k_))
        throw DimensionError("assignment length does not match variable count");
    GaussianRational total;
    for (const auto& [e, c] : terms_) {
        GaussianRational term = c;
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            if (e[j] < 0 && assignment[j].is_zero())
                throw EvaluationError("zero substituted into negative exponent of t" +
                                      std::to_string(j + 1));
            term *= pow(assignment[j], e[j]);
        }
        total += term;
    }
    return total;
}

namespace {

// Variable part "t1^2*t3" of one monomial; empty for the constant monomial.
std::string variable_part(const MultiIndex& e) {
    std::string s;
    for (std::size_t j = 0; j < e.size(); ++j) {
        if (e[j] == 0) continue;
        if (!s.empty()) s += "*";
        s += "t" + std::to_string(j + 1);
        if (e[j] != 1) s += "^" + std::to_string(e[j]);
    }
    return s;
}

// Coefficient prefix for a term that has a variable part. The leading sign
// is returned separately so terms can be joined with " + " / " - ".
std::string coeff_prefix(const GaussianRational& c) {
    if (c == GaussianRational(1)) return "";
    if (c == GaussianRational::i()) return "i*";
    if (c.is_real()) return c.re().to_string() + "*";
    if (c.re().is_zero()) return c.im().to_string() + "*i*";
    return "(" + c.to_string() + ")*";
}

bool leading_minus(const GaussianRational& c) {
    if (!c.re().is_zero()) return c.re().is_negative();
    return c.im().is_negative();
}

} // namespace

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool neg = leading_minus(c);
        const GaussianRational mag = neg ? -c : c;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        const std::string vars = variable_part(e);
        if (vars.empty()) {
            out << (mag.is_real() ? mag.to_string() : "(" + mag.to_string() + ")");
        } else {
            out << coeff_prefix(mag) << vars;
        }
    }
    return out.str();
}

} // namespace fibhess
