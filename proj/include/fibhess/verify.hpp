#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fibhess/families.hpp"
#include "fibhess/sequences.hpp"

namespace fibhess {

/// One checked identity instance. `holds` records what the computation
/// found; `expect_holds` is what the theory says (false only for the
/// documented Remark-1(iii) discrepancy, which is supposed to fail).
/// A case counts as passed when the two agree.
struct VerifyCase {
    std::string identity;
    std::string family; // empty for sequence-level identities
    int k = 0;
    int n = -1;         // -1 when the case aggregates a whole n range
    bool holds = false;
    bool expect_holds = true;
    std::string detail;

    bool pass() const { return holds == expect_holds; }
};

struct VerifyReport {
    std::vector<VerifyCase> cases;

    int passed() const;
    int failed() const;
    bool all_pass() const { return failed() == 0; }
    /// 0 on all-pass, 1 otherwise.
    int exit_status() const { return all_pass() ? 0 : 1; }

    std::string to_text() const;
    nlohmann::json to_json() const;
};

struct VerifyOptions {
    int k_min = 2;
    int k_max = 5;
    int n_max = 8;
    std::vector<Family> families = {Family::Q, Family::B, Family::H, Family::L,
                                    Family::C, Family::M, Family::D};
    /// Sequence-specialization checks (Remark 1 clauses) are family-agnostic;
    /// they run unless the caller narrowed the family list.
    bool include_specializations = true;
    /// Orders up to this bound get cross-checked against the brute oracles.
    int oracle_n_max = 5;
    std::uint64_t seed = 20240229;
};

/// Hook for substituting the symbolic matrix builder (used by the
/// sign-flip negative control in the tests).
using SymbolicBuilder = std::function<HessMatrix<LaurentPoly>(const FamilySpec&)>;

/// Runs the identity suite over the (family, k, n) grid: symbolic results
/// against fib_poly, polynomiality and coefficient checks, numeric families
/// against Miles numbers, oracle cross-checks, and the Remark-1
/// specializations. Case order is deterministic (k, then family, then n).
VerifyReport run_verify(const VerifyOptions& options,
                        const SymbolicBuilder& builder = build_symbolic);

} // namespace fibhess
