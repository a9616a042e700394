#include "fibhess/verify.hpp"

#include <algorithm>
#include <sstream>

namespace fibhess {

int VerifyReport::passed() const {
    return static_cast<int>(std::count_if(cases.begin(), cases.end(),
                                          [](const VerifyCase& c) { return c.pass(); }));
}

int VerifyReport::failed() const { return static_cast<int>(cases.size()) - passed(); }

std::string VerifyReport::to_text() const {
    std::ostringstream out;
    for (const auto& c : cases) {
        out << (c.pass() ? "PASS" : "FAIL") << "  " << c.identity;
        if (c.k > 0) {
            out << "  [k=" << c.k;
            if (c.n >= 0) out << ", n=" << c.n;
            out << "]";
        }
        if (!c.expect_holds) out << "  (documented discrepancy; expected not to hold)";
        if (!c.detail.empty()) out << "  -- " << c.detail;
        out << '\n';
    }
    out << "verify: " << passed() << " passed, " << failed() << " failed, " << cases.size()
        << " total\n";
    return out.str();
}

nlohmann::json VerifyReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : cases) {
        arr.push_back(nlohmann::json{{"identity", c.identity},
                                     {"family", c.family},
                                     {"k", c.k},
                                     {"n", c.n},
                                     {"holds", c.holds},
                                     {"expect_holds", c.expect_holds},
                                     {"pass", c.pass()},
                                     {"detail", c.detail}});
    }
    return nlohmann::json{{"cases", std::move(arr)},
                          {"passed", passed()},
                          {"failed", failed()},
                          {"all_pass", all_pass()}};
}

namespace {

bool is_det_family(Family f) {
    return f == Family::Q || f == Family::B || f == Family::C || f == Family::M;
}

std::string op_name(Family f) { return is_det_family(f) ? "det" : "per"; }

// Real, nonnegative, integral coefficients throughout.
bool has_nonneg_integer_coeffs(const LaurentPoly& p, std::string& why) {
    for (const auto& [e, c] : p.terms()) {
        if (!c.is_real() || !c.re().is_integer() || c.re().is_negative()) {
            why = "coefficient " + c.to_string() + " is not a nonnegative integer";
            return false;
        }
    }
    return true;
}

void check_symbolic_family(VerifyReport& report, const SymbolicBuilder& builder, Family f,
                           int k, int n, int oracle_n_max) {
    const FamilySpec spec{f, k, n};
    const auto matrix = builder(spec);
    const LaurentPoly result =
        is_det_family(f) ? det_hessenberg(matrix) : per_hessenberg(matrix);
    const LaurentPoly expected = fib_poly(k, n + 1);
    const std::string name = op_name(f) + "(" + to_string(f) + "_{k,n}) = F_{k,n+1}";

    VerifyCase main_case{name, to_string(f), k, n};
    main_case.holds = (result == expected);
    if (!main_case.holds)
        main_case.detail = "got " + result.to_string() + ", want " + expected.to_string();
    report.cases.push_back(std::move(main_case));

    VerifyCase shape_case{op_name(f) + "(" + to_string(f) +
                              "_{k,n}) is a polynomial with nonnegative integer coefficients",
                          to_string(f), k, n};
    std::string why;
    shape_case.holds = result.is_true_polynomial() && has_nonneg_integer_coeffs(result, why);
    if (!shape_case.holds)
        shape_case.detail = why.empty() ? "negative exponent survived" : why;
    report.cases.push_back(std::move(shape_case));

    if (n <= oracle_n_max) {
        VerifyCase oracle_case{op_name(f) + "(" + to_string(f) + "_{k,n}) matches " +
                                   (is_det_family(f) ? "cofactor" : "Leibniz") + " oracle",
                               to_string(f), k, n};
        const auto dense = DenseMatrix<LaurentPoly>::from_hessenberg(matrix);
        const LaurentPoly oracle = is_det_family(f) ? det_cofactor_oracle(dense)
                                                    : per_leibniz_oracle(dense);
        oracle_case.holds = (result == oracle);
        if (!oracle_case.holds) oracle_case.detail = "recursion and oracle disagree";
        report.cases.push_back(std::move(oracle_case));
    }
}

void check_numeric_family(VerifyReport& report, Family f, int k, int n, int oracle_n_max) {
    const FamilySpec spec{f, k, n};
    const auto matrix = build_numeric(spec);
    const GaussianRational result =
        is_det_family(f) ? det_hessenberg(matrix) : per_hessenberg(matrix);
    const BigInt expected = miles(k, k + n - 1);
    const std::string name = op_name(f) + "(" + to_string(f) + "_{k,n}) = miles(k, k+n-1)";

    VerifyCase c{name, to_string(f), k, n};
    c.holds = (result == GaussianRational(BigRational(expected)));
    if (!c.holds) c.detail = "got " + result.to_string() + ", want " + expected.get_str();
    report.cases.push_back(std::move(c));

    if (n <= oracle_n_max) {
        VerifyCase oracle_case{op_name(f) + "(" + to_string(f) + "_{k,n}) matches " +
                                   (is_det_family(f) ? "cofactor" : "Leibniz") + " oracle",
                               to_string(f), k, n};
        const auto dense = DenseMatrix<GaussianRational>::from_hessenberg(matrix);
        const GaussianRational oracle = is_det_family(f) ? det_cofactor_oracle(dense)
                                                         : per_leibniz_oracle(dense);
        oracle_case.holds = (result == oracle);
        if (!oracle_case.holds) oracle_case.detail = "recursion and oracle disagree";
        report.cases.push_back(std::move(oracle_case));
    }
}

void check_specializations(VerifyReport& report, int k, int n_max, std::uint64_t seed) {
    const Remark1Report r1 = remark1_check(k, n_max, seed);
    for (const ClauseResult* clause : r1.clauses()) {
        VerifyCase c{clause->name, "", k, -1};
        c.holds = clause->pass;
        c.detail = clause->detail;
        // The paper's unshifted clause (iii) genuinely fails; its failure is
        // the documented outcome, recorded rather than counted.
        c.expect_holds = (clause != &r1.vdl_as_stated);
        report.cases.push_back(std::move(c));
    }
}

} // namespace

VerifyReport run_verify(const VerifyOptions& options, const SymbolicBuilder& builder) {
    if (options.k_min < 2 || options.k_min > options.k_max)
        throw ParameterError("verify needs 2 <= k_min <= k_max");
    if (options.n_max < 1) throw ParameterError("verify needs n_max >= 1");

    VerifyReport report;
    for (int k = options.k_min; k <= options.k_max; ++k) {
        for (Family f : options.families) {
            if (family_is_symbolic(f)) {
                for (int n = 0; n <= options.n_max; ++n)
                    check_symbolic_family(report, builder, f, k, n, options.oracle_n_max);
            } else {
                for (int n = 1; n <= options.n_max; ++n)
                    check_numeric_family(report, f, k, n, options.oracle_n_max);
            }
        }
        if (options.include_specializations)
            check_specializations(report, k, options.n_max, options.seed);
    }
    return report;
}

} // namespace fibhess
