#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zcocycle/cocycle.hpp"
#include "zcocycle/ehrhart.hpp"
#include "zcocycle/matrix.hpp"

namespace zcy {

// LHS - RHS of the dilated-triangle summation formula: the difference of
// cocycle values at x = (m/content, 0) and content*x against the weighted
// lattice count of {x1} T_gamma minus its area plus (sgn(a+c tau)-3)/4.
// Exactly zero under the hypotheses.
Rational verify_hayes(const IntMatrix2& gamma, const Int& m, const QuadraticReal& tau);

// LHS - RHS of the G0 extension of the formula above, valid for every
// gamma in SL2(Z) with c > 0 and every m >= 0 (including content = 1 and
// content | m). Exactly zero.
Rational verify_prop41(const IntMatrix2& gamma, const Int& m, const QuadraticReal& tau);

// Standard irrational test values: sqrt(2), sqrt(3), sqrt(5),
// 1/2+1/2*sqrt(5), and negated variants.
const std::vector<QuadraticReal>& tau_pool();

struct SuiteBounds {
    long max_entry = 50;
};

struct SuiteReport {
    std::string suite;
    long attempted = 0;
    long passed = 0;
    std::string counterexample;  // empty on success
    double wall_ms = 0;

    bool ok() const { return attempted == passed && counterexample.empty(); }
};

const std::vector<std::string>& suite_names();

// Runs up to `trials` deterministic checks of the named suite. Exhaustive
// suites stop early once their sweep is finished.
SuiteReport run_suite(const std::string& name, long trials, std::uint64_t seed,
                      const SuiteBounds& bounds);

// Stable JSON rendering of a report (wall time deliberately excluded so
// repeated runs are byte-identical).
std::string report_json(const SuiteReport& r);

struct TableRow {
    std::vector<std::pair<std::string, std::string>> cells;  // (column, exact value)
};

struct Table {
    std::string kind;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::string> columns;
    std::vector<TableRow> rows;

    std::string to_json() const;
    std::string to_csv() const;
};

Table emit_table_theorem3(const IntMatrix2& gamma, const IntMatrix2& gamma_prime, long m_max);
Table emit_table_ehrhart(const IntMatrix2& gamma, const Int& ell, long m_max);
Table emit_table_hayes(const IntMatrix2& gamma, const Int& m, const QuadraticReal& tau);

// SL2(Z) sweep: all gamma with 1 <= c <= c_max, a in [1, 2c] coprime to c,
// d the least positive inverse of a mod c, b = (ad-1)/c. When
// require_content is true only matrices with content > 1 are kept.
std::vector<IntMatrix2> sl2_sweep(long c_max, bool require_content);

}  // namespace zcy
