#pragma once

#include <snakecf/markov.hpp>

#include <optional>
#include <vector>

namespace snakecf::cli {

struct SuiteRow {
    Slope slope;
    BigInt markov;
    std::optional<ConjectureReport> report;  // empty when skipped
};

struct SuiteSummary {
    Coeff max_q = 0;
    std::optional<BigInt> search_limit;  // empty means unlimited
    std::vector<SuiteRow> rows;
    std::size_t checked = 0;
    std::size_t skipped = 0;
    std::size_t d_unique = 0;
    std::size_t m_unique = 0;
    std::size_t coinciding = 0;
    std::vector<Slope> counterexamples;     // D or M not unique, or different pairs
    std::vector<Slope> range_discrepancies; // the unique M pair fails 2a <= b < 3a
};

/// check_conjecture over every slope with q <= max_q; slopes whose Markov
/// number exceeds the limit are counted as skipped.
SuiteSummary run_check_suite(Coeff max_q, const std::optional<BigInt>& search_limit,
                             unsigned jobs = 1);

}  // namespace snakecf::cli
