#include "suite.hpp"

#include <snakecf/parallel.hpp>

namespace snakecf::cli {

SuiteSummary run_check_suite(Coeff max_q, const std::optional<BigInt>& search_limit,
                             unsigned jobs) {
    SuiteSummary summary;
    summary.max_q = max_q;
    summary.search_limit = search_limit;

    const std::vector<Slope> slopes = slopes_up_to(max_q);
    std::vector<BigInt> markov(slopes.size());
    std::vector<std::optional<ConjectureReport>> reports(slopes.size());
    parallel_for_index(slopes.size(), jobs, [&](std::size_t i) {
        markov[i] = markov_number(slopes[i]);
        if (!search_limit || markov[i] <= *search_limit) {
            reports[i] = check_conjecture(slopes[i], markov[i]);
        }
    });

    for (std::size_t i = 0; i < slopes.size(); ++i) {
        const auto& report = reports[i];
        if (!report) {
            ++summary.skipped;
        } else {
            ++summary.checked;
            summary.d_unique += report->unique_d ? 1 : 0;
            summary.m_unique += report->unique_m ? 1 : 0;
            summary.coinciding += report->coincide ? 1 : 0;
            if (!report->coincide) {
                summary.counterexamples.push_back(slopes[i]);
            }
            for (const PairReport& pair : report->pairs) {
                if (pair.markov && !pair.in_range) {
                    summary.range_discrepancies.push_back(slopes[i]);
                    break;
                }
            }
        }
        summary.rows.push_back({slopes[i], std::move(markov[i]), std::move(reports[i])});
    }
    return summary;
}

}  // namespace snakecf::cli
