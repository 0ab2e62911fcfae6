// series_result.hpp
// Value plus truncation metadata, returned by every truncated sum.

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

namespace ppz {

// A cutoff R for square partial sums over zeta zeros. It sits strictly
// inside a gap between consecutive ordinates (or above the last one used),
// never on an ordinate.
struct CutoffR {
    double value = 0.0;
    // Zero-based indices of the ordinates straddling value; lower == -1 means
    // value is below the first ordinate, upper == -1 means above the last.
    std::int64_t lower = -1;
    std::int64_t upper = -1;
    // Set when the requested target was below gamma_1 and the first gap was
    // used instead.
    bool below_first_zero = false;
};

struct SeriesResult {
    std::complex<double> value{};
    std::int64_t terms_used = 0;
    // Number of series terms (Dirichlet sums) or zeros (zero sums) in play.
    std::int64_t truncation = 0;
    std::optional<CutoffR> cutoff;
    // Non-negative size estimate (or rigorous bound, see op docs) of the
    // omitted tail.
    double tail_estimate = 0.0;
    // True when tail_estimate is a proven upper bound rather than a model.
    bool tail_is_bound = false;
};

}  // namespace ppz
