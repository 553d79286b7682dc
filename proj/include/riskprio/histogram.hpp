#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace riskprio {

// Plot-ready distribution of a sample array with a percentile marker.
struct HistogramExport {
    std::vector<double> edges;              // bins + 1, strictly increasing
    std::vector<std::uint64_t> counts;      // sums to the sample count
    std::vector<double> cumulative;         // non-decreasing, ends at 1
    double alpha = 0.95;
    double marker = 0.0;                    // percentile(samples, alpha)
};

// Equal-width bins over [min, max]; bins are [lo, hi) except the last, which
// is closed. A constant sample gets a unit-width range centred on the value.
HistogramExport export_histogram(std::span<const double> samples, std::size_t bins, double alpha);

// "bin_lo,bin_hi,count,cum_frac" rows followed by "# percentile alpha=... value=...".
std::string histogram_to_csv(const HistogramExport& h);

}  // namespace riskprio
