#include "riskprio/histogram.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "riskprio/mcs_engine.hpp"
#include "riskprio/report_io.hpp"

namespace riskprio {

HistogramExport export_histogram(std::span<const double> samples, std::size_t bins, double alpha) {
    if (samples.empty()) throw std::invalid_argument("histogram of an empty sample");
    if (bins < 1) throw std::invalid_argument("histogram needs at least one bin");

    auto [mn, mx] = std::minmax_element(samples.begin(), samples.end());
    double lo = *mn, hi = *mx;
    if (lo == hi) {
        lo -= 0.5;
        hi += 0.5;
    }
    const double width = (hi - lo) / static_cast<double>(bins);

    HistogramExport h;
    h.alpha = alpha;
    h.marker = percentile(samples, alpha);
    h.edges.resize(bins + 1);
    for (std::size_t b = 0; b <= bins; ++b) h.edges[b] = lo + width * static_cast<double>(b);
    h.edges.back() = hi;
    h.counts.assign(bins, 0);
    for (double x : samples) {
        auto b = static_cast<std::size_t>(std::floor((x - lo) / width));
        h.counts[std::min(b, bins - 1)] += 1;
    }
    h.cumulative.resize(bins);
    std::uint64_t running = 0;
    for (std::size_t b = 0; b < bins; ++b) {
        running += h.counts[b];
        h.cumulative[b] = static_cast<double>(running) / static_cast<double>(samples.size());
    }
    return h;
}

std::string histogram_to_csv(const HistogramExport& h) {
    std::string out = "bin_lo,bin_hi,count,cum_frac\n";
    for (std::size_t b = 0; b < h.counts.size(); ++b) {
        out += format_fixed(h.edges[b], 4) + "," + format_fixed(h.edges[b + 1], 4) + "," +
               std::to_string(h.counts[b]) + "," + format_fixed(h.cumulative[b], 6) + "\n";
    }
    out += "# percentile alpha=" + format_fixed(h.alpha, 4) + " value=" + format_fixed(h.marker, 4) + "\n";
    return out;
}

}  // namespace riskprio
