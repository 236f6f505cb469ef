// windows.hpp
// Sliding-window enumeration over the trading calendar and per-window
// stock eligibility.

#pragma once

#include <utility>
#include <vector>

#include "signet/market_data.hpp"

namespace signet {

struct WindowParams {
    int length = 26;     // L, trading days per window
    int step = 15;       // slide step in trading days
    double theta = 0.0;  // adjacency threshold

    void validate() const;
};

// One sliding window. Day offsets are 1-based and inclusive; `eligible`
// holds panel row indices of stocks priced on every day of the window.
struct WindowSpec {
    int m = 0;
    int start_day = 0;
    int end_day = 0;
    std::vector<int> eligible;
};

// Windows are exactly those m >= 1 with (m-1)*step + length <= T.
// Throws Error when T < length (nothing to analyze).
std::vector<std::pair<int, int>> enumerate_windows(std::size_t calendar_length,
                                                   const WindowParams& params);

// Stocks with prices present on all days of [start_day, end_day], in roster order.
std::vector<int> eligible_stocks(const PricePanel& panel, int start_day, int end_day);

std::vector<WindowSpec> make_windows(const PricePanel& panel, const WindowParams& params);

}  // namespace signet
