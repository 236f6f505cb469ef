#include "signet/windows.hpp"

#include "signet/errors.hpp"

namespace signet {

void WindowParams::validate() const {
    if (length < 3) throw UsageError("window length must be >= 3 trading days");
    if (step < 1) throw UsageError("window step must be >= 1");
    if (!(theta >= 0.0) || !(theta < 1.0)) throw UsageError("theta must lie in [0, 1)");
}

std::vector<std::pair<int, int>> enumerate_windows(std::size_t calendar_length,
                                                   const WindowParams& params) {
    params.validate();
    const int t_total = static_cast<int>(calendar_length);
    if (t_total < params.length)
        throw Error("calendar has " + std::to_string(t_total) + " days but windows need " +
                    std::to_string(params.length));
    std::vector<std::pair<int, int>> windows;
    for (int m = 1;; ++m) {
        const int start = 1 + (m - 1) * params.step;
        const int end = (m - 1) * params.step + params.length;
        if (end > t_total) break;
        windows.emplace_back(start, end);
    }
    return windows;
}

std::vector<int> eligible_stocks(const PricePanel& panel, int start_day, int end_day) {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(panel.n_stocks()); ++i)
        if (panel.available_range(i, start_day, end_day)) out.push_back(i);
    return out;
}

std::vector<WindowSpec> make_windows(const PricePanel& panel, const WindowParams& params) {
    auto spans = enumerate_windows(panel.n_days(), params);
    std::vector<WindowSpec> out;
    out.reserve(spans.size());
    int m = 1;
    for (auto [start, end] : spans) {
        WindowSpec spec;
        spec.m = m++;
        spec.start_day = start;
        spec.end_day = end;
        spec.eligible = eligible_stocks(panel, start, end);
        out.push_back(std::move(spec));
    }
    return out;
}

}  // namespace signet
