#include "signet/market_data.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <set>

#include "signet/csv.hpp"
#include "signet/errors.hpp"

namespace signet {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

// --- TradingCalendar ----------------------------------------------------

TradingCalendar::TradingCalendar(std::vector<Date> days) : days_(std::move(days)) {
    for (std::size_t k = 1; k < days_.size(); ++k) {
        if (!(days_[k - 1] < days_[k]))
            throw ValidationError("calendar dates must strictly increase (violation at " +
                                  days_[k].to_string() + ")");
    }
}

std::optional<int> TradingCalendar::index_of(Date d) const {
    auto it = std::lower_bound(days_.begin(), days_.end(), d);
    if (it == days_.end() || *it != d) return std::nullopt;
    return static_cast<int>(it - days_.begin()) + 1;
}

// --- PricePanel ----------------------------------------------------------

PricePanel::PricePanel(TradingCalendar calendar, std::vector<std::string> symbols)
    : calendar_(std::move(calendar)), symbols_(std::move(symbols)) {
    const auto n = static_cast<Eigen::Index>(symbols_.size());
    const auto t = static_cast<Eigen::Index>(calendar_.size());
    prices_ = Eigen::MatrixXd::Constant(n, t, kNaN);
    avail_.setZero(n, t);
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        row_index_.emplace(symbols_[i], static_cast<int>(i));
}

std::optional<int> PricePanel::row_of(const std::string& symbol) const {
    auto it = row_index_.find(symbol);
    if (it == row_index_.end()) return std::nullopt;
    return it->second;
}

void PricePanel::set_price(int i, int t, double close) {
    prices_(i, t - 1) = close;
    avail_(i, t - 1) = std::isnan(close) ? 0 : 1;
}

bool PricePanel::available_range(int i, int start_day, int end_day) const {
    for (int t = start_day; t <= end_day; ++t)
        if (!avail_(i, t - 1)) return false;
    return true;
}

// --- ReturnPanel ---------------------------------------------------------

ReturnPanel::ReturnPanel(TradingCalendar calendar, std::vector<std::string> symbols,
                         Eigen::MatrixXd returns,
                         Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic> present)
    : calendar_(std::move(calendar)),
      symbols_(std::move(symbols)),
      returns_(std::move(returns)),
      present_(std::move(present)) {}

Eigen::MatrixXd ReturnPanel::block(std::span<const int> rows, int start_day,
                                   int end_day) const {
    const auto n = static_cast<Eigen::Index>(rows.size());
    const auto len = static_cast<Eigen::Index>(end_day - start_day);  // L-1 return days
    Eigen::MatrixXd out(n, len);
    for (Eigen::Index r = 0; r < n; ++r)
        out.row(r) = returns_.row(rows[static_cast<std::size_t>(r)])
                         .segment(start_day - 1, len);
    return out;
}

// --- IndexSeries ---------------------------------------------------------

void IndexSeries::insert(Date d, double open, double close) {
    if (!(open > 0.0) || !(close > 0.0))
        throw ValidationError("index quote on " + d.to_string() + " must be positive");
    auto it = std::lower_bound(dates_.begin(), dates_.end(), d);
    if (it != dates_.end() && *it == d)
        throw ValidationError("duplicate index date " + d.to_string());
    const auto pos = it - dates_.begin();
    dates_.insert(it, d);
    quotes_.insert(quotes_.begin() + pos, Quote{open, close});
}

std::optional<IndexSeries::Quote> IndexSeries::at(Date d) const {
    auto it = std::lower_bound(dates_.begin(), dates_.end(), d);
    if (it == dates_.end() || *it != d) return std::nullopt;
    return quotes_[static_cast<std::size_t>(it - dates_.begin())];
}

std::optional<Date> IndexSeries::first_on_or_after(Date lo, Date hi) const {
    auto it = std::lower_bound(dates_.begin(), dates_.end(), lo);
    if (it == dates_.end() || *it > hi) return std::nullopt;
    return *it;
}

std::optional<Date> IndexSeries::last_on_or_before(Date hi, Date lo) const {
    auto it = std::upper_bound(dates_.begin(), dates_.end(), hi);
    if (it == dates_.begin()) return std::nullopt;
    --it;
    if (*it < lo) return std::nullopt;
    return *it;
}

// --- ingestion -----------------------------------------------------------

namespace {

std::string read_line_checked(std::istream& in, bool& ok) {
    std::string line;
    ok = static_cast<bool>(std::getline(in, line));
    return line;
}

}  // namespace

PricePanel build_panel(std::span<const PriceRecord> records) {
    std::set<Date> dates;
    std::set<std::string> symbols;
    std::map<std::pair<std::string, Date>, double> cells;
    for (const auto& rec : records) {
        if (!(rec.close > 0.0) || !std::isfinite(rec.close))
            throw ValidationError("non-positive close for " + rec.symbol + " on " +
                                  rec.date.to_string());
        auto [it, inserted] = cells.emplace(std::make_pair(rec.symbol, rec.date), rec.close);
        if (!inserted)
            throw ValidationError("duplicate record for " + rec.symbol + " on " +
                                  rec.date.to_string());
        dates.insert(rec.date);
        symbols.insert(rec.symbol);
    }
    PricePanel panel(TradingCalendar(std::vector<Date>(dates.begin(), dates.end())),
                     std::vector<std::string>(symbols.begin(), symbols.end()));
    for (const auto& [key, close] : cells) {
        const int row = *panel.row_of(key.first);
        const int t = *panel.calendar().index_of(key.second);
        panel.set_price(row, t, close);
    }
    return panel;
}

PricePanel ingest_prices(std::istream& in) {
    bool ok = false;
    std::string header = read_line_checked(in, ok);
    if (!ok) throw ParseError("price stream is empty");
    {
        auto fields = csv::split(header);
        if (fields.size() != 3 || fields[0] != "symbol" || fields[1] != "date" ||
            fields[2] != "close")
            throw ParseError("price CSV header must be 'symbol,date,close'");
    }

    std::vector<PriceRecord> records;
    std::size_t row_no = 1;
    std::string line;
    while (std::getline(in, line)) {
        ++row_no;
        if (line.empty() || line == "\r") continue;
        auto fields = csv::split(line);
        if (fields.size() != 3)
            throw ParseError("row " + std::to_string(row_no) + ": expected 3 fields, got " +
                             std::to_string(fields.size()));
        if (fields[0].empty())
            throw ParseError("row " + std::to_string(row_no) + ": empty symbol");
        Date date;
        try {
            date = Date::parse(fields[1]);
        } catch (const Error& e) {
            throw ParseError("row " + std::to_string(row_no) + ": " + e.what());
        }
        const double close = csv::parse_double(fields[2], row_no);
        if (!(close > 0.0) || !std::isfinite(close))
            throw ValidationError("row " + std::to_string(row_no) +
                                  ": close must be positive, got " + std::string(fields[2]));
        records.push_back(PriceRecord{std::string(fields[0]), date, close});
    }
    try {
        return build_panel(records);
    } catch (const ValidationError& e) {
        throw ValidationError(std::string("price stream: ") + e.what());
    }
}

PricePanel ingest_prices_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open price file '" + path + "'");
    return ingest_prices(in);
}

IndexSeries ingest_index(std::istream& in) {
    bool ok = false;
    std::string header = read_line_checked(in, ok);
    if (!ok) throw ParseError("index stream is empty");
    {
        auto fields = csv::split(header);
        if (fields.size() != 3 || fields[0] != "date" || fields[1] != "open" ||
            fields[2] != "close")
            throw ParseError("index CSV header must be 'date,open,close'");
    }
    IndexSeries series;
    std::size_t row_no = 1;
    std::string line;
    while (std::getline(in, line)) {
        ++row_no;
        if (line.empty() || line == "\r") continue;
        auto fields = csv::split(line);
        if (fields.size() != 3)
            throw ParseError("row " + std::to_string(row_no) + ": expected 3 fields, got " +
                             std::to_string(fields.size()));
        Date date;
        try {
            date = Date::parse(fields[0]);
        } catch (const Error& e) {
            throw ParseError("row " + std::to_string(row_no) + ": " + e.what());
        }
        const double open = csv::parse_double(fields[1], row_no);
        const double close = csv::parse_double(fields[2], row_no);
        if (!(open > 0.0) || !(close > 0.0) || !std::isfinite(open) || !std::isfinite(close))
            throw ValidationError("row " + std::to_string(row_no) +
                                  ": open/close must be positive");
        try {
            series.insert(date, open, close);
        } catch (const ValidationError& e) {
            throw ValidationError("row " + std::to_string(row_no) + ": " + e.what());
        }
    }
    return series;
}

IndexSeries ingest_index_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open index file '" + path + "'");
    return ingest_index(in);
}

ReturnPanel compute_returns(const PricePanel& panel) {
    const auto n = static_cast<Eigen::Index>(panel.n_stocks());
    const auto t_count = static_cast<Eigen::Index>(panel.n_days());
    Eigen::MatrixXd returns = Eigen::MatrixXd::Constant(n, std::max<Eigen::Index>(t_count - 1, 0), kNaN);
    Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic> present;
    present.setZero(n, std::max<Eigen::Index>(t_count - 1, 0));
    for (Eigen::Index i = 0; i < n; ++i) {
        for (int t = 2; t <= static_cast<int>(t_count); ++t) {
            if (panel.available(static_cast<int>(i), t) &&
                panel.available(static_cast<int>(i), t - 1)) {
                returns(i, t - 2) = std::log(panel.price(static_cast<int>(i), t)) -
                                    std::log(panel.price(static_cast<int>(i), t - 1));
                present(i, t - 2) = 1;
            }
        }
    }
    return ReturnPanel(panel.calendar(), panel.symbols(), std::move(returns),
                       std::move(present));
}

void export_prices(const PricePanel& panel, std::ostream& out) {
    out << "symbol,date,close\n";
    for (int i = 0; i < static_cast<int>(panel.n_stocks()); ++i) {
        for (int t = 1; t <= static_cast<int>(panel.n_days()); ++t) {
            if (!panel.available(i, t)) continue;
            out << panel.symbol(i) << ',' << panel.calendar().day(t).to_string() << ','
                << csv::format_double(panel.price(i, t)) << '\n';
        }
    }
}

}  // namespace signet
