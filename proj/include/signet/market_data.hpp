// market_data.hpp
// Ingestion of daily close prices and index levels, trading-calendar
// alignment, and log-return computation.
//
// Day indices are 1-based everywhere in the public API (trading day t runs
// 1..T), matching the sliding-window arithmetic; stock row indices are
// 0-based.

#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "signet/dates.hpp"

namespace signet {

struct PriceRecord {
    std::string symbol;
    Date date;
    double close = 0.0;  // must be > 0
};

// Strictly increasing sequence of trading days.
class TradingCalendar {
public:
    TradingCalendar() = default;
    explicit TradingCalendar(std::vector<Date> days);

    std::size_t size() const { return days_.size(); }
    Date day(int t) const { return days_.at(static_cast<std::size_t>(t) - 1); }
    const std::vector<Date>& days() const { return days_; }

    // 1-based index of a date, or nullopt when the date is not a trading day.
    std::optional<int> index_of(Date d) const;

private:
    std::vector<Date> days_;
};

// Aligned close-price matrix: one row per stock, one column per trading day.
// Absent prices are stored as NaN with availability false.
class PricePanel {
public:
    PricePanel() = default;
    PricePanel(TradingCalendar calendar, std::vector<std::string> symbols);

    std::size_t n_stocks() const { return symbols_.size(); }
    std::size_t n_days() const { return calendar_.size(); }

    const TradingCalendar& calendar() const { return calendar_; }
    const std::vector<std::string>& symbols() const { return symbols_; }
    const std::string& symbol(int i) const { return symbols_.at(static_cast<std::size_t>(i)); }
    std::optional<int> row_of(const std::string& symbol) const;

    bool available(int i, int t) const { return avail_(i, t - 1) != 0; }
    double price(int i, int t) const { return prices_(i, t - 1); }

    // Trusts the caller; validation happens at ingestion. Passing NaN marks
    // the cell unavailable.
    void set_price(int i, int t, double close);

    // True when the stock has a price on every day of [start_day, end_day].
    bool available_range(int i, int start_day, int end_day) const;

private:
    TradingCalendar calendar_;
    std::vector<std::string> symbols_;
    Eigen::MatrixXd prices_;                        // n_stocks x n_days
    Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic> avail_;
    std::unordered_map<std::string, int> row_index_;
};

// Log returns R(t) = ln P(t) - ln P(t-1), defined for t in 2..T and only
// where both prices are present.
class ReturnPanel {
public:
    ReturnPanel() = default;
    ReturnPanel(TradingCalendar calendar, std::vector<std::string> symbols,
                Eigen::MatrixXd returns,
                Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic> present);

    std::size_t n_stocks() const { return symbols_.size(); }
    std::size_t n_days() const { return calendar_.size(); }
    const TradingCalendar& calendar() const { return calendar_; }
    const std::vector<std::string>& symbols() const { return symbols_; }

    bool has_return(int i, int t) const { return present_(i, t - 2) != 0; }
    double value(int i, int t) const { return returns_(i, t - 2); }

    // Dense slice over `rows` for return days start_day+1 .. end_day.
    // The caller guarantees presence (window eligibility does exactly that);
    // absent cells come through as NaN and are caught downstream.
    Eigen::MatrixXd block(std::span<const int> rows, int start_day, int end_day) const;

private:
    TradingCalendar calendar_;
    std::vector<std::string> symbols_;
    Eigen::MatrixXd returns_;  // n_stocks x (T-1); column c holds day t = c+2
    Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic> present_;
};

// Per-date open/close levels of a market index.
class IndexSeries {
public:
    struct Quote {
        double open = 0.0;
        double close = 0.0;
    };

    void insert(Date d, double open, double close);  // throws on duplicates/non-positive
    std::optional<Quote> at(Date d) const;
    std::size_t size() const { return dates_.size(); }
    const std::vector<Date>& dates() const { return dates_; }
    Quote quote_by_index(std::size_t k) const { return quotes_[k]; }

    // Earliest / latest index date within [lo, hi], if any.
    std::optional<Date> first_on_or_after(Date lo, Date hi) const;
    std::optional<Date> last_on_or_before(Date hi, Date lo) const;

private:
    std::vector<Date> dates_;  // sorted
    std::vector<Quote> quotes_;
};

// --- ingestion / export -----------------------------------------------

// CSV with header "symbol,date,close"; ISO-8601 dates. The calendar is the
// sorted union of observed dates; the roster is sorted lexicographically.
PricePanel ingest_prices(std::istream& in);
PricePanel ingest_prices_file(const std::string& path);

// Builds a panel from in-memory records (same validation as the CSV path).
PricePanel build_panel(std::span<const PriceRecord> records);

// CSV with header "date,open,close".
IndexSeries ingest_index(std::istream& in);
IndexSeries ingest_index_file(const std::string& path);

ReturnPanel compute_returns(const PricePanel& panel);

// Canonical price CSV; round-trips bit-exactly through ingest_prices.
void export_prices(const PricePanel& panel, std::ostream& out);

}  // namespace signet
