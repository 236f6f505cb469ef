// correlation.hpp
// Per-window Pearson correlation matrix over eligible stocks and the
// distributional summaries of the correlation coefficients.
//
// The kernel standardizes each return series over the window (mean 0,
// unit 2-norm) and forms the Gram matrix, so the whole matrix is one
// rank-k update instead of N^2/2 scalar passes.

#pragma once

#include <Eigen/Dense>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace signet {

// Symmetric correlation matrix with unit diagonal, entries clamped to
// [-1, 1] to absorb floating-point overshoot (downstream edge distances
// take sqrt(2(1 - w)) and must not see a negative radicand).
struct CorrMatrix {
    Eigen::MatrixXd rho;
    std::vector<std::string> roster;  // row index -> stock symbol

    int n() const { return static_cast<int>(rho.rows()); }
};

struct CorrResult {
    CorrMatrix matrix;
    // Stocks dropped because their in-window return series has zero
    // variance (constant price); Pearson's denominator would be 0.
    std::vector<std::string> excluded;
};

// Distribution summary over the N(N-1)/2 off-diagonal unordered pairs.
// Kurtosis is non-excess (Gaussian -> 3), skewness is the standardized
// third moment (Gaussian -> 0); both use population (1/n) estimators and
// are absent when the pair values are all equal.
struct CorrSummary {
    double p_neg = 0.0;
    double rho_min = 0.0;
    double rho_max = 0.0;
    std::optional<double> kurtosis;
    std::optional<double> skewness;
};

// `returns`: one row per stock, one column per in-window return day.
// Throws ValidationError when any entry is non-finite.
CorrResult correlation_matrix(const Eigen::MatrixXd& returns,
                              const std::vector<std::string>& symbols);

CorrSummary summarize(const CorrMatrix& corr);

// Same statistics applied to an arbitrary value set (used for the summary
// conventions themselves, e.g. Gaussian samples -> kurtosis 3, skewness 0).
CorrSummary distribution_summary(std::span<const double> values);

}  // namespace signet
