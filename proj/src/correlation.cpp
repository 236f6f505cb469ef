#include "signet/correlation.hpp"

#include <algorithm>
#include <cmath>

#include "signet/errors.hpp"

namespace signet {

CorrResult correlation_matrix(const Eigen::MatrixXd& returns,
                              const std::vector<std::string>& symbols) {
    if (returns.rows() != static_cast<Eigen::Index>(symbols.size()))
        throw UsageError("correlation_matrix: one symbol per return row required");
    if (returns.cols() < 2)
        throw UsageError("correlation_matrix: need at least 2 return days");
    if (!returns.allFinite())
        throw ValidationError("correlation_matrix: non-finite return in window slice");

    const Eigen::Index n_in = returns.rows();
    const Eigen::Index len = returns.cols();

    // Center rows and find zero-variance series. A constant price gives
    // returns that are exactly equal, so the centered sum of squares is
    // exactly 0 and the test needs no tolerance.
    Eigen::MatrixXd centered = returns.colwise() - returns.rowwise().mean();
    Eigen::VectorXd sumsq = centered.rowwise().squaredNorm();

    std::vector<int> keep;
    CorrResult result;
    for (Eigen::Index i = 0; i < n_in; ++i) {
        if (sumsq(i) > 0.0)
            keep.push_back(static_cast<int>(i));
        else
            result.excluded.push_back(symbols[static_cast<std::size_t>(i)]);
    }

    const auto n = static_cast<Eigen::Index>(keep.size());
    Eigen::MatrixXd standardized(n, len);
    result.matrix.roster.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index r = 0; r < n; ++r) {
        const int src = keep[static_cast<std::size_t>(r)];
        standardized.row(r) = centered.row(src) / std::sqrt(sumsq(src));
        result.matrix.roster.push_back(symbols[static_cast<std::size_t>(src)]);
    }

    Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(n, n);
    rho.selfadjointView<Eigen::Lower>().rankUpdate(standardized);
    rho.triangularView<Eigen::StrictlyUpper>() = rho.transpose();
    rho = rho.cwiseMax(-1.0).cwiseMin(1.0);
    rho.diagonal().setOnes();
    result.matrix.rho = std::move(rho);
    return result;
}

CorrSummary distribution_summary(std::span<const double> values) {
    if (values.empty()) throw UsageError("distribution_summary: empty value set");
    const double n = static_cast<double>(values.size());

    CorrSummary s;
    s.rho_min = *std::min_element(values.begin(), values.end());
    s.rho_max = *std::max_element(values.begin(), values.end());

    double mean = 0.0;
    std::size_t negatives = 0;
    for (double v : values) {
        mean += v;
        if (v < 0.0) ++negatives;
    }
    mean /= n;
    s.p_neg = static_cast<double>(negatives) / n;

    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double v : values) {
        const double d = v - mean;
        const double d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    m2 /= n;
    m3 /= n;
    m4 /= n;
    if (m2 > 0.0) {
        s.skewness = m3 / std::pow(m2, 1.5);
        s.kurtosis = m4 / (m2 * m2);
    }
    return s;
}

CorrSummary summarize(const CorrMatrix& corr) {
    const int n = corr.n();
    if (n < 2) throw UsageError("summarize: correlation matrix needs n >= 2");
    std::vector<double> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.push_back(corr.rho(i, j));
    return distribution_summary(pairs);
}

}  // namespace signet
