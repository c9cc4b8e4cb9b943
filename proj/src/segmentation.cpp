#include "ts3c/segmentation.hpp"

#include <algorithm>
#include <cmath>

#include "ts3c/errors.hpp"

namespace ts3c {

PolyFitState::PolyFitState(int degree) : degree_(degree) {
    if (degree < 1) throw ArgumentError("polynomial degree must be >= 1");
    xpow_.assign(2 * static_cast<std::size_t>(degree) + 1, 0.0);
    xy_.assign(static_cast<std::size_t>(degree) + 1, 0.0);
}

void PolyFitState::reset() {
    count_ = 0;
    std::fill(xpow_.begin(), xpow_.end(), 0.0);
    std::fill(xy_.begin(), xy_.end(), 0.0);
    yy_ = 0.0;
}

void PolyFitState::push(double y) {
    const double x = static_cast<double>(count_);
    double p = 1.0;
    for (std::size_t j = 0; j < xpow_.size(); ++j) {
        xpow_[j] += p;
        if (j < xy_.size()) xy_[j] += p * y;
        p *= x;
    }
    yy_ += y * y;
    ++count_;
}

double PolyFitState::mean() const {
    return count_ == 0 ? 0.0 : xy_[0] / static_cast<double>(count_);
}

namespace {

// Gaussian elimination with partial pivoting; near-singular pivots zero the
// corresponding coefficient (happens while the window is shorter than
// degree+1 points, where the fit is exact anyway).
std::vector<double> solve_normal_equations(std::vector<std::vector<double>> m,
                                           std::vector<double> rhs) {
    const std::size_t n = rhs.size();
    std::vector<std::size_t> cols(n);
    for (std::size_t i = 0; i < n; ++i) cols[i] = i;
    std::vector<double> beta(n, 0.0);

    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pivot = step;
        for (std::size_t r = step + 1; r < n; ++r)
            if (std::abs(m[r][step]) > std::abs(m[pivot][step])) pivot = r;
        if (std::abs(m[pivot][step]) < 1e-12) {
            for (std::size_t r = step; r < n; ++r) m[r][step] = 0.0;
            continue;
        }
        std::swap(m[step], m[pivot]);
        std::swap(rhs[step], rhs[pivot]);
        for (std::size_t r = step + 1; r < n; ++r) {
            const double factor = m[r][step] / m[step][step];
            if (factor == 0.0) continue;
            for (std::size_t c = step; c < n; ++c) m[r][c] -= factor * m[step][c];
            rhs[r] -= factor * rhs[step];
        }
    }
    for (std::size_t i = n; i-- > 0;) {
        if (m[i][i] == 0.0) {
            beta[i] = 0.0;
            continue;
        }
        double acc = rhs[i];
        for (std::size_t c = i + 1; c < n; ++c) acc -= m[i][c] * beta[c];
        beta[i] = acc / m[i][i];
    }
    return beta;
}

}  // namespace

std::vector<double> PolyFitState::coefficients() const {
    const std::size_t order = static_cast<std::size_t>(degree_) + 1;
    std::vector<std::vector<double>> gram(order, std::vector<double>(order));
    for (std::size_t r = 0; r < order; ++r)
        for (std::size_t c = 0; c < order; ++c) gram[r][c] = xpow_[r + c];
    return solve_normal_equations(std::move(gram), xy_);
}

double PolyFitState::sse() const {
    // SSE = sum y^2 - beta . (X^T y) when beta solves the normal equations;
    // clamp the cancellation residue at zero.
    const auto beta = coefficients();
    double value = yy_;
    for (std::size_t j = 0; j < beta.size(); ++j) value -= beta[j] * xy_[j];
    return std::max(value, 0.0);
}

double PolyFitState::sep() const {
    return std::sqrt(sse()) / std::max(std::abs(mean()), kSepEpsilon);
}

namespace {

Segment close_segment(const PolyFitState& fit, int start, int end) {
    Segment segment;
    segment.start = start;
    segment.end = end;
    segment.coefficients = fit.coefficients();
    segment.sse = fit.sse();
    segment.mse = segment.sse / static_cast<double>(fit.count());
    segment.sep = fit.sep();
    return segment;
}

}  // namespace

Segmentation segment_series(const TimeSeries& series, double sep_max, int degree,
                            int min_len) {
    if (sep_max <= 0.0) throw ArgumentError("sep_max must be positive");
    if (degree < 1) throw ArgumentError("degree must be >= 1");
    if (min_len <= 0) min_len = degree + 2;
    if (min_len < degree + 1) throw ArgumentError("min_len must be at least degree + 1");
    if (series.values.empty()) throw ArgumentError("cannot segment an empty series");

    const auto& y = series.values;
    const int n = static_cast<int>(y.size());

    Segmentation result;
    result.series_id = series.id;
    if (n < min_len) {
        // Too short to ever trip the threshold; comes back whole.
        PolyFitState fit(degree);
        for (double v : y) fit.push(v);
        result.segments.push_back(close_segment(fit, 0, n - 1));
        result.degenerate = true;
        return result;
    }

    PolyFitState fit(degree);
    PolyFitState before_push(degree);
    int start = 0;
    fit.push(y[start]);
    for (int i = start + 1; i < n; ++i) {
        before_push = fit;
        fit.push(y[i]);
        const int window = i - start + 1;
        if (window >= min_len && fit.sep() > sep_max) {
            // Close at the previous point; the cut point is shared, so the
            // next window starts at i - 1 as well.
            result.segments.push_back(close_segment(before_push, start, i - 1));
            start = i - 1;
            fit.reset();
            fit.push(y[start]);
            fit.push(y[i]);
        }
    }
    result.segments.push_back(close_segment(fit, start, n - 1));
    return result;
}

}  // namespace ts3c
