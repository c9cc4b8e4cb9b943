#pragma once

#include <cstddef>
#include <vector>

#include "ts3c/dataset.hpp"

namespace ts3c {

// Running least-squares state for a growing window. Keeps the power/moment
// sums needed to solve the degree-c normal equations, so pushing a point and
// re-solving costs O(c^3) regardless of how long the window already is.
// The abscissa is local: x = 0, 1, 2, ... from the window start.
class PolyFitState {
public:
    explicit PolyFitState(int degree);

    void push(double y);
    void reset();

    int degree() const { return degree_; }
    std::size_t count() const { return count_; }
    double mean() const;

    // Coefficients ascending by power: [intercept, slope, ...]. Singular
    // systems (fewer points than degree+1) zero the unresolved coefficients.
    std::vector<double> coefficients() const;
    double sse() const;
    // sqrt(SSE) / max(|mean|, kSepEpsilon)
    double sep() const;

    static constexpr double kSepEpsilon = 1e-8;

private:
    int degree_;
    std::size_t count_ = 0;
    std::vector<double> xpow_;  // sum of x^j, j = 0..2c
    std::vector<double> xy_;    // sum of x^j * y, j = 0..c
    double yy_ = 0.0;           // sum of y^2
};

struct Segment {
    int start = 0;  // inclusive
    int end = 0;    // inclusive
    std::vector<double> coefficients;
    double sse = 0.0;
    double mse = 0.0;
    double sep = 0.0;

    int point_count() const { return end - start + 1; }
};

// Segments tile the series with shared endpoints: next.start == prev.end.
struct Segmentation {
    std::vector<Segment> segments;
    int series_id = 0;
    // Set when the series was too short to segment and came back whole.
    bool degenerate = false;
};

// Greedy left-to-right growing window. The window grows point by point;
// once its SEP first exceeds sep_max and it holds at least min_len points,
// the segment is closed at the previous point and the next window starts at
// that cut point. The final partial window is always emitted.
// min_len <= 0 selects the default degree + 2.
Segmentation segment_series(const TimeSeries& series, double sep_max,
                            int degree = 1, int min_len = 0);

}  // namespace ts3c
