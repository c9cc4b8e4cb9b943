#pragma once

#include <vector>

#include "ts3c/hier_clustering.hpp"

namespace ts3c {

// Internal indices over one clustering. CH, SI and the Dunn variants are
// maximized; SSE, NSSE, DB and COP are minimized.
struct IndexReport {
    double sse = 0.0;
    double nsse = 0.0;
    double ch = 0.0;
    double si = 0.0;
    double db = 0.0;
    double du_gd33 = 0.0;
    double du_gd43 = 0.0;
    double du_gd53 = 0.0;
    double cop = 0.0;
};

enum class DunnVariant { GD33, GD43, GD53 };

double sse_index(const std::vector<Point>& points, const Partition& partition);

// SSE over the mean pairwise centroid distance. The denominator printed in
// the index's source uses a (T-1)! factor, which overflows for any real
// dataset; `literal_denominator` switches to that form for comparison.
double nsse_index(const std::vector<Point>& points, const Partition& partition,
                  bool literal_denominator = false);

// +inf when every cluster is perfectly compact.
double calinski_harabasz(const std::vector<Point>& points, const Partition& partition);

double silhouette(const std::vector<Point>& points, const Partition& partition);

double davies_bouldin(const std::vector<Point>& points, const Partition& partition);

// min over cluster pairs of delta / max cluster diameter; +inf when the
// max diameter is 0. GD53 uses point-symmetry diameters.
double dunn(const std::vector<Point>& points, const Partition& partition,
            DunnVariant variant);

double cop_index(const std::vector<Point>& points, const Partition& partition);

IndexReport compute_report(const std::vector<Point>& points, const Partition& partition);

// Fraction of item pairs on which the partition and the ground truth agree.
double rand_index(const Partition& predicted, const std::vector<int>& truth);
double rand_index(const std::vector<int>& predicted, const std::vector<int>& truth);

}  // namespace ts3c
