#pragma once

#include <cstddef>
#include <vector>

namespace ts3c {

using Point = std::vector<double>;

// Assignment of items to clusters 0..k-1 plus the member means.
struct Partition {
    std::vector<int> assignment;
    int k = 0;
    std::vector<Point> centroids;

    std::size_t size() const { return assignment.size(); }
    std::vector<std::vector<std::size_t>> members() const;
};

// Agglomeration history. Leaves are 0..n-1, the t-th merge creates cluster
// id n+t. `cost` is the within-cluster squared-error increase of the merge.
struct Dendrogram {
    struct Merge {
        int a = 0;
        int b = 0;
        double cost = 0.0;
    };
    std::size_t leaf_count = 0;
    std::vector<Merge> merges;
};

// Symmetric zero-diagonal matrix stored triangular.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::size_t n) : n_(n), cells_(n * (n - 1) / 2, 0.0) {}

    std::size_t size() const { return n_; }
    double operator()(std::size_t i, std::size_t j) const {
        return i == j ? 0.0 : cells_[index(i, j)];
    }
    void set(std::size_t i, std::size_t j, double value) { cells_[index(i, j)] = value; }

private:
    std::size_t index(std::size_t i, std::size_t j) const {
        if (i > j) std::swap(i, j);
        return j * (j - 1) / 2 + i;
    }
    std::size_t n_ = 0;
    std::vector<double> cells_;
};

enum class Linkage { Ward, Average };

// Full agglomeration via the Lance-Williams update. For Ward the input must
// be squared Euclidean distances and merge costs are reported as the Ward
// within-cluster squared-error increase. Ties on cost pick the
// lexicographically smallest (a, b) pair of current cluster ids.
Dendrogram linkage_cluster(const DistanceMatrix& distances, Linkage linkage);

// Undo the last k-1 merges; cluster ids are relabeled by order of first
// member appearance, so the cluster containing item 0 is always cluster 0.
// Centroids are left empty (callers with vector data fill them).
Partition cut_dendrogram(const Dendrogram& dendrogram, int k);

// Ward agglomeration of real vectors cut at k clusters, with centroids.
Partition ward_cluster(const std::vector<Point>& points, int k);

Dendrogram ward_linkage(const std::vector<Point>& points);

// Recomputes centroids as member means over `points`.
void fill_centroids(Partition& partition, const std::vector<Point>& points);

double squared_euclidean(const Point& a, const Point& b);
double euclidean_distance(const Point& a, const Point& b);

}  // namespace ts3c
