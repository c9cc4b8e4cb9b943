#include <algorithm>
#include <random>

#include <doctest.h>

#include "oracles.hpp"
#include "ts3c/errors.hpp"
#include "ts3c/hier_clustering.hpp"

using namespace ts3c;

namespace {

std::vector<Point> random_points(std::mt19937& rng, int n, int dim) {
    std::uniform_real_distribution<double> value(-10.0, 10.0);
    std::vector<Point> points(static_cast<std::size_t>(n), Point(static_cast<std::size_t>(dim)));
    for (auto& p : points)
        for (double& v : p) v = value(rng);
    return points;
}

// Same grouping regardless of label names.
bool same_partition(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if ((a[i] == a[j]) != (b[i] == b[j])) return false;
    return true;
}

}  // namespace

TEST_CASE("two well-separated pairs split at k=2") {
    const std::vector<Point> points{{0, 0}, {0, 1}, {10, 10}, {10, 11}};
    const auto partition = ward_cluster(points, 2);
    CHECK(partition.assignment == std::vector<int>{0, 0, 1, 1});
    CHECK(partition.centroids[0][0] == doctest::Approx(0.0));
    CHECK(partition.centroids[0][1] == doctest::Approx(0.5));
    CHECK(partition.centroids[1][0] == doctest::Approx(10.0));
    CHECK(partition.centroids[1][1] == doctest::Approx(10.5));
}

TEST_CASE("k equal to n gives singletons, k=1 one cluster") {
    std::mt19937 rng(3);
    const auto points = random_points(rng, 6, 3);
    const auto singletons = ward_cluster(points, 6);
    CHECK(singletons.assignment == std::vector<int>{0, 1, 2, 3, 4, 5});
    const auto merged = ward_cluster(points, 1);
    CHECK(merged.assignment == std::vector<int>(6, 0));
}

TEST_CASE("cut levels are defined at the extremes") {
    const std::vector<Point> points{{0, 0}, {0, 1}, {10, 10}, {10, 11}};
    const auto tree = ward_linkage(points);
    CHECK(cut_dendrogram(tree, 1).assignment == std::vector<int>{0, 0, 0, 0});
    CHECK(cut_dendrogram(tree, 4).assignment == std::vector<int>{0, 1, 2, 3});
    CHECK(cut_dendrogram(tree, 2).assignment == std::vector<int>{0, 0, 1, 1});
    CHECK_THROWS_AS(cut_dendrogram(tree, 0), ArgumentError);
    CHECK_THROWS_AS(cut_dendrogram(tree, 5), ArgumentError);
}

TEST_CASE("ward matches the recompute-from-scratch oracle") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> size(2, 12);
    std::uniform_int_distribution<int> dims(1, 4);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = size(rng);
        const auto points = random_points(rng, n, dims(rng));
        const auto levels = oracle::naive_ward_levels(points);
        const auto tree = ward_linkage(points);
        for (int k = 1; k <= n; ++k) {
            const auto partition = cut_dendrogram(tree, k);
            CHECK(partition.assignment == levels[static_cast<std::size_t>(k - 1)]);
        }
    }
}

TEST_CASE("merge costs never decrease") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        const auto points = random_points(rng, 20, 3);
        const auto tree = ward_linkage(points);
        for (std::size_t t = 1; t < tree.merges.size(); ++t)
            CHECK(tree.merges[t].cost >= tree.merges[t - 1].cost - 1e-12);
    }
}

TEST_CASE("cuts at k and k+1 nest") {
    std::mt19937 rng(13);
    const auto points = random_points(rng, 15, 2);
    const auto tree = ward_linkage(points);
    for (int k = 1; k < 15; ++k) {
        const auto coarse = cut_dendrogram(tree, k);
        const auto fine = cut_dendrogram(tree, k + 1);
        // Every fine cluster must live inside one coarse cluster.
        for (std::size_t i = 0; i < points.size(); ++i)
            for (std::size_t j = i + 1; j < points.size(); ++j)
                if (fine.assignment[i] == fine.assignment[j])
                    CHECK(coarse.assignment[i] == coarse.assignment[j]);
    }
}

TEST_CASE("input order does not change the grouping") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const auto points = random_points(rng, 10, 3);
        std::vector<std::size_t> perm(points.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Point> shuffled(points.size());
        for (std::size_t i = 0; i < perm.size(); ++i) shuffled[i] = points[perm[i]];

        for (int k : {2, 3, 4}) {
            const auto original = ward_cluster(points, k);
            const auto reordered = ward_cluster(shuffled, k);
            std::vector<int> mapped_back(points.size());
            for (std::size_t i = 0; i < perm.size(); ++i)
                mapped_back[perm[i]] = reordered.assignment[i];
            CHECK(same_partition(original.assignment, mapped_back));
        }
    }
}

TEST_CASE("centroids are member means") {
    std::mt19937 rng(21);
    const auto points = random_points(rng, 18, 4);
    const auto partition = ward_cluster(points, 4);
    const auto groups = partition.members();
    for (int c = 0; c < partition.k; ++c) {
        const auto& group = groups[static_cast<std::size_t>(c)];
        REQUIRE_FALSE(group.empty());
        for (std::size_t d = 0; d < 4; ++d) {
            double mean = 0.0;
            for (std::size_t i : group) mean += points[i][d];
            mean /= static_cast<double>(group.size());
            CHECK(partition.centroids[static_cast<std::size_t>(c)][d] ==
                  doctest::Approx(mean).epsilon(1e-9));
        }
    }
}

TEST_CASE("bad arguments are rejected") {
    const std::vector<Point> points{{0, 0}, {1, 1}};
    CHECK_THROWS_AS(ward_cluster(points, 3), ArgumentError);
    CHECK_THROWS_AS(ward_cluster(points, 0), ArgumentError);
    CHECK_THROWS_AS(ward_cluster({}, 1), ArgumentError);
    CHECK_THROWS_AS(ward_cluster({{0, 0}, {1}}, 1), ArgumentError);
}
