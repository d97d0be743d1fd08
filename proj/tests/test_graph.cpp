#include <doctest.h>

#include "covertsim/graph.hpp"
#include "covertsim/rng.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

using namespace covertsim;

namespace {

// Writes `text` to a unique temp file and returns the path.
std::string write_temp(const std::string& name, const std::string& text) {
    const std::string path = "covertsim_test_" + name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    REQUIRE(out.good());
    out << text;
    out.close();
    return path;
}

bool throws_with(const std::string& path, const std::string& needle) {
    try {
        (void)load_edge_list(path);
    } catch (const std::runtime_error& e) {
        return std::string(e.what()).find(needle) != std::string::npos;
    }
    return false;
}

std::size_t degree_sum(const Network& net) {
    std::size_t s = 0;
    for (int u = 0; u < net.size(); ++u) s += static_cast<std::size_t>(net.degree(u));
    return s;
}

using Adj = std::vector<std::vector<int>>;

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("complete graph has all pairs connected") {
    const Network net = build_complete(5);
    CHECK(net.size() == 5);
    CHECK(net.edge_count() == 10);
    for (int u = 0; u < 5; ++u) {
        CHECK(net.degree(u) == 4);
        CHECK_FALSE(net.has_edge(u, u));
        for (int v = 0; v < 5; ++v)
            if (u != v) CHECK(net.has_edge(u, v));
    }
    CHECK_THROWS_AS((void)build_complete(1), std::invalid_argument);
}

TEST_CASE("network construction enforces the simple-graph invariants") {
    CHECK_THROWS_AS(Network(Adj{{0}}), std::invalid_argument);            // self-loop
    CHECK_THROWS_AS(Network(Adj{{1, 1}, {0, 0}}), std::invalid_argument); // parallel edge
    CHECK_THROWS_AS(Network(Adj{{1}, {}}), std::invalid_argument);        // asymmetric
    CHECK_THROWS_AS(Network(Adj{{1}, {0}}, {7}), std::invalid_argument);  // id map size
    CHECK_THROWS_AS(Network(Adj{{2}, {}}), std::invalid_argument);        // id out of range

    const Network ok(Adj{{1}, {0, 2}, {1}});
    CHECK(ok.size() == 3);
    CHECK(ok.edge_count() == 2);
    CHECK(ok.has_edge(0, 1));
    CHECK(ok.has_edge(2, 1));
    CHECK_FALSE(ok.has_edge(0, 2));
    CHECK(ok.original_id(2) == 2);  // identity mapping when none supplied
}

TEST_CASE("neighbor lists come out sorted") {
    const Network net(Adj{{2, 1}, {0}, {0}});
    CHECK(std::is_sorted(net.neighbors(0).begin(), net.neighbors(0).end()));
    CHECK(net.neighbors(0) == std::vector<int>{1, 2});
}

TEST_CASE("degree stats use the lower median") {
    const Network path(Adj{{1}, {0, 2}, {1}});  // degrees 1,2,1
    const DegreeStats s = degree_stats(path);
    CHECK(s.min == 1);
    CHECK(s.max == 2);
    CHECK(s.median == 1);  // sorted degrees {1,1,2}, element (3-1)/2 = index 1
    CHECK(s.mean == doctest::Approx(4.0 / 3.0));

    // even count: lower of the two middle values
    const Network p4(Adj{{1}, {0, 2}, {1, 3}, {2}});  // degrees 1,2,2,1 -> sorted {1,1,2,2}
    CHECK(degree_stats(p4).median == 1);

    const Network k4 = build_complete(4);
    CHECK(degree_stats(k4).median == 3);
}

TEST_CASE("random regular graphs are simple, regular, and reproducible") {
    auto rng = rng::engine(5, 0, rng::Stream::Graph);
    const Network net = build_random_regular(200, 7, rng);
    CHECK(net.size() == 200);
    for (int u = 0; u < net.size(); ++u) {
        CHECK(net.degree(u) == 7);
        CHECK_FALSE(net.has_edge(u, u));
        // sorted neighbor list with no duplicates
        const auto& nb = net.neighbors(u);
        CHECK(std::adjacent_find(nb.begin(), nb.end()) == nb.end());
    }
    CHECK(degree_sum(net) == 2 * net.edge_count());

    auto rng2 = rng::engine(5, 0, rng::Stream::Graph);
    const Network again = build_random_regular(200, 7, rng2);
    for (int u = 0; u < net.size(); ++u) CHECK(net.neighbors(u) == again.neighbors(u));

    auto rng3 = rng::engine(6, 0, rng::Stream::Graph);
    const Network other = build_random_regular(200, 7, rng3);
    bool any_differs = false;
    for (int u = 0; u < net.size(); ++u)
        if (net.neighbors(u) != other.neighbors(u)) any_differs = true;
    CHECK(any_differs);

    CHECK_THROWS_AS((void)build_random_regular(5, 3, rng), std::invalid_argument);  // odd n*d
    CHECK_THROWS_AS((void)build_random_regular(5, 5, rng), std::invalid_argument);  // d >= n
    CHECK_THROWS_AS((void)build_random_regular(5, 0, rng), std::invalid_argument);
    CHECK_THROWS_AS((void)build_random_regular(1, 1, rng), std::invalid_argument);
}

TEST_CASE("erdos-renyi spans the density range") {
    auto rng = rng::engine(11, 0, rng::Stream::Graph);
    CHECK(build_erdos_renyi(50, 0.0, rng).edge_count() == 0);
    CHECK(build_erdos_renyi(50, 1.0, rng).edge_count() == 50 * 49 / 2);

    // p = 0.3, n = 300: E edges = 13455, sd ~ 97; stay within 5 sd
    const Network net = build_erdos_renyi(300, 0.3, rng);
    const double pairs = 300.0 * 299.0 / 2.0;
    const double mean = 0.3 * pairs;
    const double sd = std::sqrt(pairs * 0.3 * 0.7);
    CHECK(static_cast<double>(net.edge_count()) > mean - 5 * sd);
    CHECK(static_cast<double>(net.edge_count()) < mean + 5 * sd);

    CHECK_THROWS_AS((void)build_erdos_renyi(0, 0.5, rng), std::invalid_argument);
    CHECK_THROWS_AS((void)build_erdos_renyi(10, 1.5, rng), std::invalid_argument);
}

TEST_CASE("edge lists load with comments, isolated nodes, and dense remapping") {
    const std::string path = write_temp("load.edges",
                                        "# a comment\n"
                                        "\n"
                                        "7 10\n"
                                        "10 7\n"    // duplicate in reverse orientation
                                        "40\n"      // isolated node
                                        "7 40\n");
    const Network net = load_edge_list(path);
    CHECK(net.size() == 3);
    CHECK(net.edge_count() == 2);
    // ids remap densely in increasing order: 7 -> 0, 10 -> 1, 40 -> 2
    CHECK(net.original_id(0) == 7);
    CHECK(net.original_id(1) == 10);
    CHECK(net.original_id(2) == 40);
    CHECK(net.has_edge(0, 1));
    CHECK(net.has_edge(0, 2));
    CHECK_FALSE(net.has_edge(1, 2));
    std::remove(path.c_str());
}

TEST_CASE("edge list parse errors carry the file position") {
    const std::string three = write_temp("three.edges", "1 2\n1 2 3\n");
    CHECK(throws_with(three, "more than two ids on a line"));
    CHECK(throws_with(three, three + ":2"));
    std::remove(three.c_str());

    const std::string neg = write_temp("neg.edges", "1 -2\n");
    CHECK(throws_with(neg, "expected a non-negative integer id"));
    std::remove(neg.c_str());

    const std::string word = write_temp("word.edges", "1 two\n");
    CHECK(throws_with(word, "expected a non-negative integer id"));
    std::remove(word.c_str());

    const std::string loop = write_temp("loop.edges", "3 3\n");
    CHECK(throws_with(loop, "self-loop"));
    std::remove(loop.c_str());

    CHECK_THROWS_AS((void)load_edge_list("no_such_file.edges"), std::runtime_error);

    const std::string empty = write_temp("empty.edges", "# nothing\n");
    CHECK(throws_with(empty, "no nodes"));
    std::remove(empty.c_str());
}

TEST_CASE("save and reload round-trips a graph exactly") {
    auto rng = rng::engine(3, 0, rng::Stream::Graph);
    const Network net = build_erdos_renyi(60, 0.1, rng);
    const std::string path = "covertsim_test_roundtrip.edges";
    save_edge_list(net, path);
    const Network back = load_edge_list(path);
    REQUIRE(back.size() == net.size());
    CHECK(back.edge_count() == net.edge_count());
    for (int u = 0; u < net.size(); ++u) CHECK(back.neighbors(u) == net.neighbors(u));
    std::remove(path.c_str());
}

TEST_CASE("save preserves original ids and isolated nodes") {
    // ids 2, 5, 9 with one edge and one isolated node
    std::vector<std::vector<int>> adj = {{1}, {0}, {}};
    const Network net(std::move(adj), {2, 5, 9});
    const std::string path = "covertsim_test_ids.edges";
    save_edge_list(net, path);
    const Network back = load_edge_list(path);
    REQUIRE(back.size() == 3);
    CHECK(back.edge_count() == 1);
    CHECK(back.original_id(0) == 2);
    CHECK(back.original_id(1) == 5);
    CHECK(back.original_id(2) == 9);
    CHECK(back.has_edge(0, 1));
    CHECK(back.degree(2) == 0);
    std::remove(path.c_str());
}

} // TEST_SUITE
