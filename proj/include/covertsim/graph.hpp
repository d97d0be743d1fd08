#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace covertsim {

// Undirected simple graph over agents 0..n-1. Invariants enforced on
// construction: no self-loops, no parallel edges, symmetric adjacency.
// Neighbor lists are sorted so that iteration order (and therefore noise
// draw order during emission) is deterministic.
class Network {
public:
    // adjacency[u] lists the neighbors of u; original_ids maps the dense
    // index back to the id used in a source edge list (identity if empty).
    explicit Network(std::vector<std::vector<int>> adjacency,
                     std::vector<std::int64_t> original_ids = {});

    int size() const { return static_cast<int>(adj_.size()); }
    int degree(int u) const { return static_cast<int>(adj_[u].size()); }
    const std::vector<int>& neighbors(int u) const { return adj_[u]; }
    std::int64_t original_id(int u) const { return ids_.empty() ? u : ids_[u]; }
    std::size_t edge_count() const { return edge_count_; }
    bool has_edge(int u, int v) const;

private:
    std::vector<std::vector<int>> adj_;
    std::vector<std::int64_t> ids_;
    std::size_t edge_count_ = 0;
};

struct DegreeStats {
    int min = 0;
    int max = 0;
    int median = 0;  // lower median: element (n-1)/2 of the sorted degree list
    double mean = 0.0;
};

DegreeStats degree_stats(const Network& net);

// Complete graph on n >= 2 agents.
Network build_complete(int n);

// Random d-regular simple graph via stub pairing. Colliding pairs (self-loops
// or duplicates) are repaired with degree-preserving edge swaps; if a repair
// pass stalls, the pairing is restarted from scratch, up to max_restarts times
// before failing loudly. Requires 0 < d < n and n*d even.
Network build_random_regular(int n, int degree, std::mt19937_64& rng,
                             int max_restarts = 100);

// G(n, p): each unordered pair is an edge independently with probability p.
Network build_erdos_renyi(int n, double p, std::mt19937_64& rng);

// Reads a whitespace-separated edge list. Lines starting with '#' and blank
// lines are ignored. A line with two ids declares an edge, a line with one id
// declares an (isolated) node. Duplicate edges (in either orientation)
// collapse to one. Ids are arbitrary non-negative integers and are remapped
// to dense indices in increasing id order; the mapping is retained and
// queryable through Network::original_id.
Network load_edge_list(const std::string& path);

// Writes a loadable edge list using original ids (one "u v" line per edge,
// plus a bare-id line for every isolated node).
void save_edge_list(const Network& net, const std::string& path);

}  // namespace covertsim
