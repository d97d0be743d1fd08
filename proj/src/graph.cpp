#include "covertsim/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace covertsim {

namespace {

std::uint64_t edge_key(int a, int b, int n) {
    if (a > b) std::swap(a, b);
    return static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(n) +
           static_cast<std::uint64_t>(b);
}

Network from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                   std::vector<std::int64_t> ids = {}) {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return Network(std::move(adj), std::move(ids));
}

}  // namespace

Network::Network(std::vector<std::vector<int>> adjacency,
                 std::vector<std::int64_t> original_ids)
    : adj_(std::move(adjacency)), ids_(std::move(original_ids)) {
    const int n = static_cast<int>(adj_.size());
    if (!ids_.empty() && static_cast<int>(ids_.size()) != n)
        throw std::invalid_argument("Network: id map size does not match agent count");
    std::size_t stubs = 0;
    for (int u = 0; u < n; ++u) {
        auto& nb = adj_[u];
        std::sort(nb.begin(), nb.end());
        for (std::size_t k = 0; k < nb.size(); ++k) {
            const int v = nb[k];
            if (v < 0 || v >= n)
                throw std::invalid_argument("Network: neighbor id out of range");
            if (v == u) throw std::invalid_argument("Network: self-loop");
            if (k > 0 && nb[k - 1] == v)
                throw std::invalid_argument("Network: parallel edge");
        }
        stubs += nb.size();
    }
    // symmetry: every (u,v) must have its mirror
    for (int u = 0; u < n; ++u)
        for (int v : adj_[u])
            if (!std::binary_search(adj_[v].begin(), adj_[v].end(), u))
                throw std::invalid_argument("Network: asymmetric adjacency");
    edge_count_ = stubs / 2;
}

bool Network::has_edge(int u, int v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

DegreeStats degree_stats(const Network& net) {
    const int n = net.size();
    if (n == 0) throw std::invalid_argument("degree_stats: empty network");
    std::vector<int> deg(n);
    for (int u = 0; u < n; ++u) deg[u] = net.degree(u);
    std::sort(deg.begin(), deg.end());
    DegreeStats s;
    s.min = deg.front();
    s.max = deg.back();
    s.median = deg[(n - 1) / 2];  // lower median, stable under permutation by construction
    s.mean = std::accumulate(deg.begin(), deg.end(), 0.0) / n;
    return s;
}

Network build_complete(int n) {
    if (n < 2) throw std::invalid_argument("build_complete: need n >= 2");
    std::vector<std::vector<int>> adj(n);
    for (int u = 0; u < n; ++u) {
        adj[u].reserve(n - 1);
        for (int v = 0; v < n; ++v)
            if (v != u) adj[u].push_back(v);
    }
    return Network(std::move(adj));
}

Network build_random_regular(int n, int degree, std::mt19937_64& rng, int max_restarts) {
    if (n < 2) throw std::invalid_argument("build_random_regular: need n >= 2");
    if (degree <= 0 || degree >= n)
        throw std::invalid_argument("build_random_regular: need 0 < degree < n");
    if ((static_cast<std::int64_t>(n) * degree) % 2 != 0)
        throw std::invalid_argument("build_random_regular: n*degree must be even");
    if (max_restarts < 1)
        throw std::invalid_argument("build_random_regular: max_restarts must be positive");

    const std::size_t m = static_cast<std::size_t>(n) * degree / 2;
    std::vector<int> stubs(static_cast<std::size_t>(n) * degree);
    for (int u = 0; u < n; ++u)
        std::fill_n(stubs.begin() + static_cast<std::size_t>(u) * degree, degree, u);

    for (int restart = 0; restart < max_restarts; ++restart) {
        std::shuffle(stubs.begin(), stubs.end(), rng);

        std::vector<std::pair<int, int>> edges(m);
        std::vector<char> is_bad(m, 0);
        std::unordered_set<std::uint64_t> seen;
        seen.reserve(m * 2);
        std::vector<std::size_t> bad;
        for (std::size_t k = 0; k < m; ++k) {
            const int a = stubs[2 * k], b = stubs[2 * k + 1];
            edges[k] = {a, b};
            if (a == b || !seen.insert(edge_key(a, b, n)).second) {
                is_bad[k] = 1;
                bad.push_back(k);
            }
        }

        // Repair defective pairs with degree-preserving swaps against random
        // partners. Each accepted swap removes at least one defect, so the
        // attempt budget is generous; a stalled pass restarts the pairing.
        std::uniform_int_distribution<std::size_t> pick(0, m - 1);
        std::bernoulli_distribution orient(0.5);
        std::size_t attempts = 0;
        const std::size_t budget = 50 * m + 1000;
        while (!bad.empty() && attempts < budget) {
            const std::size_t k = bad.back();
            if (!is_bad[k]) {  // already fixed while repairing another pair
                bad.pop_back();
                continue;
            }
            ++attempts;
            const std::size_t j = pick(rng);
            if (j == k) continue;
            const auto [a, b] = edges[k];
            const auto [c, e] = edges[j];
            const bool flip = orient(rng);
            const std::pair<int, int> p1 = flip ? std::pair{a, c} : std::pair{a, e};
            const std::pair<int, int> p2 = flip ? std::pair{b, e} : std::pair{b, c};
            if (p1.first == p1.second || p2.first == p2.second) continue;
            const std::uint64_t k1 = edge_key(p1.first, p1.second, n);
            const std::uint64_t k2 = edge_key(p2.first, p2.second, n);
            if (k1 == k2) continue;
            const bool j_good = !is_bad[j];
            if (j_good) seen.erase(edge_key(c, e, n));
            if (seen.count(k1) || seen.count(k2)) {
                if (j_good) seen.insert(edge_key(c, e, n));  // undo
                continue;
            }
            seen.insert(k1);
            seen.insert(k2);
            edges[k] = p1;
            edges[j] = p2;
            is_bad[k] = 0;
            is_bad[j] = 0;
            bad.pop_back();
        }
        if (bad.empty()) return from_edges(n, edges);
    }
    throw std::runtime_error("build_random_regular: no simple pairing found after " +
                             std::to_string(max_restarts) + " restarts");
}

Network build_erdos_renyi(int n, double p, std::mt19937_64& rng) {
    if (n < 1) throw std::invalid_argument("build_erdos_renyi: need n >= 1");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("build_erdos_renyi: p must lie in [0,1]");
    std::vector<std::pair<int, int>> edges;
    if (p > 0.0) {
        std::bernoulli_distribution coin(p);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) edges.emplace_back(u, v);
    }
    return from_edges(n, edges);
}

namespace {

[[noreturn]] void parse_fail(const std::string& path, std::size_t line_no,
                             const std::string& what) {
    throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + what);
}

}  // namespace

Network load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_edge_list: cannot open " + path);

    std::vector<std::pair<std::int64_t, std::int64_t>> raw_edges;
    std::vector<std::int64_t> raw_nodes;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const char* s = line.c_str();
        while (*s == ' ' || *s == '\t' || *s == '\r') ++s;
        if (*s == '\0' || *s == '#') continue;

        std::int64_t ids[3];
        int count = 0;
        while (*s != '\0' && *s != '\r') {
            if (count == 2) parse_fail(path, line_no, "more than two ids on a line");
            if (!(*s >= '0' && *s <= '9'))
                parse_fail(path, line_no, "expected a non-negative integer id");
            char* end = nullptr;
            errno = 0;
            const long long v = std::strtoll(s, &end, 10);
            if (errno != 0 || v < 0) parse_fail(path, line_no, "id out of range");
            ids[count++] = v;
            s = end;
            while (*s == ' ' || *s == '\t') ++s;
        }
        if (count == 1) {
            raw_nodes.push_back(ids[0]);
        } else {
            if (ids[0] == ids[1]) parse_fail(path, line_no, "self-loop");
            raw_edges.emplace_back(ids[0], ids[1]);
        }
    }

    // Remap ids to dense indices in increasing id order: the result is
    // independent of line order and of edge duplication.
    std::vector<std::int64_t> ids = raw_nodes;
    ids.reserve(ids.size() + 2 * raw_edges.size());
    for (auto [a, b] : raw_edges) {
        ids.push_back(a);
        ids.push_back(b);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (ids.empty()) throw std::runtime_error("load_edge_list: no nodes in " + path);

    const int n = static_cast<int>(ids.size());
    auto dense = [&](std::int64_t id) {
        return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
    };
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(raw_edges.size() * 2);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(raw_edges.size());
    for (auto [a, b] : raw_edges) {
        const int u = dense(a), v = dense(b);
        if (seen.insert(edge_key(u, v, n)).second) edges.emplace_back(u, v);
    }
    return from_edges(n, edges, std::move(ids));
}

void save_edge_list(const Network& net, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_edge_list: cannot open " + path);
    out << "# undirected edge list, one edge per line\n";
    for (int u = 0; u < net.size(); ++u) {
        if (net.degree(u) == 0) out << net.original_id(u) << '\n';
        for (int v : net.neighbors(u))
            if (u < v) out << net.original_id(u) << ' ' << net.original_id(v) << '\n';
    }
    if (!out) throw std::runtime_error("save_edge_list: write failed for " + path);
}

}  // namespace covertsim
