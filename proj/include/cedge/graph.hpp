/**
 * Simple labeled graphs on {1, ..., n} and the graph-theoretic predicates
 * that decide the behaviour of complementary edge ideals: acyclicity,
 * completeness, components, maximum subgraph density, and exhaustive
 * enumeration of all labeled graphs on a small vertex set.
 */

#ifndef CEDGE_GRAPH_HPP
#define CEDGE_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace cedge {

/// Exact non-negative rational used for edge densities and empirical ratios.
using Rational = boost::rational<std::int64_t>;

/// Unordered pair {u, v}, always stored with u < v.
struct Edge
{
    int u;
    int v;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Violation of a precondition on the shape of a graph or ideal.
class DomainError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

/// A requested size exceeds one of the configured desk-scale limits.
class LimitError : public std::length_error
{
  public:
    using std::length_error::length_error;
};

class SimpleGraph
{
  public:
    SimpleGraph() = default;

    /**
     * Builds a graph on vertices 1..n. Edges may be given in any order and
     * orientation; they are canonicalized to u < v and sorted.
     *
     * Throws DomainError on a non-positive vertex count, an endpoint outside
     * 1..n, a self-loop, or a repeated edge.
     */
    SimpleGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges))
    {
        if (n_ < 1)
            throw DomainError("graph must have at least one vertex, got n=" + std::to_string(n_));
        for (auto& e : edges_)
        {
            if (e.u == e.v)
                throw DomainError("self-loop at vertex " + std::to_string(e.u));
            if (e.u > e.v)
                std::swap(e.u, e.v);
            if (e.u < 1 || e.v > n_)
                throw DomainError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  "} has an endpoint outside 1.." + std::to_string(n_));
        }
        std::sort(edges_.begin(), edges_.end());
        auto dup = std::adjacent_find(edges_.begin(), edges_.end());
        if (dup != edges_.end())
            throw DomainError("duplicate edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
    }

    int order() const { return n_; }
    std::size_t size() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int u, int v) const
    {
        if (u > v)
            std::swap(u, v);
        return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
    }

    std::vector<int> degrees() const
    {
        std::vector<int> deg(static_cast<std::size_t>(n_) + 1, 0);
        for (const auto& e : edges_)
        {
            ++deg[e.u];
            ++deg[e.v];
        }
        return deg;
    }

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

namespace detail {

class DisjointSets
{
  public:
    explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n) + 1)
    {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x)
    {
        while (parent_[x] != x)
        {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // Returns false when x and y were already joined.
    bool unite(int x, int y)
    {
        x = find(x);
        y = find(y);
        if (x == y)
            return false;
        if (x > y)
            std::swap(x, y);
        parent_[y] = x;
        return true;
    }

  private:
    std::vector<int> parent_;
};

}   // namespace detail

inline bool is_forest(const SimpleGraph& g)
{
    detail::DisjointSets sets(g.order());
    for (const auto& e : g.edges())
        if (!sets.unite(e.u, e.v))
            return false;
    return true;
}

inline bool is_complete(const SimpleGraph& g)
{
    const auto n = static_cast<std::size_t>(g.order());
    return g.size() == n * (n - 1) / 2;
}

/// Maximal connected vertex sets, each sorted, blocks ordered by least element.
inline std::vector<std::vector<int>> connected_components(const SimpleGraph& g)
{
    detail::DisjointSets sets(g.order());
    for (const auto& e : g.edges())
        sets.unite(e.u, e.v);

    // unite() keeps the smallest label as the root, so roots appear in
    // increasing order when scanning 1..n.
    std::vector<std::vector<int>> blocks;
    std::vector<int> block_of(static_cast<std::size_t>(g.order()) + 1, -1);
    for (int v = 1; v <= g.order(); ++v)
    {
        int root = sets.find(v);
        if (block_of[root] < 0)
        {
            block_of[root] = static_cast<int>(blocks.size());
            blocks.emplace_back();
        }
        blocks[block_of[root]].push_back(v);
    }
    return blocks;
}

inline std::vector<int> isolated_vertices(const SimpleGraph& g)
{
    std::vector<int> out;
    auto deg = g.degrees();
    for (int v = 1; v <= g.order(); ++v)
        if (deg[v] == 0)
            out.push_back(v);
    return out;
}

inline SimpleGraph complete_graph(int n)
{
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            edges.push_back({u, v});
    return {n, std::move(edges)};
}

inline SimpleGraph path_graph(int n)
{
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v)
        edges.push_back({v, v + 1});
    return {n, std::move(edges)};
}

inline SimpleGraph cycle_graph(int n)
{
    if (n < 3)
        throw DomainError("a cycle needs at least 3 vertices");
    auto edges = path_graph(n).edges();
    edges.push_back({1, n});
    return {n, std::move(edges)};
}

/// Largest vertex count accepted by max_subgraph_density (2^n subsets).
inline constexpr int kMaxDensityVertices = 24;

/**
 * m(H): the maximum of |E(K)|/|V(K)| over all nonempty subgraphs K. Induced
 * subgraphs attain the maximum, so this enumerates vertex subsets.
 */
inline Rational max_subgraph_density(const SimpleGraph& g)
{
    if (g.size() == 0)
        throw DomainError("maximum subgraph density is undefined for an edgeless graph");
    if (g.order() > kMaxDensityVertices)
        throw LimitError("maximum subgraph density enumerates vertex subsets; limit is n <= " +
                         std::to_string(kMaxDensityVertices));

    std::vector<std::uint32_t> edge_masks;
    edge_masks.reserve(g.size());
    for (const auto& e : g.edges())
        edge_masks.push_back((1u << (e.u - 1)) | (1u << (e.v - 1)));

    Rational best(0);
    const std::uint32_t full = (1u << g.order()) - 1;
    for (std::uint32_t w = 1; w <= full; ++w)
    {
        std::int64_t inside = 0;
        for (auto m : edge_masks)
            inside += (m & w) == m;
        Rational d(inside, std::popcount(w));
        if (d > best)
            best = d;
    }
    return best;
}

/// Default vertex limit for exhaustive enumeration.
inline constexpr int kDefaultEnumerationLimit = 7;

/// Number of unordered pairs on n vertices.
constexpr int pair_count(int n) { return n * (n - 1) / 2; }

/**
 * Graph whose edge set is the bit pattern `mask` over the pairs of 1..n
 * listed lexicographically: bit 0 is {1,2}, bit 1 is {1,3}, ...
 */
inline SimpleGraph graph_from_mask(int n, std::uint64_t mask)
{
    std::vector<Edge> edges;
    int bit = 0;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v, ++bit)
            if ((mask >> bit) & 1u)
                edges.push_back({u, v});
    return {n, std::move(edges)};
}

/**
 * Calls `visit` once for each of the 2^C(n,2) labeled graphs on 1..n, in
 * increasing order of the edge mask used by graph_from_mask.
 */
template <typename Visitor>
void for_each_graph(int n, Visitor&& visit, int limit = kDefaultEnumerationLimit)
{
    if (n < 1)
        throw DomainError("graph enumeration needs n >= 1");
    if (n > limit)
        throw LimitError("graph enumeration limit is n <= " + std::to_string(limit) + ", got n=" +
                         std::to_string(n));
    const std::uint64_t total = std::uint64_t{1} << pair_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask)
        visit(graph_from_mask(n, mask));
}

inline std::vector<SimpleGraph> enumerate_graphs(int n, int limit = kDefaultEnumerationLimit)
{
    std::vector<SimpleGraph> out;
    for_each_graph(n, [&](SimpleGraph g) { out.push_back(std::move(g)); }, limit);
    return out;
}

}   // namespace cedge

#endif
