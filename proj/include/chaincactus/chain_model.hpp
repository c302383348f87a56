#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chaincactus {

using VertexId = std::size_t;

/// Simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;
    /// Throws std::invalid_argument on loops, repeated edges or out-of-range ids.
    Graph(std::size_t vertex_count, const std::vector<std::pair<VertexId, VertexId>>& edges);

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    /// Sorted neighbour list.
    const std::vector<VertexId>& neighbors(VertexId v) const { return adjacency_.at(v); }
    bool adjacent(VertexId u, VertexId v) const;
    /// Each edge once, as (smaller, larger), sorted.
    std::vector<std::pair<VertexId, VertexId>> edges() const;

    /// Induced subgraph on `keep` (any order); vertex keep[i] becomes i.
    Graph induced(const std::vector<VertexId>& keep) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<VertexId>> adjacency_;
    std::size_t edge_count_ = 0;
};

/// Path P_n (n >= 0 vertices) and cycle C_n (n >= 3).
Graph make_path(std::size_t n);
Graph make_cycle(std::size_t n);
/// Vertex-disjoint union; vertices of `b` are renumbered after those of `a`.
Graph disjoint_union(const Graph& a, const Graph& b);

/// v_position^(cycle). Cycles and positions are 1-based.
struct VertexLabel {
    int cycle = 0;
    int position = 0;

    friend auto operator<=>(const VertexLabel&, const VertexLabel&) = default;
};

std::string to_string(const VertexLabel& label);

/// Cycle sizes h_1..h_n and the attachment positions k_2..k_{n-1} of the
/// internal cycles: C^(j+1) hangs on v_{k_j}^(j).
struct ChainSpec {
    std::vector<int> cycle_sizes;
    std::vector<int> positions;

    std::size_t length() const noexcept { return cycle_sizes.size(); }
    std::size_t vertex_count() const;

    friend bool operator==(const ChainSpec&, const ChainSpec&) = default;
    friend auto operator<=>(const ChainSpec&, const ChainSpec&) = default;
};

/// Checks sizes and positions and folds each k_j > floor(h_j/2) to h_j - k_j.
/// Throws std::invalid_argument on a cycle size < 3, a position outside
/// 1..h_j-1, or a positions list whose length is not max(n-2, 0).
ChainSpec validate(ChainSpec spec);

/// Chain read from the last cycle to the first. Canonical.
ChainSpec reversed(const ChainSpec& spec);

/// All positions equal to 1.
ChainSpec ortho_spec(std::vector<int> cycle_sizes);
/// Position 2 on every internal cycle, folded where the cycle is a triangle.
ChainSpec meta_spec(std::vector<int> cycle_sizes);

/// A graph whose vertices carry chain labels v_k^(i). Cut vertices answer to
/// two labels; `label_of` reports the first one assigned.
class LabeledGraph {
public:
    LabeledGraph() = default;
    LabeledGraph(Graph graph, std::map<VertexLabel, VertexId> labels);

    const Graph& graph() const noexcept { return graph_; }
    std::size_t vertex_count() const noexcept { return graph_.vertex_count(); }
    const std::map<VertexLabel, VertexId>& labels() const noexcept { return labels_; }

    bool has(const VertexLabel& label) const { return labels_.count(label) != 0; }
    /// Throws std::out_of_range("unknown vertex label ...").
    VertexId id(const VertexLabel& label) const;
    /// All labels naming vertex v, ascending.
    std::vector<VertexLabel> labels_of(VertexId v) const;
    VertexLabel label_of(VertexId v) const;

private:
    Graph graph_;
    std::map<VertexLabel, VertexId> labels_;
};

/// Realises a validated spec. Vertex ids are assigned cycle by cycle in
/// position order; for n = 0 the result is a single vertex labelled v_1^(0).
LabeledGraph build(const ChainSpec& spec);

/// Induced subgraph on the complement of `labels`. Surviving vertices keep
/// all their labels. Throws std::out_of_range for an unknown label.
LabeledGraph delete_vertices(const LabeledGraph& g, const std::vector<VertexLabel>& labels);
/// Same, addressed by vertex id.
LabeledGraph delete_vertex_ids(const LabeledGraph& g, const std::vector<VertexId>& ids);

/// N[v], sorted.
std::vector<VertexId> closed_neighborhood(const LabeledGraph& g, const VertexLabel& label);

/// Enumerates canonical position sequences for a fixed size list in
/// lexicographic order.
class SpecEnumerator {
public:
    SpecEnumerator(std::vector<int> cycle_sizes, bool dedupe_reversal);

    std::optional<ChainSpec> next();

private:
    bool advance();

    std::vector<int> sizes_;
    std::vector<int> current_;
    std::vector<int> limits_;
    bool dedupe_;
    bool palindromic_;
    bool done_ = false;
    bool started_ = false;
};

/// Throws std::invalid_argument for n < 1 or a size < 3.
std::vector<ChainSpec> enumerate_specs(const std::vector<int>& cycle_sizes, bool dedupe_reversal);

/// Every size list of length n with entries in min_h..max_h, lexicographic.
std::vector<std::vector<int>> enumerate_size_lists(int min_h, int max_h, std::size_t n);

/// Parses "h1,...,hn/k2,...,k(n-1)". Items may use the "h^r" repetition
/// shorthand. The slash is mandatory for n >= 3 and optional for n <= 2.
/// The result is validated. Throws ParseError.
ChainSpec parse_spec(std::string_view text);
/// Comma-separated list with "^" shorthand, no slash.
std::vector<int> parse_size_list(std::string_view text);
/// Inverse of parse_spec for canonical specs; always emits the slash.
std::string format_spec(const ChainSpec& spec);

/// "i:k" with i a cycle index or "n" for the last cycle.
VertexLabel parse_label(std::string_view text, std::size_t chain_length);

} // namespace chaincactus
