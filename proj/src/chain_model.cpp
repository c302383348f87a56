#include "chaincactus/chain_model.hpp"

#include "chaincactus/errors.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace chaincactus {

Graph::Graph(std::size_t vertex_count, const std::vector<std::pair<VertexId, VertexId>>& edges)
    : adjacency_(vertex_count) {
    for (auto [u, v] : edges) {
        if (u >= vertex_count || v >= vertex_count) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& nb : adjacency_) {
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) throw std::invalid_argument("repeated edge");
    }
    edge_count_ = edges.size();
}

bool Graph::adjacent(VertexId u, VertexId v) const {
    const auto& nb = adjacency_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < adjacency_.size(); ++u) {
        for (VertexId v : adjacency_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

Graph Graph::induced(const std::vector<VertexId>& keep) const {
    std::vector<std::size_t> remap(vertex_count(), SIZE_MAX);
    for (std::size_t i = 0; i < keep.size(); ++i) remap.at(keep[i]) = i;
    std::vector<std::pair<VertexId, VertexId>> kept;
    for (auto [u, v] : edges()) {
        if (remap[u] != SIZE_MAX && remap[v] != SIZE_MAX) kept.emplace_back(remap[u], remap[v]);
    }
    return Graph(keep.size(), kept);
}

Graph make_path(std::size_t n) {
    std::vector<std::pair<VertexId, VertexId>> e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph make_cycle(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle size < 3");
    std::vector<std::pair<VertexId, VertexId>> e;
    for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    auto e = a.edges();
    const std::size_t off = a.vertex_count();
    for (auto [u, v] : b.edges()) e.emplace_back(u + off, v + off);
    return Graph(a.vertex_count() + b.vertex_count(), e);
}

std::string to_string(const VertexLabel& label) {
    return "v_" + std::to_string(label.position) + "^(" + std::to_string(label.cycle) + ")";
}

std::size_t ChainSpec::vertex_count() const {
    if (cycle_sizes.empty()) return 1;
    const long total = std::accumulate(cycle_sizes.begin(), cycle_sizes.end(), 0L);
    return static_cast<std::size_t>(total - static_cast<long>(cycle_sizes.size() - 1));
}

ChainSpec validate(ChainSpec spec) {
    for (int h : spec.cycle_sizes) {
        if (h < 3) throw std::invalid_argument("cycle size < 3");
    }
    const std::size_t n = spec.cycle_sizes.size();
    const std::size_t expected = n >= 2 ? n - 2 : 0;
    if (spec.positions.size() != expected) {
        throw std::invalid_argument("positions length mismatch: expected " + std::to_string(expected) + ", got " +
                                    std::to_string(spec.positions.size()));
    }
    for (std::size_t j = 0; j < spec.positions.size(); ++j) {
        const int h = spec.cycle_sizes[j + 1];
        int& k = spec.positions[j];
        if (k < 1 || k > h - 1) {
            throw std::invalid_argument("position " + std::to_string(k) + " out of range 1.." + std::to_string(h - 1) +
                                        " on cycle " + std::to_string(j + 2));
        }
        if (k > h / 2) k = h - k;
    }
    return spec;
}

ChainSpec reversed(const ChainSpec& spec) {
    ChainSpec r{{spec.cycle_sizes.rbegin(), spec.cycle_sizes.rend()}, {spec.positions.rbegin(), spec.positions.rend()}};
    return validate(std::move(r));
}

ChainSpec ortho_spec(std::vector<int> cycle_sizes) {
    const std::size_t n = cycle_sizes.size();
    return validate({std::move(cycle_sizes), std::vector<int>(n >= 2 ? n - 2 : 0, 1)});
}

ChainSpec meta_spec(std::vector<int> cycle_sizes) {
    const std::size_t n = cycle_sizes.size();
    return validate({std::move(cycle_sizes), std::vector<int>(n >= 2 ? n - 2 : 0, 2)});
}

LabeledGraph::LabeledGraph(Graph graph, std::map<VertexLabel, VertexId> labels)
    : graph_(std::move(graph)), labels_(std::move(labels)) {}

VertexId LabeledGraph::id(const VertexLabel& label) const {
    auto it = labels_.find(label);
    if (it == labels_.end()) throw std::out_of_range("unknown vertex label " + to_string(label));
    return it->second;
}

std::vector<VertexLabel> LabeledGraph::labels_of(VertexId v) const {
    std::vector<VertexLabel> out;
    for (const auto& [label, id] : labels_) {
        if (id == v) out.push_back(label);
    }
    return out;
}

VertexLabel LabeledGraph::label_of(VertexId v) const {
    auto all = labels_of(v);
    if (all.empty()) throw std::out_of_range("vertex " + std::to_string(v) + " has no label");
    return all.front();
}

LabeledGraph build(const ChainSpec& spec) {
    if (spec.cycle_sizes.empty()) return LabeledGraph(Graph(1, {}), {{VertexLabel{0, 1}, 0}});

    std::map<VertexLabel, VertexId> labels;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<VertexId> prev_cycle;
    VertexId next_id = 0;

    for (std::size_t i = 0; i < spec.cycle_sizes.size(); ++i) {
        const int h = spec.cycle_sizes[i];
        std::vector<VertexId> cycle(static_cast<std::size_t>(h));
        if (i == 0) {
            for (auto& v : cycle) v = next_id++;
        } else {
            // v_h^(i) is glued onto v_k^(i-1); the first cycle attaches at v_1.
            const int k = i == 1 ? 1 : spec.positions[i - 2];
            for (int p = 0; p + 1 < h; ++p) cycle[static_cast<std::size_t>(p)] = next_id++;
            cycle.back() = prev_cycle[static_cast<std::size_t>(k - 1)];
        }
        for (int p = 0; p < h; ++p) {
            labels.emplace(VertexLabel{static_cast<int>(i + 1), p + 1}, cycle[static_cast<std::size_t>(p)]);
            edges.emplace_back(cycle[static_cast<std::size_t>(p)], cycle[static_cast<std::size_t>((p + 1) % h)]);
        }
        prev_cycle = std::move(cycle);
    }
    return LabeledGraph(Graph(next_id, edges), std::move(labels));
}

LabeledGraph delete_vertex_ids(const LabeledGraph& g, const std::vector<VertexId>& ids) {
    std::vector<bool> drop(g.vertex_count(), false);
    for (VertexId v : ids) drop.at(v) = true;
    std::vector<VertexId> keep;
    std::vector<VertexId> remap(g.vertex_count(), SIZE_MAX);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!drop[v]) {
            remap[v] = keep.size();
            keep.push_back(v);
        }
    }
    std::map<VertexLabel, VertexId> labels;
    for (const auto& [label, v] : g.labels()) {
        if (!drop[v]) labels.emplace(label, remap[v]);
    }
    return LabeledGraph(g.graph().induced(keep), std::move(labels));
}

LabeledGraph delete_vertices(const LabeledGraph& g, const std::vector<VertexLabel>& labels) {
    std::vector<VertexId> ids;
    ids.reserve(labels.size());
    for (const auto& l : labels) ids.push_back(g.id(l));
    return delete_vertex_ids(g, ids);
}

std::vector<VertexId> closed_neighborhood(const LabeledGraph& g, const VertexLabel& label) {
    const VertexId v = g.id(label);
    std::vector<VertexId> out = g.graph().neighbors(v);
    out.insert(std::upper_bound(out.begin(), out.end(), v), v);
    return out;
}

SpecEnumerator::SpecEnumerator(std::vector<int> cycle_sizes, bool dedupe_reversal)
    : sizes_(std::move(cycle_sizes)), dedupe_(dedupe_reversal) {
    if (sizes_.empty()) throw std::invalid_argument("enumeration needs at least one cycle");
    for (int h : sizes_) {
        if (h < 3) throw std::invalid_argument("cycle size < 3");
    }
    for (std::size_t j = 1; j + 1 < sizes_.size(); ++j) limits_.push_back(sizes_[j] / 2);
    current_.assign(limits_.size(), 1);
    palindromic_ = std::equal(sizes_.begin(), sizes_.end(), sizes_.rbegin());
}

bool SpecEnumerator::advance() {
    for (std::size_t i = current_.size(); i-- > 0;) {
        if (current_[i] < limits_[i]) {
            ++current_[i];
            return true;
        }
        current_[i] = 1;
    }
    return false;
}

std::optional<ChainSpec> SpecEnumerator::next() {
    while (!done_) {
        if (started_ && !advance()) {
            done_ = true;
            break;
        }
        started_ = true;
        // A reversed sequence only lives in this enumeration when the size
        // list reads the same backwards.
        if (dedupe_ && palindromic_ &&
            std::lexicographical_compare(current_.rbegin(), current_.rend(), current_.begin(), current_.end())) {
            continue;
        }
        return ChainSpec{sizes_, current_};
    }
    return std::nullopt;
}

std::vector<ChainSpec> enumerate_specs(const std::vector<int>& cycle_sizes, bool dedupe_reversal) {
    SpecEnumerator e(cycle_sizes, dedupe_reversal);
    std::vector<ChainSpec> out;
    while (auto s = e.next()) out.push_back(std::move(*s));
    return out;
}

std::vector<std::vector<int>> enumerate_size_lists(int min_h, int max_h, std::size_t n) {
    if (min_h < 3 || max_h < min_h) throw std::invalid_argument("bad cycle size range");
    std::vector<std::vector<int>> out;
    std::vector<int> cur(n, min_h);
    while (true) {
        out.push_back(cur);
        std::size_t i = n;
        while (i-- > 0) {
            if (cur[i] < max_h) {
                ++cur[i];
                break;
            }
            cur[i] = min_h;
        }
        if (i == SIZE_MAX) break;
    }
    return out;
}

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view s, std::string_view context) {
    s = strip(s);
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError("expected an integer in " + std::string(context) + ", got '" + std::string(s) + "'");
    }
    return value;
}

std::vector<int> parse_list(std::string_view text, std::string_view context) {
    std::vector<int> out;
    text = strip(text);
    if (text.empty()) return out;
    while (true) {
        const auto comma = text.find(',');
        const auto item = text.substr(0, comma);
        const auto caret = item.find('^');
        if (caret == std::string_view::npos) {
            out.push_back(parse_int(item, context));
        } else {
            const int value = parse_int(item.substr(0, caret), context);
            const int reps = parse_int(item.substr(caret + 1), context);
            if (reps < 1) throw ParseError("repetition count must be >= 1 in " + std::string(context));
            out.insert(out.end(), static_cast<std::size_t>(reps), value);
        }
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

} // namespace

std::vector<int> parse_size_list(std::string_view text) {
    if (text.find('/') != std::string_view::npos) throw ParseError("a size list takes no '/' part");
    return parse_list(text, "cycle sizes");
}

ChainSpec parse_spec(std::string_view text) {
    text = strip(text);
    const auto slash = text.find('/');
    ChainSpec spec;
    spec.cycle_sizes = parse_list(text.substr(0, slash), "cycle sizes");
    if (slash != std::string_view::npos) {
        spec.positions = parse_list(text.substr(slash + 1), "positions");
    } else if (spec.cycle_sizes.size() >= 3) {
        throw ParseError("chains of length >= 3 need explicit positions after '/'");
    }
    try {
        return validate(std::move(spec));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string format_spec(const ChainSpec& spec) {
    std::string out;
    for (std::size_t i = 0; i < spec.cycle_sizes.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(spec.cycle_sizes[i]);
    }
    out += '/';
    for (std::size_t i = 0; i < spec.positions.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(spec.positions[i]);
    }
    return out;
}

VertexLabel parse_label(std::string_view text, std::size_t chain_length) {
    text = strip(text);
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw ParseError("vertex label must look like 'i:k', got '" + std::string(text) + "'");
    const auto cycle_part = strip(text.substr(0, colon));
    VertexLabel label;
    label.cycle = cycle_part == "n" ? static_cast<int>(chain_length) : parse_int(cycle_part, "vertex label");
    label.position = parse_int(text.substr(colon + 1), "vertex label");
    return label;
}

} // namespace chaincactus
