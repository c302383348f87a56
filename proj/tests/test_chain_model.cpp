#include "chaincactus/chain_model.hpp"
#include "chaincactus/errors.hpp"

#include "oracle.hpp"

#include "doctest.h"

#include <set>

using namespace chaincactus;

namespace {

ChainSpec spec(std::vector<int> sizes, std::vector<int> positions = {}) {
    return ChainSpec{std::move(sizes), std::move(positions)};
}

bool edge_sets_equal(const Graph& g, const oracle::EdgeList& o) {
    std::set<std::pair<std::size_t, std::size_t>> a, b;
    for (auto e : g.edges()) a.insert(e);
    for (auto [u, v] : o.edges) b.insert({std::min(u, v), std::max(u, v)});
    return g.vertex_count() == o.vertices && a == b;
}

} // namespace

TEST_SUITE("chain_model") {

TEST_CASE("validate folds mirror positions") {
    CHECK(validate(spec({6, 6, 6}, {5})) == spec({6, 6, 6}, {1}));
    CHECK(validate(spec({6, 6, 6}, {2})) == spec({6, 6, 6}, {2}));
    CHECK(validate(spec({6, 6, 6}, {4})) == spec({6, 6, 6}, {2}));
    CHECK(validate(spec({7, 7, 7}, {4})) == spec({7, 7, 7}, {3}));
}

TEST_CASE("validate errors") {
    CHECK_THROWS_WITH_AS(validate(spec({2, 6})), "cycle size < 3", std::invalid_argument);
    CHECK_THROWS_AS(validate(spec({6, 6, 6}, {0})), std::invalid_argument);
    CHECK_THROWS_AS(validate(spec({6, 6, 6}, {6})), std::invalid_argument);
    CHECK_THROWS_AS(validate(spec({6, 6, 6}, {})), std::invalid_argument);
    CHECK_THROWS_AS(validate(spec({6, 6}, {1})), std::invalid_argument);
}

TEST_CASE("validate is idempotent") {
    for (int h = 3; h <= 9; ++h) {
        for (int k = 1; k < h; ++k) {
            const auto once = validate(spec({5, h, 4}, {k}));
            CHECK(validate(once) == once);
        }
    }
}

TEST_CASE("build counts") {
    const auto g = build(spec({6, 6, 6}, {1}));
    CHECK(g.vertex_count() == 16);
    CHECK(g.graph().edge_count() == 18);

    const auto a0 = build(spec({}));
    CHECK(a0.vertex_count() == 1);
    CHECK(a0.graph().edge_count() == 0);

    const auto c5 = build(spec({5}));
    CHECK(c5.graph() == make_cycle(5));
}

TEST_CASE("build uses the chain labelling") {
    const auto g = build(spec({6, 5, 7}, {2}));
    // v_h^(i) is the cut vertex shared with the previous cycle
    CHECK(g.id({2, 5}) == g.id({1, 1}));
    CHECK(g.id({3, 7}) == g.id({2, 2}));
    CHECK(g.labels_of(g.id({2, 2})).size() == 2);
    CHECK(g.graph().adjacent(g.id({2, 1}), g.id({2, 2})));
    CHECK(g.graph().adjacent(g.id({2, 4}), g.id({1, 1})));
    CHECK_THROWS_AS(g.id({3, 8}), std::out_of_range);
}

TEST_CASE("build agrees with an independent construction and is a chain cactus") {
    for (const auto& sizes : enumerate_size_lists(3, 6, 3)) {
        for (const auto& s : enumerate_specs(sizes, false)) {
            const auto g = build(s);
            const auto o = oracle::chain(s.cycle_sizes, s.positions);
            CHECK(edge_sets_equal(g.graph(), o));
            CHECK(g.vertex_count() == s.vertex_count());
            CHECK(oracle::is_chain_cactus(g.vertex_count(), g.graph().edges(), s.length()));
            // cycle space dimension equals the number of cycles
            CHECK(g.graph().edge_count() - g.vertex_count() + 1 == s.length());
        }
    }
}

TEST_CASE("delete_vertices") {
    const auto c6 = build(spec({6}));
    const auto p5 = delete_vertices(c6, {{1, 1}});
    CHECK(p5.vertex_count() == 5);
    CHECK(p5.graph().edge_count() == 4);
    CHECK_FALSE(p5.has({1, 1}));
    CHECK(p5.has({1, 2}));

    const auto o2 = build(spec({6, 6}));
    const auto split = delete_vertices(o2, {{1, 1}});
    CHECK(split.vertex_count() == 10);
    CHECK(split.graph().edge_count() == 8);
    CHECK_FALSE(split.has({2, 6}));
    CHECK(oracle::blocks(split.vertex_count(), split.graph().edges()).size() == 8);

    std::vector<VertexLabel> all;
    for (int p = 1; p <= 6; ++p) all.push_back({1, p});
    CHECK(delete_vertices(c6, all).vertex_count() == 0);

    CHECK_THROWS_AS(delete_vertices(c6, {{2, 1}}), std::out_of_range);
}

TEST_CASE("closed_neighborhood") {
    const auto c6 = build(spec({6}));
    CHECK(closed_neighborhood(c6, {1, 1}) == std::vector<VertexId>{c6.id({1, 1}), c6.id({1, 2}), c6.id({1, 6})});

    const auto o2 = build(spec({6, 6}));
    CHECK(closed_neighborhood(o2, {2, 6}).size() == 5);

    const auto a0 = build(spec({}));
    CHECK(closed_neighborhood(a0, a0.label_of(0)) == std::vector<VertexId>{0});
    CHECK_THROWS_AS(closed_neighborhood(c6, {1, 7}), std::out_of_range);
}

TEST_CASE("enumerate_specs") {
    CHECK(enumerate_specs({6, 6, 6, 6, 6}, false).size() == 27);
    CHECK(enumerate_specs({3, 3, 3, 3}, false).size() == 1);
    CHECK(enumerate_specs({3, 3, 3, 3}, true).size() == 1);
    const auto three = enumerate_specs({6, 6, 6}, false);
    REQUIRE(three.size() == 3);
    CHECK(three[0].positions == std::vector<int>{1});
    CHECK(three[1].positions == std::vector<int>{2});
    CHECK(three[2].positions == std::vector<int>{3});
    CHECK(enumerate_specs({5}, false).size() == 1);
    CHECK_THROWS_AS(enumerate_specs({}, false), std::invalid_argument);
}

TEST_CASE("enumeration is lexicographic and canonical") {
    const auto all = enumerate_specs({5, 6, 7, 8, 4}, false);
    CHECK(all.size() == 3 * 3 * 4);
    CHECK(std::is_sorted(all.begin(), all.end(), [](auto& a, auto& b) { return a.positions < b.positions; }));
    for (const auto& s : all) CHECK(validate(s) == s);
}

TEST_CASE("reversal dedupe keeps one of each pair") {
    const auto full = enumerate_specs({6, 6, 6, 6, 6}, false);
    const auto half = enumerate_specs({6, 6, 6, 6, 6}, true);
    // 27 sequences, 9 palindromes of length 3: (27 + 9) / 2
    CHECK(half.size() == 18);
    std::set<std::vector<int>> seen;
    for (const auto& s : half) {
        CHECK(s.positions <= reversed(s).positions);
        seen.insert(s.positions);
    }
    for (const auto& s : full) CHECK((seen.count(s.positions) + seen.count(reversed(s).positions)) >= 1);
    // non-palindromic size lists have no reversal partner in the same list
    CHECK(enumerate_specs({5, 6, 7, 6}, true).size() == enumerate_specs({5, 6, 7, 6}, false).size());
}

TEST_CASE("ortho and meta specs") {
    CHECK(ortho_spec({6, 6, 6, 6}).positions == std::vector<int>{1, 1});
    CHECK(meta_spec({6, 6, 6, 6}).positions == std::vector<int>{2, 2});
    CHECK(meta_spec({5, 3, 6}).positions == std::vector<int>{1});
    CHECK(meta_spec({6, 6}).positions.empty());
}

TEST_CASE("spec text format") {
    CHECK(parse_spec("6,6,6,6/1,2") == spec({6, 6, 6, 6}, {1, 2}));
    CHECK(parse_spec("6^4/1,2") == spec({6, 6, 6, 6}, {1, 2}));
    CHECK(parse_spec("5,6^2,7/1^2") == spec({5, 6, 6, 7}, {1, 1}));
    CHECK(parse_spec("6,6/") == spec({6, 6}));
    CHECK(parse_spec("6,6") == spec({6, 6}));
    CHECK(parse_spec("6") == spec({6}));
    CHECK(parse_spec("6,6,6/5") == spec({6, 6, 6}, {1}));
    CHECK_THROWS_AS(parse_spec("6,6,6"), ParseError);
    CHECK_THROWS_AS(parse_spec("6,x/1"), ParseError);
    CHECK_THROWS_AS(parse_spec("2,6"), ParseError);
    CHECK_THROWS_AS(parse_spec("6,6/1"), ParseError);
    CHECK(format_spec(spec({6, 6, 6, 6}, {1, 2})) == "6,6,6,6/1,2");
    CHECK(format_spec(spec({6})) == "6/");
    for (const auto& s : enumerate_specs({4, 7, 5, 8}, false)) CHECK(parse_spec(format_spec(s)) == s);
}

TEST_CASE("vertex label text") {
    CHECK(parse_label("n:2", 3) == VertexLabel{3, 2});
    CHECK(parse_label("1:4", 3) == VertexLabel{1, 4});
    CHECK_THROWS_AS(parse_label("12", 3), ParseError);
    CHECK(to_string(VertexLabel{2, 5}) == "v_5^(2)");
}

TEST_CASE("graph construction errors") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(make_cycle(2), std::invalid_argument);
    CHECK(make_path(0).vertex_count() == 0);
    CHECK(disjoint_union(make_path(2), make_path(3)).edge_count() == 3);
}

}
