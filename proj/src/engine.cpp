#include "chaincactus/engine.hpp"

#include "chaincactus/closed_forms.hpp"
#include "chaincactus/errors.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace chaincactus {

// ---------------------------------------------------------------------------
// Enumeration oracle

namespace {

void count_sets(const std::vector<std::uint64_t>& open_nbrs, std::uint64_t candidates, std::size_t size,
                std::vector<std::uint64_t>& counts) {
    ++counts[size];
    while (candidates) {
        const int v = std::countr_zero(candidates);
        candidates &= candidates - 1;
        count_sets(open_nbrs, candidates & ~open_nbrs[static_cast<std::size_t>(v)], size + 1, counts);
    }
}

} // namespace

UniPoly indpoly_bruteforce(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n > kBruteForceCap) {
        throw CapExceeded("brute force is capped at " + std::to_string(kBruteForceCap) + " vertices, graph has " +
                          std::to_string(n));
    }
    std::vector<std::uint64_t> open_nbrs(n, 0);
    for (VertexId v = 0; v < n; ++v) {
        for (VertexId u : g.neighbors(v)) open_nbrs[v] |= std::uint64_t{1} << u;
    }
    std::vector<std::uint64_t> counts(n + 1, 0);
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    count_sets(open_nbrs, all, 0, counts);

    std::vector<BigInt> c;
    c.reserve(counts.size());
    for (auto v : counts) {
        BigInt b;
        mpz_import(b.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
        c.push_back(b);
    }
    return UniPoly(std::move(c));
}

// ---------------------------------------------------------------------------
// Pivot recursion

namespace {

class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t n) : words_((n + 63) / 64, 0) {}

    void set(std::size_t v) { words_[v / 64] |= std::uint64_t{1} << (v % 64); }
    void reset(std::size_t v) { words_[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }
    bool test(std::size_t v) const { return (words_[v / 64] >> (v % 64)) & 1U; }

    bool empty() const {
        for (auto w : words_) {
            if (w) return false;
        }
        return true;
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    VertexSet& subtract(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    std::size_t intersect_count(const VertexSet& o) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
        return c;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    std::size_t hash() const {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto w : words_) h = (h ^ static_cast<std::size_t>(w)) * 0x100000001b3ULL;
        return h;
    }

private:
    std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

class PivotSolver {
public:
    explicit PivotSolver(const Graph& g) : g_(g), n_(g.vertex_count()) {
        open_.reserve(n_);
        closed_.reserve(n_);
        for (VertexId v = 0; v < n_; ++v) {
            VertexSet nb(n_);
            for (VertexId u : g.neighbors(v)) nb.set(u);
            open_.push_back(nb);
            nb.set(v);
            closed_.push_back(std::move(nb));
        }
    }

    UniPoly solve_all() {
        VertexSet all(n_);
        for (VertexId v = 0; v < n_; ++v) all.set(v);
        return solve(all);
    }

private:
    UniPoly solve(const VertexSet& alive) {
        if (alive.empty()) return UniPoly::one();
        if (auto it = memo_.find(alive); it != memo_.end()) return it->second;

        UniPoly result;
        auto comps = components(alive);
        if (comps.size() > 1) {
            result = UniPoly::one();
            for (const auto& c : comps) result *= solve(c);
        } else if (alive.count() == 1) {
            result = UniPoly{1, 1};
        } else {
            const VertexId pivot = choose_pivot(alive);
            VertexSet without = alive;
            without.reset(pivot);
            VertexSet outside = alive;
            outside.subtract(closed_[pivot]);
            result = solve(without) + shift(solve(outside), 1);
        }
        memo_.emplace(alive, result);
        return result;
    }

    VertexId choose_pivot(const VertexSet& alive) const {
        VertexId best = 0;
        std::size_t best_deg = 0;
        bool found = false;
        alive.for_each([&](std::size_t v) {
            const std::size_t d = open_[v].intersect_count(alive);
            if (!found || d > best_deg) {
                best = v;
                best_deg = d;
                found = true;
            }
        });
        return best;
    }

    std::vector<VertexSet> components(const VertexSet& alive) const {
        std::vector<VertexSet> out;
        VertexSet unseen = alive;
        std::vector<VertexId> stack;
        while (!unseen.empty()) {
            VertexId start = 0;
            unseen.for_each([&](std::size_t v) {
                if (stack.empty()) {
                    start = v;
                    stack.push_back(v);
                }
            });
            VertexSet comp(n_);
            unseen.reset(start);
            comp.set(start);
            while (!stack.empty()) {
                const VertexId v = stack.back();
                stack.pop_back();
                for (VertexId u : g_.neighbors(v)) {
                    if (unseen.test(u)) {
                        unseen.reset(u);
                        comp.set(u);
                        stack.push_back(u);
                    }
                }
            }
            out.push_back(std::move(comp));
        }
        return out;
    }

    const Graph& g_;
    std::size_t n_;
    std::vector<VertexSet> open_;
    std::vector<VertexSet> closed_;
    std::unordered_map<VertexSet, UniPoly, VertexSetHash> memo_;
};

} // namespace

UniPoly indpoly_recursive(const Graph& g) { return PivotSolver(g).solve_all(); }

// ---------------------------------------------------------------------------
// Chain transfer

UniPoly arc_poly(int internal, bool from_in, bool to_in) {
    return path_poly(internal - static_cast<int>(from_in) - static_cast<int>(to_in));
}

TransferState initial_state(int h) {
    return {path_poly(h - 1), shift(path_poly(h - 3), 1)};
}

TransferState advance(const TransferState& state, int h, int k) {
    if (k < 1 || k > h - 1) throw std::invalid_argument("exit position out of range");
    // Arcs between entry v_h and exit v_k: v_1..v_{k-1} and v_{k+1}..v_{h-1}.
    const int a = k - 1;
    const int b = h - k - 1;
    TransferState next;
    next.excluded = state.excluded * arc_poly(a, false, false) * arc_poly(b, false, false) +
                    state.included * arc_poly(a, true, false) * arc_poly(b, true, false);
    next.included = shift(state.excluded * arc_poly(a, false, true) * arc_poly(b, false, true) +
                              state.included * arc_poly(a, true, true) * arc_poly(b, true, true),
                          1);
    return next;
}

namespace {

TransferState run_prefix(const ChainSpec& spec, std::size_t cycles) {
    TransferState s = initial_state(spec.cycle_sizes.front());
    for (std::size_t j = 1; j < cycles; ++j) s = advance(s, spec.cycle_sizes[j], spec.positions[j - 1]);
    return s;
}

} // namespace

TransferState state_before_last(const ChainSpec& spec) {
    if (spec.length() < 2) throw std::invalid_argument("chain must have at least two cycles");
    return run_prefix(validate(spec), spec.length() - 1);
}

UniPoly indpoly_chain(const ChainSpec& raw) {
    const ChainSpec spec = validate(raw);
    if (spec.length() == 0) throw std::invalid_argument("transfer engine needs n >= 1");
    if (spec.length() == 1) return initial_state(spec.cycle_sizes.front()).total();
    const TransferState s = run_prefix(spec, spec.length() - 1);
    const int h = spec.cycle_sizes.back();
    return s.excluded * path_poly(h - 1) + s.included * path_poly(h - 3);
}

UniPoly indpoly_chain_minus_last_vertex(const ChainSpec& spec, int k) {
    if (spec.length() < 2) throw std::invalid_argument("deletion query needs n >= 2");
    const int h = spec.cycle_sizes.back();
    if (k < 1 || k > h - 1) {
        throw std::out_of_range("k = " + std::to_string(k) + " out of range 1.." + std::to_string(h - 1));
    }
    const TransferState s = state_before_last(spec);
    return s.excluded * path_poly(k - 1) * path_poly(h - 1 - k) + s.included * path_poly(k - 2) * path_poly(h - 2 - k);
}

} // namespace chaincactus
