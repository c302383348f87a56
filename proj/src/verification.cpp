#include "chaincactus/verification.hpp"

#include "chaincactus/chain_model.hpp"
#include "chaincactus/closed_forms.hpp"
#include "chaincactus/engine.hpp"
#include "chaincactus/errors.hpp"
#include "chaincactus/extremal.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

namespace chaincactus {

IntRange parse_range(std::string_view text) {
    auto to_int = [&](std::string_view s) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
            throw ParseError("bad range '" + std::string(text) + "'");
        }
        return v;
    };
    const auto dots = text.find("..");
    IntRange r;
    if (dots == std::string_view::npos) {
        r.lo = r.hi = to_int(text);
    } else {
        r.lo = to_int(text.substr(0, dots));
        r.hi = to_int(text.substr(dots + 2));
    }
    if (r.lo > r.hi) throw ParseError("empty range '" + std::string(text) + "'");
    return r;
}

bool all_pass(const std::vector<PropertyCheck>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const PropertyCheck& c) { return c.pass; });
}

namespace {

class Recorder {
public:
    explicit Recorder(std::string name) { check_.name = std::move(name); }

    void expect(bool ok, const std::function<std::string()>& describe) {
        ++check_.checked;
        if (!ok && check_.pass) {
            check_.pass = false;
            check_.counterexample = describe();
        }
    }
    PropertyCheck done() const { return check_; }

private:
    PropertyCheck check_;
};

void for_each_spec(IntRange h, IntRange n, int min_n, const std::function<void(const ChainSpec&)>& f) {
    for (int len = std::max(n.lo, min_n); len <= n.hi; ++len) {
        for (const auto& sizes : enumerate_size_lists(std::max(h.lo, 3), h.hi, static_cast<std::size_t>(len))) {
            for (const auto& spec : enumerate_specs(sizes, false)) f(spec);
        }
    }
}

std::string poly_pair(const std::string& tag, const UniPoly& a, const UniPoly& b) {
    return tag + ": " + to_string(a) + " vs " + to_string(b);
}

} // namespace

std::vector<PropertyCheck> verify_engines(IntRange h, IntRange n) {
    Recorder agree("three_engine_agreement");
    Recorder boundary("independence_polynomial_boundary");
    Recorder reversal("reversal_invariance");
    Recorder mirror("mirror_deletion_symmetry");

    if (n.lo <= 0) {
        const auto g = build(ChainSpec{});
        const UniPoly r = indpoly_recursive(g.graph());
        agree.expect(r == indpoly_bruteforce(g.graph()) && r == UniPoly{1, 1},
                     [&] { return poly_pair("A_0", r, UniPoly{1, 1}); });
    }
    for_each_spec(h, n, 1, [&](const ChainSpec& spec) {
        const auto g = build(spec);
        const UniPoly t = indpoly_chain(spec);
        const UniPoly r = indpoly_recursive(g.graph());
        bool same = t == r;
        UniPoly b;
        if (g.vertex_count() <= kBruteForceCap) {
            b = indpoly_bruteforce(g.graph());
            same = same && b == t;
        }
        agree.expect(same, [&] { return format_spec(spec) + ": transfer " + to_string(t) + ", recursive " + to_string(r) +
                                        ", brute " + to_string(b); });
        boundary.expect(is_independence_polynomial(t, g.vertex_count()), [&] { return format_spec(spec) + ": " + to_string(t); });
        const UniPoly rev = indpoly_chain(reversed(spec));
        reversal.expect(rev == t, [&] { return poly_pair(format_spec(spec), t, rev); });
        if (spec.length() >= 2) {
            const int hn = spec.cycle_sizes.back();
            for (int k = 1; k <= hn - 1; ++k) {
                const UniPoly a = indpoly_chain_minus_last_vertex(spec, k);
                const UniPoly m = indpoly_chain_minus_last_vertex(spec, hn - k);
                mirror.expect(a == m, [&] { return poly_pair(format_spec(spec) + " k=" + std::to_string(k), a, m); });
            }
        }
    });
    return {agree.done(), boundary.done(), reversal.done(), mirror.done()};
}

std::vector<PropertyCheck> verify_recurrences(IntRange h, IntRange n) {
    Recorder ortho("ortho_closed_form_vs_transfer");
    Recorder meta("meta_closed_form_vs_transfer");
    Recorder ortho_rec("ortho_recurrence_identity");
    Recorder meta_rec("meta_recurrence_identity");
    Recorder psi_rec("ortho_psi_recurrence");
    Recorder ortho_top("ortho_alpha_and_mis_count");
    Recorder meta_top("meta_alpha_and_mis_count");
    Recorder fib("psi_path_fibonacci_lucas");

    const UniPoly x = UniPoly::monomial(1);
    for (int hh = std::max(h.lo, 3); hh <= h.hi; ++hh) {
        for (int len = std::max(n.lo, 0); len <= n.hi; ++len) {
            const std::vector<int> sizes(static_cast<std::size_t>(len), hh);
            auto reference = [&](const ChainSpec& s) {
                return len == 0 ? indpoly_recursive(build(s).graph()) : indpoly_chain(s);
            };
            const UniPoly o = ortho_poly(hh, len);
            const UniPoly o_ref = reference(ortho_spec(sizes));
            ortho.expect(o == o_ref, [&] { return poly_pair("h=" + std::to_string(hh) + " n=" + std::to_string(len), o, o_ref); });
            if (len >= 3) {
                const UniPoly p3 = path_poly(hh - 3);
                const UniPoly rhs = x * p3 * p3 * ortho_poly(hh, len - 2) + path_poly(hh - 2) * ortho_poly(hh, len - 1);
                ortho_rec.expect(rhs == o_ref, [&] { return poly_pair("h=" + std::to_string(hh) + " n=" + std::to_string(len), o_ref, rhs); });
                const BigInt s3 = eval_at_one(p3);
                const BigInt psi = s3 * s3 * eval_at_one(ortho_poly(hh, len - 2)) +
                                   eval_at_one(path_poly(hh - 2)) * eval_at_one(ortho_poly(hh, len - 1));
                psi_rec.expect(psi == eval_at_one(o_ref), [&] { return "h=" + std::to_string(hh) + " n=" + std::to_string(len); });
            }
            if (len >= 2) {
                const auto [deg, lead] = degree_and_leading(o_ref);
                ortho_top.expect(deg == alpha_ortho(hh, len) && lead == count_mis_ortho(hh, len), [&] {
                    return "h=" + std::to_string(hh) + " n=" + std::to_string(len) + ": engine (" + std::to_string(deg) + ", " +
                           lead.get_str() + "), formula (" + std::to_string(alpha_ortho(hh, len)) + ", " +
                           count_mis_ortho(hh, len).get_str() + ")";
                });
            }
            if (hh < 4) continue;
            const UniPoly m = meta_poly(hh, len);
            const UniPoly m_ref = reference(meta_spec(sizes));
            meta.expect(m == m_ref, [&] { return poly_pair("h=" + std::to_string(hh) + " n=" + std::to_string(len), m, m_ref); });
            if (len >= 3) {
                const auto [lead, lag] = meta_recurrence(hh);
                const UniPoly rhs = lead * meta_poly(hh, len - 1) - shift(lag * meta_poly(hh, len - 2), 2);
                meta_rec.expect(rhs == m_ref, [&] { return poly_pair("h=" + std::to_string(hh) + " n=" + std::to_string(len), m_ref, rhs); });
            }
            if (len >= 2) {
                const auto [deg, lead] = degree_and_leading(m_ref);
                meta_top.expect(deg == alpha_meta(hh, len) && lead == count_mis_meta(hh, len), [&] {
                    return "h=" + std::to_string(hh) + " n=" + std::to_string(len) + ": engine (" + std::to_string(deg) + ", " +
                           lead.get_str() + "), formula (" + std::to_string(alpha_meta(hh, len)) + ", " +
                           count_mis_meta(hh, len).get_str() + ")";
                });
            }
        }
    }
    for (int k = 1; k <= 50; ++k) {
        fib.expect(psi_path(k) == eval_at_one(path_poly(k)), [&] { return "n=" + std::to_string(k); });
    }
    return {ortho.done(), meta.done(), ortho_rec.done(), meta_rec.done(), psi_rec.done(),
            ortho_top.done(), meta_top.done(), fib.done()};
}

std::vector<PropertyCheck> verify_lemmas(IntRange h, IntRange n) {
    Recorder e1("lemma_e1_strict_dominance");
    Recorder e2("lemma_e2_strict_dominance");
    Recorder cor("corollary_psi_inequalities");
    Recorder cross("dominance_implies_psi_order");
    Recorder ext("extremality_ortho_min_meta_max");

    auto describe = [](const Verdict& v) {
        const auto& c = *v.counterexample;
        return format_spec(c.spec) + " k=" + std::to_string(c.k) + " " + c.claim + ": " + to_string(c.smaller) + " vs " +
               to_string(c.larger);
    };
    for_each_spec(h, n, 2, [&](const ChainSpec& spec) {
        const auto [v1, v2, vc] = verify_deletion_lemmas(spec);
        e1.expect(v1.ok(), [&] { return describe(v1); });
        e2.expect(v2.ok(), [&] { return describe(v2); });
        cor.expect(vc.ok(), [&] { return describe(vc); });
        // Strict coefficientwise dominance between nonnegative polynomials
        // must show up as a strict gap in the values at 1.
        const auto& w = v1.witnesses;
        for (std::size_t i = 0; i < w.size(); ++i) {
            for (std::size_t j = 0; j < w.size(); ++j) {
                if (dominates(w[i].poly, w[j].poly) == Dominance::strictly_dominated) {
                    cross.expect(w[i].psi < w[j].psi, [&] {
                        return format_spec(spec) + " k=" + std::to_string(w[i].k) + " vs k=" + std::to_string(w[j].k);
                    });
                }
            }
        }
    });
    for (int len = std::max(n.lo, 3); len <= n.hi; ++len) {
        for (const auto& sizes : enumerate_size_lists(std::max(h.lo, 3), h.hi, static_cast<std::size_t>(len))) {
            const SweepReport r = sweep(sizes, SweepOptions{false, 1, false});
            ext.expect(r.extremality.ok(), [&] { return describe(r.extremality); });
        }
    }
    return {e1.done(), e2.done(), cor.done(), cross.done(), ext.done()};
}

} // namespace chaincactus
