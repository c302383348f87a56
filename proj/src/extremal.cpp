#include "chaincactus/extremal.hpp"

#include "chaincactus/engine.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>
#include <thread>

namespace chaincactus {

const char* to_string(VerdictStatus s) {
    switch (s) {
    case VerdictStatus::pass: return "pass";
    case VerdictStatus::fail: return "fail";
    case VerdictStatus::vacuous: return "vacuous";
    case VerdictStatus::degenerate: return "degenerate";
    }
    return "?";
}

namespace {

/// Deletion polynomials of the last cycle for k = 1..floor(h_n/2).
std::vector<DeletionWitness> deletion_witnesses(const ChainSpec& spec) {
    if (spec.length() < 2) throw std::invalid_argument("lemma checks need a chain of length >= 2");
    const ChainSpec canon = validate(spec);
    const int h = canon.cycle_sizes.back();
    std::vector<DeletionWitness> out;
    for (int k = 1; k <= h / 2; ++k) {
        UniPoly p = indpoly_chain_minus_last_vertex(canon, k);
        BigInt psi = eval_at_one(p);
        out.push_back({k, std::move(p), std::move(psi)});
    }
    return out;
}

Verdict lemma_e1_from(const ChainSpec& spec, const std::vector<DeletionWitness>& w) {
    Verdict v;
    v.witnesses = w;
    if (w.size() < 2) {
        v.status = VerdictStatus::vacuous;
        v.note = "no applicable k";
        return v;
    }
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (dominates(w[0].poly, w[i].poly) != Dominance::strictly_dominated) {
            v.status = VerdictStatus::fail;
            v.counterexample = Counterexample{spec, "i(A_n - v_1) < i(A_n - v_k) coefficientwise", w[i].k, w[0].poly,
                                              w[i].poly};
            return v;
        }
    }
    return v;
}

Verdict lemma_e2_from(const ChainSpec& spec, const std::vector<DeletionWitness>& w) {
    Verdict v;
    v.witnesses = w;
    if (w.size() < 3) {
        v.status = VerdictStatus::vacuous;
        v.note = "no applicable k";
        return v;
    }
    for (std::size_t i = 2; i < w.size(); ++i) {
        if (dominates(w[i].poly, w[1].poly) != Dominance::strictly_dominated) {
            v.status = VerdictStatus::fail;
            v.counterexample = Counterexample{spec, "i(A_n - v_k) < i(A_n - v_2) coefficientwise", w[i].k, w[i].poly,
                                              w[1].poly};
            return v;
        }
    }
    return v;
}

Verdict corollary_from(const ChainSpec& spec, const std::vector<DeletionWitness>& w) {
    Verdict v;
    v.witnesses = w;
    if (w.size() < 2) {
        v.status = VerdictStatus::vacuous;
        v.note = "no applicable k";
        return v;
    }
    auto fail = [&](const char* claim, int k, const DeletionWitness& lo, const DeletionWitness& hi) {
        v.status = VerdictStatus::fail;
        v.counterexample = Counterexample{spec, claim, k, lo.poly, hi.poly};
    };
    if (!(w[0].psi < w[1].psi)) {
        fail("Psi(A_n - v_1) < Psi(A_n - v_2)", 2, w[0], w[1]);
        return v;
    }
    for (std::size_t i = 2; i < w.size(); ++i) {
        if (!(w[0].psi < w[i].psi)) {
            fail("Psi(A_n - v_1) < Psi(A_n - v_k)", w[i].k, w[0], w[i]);
            return v;
        }
        if (!(w[i].psi < w[1].psi)) {
            fail("Psi(A_n - v_k) < Psi(A_n - v_2)", w[i].k, w[i], w[1]);
            return v;
        }
    }
    return v;
}

/// Folds per-spec verdicts: first failure wins, all-vacuous stays vacuous.
void merge(Verdict& into, const Verdict& v, bool& any_applicable) {
    if (!into.ok()) return;
    if (v.status == VerdictStatus::fail) {
        into.status = VerdictStatus::fail;
        into.counterexample = v.counterexample;
        return;
    }
    if (v.status == VerdictStatus::pass) any_applicable = true;
}

struct EntryResult {
    SweepEntry entry;
    UniPoly poly;
    Verdict e1, e2, corollary;
};

EntryResult evaluate(const ChainSpec& spec, bool check_lemmas) {
    EntryResult r;
    r.poly = indpoly_chain(spec);
    const auto [deg, lead] = degree_and_leading(r.poly);
    r.entry = SweepEntry{spec.positions, eval_at_one(r.poly), deg, lead};
    if (check_lemmas && spec.length() >= 2) {
        const auto w = deletion_witnesses(spec);
        r.e1 = lemma_e1_from(spec, w);
        r.e2 = lemma_e2_from(spec, w);
        r.corollary = corollary_from(spec, w);
        // The sweep report stays compact; witnesses live in the per-spec API.
        r.e1.witnesses.clear();
        r.e2.witnesses.clear();
        r.corollary.witnesses.clear();
    } else {
        r.e1.status = r.e2.status = r.corollary.status = VerdictStatus::vacuous;
    }
    return r;
}

} // namespace

Verdict verify_lemma_e1(const ChainSpec& spec) { return lemma_e1_from(spec, deletion_witnesses(spec)); }
Verdict verify_lemma_e2(const ChainSpec& spec) { return lemma_e2_from(spec, deletion_witnesses(spec)); }
Verdict verify_corollary(const ChainSpec& spec) { return corollary_from(spec, deletion_witnesses(spec)); }

DeletionLemmas verify_deletion_lemmas(const ChainSpec& spec) {
    const auto w = deletion_witnesses(spec);
    return {lemma_e1_from(spec, w), lemma_e2_from(spec, w), corollary_from(spec, w)};
}

SweepReport sweep(const std::vector<int>& cycle_sizes, const SweepOptions& options) {
    const auto specs = enumerate_specs(cycle_sizes, options.dedupe_reversal);
    std::vector<EntryResult> results(specs.size());

    const unsigned jobs = std::max(1U, std::min<unsigned>(options.jobs, static_cast<unsigned>(specs.size())));
    if (jobs == 1) {
        for (std::size_t i = 0; i < specs.size(); ++i) results[i] = evaluate(specs[i], options.check_lemmas);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < specs.size(); i = next++) results[i] = evaluate(specs[i], options.check_lemmas);
            });
        }
        for (auto& th : pool) th.join();
    }

    SweepReport report;
    report.cycle_sizes = cycle_sizes;
    report.lemma_e1.status = report.lemma_e2.status = report.corollary.status = VerdictStatus::pass;
    bool e1_applicable = false, e2_applicable = false, cor_applicable = false;
    for (std::size_t i = 0; i < results.size(); ++i) {
        report.entries.push_back(results[i].entry);
        merge(report.lemma_e1, results[i].e1, e1_applicable);
        merge(report.lemma_e2, results[i].e2, e2_applicable);
        merge(report.corollary, results[i].corollary, cor_applicable);
        if (results[i].entry.psi < report.entries[report.min_index].psi) report.min_index = i;
        if (results[i].entry.psi > report.entries[report.max_index].psi) report.max_index = i;
    }
    auto close = [](Verdict& v, bool applicable) {
        if (v.ok() && !applicable) {
            v.status = VerdictStatus::vacuous;
            v.note = "no applicable k in any chain";
        }
    };
    close(report.lemma_e1, e1_applicable);
    close(report.lemma_e2, e2_applicable);
    close(report.corollary, cor_applicable);

    const std::vector<int> ortho = ortho_spec(cycle_sizes).positions;
    const std::vector<int> meta = meta_spec(cycle_sizes).positions;

    std::map<BigInt, std::vector<std::vector<int>>> by_psi;
    for (const auto& e : report.entries) {
        if (e.positions != ortho && e.positions != meta) by_psi[e.psi].push_back(e.positions);
    }
    for (auto& [psi, group] : by_psi) {
        if (group.size() > 1) report.interior_ties.push_back(std::move(group));
    }

    Verdict& ext = report.extremality;
    if (cycle_sizes.size() < 3 || report.entries.size() == 1 || ortho == meta) {
        ext.status = VerdictStatus::degenerate;
        ext.note = cycle_sizes.size() < 3 ? "chains of length < 3 are unique" : "ortho and meta chains coincide";
        return report;
    }
    auto find = [&](const std::vector<int>& pos) -> std::size_t {
        for (std::size_t i = 0; i < report.entries.size(); ++i) {
            if (report.entries[i].positions == pos) return i;
        }
        throw std::logic_error("extremal chain missing from enumeration");
    };
    const std::size_t io = find(ortho), im = find(meta);
    const ChainSpec o_spec{cycle_sizes, ortho}, m_spec{cycle_sizes, meta};
    if (!(report.entries[io].psi < report.entries[im].psi)) {
        ext.status = VerdictStatus::fail;
        ext.counterexample = Counterexample{m_spec, "Psi(O_n) < Psi(M_n)", 0, results[io].poly, results[im].poly};
        return report;
    }
    for (std::size_t i = 0; i < report.entries.size(); ++i) {
        if (i == io || i == im) continue;
        const ChainSpec a_spec{cycle_sizes, report.entries[i].positions};
        if (!(report.entries[io].psi < report.entries[i].psi)) {
            ext.status = VerdictStatus::fail;
            ext.counterexample = Counterexample{a_spec, "Psi(O_n) < Psi(A_n)", 0, results[io].poly, results[i].poly};
            return report;
        }
        if (!(report.entries[i].psi < report.entries[im].psi)) {
            ext.status = VerdictStatus::fail;
            ext.counterexample = Counterexample{a_spec, "Psi(A_n) < Psi(M_n)", 0, results[i].poly, results[im].poly};
            return report;
        }
    }
    return report;
}

} // namespace chaincactus
