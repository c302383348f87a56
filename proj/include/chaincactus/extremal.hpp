#pragma once

#include "chaincactus/chain_model.hpp"
#include "chaincactus/polynomial.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace chaincactus {

enum class VerdictStatus {
    pass,
    fail,
    vacuous,    // the quantified range is empty
    degenerate, // only one chain exists, nothing to rank
};

const char* to_string(VerdictStatus s);

/// i(A_n - v_k^(n)) for one k.
struct DeletionWitness {
    int k = 0;
    UniPoly poly;
    BigInt psi;
};

/// Self-contained falsification evidence: the claim "smaller < larger" failed.
struct Counterexample {
    ChainSpec spec;
    std::string claim;
    int k = 0;
    UniPoly smaller;
    UniPoly larger;
};

struct Verdict {
    VerdictStatus status = VerdictStatus::pass;
    std::string note;
    std::vector<DeletionWitness> witnesses;
    std::optional<Counterexample> counterexample;

    bool ok() const noexcept { return status != VerdictStatus::fail; }
};

/// i(A_n - v_1^(n)) strictly below i(A_n - v_k^(n)) coefficientwise for
/// 2 <= k <= floor(h_n/2). Throws std::invalid_argument for n < 2.
Verdict verify_lemma_e1(const ChainSpec& spec);

/// i(A_n - v_k^(n)) strictly below i(A_n - v_2^(n)) for 3 <= k <= floor(h_n/2).
Verdict verify_lemma_e2(const ChainSpec& spec);

/// Psi(A_n - v_1) < Psi(A_n - v_k) < Psi(A_n - v_2) for 3 <= k <= floor(h_n/2),
/// and Psi(A_n - v_1) < Psi(A_n - v_2) whenever floor(h_n/2) >= 2.
Verdict verify_corollary(const ChainSpec& spec);

struct DeletionLemmas {
    Verdict lemma_e1;
    Verdict lemma_e2;
    Verdict corollary;
};

/// All three checks from one set of deletion polynomials.
DeletionLemmas verify_deletion_lemmas(const ChainSpec& spec);

struct SweepEntry {
    std::vector<int> positions;
    BigInt psi;
    std::size_t alpha = 0;
    BigInt mis_count;
};

struct SweepOptions {
    bool dedupe_reversal = false;
    unsigned jobs = 1;
    bool check_lemmas = true;
};

struct SweepReport {
    std::vector<int> cycle_sizes;
    std::vector<SweepEntry> entries; // lexicographic in positions
    std::size_t min_index = 0;
    std::size_t max_index = 0;
    /// Groups of interior position sequences sharing one Psi value.
    std::vector<std::vector<std::vector<int>>> interior_ties;

    Verdict lemma_e1;
    Verdict lemma_e2;
    Verdict corollary;
    Verdict extremality;

    bool all_ok() const noexcept { return lemma_e1.ok() && lemma_e2.ok() && corollary.ok() && extremality.ok(); }
};

/// Evaluates every canonical chain with the given size list and checks the
/// ortho chain is the unique strict minimum of Psi and the meta chain the
/// unique strict maximum. Lemma verdicts aggregate over every entry.
SweepReport sweep(const std::vector<int>& cycle_sizes, const SweepOptions& options = {});

} // namespace chaincactus
