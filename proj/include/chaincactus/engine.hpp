#pragma once

#include "chaincactus/chain_model.hpp"
#include "chaincactus/polynomial.hpp"

#include <cstddef>

namespace chaincactus {

/// Hard vertex cap of the enumeration oracle.
inline constexpr std::size_t kBruteForceCap = 32;

/// i(G;x) by backtracking over independent sets, counting each by size.
/// Work is proportional to the number of independent sets. Throws
/// CapExceeded above kBruteForceCap vertices.
UniPoly indpoly_bruteforce(const Graph& g);

/// i(G;x) by pivoting i(G) = i(G-u) + x*i(G-N[u]) on a maximum-degree vertex
/// (lowest id on ties), factoring over connected components at every step and
/// memoising on the surviving vertex set.
UniPoly indpoly_recursive(const Graph& g);

/// Generating polynomials of a chain prefix split on its exit cut vertex.
struct TransferState {
    UniPoly excluded; // i(prefix - exit)
    UniPoly included; // x * i(prefix - N[exit])

    UniPoly total() const { return excluded + included; }
};

/// Independent sets on an arc of `internal` vertices whose two boundary
/// vertices are in or out of the set (`from_in`, `to_in`): i(P_{a - s - t}).
UniPoly arc_poly(int internal, bool from_in, bool to_in);

/// State after the first cycle, exit at v_1^(1).
TransferState initial_state(int h);

/// Pushes the state across an internal cycle of size h whose exit is v_k.
TransferState advance(const TransferState& state, int h, int k);

/// State after cycle n-1 of an n >= 2 chain (exit v_{k_{n-1}}^(n-1), with
/// k_1 = 1). Used by the deletion queries on the last cycle.
TransferState state_before_last(const ChainSpec& spec);

/// i(A_n;x) by the left-to-right transfer. Requires n >= 1.
UniPoly indpoly_chain(const ChainSpec& spec);

/// i(A_n - v_k^(n);x) for 1 <= k <= h_n - 1. Requires n >= 2.
UniPoly indpoly_chain_minus_last_vertex(const ChainSpec& spec, int k);

} // namespace chaincactus
