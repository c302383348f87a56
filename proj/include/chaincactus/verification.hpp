#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace chaincactus {

/// Inclusive integer range, written "lo..hi" or a single "v".
struct IntRange {
    int lo = 0;
    int hi = 0;
};

IntRange parse_range(std::string_view text);

struct PropertyCheck {
    std::string name;
    bool pass = true;
    std::size_t checked = 0;
    std::string counterexample; // empty on pass
};

bool all_pass(const std::vector<PropertyCheck>& checks);

/// Brute force, pivot recursion and transfer agree on every chain whose cycle
/// sizes lie in `h` and length in `n` (brute force only up to its cap), plus
/// the boundary coefficients, chain reversal and last-cycle mirror symmetry.
std::vector<PropertyCheck> verify_engines(IntRange h, IntRange n);

/// Ortho/meta closed forms against the transfer engine, the two recurrences
/// as polynomial identities, their evaluations at x = 1, the independence
/// number and maximum-set count formulas, and the Fibonacci/Lucas path count.
std::vector<PropertyCheck> verify_recurrences(IntRange h, IntRange n);

/// Both deletion lemmas and the corollary on every chain with sizes in `h`
/// and length in `n`, plus the extremality sweep for every size list with
/// length >= 3.
std::vector<PropertyCheck> verify_lemmas(IntRange h, IntRange n);

} // namespace chaincactus
