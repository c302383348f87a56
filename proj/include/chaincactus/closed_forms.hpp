#pragma once

#include "chaincactus/polynomial.hpp"

#include <cstddef>

namespace chaincactus {

/// i(P_n;x). Defined for n >= -2 with i(P_-1) = 1 and i(P_-2) = 0, the
/// backward continuation of i(P_n) = i(P_{n-1}) + x*i(P_{n-2}).
/// Throws std::domain_error for n <= -3.
UniPoly path_poly(int n);

/// i(C_n;x) for n >= 3. Throws std::domain_error otherwise.
UniPoly cycle_poly(int n);

struct FibLucas {
    int index;
    BigInt fibonacci;
    BigInt lucas;
};

/// F_n and L_n with F_1 = F_2 = 1, L_1 = 1, L_2 = 3. Requires n >= 1.
FibLucas fib_lucas(int n);

/// Number of independent sets of P_n as (3F_n + L_n)/2. Requires n >= 1.
BigInt psi_path(int n);

/// i(O_n;x) for the ortho chain of h-cycles, computed bottom-up from
/// i(O_0) = 1+x, i(O_1) = i(C_h), i(O_2) = x*i(P_{h-3})^2 + i(P_{h-1})^2.
UniPoly ortho_poly(int h, int n);

/// The two coefficient polynomials of the meta-chain recurrence
///   i(M_n) = lead * i(M_{n-1}) - x^2 * lag * i(M_{n-2}).
struct MetaRecurrence {
    UniPoly lead;
    UniPoly lag;
};

MetaRecurrence meta_recurrence(int h);

/// i(M_n;x) for the meta chain of h-cycles. Shares the n <= 2 base cases
/// with ortho_poly. Throws std::domain_error("meta-position requires h ≥ 4")
/// for h = 3 and n >= 3.
UniPoly meta_poly(int h, int n);

/// Independence number of O_n, n >= 1.
std::size_t alpha_ortho(int h, int n);
/// Independence number of M_n, h >= 4, n >= 1.
std::size_t alpha_meta(int h, int n);
/// Number of maximum independent sets of O_n, n >= 2.
BigInt count_mis_ortho(int h, int n);
/// Number of maximum independent sets of M_n, h >= 4, n >= 2.
BigInt count_mis_meta(int h, int n);

} // namespace chaincactus
