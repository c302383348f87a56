#include "chaincactus/closed_forms.hpp"

#include <stdexcept>
#include <string>

namespace chaincactus {

namespace {

BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

void require(bool ok, const std::string& message) {
    if (!ok) throw std::domain_error(message);
}

const UniPoly& x_poly() {
    static const UniPoly x = UniPoly::monomial(1);
    return x;
}

} // namespace

UniPoly path_poly(int n) {
    require(n >= -2, "path index must be >= -2, got " + std::to_string(n));
    if (n == -2) return {};
    if (n == -1) return UniPoly::one();
    std::vector<BigInt> c;
    for (long k = 0; k <= (n + 1) / 2; ++k) c.push_back(binomial(n + 1 - k, k));
    return UniPoly(std::move(c));
}

UniPoly cycle_poly(int n) {
    require(n >= 3, "cycle size must be >= 3, got " + std::to_string(n));
    std::vector<BigInt> c;
    for (long k = 0; k <= n / 2; ++k) {
        // n/(n-k) * C(n-k, k) is always an integer.
        BigInt num = BigInt(n) * binomial(n - k, k);
        const BigInt den = n - k;
        if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
            throw std::logic_error("non-integral cycle coefficient");
        }
        mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        c.push_back(num);
    }
    return UniPoly(std::move(c));
}

FibLucas fib_lucas(int n) {
    require(n >= 1, "Fibonacci/Lucas index must be >= 1");
    BigInt f_prev = 1, f = 1;
    BigInt l_prev = 1, l = 3;
    if (n == 1) return {1, 1, 1};
    for (int i = 3; i <= n; ++i) {
        BigInt fn = f + f_prev;
        BigInt ln = l + l_prev;
        f_prev = f;
        f = fn;
        l_prev = l;
        l = ln;
    }
    return {n, f, l};
}

BigInt psi_path(int n) {
    require(n >= 1, "psi_path requires n >= 1");
    const auto fl = fib_lucas(n);
    BigInt twice = 3 * fl.fibonacci + fl.lucas;
    if (!mpz_even_p(twice.get_mpz_t())) throw std::logic_error("3F+L is odd");
    return twice / 2;
}

UniPoly ortho_poly(int h, int n) {
    require(h >= 3, "cycle size must be >= 3");
    require(n >= 0, "chain length must be >= 0");
    const UniPoly& x = x_poly();
    if (n == 0) return UniPoly{1, 1};
    if (n == 1) return cycle_poly(h);
    const UniPoly p3 = path_poly(h - 3);
    const UniPoly p1 = path_poly(h - 1);
    const UniPoly twice_back = x * p3 * p3; // factor on i(O_{n-2})
    const UniPoly once_back = path_poly(h - 2);
    UniPoly prev = cycle_poly(h);
    UniPoly cur = twice_back + p1 * p1;
    for (int i = 3; i <= n; ++i) {
        UniPoly next = twice_back * prev + once_back * cur;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

MetaRecurrence meta_recurrence(int h) {
    require(h >= 4, "meta-position requires h ≥ 4");
    const UniPoly& x = x_poly();
    const UniPoly p4 = path_poly(h - 4);
    const UniPoly p5 = path_poly(h - 5);
    const UniPoly p6 = path_poly(h - 6);
    MetaRecurrence r;
    r.lead = shift(p5, 2) + x * (p4 + BigInt(2) * p5) + p4;
    r.lag = x * p5 * p5 + p5 * p5 + p4 * p5 - p4 * p6;
    return r;
}

UniPoly meta_poly(int h, int n) {
    require(h >= 3, "cycle size must be >= 3");
    require(n >= 0, "chain length must be >= 0");
    if (n <= 2) return ortho_poly(h, n);
    require(h >= 4, "meta-position requires h ≥ 4");
    const auto [lead, lag] = meta_recurrence(h);
    const UniPoly x2_lag = shift(lag, 2);
    UniPoly prev = ortho_poly(h, 1);
    UniPoly cur = ortho_poly(h, 2);
    for (int i = 3; i <= n; ++i) {
        UniPoly next = lead * cur - x2_lag * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::size_t alpha_ortho(int h, int n) {
    require(h >= 3 && n >= 1, "alpha_ortho requires h >= 3, n >= 1");
    if (h % 2 == 0) return static_cast<std::size_t>(n * h / 2 - (n - 1) / 2);
    return static_cast<std::size_t>(n * (h - 1) / 2);
}

std::size_t alpha_meta(int h, int n) {
    require(h >= 4 && n >= 1, "alpha_meta requires h >= 4, n >= 1");
    return static_cast<std::size_t>(n * (h / 2));
}

BigInt count_mis_ortho(int h, int n) {
    require(h >= 3 && n >= 2, "count_mis_ortho requires h >= 3, n >= 2");
    if (h % 2 == 0) {
        if (n % 2 == 0) return 1;
        const int k = (n - 1) / 2;
        return 2 + BigInt(k) * h / 2;
    }
    const BigInt half = (h + 1) / 2;
    return half * half;
}

BigInt count_mis_meta(int h, int n) {
    require(h >= 4 && n >= 2, "count_mis_meta requires h >= 4, n >= 2");
    if (h % 2 == 0) return 1;
    BigInt lower;
    mpz_ui_pow_ui(lower.get_mpz_t(), static_cast<unsigned long>((h - 1) / 2), static_cast<unsigned long>(n - 2));
    const BigInt upper = (h + 1) / 2;
    return lower * upper * upper;
}

} // namespace chaincactus
