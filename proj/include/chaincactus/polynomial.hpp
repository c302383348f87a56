#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace chaincactus {

using BigInt = mpz_class;

/// Dense univariate polynomial with arbitrary-precision signed coefficients.
///
/// Coefficient i multiplies x^i. Trailing zeros are always trimmed, so the
/// zero polynomial has no coefficients and equality is plain sequence
/// equality. An independence polynomial i(G;x) is stored as a UniPoly whose
/// degree is the independence number and whose value at 1 is the total number
/// of independent sets.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(std::initializer_list<long> coeffs);
    explicit UniPoly(std::vector<BigInt> coeffs);

    static UniPoly constant(const BigInt& c);
    static UniPoly one() { return constant(1); }
    /// x^k
    static UniPoly monomial(std::size_t k);

    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::size_t size() const noexcept { return coeffs_.size(); }

    /// Coefficient of x^i; zero past the end.
    BigInt coeff(std::size_t i) const;

    UniPoly& operator+=(const UniPoly& other);
    UniPoly& operator-=(const UniPoly& other);
    UniPoly& operator*=(const UniPoly& other);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const BigInt& c, const UniPoly& p);
    friend UniPoly operator-(const UniPoly& p);

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

private:
    void trim();

    std::vector<BigInt> coeffs_;
};

UniPoly add(const UniPoly& a, const UniPoly& b);
UniPoly sub(const UniPoly& a, const UniPoly& b);
UniPoly mul(const UniPoly& a, const UniPoly& b);

/// Multiply by x^k.
UniPoly shift(const UniPoly& a, std::size_t k);

/// Exact division by x^k. Throws std::domain_error if any of the k lowest
/// coefficients is nonzero.
UniPoly unshift(const UniPoly& a, std::size_t k);

BigInt eval_at_one(const UniPoly& a);

struct DegreeLeading {
    std::size_t degree;
    BigInt leading;
};

/// Degree and top coefficient. Throws std::domain_error("degree undefined")
/// for the zero polynomial.
DegreeLeading degree_and_leading(const UniPoly& a);

enum class Dominance {
    equal,
    strictly_dominated, // a <= b coefficientwise and a != b
    strictly_dominates, // b <= a coefficientwise and a != b
    incomparable,
};

/// Relation of a against b under the coefficientwise order. The shorter
/// polynomial is padded with zeros.
Dominance dominates(const UniPoly& a, const UniPoly& b);

/// a <= b coefficientwise (equal or strictly dominated).
bool is_dominated(const UniPoly& a, const UniPoly& b);

const char* to_string(Dominance d);

/// Renders as "c0 + c1*x + c2*x^2 + ...", zero terms omitted; "0" for zero.
std::string to_string(const UniPoly& p);

/// True for a plausible independence polynomial: nonnegative coefficients,
/// constant term 1, linear term equal to `vertex_count`.
bool is_independence_polynomial(const UniPoly& p, std::size_t vertex_count);

} // namespace chaincactus
