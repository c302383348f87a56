#include "chaincactus/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace chaincactus {

UniPoly::UniPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

UniPoly::UniPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const BigInt& c) { return UniPoly(std::vector<BigInt>{c}); }

UniPoly UniPoly::monomial(std::size_t k) {
    std::vector<BigInt> c(k + 1, 0);
    c[k] = 1;
    return UniPoly(std::move(c));
}

BigInt UniPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& other) {
    *this = *this * other;
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
        }
    }
    return UniPoly(std::move(out));
}

UniPoly operator*(const BigInt& c, const UniPoly& p) {
    std::vector<BigInt> out = p.coeffs_;
    for (auto& v : out) v *= c;
    return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly& p) { return BigInt(-1) * p; }

UniPoly add(const UniPoly& a, const UniPoly& b) { return a + b; }
UniPoly sub(const UniPoly& a, const UniPoly& b) { return a - b; }
UniPoly mul(const UniPoly& a, const UniPoly& b) { return a * b; }

UniPoly shift(const UniPoly& a, std::size_t k) {
    if (a.is_zero() || k == 0) return a;
    std::vector<BigInt> out(k, 0);
    out.insert(out.end(), a.coeffs().begin(), a.coeffs().end());
    return UniPoly(std::move(out));
}

UniPoly unshift(const UniPoly& a, std::size_t k) {
    const auto& c = a.coeffs();
    for (std::size_t i = 0; i < k && i < c.size(); ++i) {
        if (c[i] != 0) throw std::domain_error("polynomial is not divisible by x^" + std::to_string(k));
    }
    if (c.size() <= k) return {};
    return UniPoly(std::vector<BigInt>(c.begin() + static_cast<std::ptrdiff_t>(k), c.end()));
}

BigInt eval_at_one(const UniPoly& a) {
    BigInt sum = 0;
    for (const auto& c : a.coeffs()) sum += c;
    return sum;
}

DegreeLeading degree_and_leading(const UniPoly& a) {
    if (a.is_zero()) throw std::domain_error("degree undefined");
    return {a.size() - 1, a.coeffs().back()};
}

Dominance dominates(const UniPoly& a, const UniPoly& b) {
    bool a_le_b = true;
    bool b_le_a = true;
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        const int c = cmp(a.coeff(i), b.coeff(i));
        if (c > 0) a_le_b = false;
        if (c < 0) b_le_a = false;
    }
    if (a_le_b && b_le_a) return Dominance::equal;
    if (a_le_b) return Dominance::strictly_dominated;
    if (b_le_a) return Dominance::strictly_dominates;
    return Dominance::incomparable;
}

bool is_dominated(const UniPoly& a, const UniPoly& b) {
    const auto d = dominates(a, b);
    return d == Dominance::equal || d == Dominance::strictly_dominated;
}

const char* to_string(Dominance d) {
    switch (d) {
    case Dominance::equal: return "equal";
    case Dominance::strictly_dominated: return "strictly_dominated";
    case Dominance::strictly_dominates: return "strictly_dominates";
    case Dominance::incomparable: return "incomparable";
    }
    return "?";
}

std::string to_string(const UniPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const BigInt& c = p.coeffs()[i];
        if (c == 0) continue;
        if (!first) out << (c < 0 ? " - " : " + ");
        else if (c < 0) out << "-";
        first = false;
        out << BigInt(abs(c)).get_str();
        if (i >= 1) out << "*x";
        if (i >= 2) out << "^" << i;
    }
    return out.str();
}

bool is_independence_polynomial(const UniPoly& p, std::size_t vertex_count) {
    if (p.coeff(0) != 1 || p.coeff(1) != static_cast<unsigned long>(vertex_count)) return false;
    return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const BigInt& c) { return c >= 0; });
}

} // namespace chaincactus
