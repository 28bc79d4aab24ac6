#pragma once

// Zeta values of global function fields at integer arguments s >= 2, both
// the closed form through the L-polynomial and Euler products over places,
// restricted to a holomorphy ring by dropping the excluded local factors.
// Truncated Euler products come with certified enclosures since their
// exact rational values quickly outgrow any reasonable bit budget.

#include "holomorphy.hpp"
#include "rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ffdensity {

/// Numerator polynomial of a function-field zeta, coefficients ascending.
/// Constant term 1 and even degree 2 * genus; the rational function field
/// itself has the trivial polynomial [1].
class LPolynomial {
public:
    explicit LPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
        while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
        if (coeffs_.empty() || coeffs_[0] != 1)
            throw std::invalid_argument("L-polynomial must have constant term 1");
        if (coeffs_.size() % 2 == 0)
            throw std::invalid_argument("L-polynomial must have even degree (2 * genus)");
    }

    static LPolynomial trivial() { return LPolynomial({BigInt(1)}); }

    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    std::uint32_t genus() const { return static_cast<std::uint32_t>((coeffs_.size() - 1) / 2); }

    BigRational eval(const BigRational& x) const {
        BigRational acc = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    friend bool operator==(const LPolynomial& a, const LPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<BigInt> coeffs_;
};

/// Zeta value of the full function field with numerator L at integer
/// s >= 2: L(q^-s) / ((1 - q^-s)(1 - q^(1-s))).
inline BigRational zeta_field(std::uint64_t q, std::uint32_t s, const LPolynomial& L) {
    if (q < 2) throw std::invalid_argument("field size must be >= 2");
    if (s < 2) throw std::domain_error("zeta is evaluated at integer s >= 2 only");
    const BigRational qs(1, pow_big(BigInt(q), s));
    const BigRational qs1(BigInt(q), pow_big(BigInt(q), s));  // q^(1-s)
    return L.eval(qs) / ((1 - qs) * (1 - qs1));
}

/// Zeta of a holomorphy ring: the field zeta with the Euler factors of the
/// excluded places removed, i.e. multiplied by (1 - q^(-s deg R)).
inline BigRational zeta_ring(const HolomorphySpec& spec, std::uint32_t s,
                             const LPolynomial& L = LPolynomial::trivial()) {
    BigRational z = zeta_field(spec.field()->q(), s, L);
    for (const Place& R : spec.excluded_places()) {
        const BigInt qds = pow_big(BigInt(spec.field()->q()),
                                   static_cast<std::uint64_t>(R.degree()) * s);
        z *= 1 - BigRational(1, qds);
    }
    return z;
}

/// Partial Euler product over ring places of degree <= t,
/// prod (1 - q^(-s d))^(-N_d) with N_d the Moebius place count. Converges
/// to zeta_ring with the trivial L-polynomial from below as t grows.
inline RationalBounds zeta_ring_truncated_bounds(const HolomorphySpec& spec, std::uint32_t s,
                                                 std::uint32_t t,
                                                 std::size_t exact_bit_cap = std::size_t{1} << 16) {
    if (s < 2) throw std::domain_error("zeta is evaluated at integer s >= 2 only");
    ProductAccumulator acc(exact_bit_cap);
    for (std::uint32_t d = 1; d <= t; ++d) {
        const BigInt places = spec.count_ring_places_of_degree(d);
        if (places == 0) continue;
        const BigInt qds = pow_big(BigInt(spec.field()->q()), std::uint64_t{d} * s);
        acc.multiply_power(BigRational(qds, qds - 1), places);
    }
    return acc.result();
}

/// Exact truncated Euler product; PrecisionOverflow when too large to hold
/// exactly (the bounds variant always works).
inline BigRational zeta_ring_truncated(const HolomorphySpec& spec, std::uint32_t s,
                                       std::uint32_t t,
                                       std::size_t exact_bit_cap = std::size_t{1} << 16) {
    RationalBounds b = zeta_ring_truncated_bounds(spec, s, t, exact_bit_cap);
    if (!b.exact)
        throw PrecisionOverflow(
            "exact truncated zeta exceeds the bit cap; use zeta_ring_truncated_bounds");
    return b.lower;
}

}  // namespace ffdensity
