#pragma once

// Exact arbitrary-precision rational arithmetic used for every density,
// measure and zeta value, plus directed-rounding helpers for truncated
// Euler products whose fully expanded exact form would be astronomically
// large (the bounds stay exact rationals; only their precision is capped).

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ffdensity {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Thrown when an exact rational result would exceed a size cap; callers
/// should switch to the certified-bounds variant of the operation.
class PrecisionOverflow : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline BigInt numerator(const BigRational& x) { return boost::multiprecision::numerator(x); }
inline BigInt denominator(const BigRational& x) { return boost::multiprecision::denominator(x); }

/// "num/den" in lowest terms, denominator always spelled out ("2/1").
inline std::string to_fraction_string(const BigRational& x) {
    return numerator(x).str() + "/" + denominator(x).str();
}

/// Accepts "num/den" or a bare integer.
inline BigRational parse_fraction(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return BigRational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return BigRational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: '" + text + "'");
    }
}

inline double approx(const BigRational& x) { return static_cast<double>(x); }

inline BigInt pow_big(const BigInt& base, std::uint64_t e) {
    BigInt r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline BigRational pow_rational(const BigRational& base, std::uint64_t e) {
    BigRational r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline std::size_t bit_size(const BigInt& x) {
    return x == 0 ? 1 : boost::multiprecision::msb(abs(x)) + 1;
}

inline std::size_t bit_size(const BigRational& x) {
    return bit_size(numerator(x)) + bit_size(denominator(x));
}

/// Largest dyadic p/2^bits <= x (x >= 0).
inline BigRational round_down(const BigRational& x, unsigned bits) {
    BigInt scaled = (numerator(x) << bits) / denominator(x);  // floor, x >= 0
    return BigRational(scaled, BigInt(1) << bits);
}

/// Smallest dyadic p/2^bits >= x (x >= 0).
inline BigRational round_up(const BigRational& x, unsigned bits) {
    BigInt num = numerator(x) << bits;
    BigInt scaled = num / denominator(x);
    if (scaled * denominator(x) != num) ++scaled;
    return BigRational(scaled, BigInt(1) << bits);
}

/// Certified enclosure of a nonnegative rational quantity. `exact` means
/// lower == upper == the true value.
struct RationalBounds {
    BigRational lower;
    BigRational upper;
    bool exact = false;

    static RationalBounds of(const BigRational& v) { return {v, v, true}; }

    RationalBounds operator*(const RationalBounds& o) const {
        return {lower * o.lower, upper * o.upper, exact && o.exact};
    }

    void shrink(unsigned bits) {
        lower = round_down(lower, bits);
        upper = round_up(upper, bits);
        exact = false;
    }

    BigRational width() const { return upper - lower; }
};

/// base^e with directed rounding to `bits` after every multiply; base > 0.
inline RationalBounds pow_with_bounds(const BigRational& base, BigInt e, unsigned bits) {
    if (base <= 0) throw std::domain_error("pow_with_bounds requires a positive base");
    RationalBounds acc = RationalBounds::of(BigRational(1));
    RationalBounds sq = RationalBounds::of(base);
    sq.shrink(bits);
    while (e > 0) {
        if (boost::multiprecision::bit_test(e, 0)) {
            acc = acc * sq;
            acc.shrink(bits);
        }
        e >>= 1;
        if (e > 0) {
            sq = sq * sq;
            sq.shrink(bits);
        }
    }
    return acc;
}

/// Evaluates a product of factor^exponent terms. Stays exact while the
/// projected value fits in `exact_bit_cap` bits; beyond that the running
/// value becomes a certified enclosure rounded to `prec_bits` bits after
/// each multiply, so the final width is tiny compared to every tolerance
/// used in this library.
class ProductAccumulator {
public:
    explicit ProductAccumulator(std::size_t exact_bit_cap = std::size_t{1} << 16,
                                unsigned prec_bits = 320)
        : cap_(exact_bit_cap), prec_(prec_bits) {}

    void multiply_power(const BigRational& factor, const BigInt& exponent) {
        if (factor <= 0) throw std::domain_error("product factors must be positive");
        if (exponent < 0) throw std::invalid_argument("exponent must be nonnegative");
        if (exponent == 0) return;
        if (exact_mode_) {
            BigInt projected = BigInt(bit_size(exact_)) + exponent * BigInt(bit_size(factor));
            if (projected <= cap_) {
                exact_ *= pow_rational(factor, static_cast<std::uint64_t>(exponent));
                return;
            }
            bounds_ = RationalBounds::of(exact_);
            bounds_.shrink(prec_);
            exact_mode_ = false;
        }
        bounds_ = bounds_ * pow_with_bounds(factor, exponent, prec_);
        bounds_.shrink(prec_);
    }

    RationalBounds result() const {
        if (exact_mode_) return RationalBounds::of(exact_);
        return bounds_;
    }

private:
    std::size_t cap_;
    unsigned prec_;
    bool exact_mode_ = true;
    BigRational exact_ = 1;
    RationalBounds bounds_ = RationalBounds::of(BigRational(1));
};

}  // namespace ffdensity
