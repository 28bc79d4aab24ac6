#pragma once

// Places of the rational function field F_q(x) and exact arithmetic on its
// elements. A place is either a monic irreducible polynomial or the
// distinguished infinite place; valuations satisfy the product formula
// sum over P of v_P(u) * deg(P) = 0 for every nonzero u.

#include "polyring.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ffdensity {

/// valuation() of the zero element; larger than every finite valuation.
inline constexpr std::int64_t kValuationInfinity = std::numeric_limits<std::int64_t>::max();

class Place {
public:
    /// Finite place given by a monic irreducible polynomial.
    static Place finite(Poly prime) {
        if (!prime.is_monic() || !is_irreducible(prime))
            throw std::invalid_argument("finite place requires a monic irreducible polynomial");
        return Place(std::move(prime));
    }

    /// The degree-one place at infinity (pole of x).
    static Place infinity(Field field) { return Place(std::move(field)); }

    bool is_infinite() const { return !prime_.has_value(); }
    const Field& field() const { return field_; }

    const Poly& prime() const {
        if (is_infinite()) throw std::domain_error("infinite place has no prime polynomial");
        return *prime_;
    }

    std::int64_t degree() const { return is_infinite() ? 1 : prime_->degree(); }

    friend bool operator==(const Place& a, const Place& b) {
        require_same_field(a.field_, b.field_);
        if (a.is_infinite() != b.is_infinite()) return false;
        return a.is_infinite() || *a.prime_ == *b.prime_;
    }
    friend bool operator!=(const Place& a, const Place& b) { return !(a == b); }

    /// Finite places first (by degree, then coefficient counting order),
    /// the infinite place last; gives deterministic sorted containers.
    friend bool operator<(const Place& a, const Place& b) {
        require_same_field(a.field_, b.field_);
        if (a.is_infinite() || b.is_infinite()) return !a.is_infinite() && b.is_infinite();
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        const auto& ca = a.prime_->coeffs();
        const auto& cb = b.prime_->coeffs();
        for (std::size_t i = ca.size(); i-- > 0;)
            if (ca[i] != cb[i]) return ca[i] < cb[i];
        return false;
    }

private:
    explicit Place(Poly prime) : field_(prime.field()), prime_(std::move(prime)) {}
    explicit Place(Field field) : field_(std::move(field)) {
        if (!field_) throw std::invalid_argument("place requires a field");
    }

    Field field_;
    std::optional<Poly> prime_;
};

/// Element of F_q(x) in lowest terms with monic denominator; zero is 0/1.
class RationalFunction {
public:
    RationalFunction() = default;
    explicit RationalFunction(Poly numerator)
        : num_(std::move(numerator)), den_(Poly::one(num_.field())) {}
    RationalFunction(Poly numerator, Poly denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        require_same_field(num_.field(), den_.field());
        if (den_.is_zero()) throw std::domain_error("zero denominator");
        normalize();
    }

    static RationalFunction zero(const Field& field) { return RationalFunction(Poly(field)); }
    static RationalFunction one(const Field& field) { return RationalFunction(Poly::one(field)); }

    const Poly& numerator() const { return num_; }
    const Poly& denominator() const { return den_; }
    const Field& field() const { return num_.field(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("division by zero rational function");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = Poly::one(den_.field());
            return;
        }
        Poly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        std::uint32_t lead_inv = num_.field()->inv_idx(den_.leading_idx());
        if (lead_inv != 1) {
            num_ = num_.scaled(lead_inv);
            den_ = den_.scaled(lead_inv);
        }
    }

    Poly num_;
    Poly den_;
};

inline RationalFunction inverse(const RationalFunction& u) {
    return RationalFunction::one(u.field()) / u;
}

namespace detail {

/// Exact power of p dividing f (f nonzero).
inline std::int64_t ord_at(const Poly& f, const Poly& p) {
    std::int64_t ord = 0;
    Poly cur = f;
    for (;;) {
        DivModResult dm = divmod(cur, p);
        if (!dm.remainder.is_zero()) return ord;
        cur = std::move(dm.quotient);
        ++ord;
        if (cur.degree() == 0) return ord;
    }
}

}  // namespace detail

/// v_P(u); kValuationInfinity for u = 0. At the infinite place this is
/// deg(denominator) - deg(numerator).
inline std::int64_t valuation(const RationalFunction& u, const Place& P) {
    require_same_field(u.field(), P.field());
    if (u.is_zero()) return kValuationInfinity;
    if (P.is_infinite()) return u.denominator().degree() - u.numerator().degree();
    std::int64_t num_ord = detail::ord_at(u.numerator(), P.prime());
    // representation is in lowest terms, so at most one side is divisible
    if (num_ord > 0) return num_ord;
    return -detail::ord_at(u.denominator(), P.prime());
}

/// Canonical residue representatives of O_P modulo its maximal ideal:
/// polynomials of degree < deg(P) for a finite place, constants at
/// infinity; counting order either way, q^deg(P) entries total.
inline std::vector<RationalFunction> residue_representatives(const Place& P) {
    const Field& field = P.field();
    std::uint32_t d = P.is_infinite() ? 1 : static_cast<std::uint32_t>(P.degree());
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= field->q();
    if (count > (std::uint64_t{1} << 26))
        throw std::domain_error("residue field too large to enumerate");
    std::vector<RationalFunction> out;
    out.reserve(count);
    for (std::uint64_t idx = 0; idx < count; ++idx)
        out.emplace_back(poly_from_counting_index(field, d, idx));
    return out;
}

/// All places of exact degree d outside `excluded`, sorted.
inline std::vector<Place> places_of_degree(const Field& field, std::uint32_t d,
                                           const std::vector<Place>& excluded = {}) {
    std::vector<Place> out;
    auto is_excluded = [&](const Place& P) {
        for (const Place& E : excluded)
            if (E == P) return true;
        return false;
    };
    for (Poly& f : monic_irreducibles(field, d)) {
        Place P = Place::finite(std::move(f));
        if (!is_excluded(P)) out.push_back(std::move(P));
    }
    if (d == 1) {
        Place inf = Place::infinity(field);
        if (!is_excluded(inf)) out.push_back(std::move(inf));
    }
    return out;
}

/// Count of places of degree d outside `excluded` via the Moebius count of
/// monic irreducibles; never enumerates.
inline BigInt count_places_of_degree(const Field& field, std::uint32_t d,
                                     const std::vector<Place>& excluded = {}) {
    if (d < 1) throw std::invalid_argument("place degree must be >= 1");
    BigInt total = count_monic_irreducibles(field->q(), d);
    if (d == 1) total += 1;  // the infinite place
    for (const Place& E : excluded) {
        require_same_field(field, E.field());
        if (E.degree() == static_cast<std::int64_t>(d)) total -= 1;
    }
    if (total < 0) throw std::invalid_argument("excluded places are not distinct");
    return total;
}

}  // namespace ffdensity
