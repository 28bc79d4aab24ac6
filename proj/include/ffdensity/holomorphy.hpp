#pragma once

// Holomorphy rings of F_q(x): the intersection of all valuation rings O_P
// for P outside a finite nonempty excluded set T, together with effective
// divisors supported on T and the finite-dimensional boxes they carve out
// of the ring (exact enumeration below a cap, counter-based sampling above).

#include "places.hpp"
#include "rng.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ffdensity {

/// Thrown when an exact enumeration would exceed the configured cap; the
/// message points the caller at sampled mode instead.
class BoxTooLarge : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Ring of functions with no poles outside the excluded place set.
class HolomorphySpec {
public:
    HolomorphySpec(Field field, std::vector<Place> excluded)
        : field_(std::move(field)), excluded_(std::move(excluded)) {
        if (!field_) throw std::invalid_argument("holomorphy ring requires a field");
        if (excluded_.empty())
            throw std::invalid_argument("excluded place set must be nonempty");
        for (const Place& P : excluded_) require_same_field(field_, P.field());
        std::sort(excluded_.begin(), excluded_.end());
        excluded_.erase(std::unique(excluded_.begin(), excluded_.end()), excluded_.end());
    }

    /// F_q[x] itself: exactly the infinite place excluded.
    static HolomorphySpec polynomial_ring(Field field) {
        Place inf = Place::infinity(field);
        return HolomorphySpec(std::move(field), {std::move(inf)});
    }

    const Field& field() const { return field_; }
    const std::vector<Place>& excluded_places() const { return excluded_; }

    bool is_excluded(const Place& P) const {
        for (const Place& E : excluded_)
            if (E == P) return true;
        return false;
    }

    bool excludes_infinity() const { return excluded_.back().is_infinite(); }

    /// Places of the ring (degree d, excluded set removed), sorted.
    std::vector<Place> ring_places_of_degree(std::uint32_t d) const {
        return places_of_degree(field_, d, excluded_);
    }

    BigInt count_ring_places_of_degree(std::uint32_t d) const {
        return count_places_of_degree(field_, d, excluded_);
    }

    friend bool operator==(const HolomorphySpec& a, const HolomorphySpec& b) {
        if (!a.field_->same_as(*b.field_) || a.excluded_.size() != b.excluded_.size())
            return false;
        for (std::size_t i = 0; i < a.excluded_.size(); ++i)
            if (!(a.excluded_[i] == b.excluded_[i])) return false;
        return true;
    }

private:
    Field field_;
    std::vector<Place> excluded_;
};

/// Membership test: u has no pole at any place outside the excluded set.
/// Strips excluded prime factors from the denominator and checks what is
/// left, so no factorization is ever needed.
inline bool in_holomorphy_ring(const RationalFunction& u, const HolomorphySpec& spec) {
    require_same_field(u.field(), spec.field());
    if (u.is_zero()) return true;
    Poly den = u.denominator();
    for (const Place& R : spec.excluded_places()) {
        if (R.is_infinite()) continue;
        for (;;) {
            DivModResult dm = divmod(den, R.prime());
            if (!dm.remainder.is_zero()) break;
            den = std::move(dm.quotient);
        }
    }
    if (den.degree() > 0) return false;  // leftover pole at a ring place
    if (!spec.excludes_infinity() &&
        u.numerator().degree() > u.denominator().degree())
        return false;
    return true;
}

/// Effective divisor supported on the excluded set of a holomorphy ring.
class Divisor {
public:
    Divisor(const HolomorphySpec& spec, std::vector<std::pair<Place, std::int64_t>> terms) {
        for (auto& [place, mult] : terms) {
            if (mult < 0) throw std::invalid_argument("divisor multiplicities must be >= 0");
            if (!spec.is_excluded(place))
                throw std::invalid_argument("divisor must be supported on the excluded places");
            if (mult > 0) terms_.emplace_back(place, mult);
        }
        std::sort(terms_.begin(), terms_.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t i = 1; i < terms_.size(); ++i)
            if (terms_[i].first == terms_[i - 1].first)
                throw std::invalid_argument("divisor has a repeated place");
    }

    static Divisor zero(const HolomorphySpec& spec) { return Divisor(spec, {}); }

    /// j * (sum of all excluded places); the default chain evaluates this
    /// at j = 0, 1, 2, ...
    static Divisor uniform(const HolomorphySpec& spec, std::int64_t j) {
        std::vector<std::pair<Place, std::int64_t>> terms;
        for (const Place& R : spec.excluded_places()) terms.emplace_back(R, j);
        return Divisor(spec, std::move(terms));
    }

    const std::vector<std::pair<Place, std::int64_t>>& terms() const { return terms_; }

    std::int64_t multiplicity(const Place& P) const {
        for (const auto& [place, mult] : terms_)
            if (place == P) return mult;
        return 0;
    }

    std::int64_t degree() const {
        std::int64_t d = 0;
        for (const auto& [place, mult] : terms_) d += mult * place.degree();
        return d;
    }

    friend bool operator==(const Divisor& a, const Divisor& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (!(a.terms_[i].first == b.terms_[i].first) ||
                a.terms_[i].second != b.terms_[i].second)
                return false;
        return true;
    }

    /// Componentwise comparison of multiplicities (partial order).
    friend bool divisor_leq(const Divisor& a, const Divisor& b) {
        for (const auto& [place, mult] : a.terms_)
            if (mult > b.multiplicity(place)) return false;
        return true;
    }

private:
    std::vector<std::pair<Place, std::int64_t>> terms_;
};

/// Basis of the space of ring elements dominated by D: with den the product
/// of the finite excluded primes to their multiplicities in D, the basis is
/// x^j / den for j = 0..deg(D). Dimension deg(D) + 1 (genus-zero count).
inline std::vector<RationalFunction> riemann_roch_basis(const HolomorphySpec& spec,
                                                        const Divisor& D) {
    const Field& field = spec.field();
    Poly den = Poly::one(field);
    for (const auto& [place, mult] : D.terms()) {
        if (place.is_infinite()) continue;
        for (std::int64_t i = 0; i < mult; ++i) den = den * place.prime();
    }
    std::vector<RationalFunction> basis;
    const std::int64_t dim = D.degree() + 1;
    basis.reserve(static_cast<std::size_t>(dim));
    for (std::int64_t j = 0; j < dim; ++j)
        basis.emplace_back(Poly::monomial(field, static_cast<std::uint64_t>(j), 1), den);
    return basis;
}

/// Enumeration cap for exact box scans: FFDENSITY_MAX_ENUM if set, else 2^22.
inline std::uint64_t default_enum_cap() {
    if (const char* env = std::getenv("FFDENSITY_MAX_ENUM")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw std::invalid_argument("FFDENSITY_MAX_ENUM must be a positive integer");
    }
    return std::uint64_t{1} << 22;
}

/// The q^(deg D + 1) ring elements dominated by D, addressable by counting
/// index (coefficient of basis element 0 varies fastest) and samplable via
/// the counter RNG; restartable and cheap to copy. Exploits the shared
/// denominator of the basis: an element is just (digit polynomial) / den.
class RiemannRochBox {
public:
    RiemannRochBox(const HolomorphySpec& spec, const Divisor& D)
        : field_(spec.field()), basis_(riemann_roch_basis(spec, D)),
          den_(basis_.front().denominator()) {}

    const Field& field() const { return field_; }
    const std::vector<RationalFunction>& basis() const { return basis_; }
    std::size_t dimension() const { return basis_.size(); }

    BigInt size() const { return pow_big(BigInt(field_->q()), basis_.size()); }

    bool size_fits(std::uint64_t cap) const {
        return size() <= BigInt(cap);
    }

    /// Element with base-q digits of `index` as basis coefficients.
    RationalFunction element(std::uint64_t index) const {
        const std::uint32_t q = field_->q();
        std::vector<std::uint32_t> digits(basis_.size(), 0);
        for (auto& d : digits) {
            d = static_cast<std::uint32_t>(index % q);
            index /= q;
        }
        if (index != 0) throw std::invalid_argument("box index out of range");
        return RationalFunction(Poly(field_, std::move(digits)), den_);
    }

    /// Uniform draw determined entirely by (rng seed, index); independent
    /// draws use distinct indices.
    RationalFunction sample(const CounterRng& rng, std::uint64_t index) const {
        const std::uint32_t q = field_->q();
        std::vector<std::uint32_t> digits(basis_.size(), 0);
        for (std::size_t j = 0; j < digits.size(); ++j) {
            std::uint64_t stream = index * (std::uint64_t{1} << 20) + j;
            digits[j] = rng.below(q, stream, 0);
        }
        return RationalFunction(Poly(field_, std::move(digits)), den_);
    }

private:
    Field field_;
    std::vector<RationalFunction> basis_;
    Poly den_;
};

/// Materializes the whole box; throws BoxTooLarge past `cap` elements.
inline std::vector<RationalFunction> enumerate_box(const HolomorphySpec& spec, const Divisor& D,
                                                   std::uint64_t cap = default_enum_cap()) {
    RiemannRochBox box(spec, D);
    if (!box.size_fits(cap))
        throw BoxTooLarge("box holds " + box.size().str() + " elements, over the cap of " +
                          std::to_string(cap) + "; use sampled mode instead");
    const std::uint64_t n = static_cast<std::uint64_t>(box.size());
    std::vector<RationalFunction> out;
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(box.element(i));
    return out;
}

/// Single reproducible draw; sample i of a run should pass index = i.
inline RationalFunction sample_box(const HolomorphySpec& spec, const Divisor& D,
                                   std::uint64_t seed, std::uint64_t index) {
    return RiemannRochBox(spec, D).sample(CounterRng(seed), index);
}

}  // namespace ffdensity
