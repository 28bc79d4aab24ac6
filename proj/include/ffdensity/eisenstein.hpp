#pragma once

// Eisenstein-type local conditions for degree-n ramified covers of the line:
// shifted Eisenstein sets, their finite shift-representative scan, the
// inversion branch, exact local measures (closed form and residue-ring
// brute force), and truncated products approximating the density of
// polynomials cut out by these conditions.

#include "holomorphy.hpp"
#include "rational.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ffdensity {

/// Univariate polynomial in an auxiliary variable Y with coefficients in
/// F_q(x); coefficient i is the Y^i coefficient. Degree >= 1 and the
/// leading coefficient is nonzero (constructors reject anything else).
class PolyOverField {
public:
    explicit PolyOverField(std::vector<RationalFunction> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.size() < 2)
            throw std::invalid_argument("polynomial must have degree >= 1");
        for (const RationalFunction& c : coeffs_) require_same_field(c.field(), coeffs_[0].field());
        if (coeffs_.back().is_zero())
            throw std::invalid_argument("leading coefficient must be nonzero");
    }

    const Field& field() const { return coeffs_[0].field(); }
    std::size_t degree() const { return coeffs_.size() - 1; }
    const RationalFunction& coeff(std::size_t i) const { return coeffs_.at(i); }
    const std::vector<RationalFunction>& coeffs() const { return coeffs_; }

    friend bool operator==(const PolyOverField& a, const PolyOverField& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const PolyOverField& a, const PolyOverField& b) { return !(a == b); }

private:
    std::vector<RationalFunction> coeffs_;
};

namespace detail {

/// Taylor shift: returns the coefficients of f(Y + a).
inline std::vector<RationalFunction> shift_coeffs(std::vector<RationalFunction> c,
                                                  const RationalFunction& a) {
    const std::size_t n = c.size() - 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = n - 1; j + 1 > i; --j) c[j] = c[j] + c[j + 1] * a;
    return c;
}

inline bool eisenstein_coeffs(const std::vector<RationalFunction>& c, const Place& P) {
    const std::size_t n = c.size() - 1;
    if (valuation(c[n], P) != 0) return false;
    if (valuation(c[0], P) != 1) return false;
    for (std::size_t i = 1; i < n; ++i)
        if (valuation(c[i], P) < 1) return false;
    return true;
}

/// Arithmetic in O_P / P^2 for a place P, with elements stored as
/// polynomials of degree < 2 deg(P). Valuations at P truncate to
/// {0, 1, >=2}, which is exactly the information the Eisenstein-type
/// conditions consume, so scans can stay in this finite ring. The
/// infinite place goes through its isomorphic degree-one model (the ring
/// at the place (x), with 1/x playing the uniformizer).
struct ModSquareRing {
    explicit ModSquareRing(const Place& P)
        : prime(P.is_infinite() ? Poly::x(P.field()) : P.prime()),
          square(prime * prime),
          d(static_cast<std::uint32_t>(prime.degree())) {}

    Poly mul(const Poly& a, const Poly& b) const { return (a * b) % square; }

    /// Truncated valuation of a reduced element: 0, 1, or 2 (meaning >= 2).
    int val(const Poly& g) const {
        if (g.is_zero()) return 2;
        return (g % prime).is_zero() ? 1 : 0;
    }

    Poly prime;
    Poly square;
    std::uint32_t d;
};

inline bool ring_eisenstein(const std::vector<Poly>& c, const ModSquareRing& R) {
    const std::size_t n = c.size() - 1;
    if (R.val(c[n]) != 0) return false;
    if (R.val(c[0]) != 1) return false;
    for (std::size_t i = 1; i < n; ++i)
        if (R.val(c[i]) < 1) return false;
    return true;
}

inline std::vector<Poly> ring_shift(std::vector<Poly> c, const Poly& a, const ModSquareRing& R) {
    const std::size_t n = c.size() - 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = n - 1; j + 1 > i; --j) c[j] = c[j] + R.mul(c[j + 1], a);
    return c;
}

/// Shift-branch scan in the residue ring; returns the index of the unique
/// working representative, or none. c must be reduced mod P^2.
inline std::optional<std::uint64_t> ring_witness_index(const std::vector<Poly>& c,
                                                       const ModSquareRing& R) {
    if (R.val(c.back()) != 0) return std::nullopt;  // shifts keep the leading coefficient
    const Field& field = R.prime.field();
    std::uint64_t reps = 1;
    for (std::uint32_t i = 0; i < R.d; ++i) reps *= field->q();
    // mod-P images for the cheap "constant term of the shift is f(a)" filter
    std::vector<Poly> cbar;
    cbar.reserve(c.size());
    for (const Poly& g : c) cbar.push_back(g % R.prime);
    for (std::uint64_t idx = 0; idx < reps; ++idx) {
        Poly a = poly_from_counting_index(field, R.d, idx);
        Poly acc(field);
        for (std::size_t i = cbar.size(); i-- > 0;) acc = (acc * a + cbar[i]) % R.prime;
        if (!acc.is_zero()) continue;  // shift constant term would be a unit
        if (ring_eisenstein(ring_shift(c, a, R), R)) return idx;
    }
    return std::nullopt;
}

/// True when every coefficient lies in O_P, i.e. the residue-ring fast
/// path is valid.
inline bool coeffs_integral_at(const std::vector<RationalFunction>& c, const Place& P) {
    for (const RationalFunction& u : c)
        if (!u.is_zero() && valuation(u, P) < 0) return false;
    return true;
}

/// Image of an O_P element in O_P / P^2: finite places clear the (unit)
/// denominator inside the ring; the infinite place expands in the local
/// coordinate u = 1/x to first order.
inline Poly project_mod_square(const RationalFunction& u, const Place& P,
                               const ModSquareRing& R) {
    const Field& field = u.field();
    if (u.is_zero()) return Poly(field);
    if (!P.is_infinite()) {
        Poly num = u.numerator() % R.square;
        Poly den = u.denominator() % R.square;
        // extended Euclid against square: den * inv = 1 (mod P^2)
        Poly r0 = R.square, r1 = den;
        Poly s0 = Poly(field), s1 = Poly::one(field);
        while (!r1.is_zero()) {
            DivModResult dm = divmod(r0, r1);
            Poly s2 = s0 - dm.quotient * s1;
            r0 = std::move(r1);
            r1 = std::move(dm.remainder);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        // r0 = gcd is a nonzero constant since den is a unit mod P^2
        Poly inv = s0.scaled(field->inv_idx(r0.coeff_idx(0)));
        return R.mul(num, inv);
    }
    // u = n(x)/d(x) with deg n <= deg d; writing u0 = 1/x and rev for
    // coefficient reversal, u = u0^(deg d - deg n) * rev(n)(u0)/rev(d)(u0);
    // expand to first order in u0.
    const Poly& num = u.numerator();
    const Poly& den = u.denominator();
    std::int64_t gap = den.degree() - num.degree();
    if (gap >= 2) return Poly(field);
    const FieldSpec& F = *field;
    auto top = [&](const Poly& f, int back) {
        std::int64_t i = f.degree() - back;
        return i < 0 ? 0u : f.coeff_idx(static_cast<std::size_t>(i));
    };
    std::uint32_t n0 = top(num, 0), n1 = top(num, 1);
    std::uint32_t d0 = top(den, 0), d1 = top(den, 1);
    // (n0 + n1 u0)/(d0 + d1 u0) = n0/d0 + (n1 d0 - n0 d1)/d0^2 u0 + O(u0^2)
    std::uint32_t c0 = F.div_idx(n0, d0);
    std::uint32_t c1 = F.div_idx(F.sub_idx(F.mul_idx(n1, d0), F.mul_idx(n0, d1)),
                                 F.mul_idx(d0, d0));
    if (gap == 1) return Poly(field, {0, c0});  // value is c0 * u0 + O(u0^2)
    return Poly(field, {c0, c1});
}

}  // namespace detail

/// Per-place membership engine for the nicely-ramified local set. Builds
/// the residue-ring tables once, so scanning many coefficient tuples at a
/// fixed place is cheap; coefficient tuples with a pole at the place fall
/// back to exact valuation arithmetic. Tuples are (a_0, ..., a_n) with
/// n >= 1; the leading entry may be zero (such tuples are never members).
class LocalRamificationChecker {
public:
    explicit LocalRamificationChecker(Place P) : place_(std::move(P)), ring_(place_) {}

    const Place& place() const { return place_; }

    /// Representative a from the canonical residue list making
    /// f(Y + a) Eisenstein at the place, if any; at most one exists.
    std::optional<RationalFunction> shift_witness(
        const std::vector<RationalFunction>& coeffs) const {
        validate(coeffs);
        if (detail::coeffs_integral_at(coeffs, place_)) {
            if (auto idx = detail::ring_witness_index(project(coeffs), ring_))
                return RationalFunction(
                    poly_from_counting_index(place_.field(), ring_.d, *idx));
            return std::nullopt;
        }
        if (valuation(coeffs.back(), place_) != 0) return std::nullopt;
        for (const RationalFunction& a : residue_representatives(place_))
            if (detail::eisenstein_coeffs(detail::shift_coeffs(coeffs, a), place_)) return a;
        return std::nullopt;
    }

    /// Inversion branch: the reversed coefficient tuple is Eisenstein.
    bool inversion_member(const std::vector<RationalFunction>& coeffs) const {
        validate(coeffs);
        if (detail::coeffs_integral_at(coeffs, place_)) {
            std::vector<Poly> c = project(coeffs);
            std::vector<Poly> rev(c.rbegin(), c.rend());
            return detail::ring_eisenstein(rev, ring_);
        }
        std::vector<RationalFunction> rev(coeffs.rbegin(), coeffs.rend());
        return detail::eisenstein_coeffs(rev, place_);
    }

    /// Full membership: some shift is Eisenstein, or the reversal is.
    bool contains(const std::vector<RationalFunction>& coeffs) const {
        validate(coeffs);
        if (detail::coeffs_integral_at(coeffs, place_)) {
            std::vector<Poly> c = project(coeffs);
            if (detail::ring_witness_index(c, ring_)) return true;
            std::vector<Poly> rev(c.rbegin(), c.rend());
            return detail::ring_eisenstein(rev, ring_);
        }
        if (shift_witness(coeffs)) return true;
        std::vector<RationalFunction> rev(coeffs.rbegin(), coeffs.rend());
        return detail::eisenstein_coeffs(rev, place_);
    }

private:
    void validate(const std::vector<RationalFunction>& coeffs) const {
        if (coeffs.size() < 2)
            throw std::invalid_argument("coefficient tuple must have length >= 2");
        require_same_field(coeffs[0].field(), place_.field());
    }

    std::vector<Poly> project(const std::vector<RationalFunction>& coeffs) const {
        std::vector<Poly> c;
        c.reserve(coeffs.size());
        for (const RationalFunction& u : coeffs)
            c.push_back(detail::project_mod_square(u, place_, ring_));
        return c;
    }

    Place place_;
    detail::ModSquareRing ring_;
};

/// Eisenstein at P: unit leading coefficient, middle coefficients in the
/// maximal ideal, constant coefficient of valuation exactly one.
inline bool is_eisenstein(const PolyOverField& f, const Place& P) {
    require_same_field(f.field(), P.field());
    return detail::eisenstein_coeffs(f.coeffs(), P);
}

/// f(Y + a).
inline PolyOverField shift(const PolyOverField& f, const RationalFunction& a) {
    require_same_field(f.field(), a.field());
    return PolyOverField(detail::shift_coeffs(f.coeffs(), a));
}

/// Y^n f(1/Y): coefficient reversal. Requires a nonzero constant term so
/// the degree is preserved; then the map is an involution.
inline PolyOverField invert(const PolyOverField& f) {
    if (f.coeff(0).is_zero())
        throw std::invalid_argument("inversion requires a nonzero constant coefficient");
    std::vector<RationalFunction> rev(f.coeffs().rbegin(), f.coeffs().rend());
    return PolyOverField(std::move(rev));
}

/// g(Y) = sum_i a_i (hY + s)^i (lY + j)^(n-i), the degree-n action of the
/// matrix [[h, s], [l, j]]; requires hj - sl != 0. Shift is (h,s,l,j) =
/// (1, a, 0, 1) and inversion is (0, 1, 1, 0).
inline PolyOverField moebius_transform(const PolyOverField& f, const RationalFunction& h,
                                       const RationalFunction& s, const RationalFunction& l,
                                       const RationalFunction& j) {
    const Field& field = f.field();
    require_same_field(field, h.field());
    require_same_field(field, s.field());
    require_same_field(field, l.field());
    require_same_field(field, j.field());
    if ((h * j - s * l).is_zero())
        throw std::invalid_argument("moebius transform requires an invertible matrix");
    const std::size_t n = f.degree();
    auto mul = [&](const std::vector<RationalFunction>& a, const std::vector<RationalFunction>& b) {
        std::vector<RationalFunction> r(a.size() + b.size() - 1, RationalFunction::zero(field));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t k = 0; k < b.size(); ++k) r[i + k] = r[i + k] + a[i] * b[k];
        return r;
    };
    // powers of (hY + s) and (lY + j)
    std::vector<std::vector<RationalFunction>> top(n + 1), bottom(n + 1);
    top[0] = {RationalFunction::one(field)};
    bottom[0] = {RationalFunction::one(field)};
    const std::vector<RationalFunction> hy = {s, h};
    const std::vector<RationalFunction> ly = {j, l};
    for (std::size_t i = 1; i <= n; ++i) {
        top[i] = mul(top[i - 1], hy);
        bottom[i] = mul(bottom[i - 1], ly);
    }
    std::vector<RationalFunction> out(n + 1, RationalFunction::zero(field));
    for (std::size_t i = 0; i <= n; ++i) {
        if (f.coeff(i).is_zero()) continue;
        std::vector<RationalFunction> term = mul(top[i], bottom[n - i]);
        for (std::size_t k = 0; k < out.size() && k < term.size(); ++k)
            out[k] = out[k] + f.coeff(i) * term[k];
    }
    if (out.back().is_zero())
        throw std::domain_error("moebius transform degenerates: resulting degree drops");
    return PolyOverField(std::move(out));
}

/// Witness scan on a polynomial (or raw coefficient tuple, leading entry
/// allowed to be zero there).
inline std::optional<RationalFunction> shifted_eisenstein_witness(const PolyOverField& f,
                                                                  const Place& P) {
    return LocalRamificationChecker(P).shift_witness(f.coeffs());
}
inline std::optional<RationalFunction> shifted_eisenstein_witness(
    const std::vector<RationalFunction>& coeffs, const Place& P) {
    return LocalRamificationChecker(P).shift_witness(coeffs);
}

/// Membership in the local nicely-ramified set at P: some shift of f is
/// Eisenstein, or the coefficient reversal of f is.
inline bool is_nicely_ramified_at(const PolyOverField& f, const Place& P) {
    return LocalRamificationChecker(P).contains(f.coeffs());
}
inline bool is_nicely_ramified_at(const std::vector<RationalFunction>& coeffs, const Place& P) {
    return LocalRamificationChecker(P).contains(coeffs);
}

struct RamifiedPlaceHit {
    Place place;
    bool via_inversion;
    std::optional<RationalFunction> shift_witness;  // set on the shift branch
};

/// All ring places of degree <= t where f is nicely ramified, with the
/// branch that certifies each hit (shift branch reported when both apply).
inline std::vector<RamifiedPlaceHit> nicely_ramified_places(const PolyOverField& f,
                                                            const HolomorphySpec& spec,
                                                            std::uint32_t t) {
    require_same_field(f.field(), spec.field());
    std::vector<RamifiedPlaceHit> out;
    for (std::uint32_t d = 1; d <= t; ++d) {
        for (const Place& P : spec.ring_places_of_degree(d)) {
            LocalRamificationChecker checker(P);
            if (auto w = checker.shift_witness(f.coeffs())) {
                out.push_back({P, false, std::move(w)});
                continue;
            }
            if (checker.inversion_member(f.coeffs()))
                out.push_back({P, true, std::nullopt});
        }
    }
    return out;
}

/// Exact measure of the local nicely-ramified set for degree-n polynomials
/// at a place of degree d: (q^d - 1)^2 (q^d + 1) / q^(d(n+2)).
inline BigRational local_ramified_measure(const Place& P, std::uint32_t n) {
    if (n < 2) throw std::invalid_argument("local measure requires degree n >= 2");
    const BigInt qd = pow_big(BigInt(P.field()->q()), static_cast<std::uint64_t>(P.degree()));
    const BigInt num = (qd - 1) * (qd - 1) * (qd + 1);
    const BigInt den = pow_big(BigInt(P.field()->q()),
                               static_cast<std::uint64_t>(P.degree()) * (n + 2));
    return BigRational(num, den);
}

/// Same measure by exhausting (O_P / P^2)^(n+1); membership only depends
/// on coefficients mod P^2, so this is an exact independent count.
inline BigRational local_ramified_measure_bruteforce(const Place& P, std::uint32_t n,
                                                     std::uint64_t cap = default_enum_cap()) {
    if (n < 2) throw std::invalid_argument("local measure requires degree n >= 2");
    const Field& field = P.field();
    detail::ModSquareRing R(P);
    const std::uint64_t ring_size =
        pow_big(BigInt(field->q()), 2 * R.d).convert_to<std::uint64_t>();
    BigInt total_big = pow_big(BigInt(ring_size), n + 1);
    if (total_big > BigInt(cap))
        throw BoxTooLarge("residue scan needs " + total_big.str() +
                          " tuples, over the cap of " + std::to_string(cap));
    const std::uint64_t total = total_big.convert_to<std::uint64_t>();
    std::vector<Poly> ring_elems;
    ring_elems.reserve(ring_size);
    for (std::uint64_t i = 0; i < ring_size; ++i)
        ring_elems.push_back(poly_from_counting_index(field, 2 * R.d, i));
    std::uint64_t hits = 0;
    std::vector<Poly> c(n + 1, Poly(field));
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t v = idx;
        for (std::uint32_t i = 0; i <= n; ++i) {
            c[i] = ring_elems[v % ring_size];
            v /= ring_size;
        }
        bool inside = detail::ring_witness_index(c, R).has_value();
        if (!inside) {
            std::vector<Poly> rev(c.rbegin(), c.rend());
            inside = detail::ring_eisenstein(rev, R);
        }
        if (inside) ++hits;
    }
    return BigRational(BigInt(hits), total_big);
}

/// Truncated product bounds: the probability that a degree-n polynomial is
/// nicely ramified at some ring place of degree <= t is
/// 1 - prod over those places of (1 - local measure). Exact while the
/// rational fits the bit cap, certified dyadic enclosure beyond.
inline RationalBounds ramified_density_truncated_bounds(
    const HolomorphySpec& spec, std::uint32_t n, std::uint32_t t,
    std::size_t exact_bit_cap = std::size_t{1} << 16) {
    if (n < 2) throw std::invalid_argument("ramified density requires degree n >= 2");
    ProductAccumulator acc(exact_bit_cap);
    for (std::uint32_t d = 1; d <= t; ++d) {
        const BigInt places = spec.count_ring_places_of_degree(d);
        if (places == 0) continue;
        const BigInt qd = pow_big(BigInt(spec.field()->q()), d);
        const BigInt den = pow_big(BigInt(spec.field()->q()), std::uint64_t{d} * (n + 2));
        const BigRational mu((qd - 1) * (qd - 1) * (qd + 1), den);
        acc.multiply_power(1 - mu, places);
    }
    RationalBounds prod = acc.result();
    return {1 - prod.upper, 1 - prod.lower, prod.exact};
}

/// Exact truncated density; throws PrecisionOverflow when the exact value
/// would not fit the bit cap (use the bounds variant then).
inline BigRational ramified_density_truncated(const HolomorphySpec& spec, std::uint32_t n,
                                              std::uint32_t t,
                                              std::size_t exact_bit_cap = std::size_t{1} << 16) {
    RationalBounds b = ramified_density_truncated_bounds(spec, n, t, exact_bit_cap);
    if (!b.exact)
        throw PrecisionOverflow(
            "exact truncated density exceeds the bit cap; use "
            "ramified_density_truncated_bounds");
    return b.lower;
}

/// Rigorous upper bound on the density missed past degree t, for n >= 3:
/// sum over d > t of N_d * mu_d <= (3/2) sum q^(-d(n-2)), summed in closed
/// form. Diverges for n = 2 (where the density tends to 1), hence rejected.
inline BigRational ramified_tail_bound(const HolomorphySpec& spec, std::uint32_t n,
                                       std::uint32_t t) {
    if (n < 3)
        throw std::domain_error("tail bound requires n >= 3; for n = 2 the tail sum diverges");
    const BigInt q(spec.field()->q());
    // sum_{d > t} q^(-d(n-2)) = q^(-(t+1)(n-2)) / (1 - q^(-(n-2)))
    const BigInt step = pow_big(q, n - 2);
    BigRational geo = BigRational(1, pow_big(step, t + 1)) / (1 - BigRational(1, step));
    return BigRational(3, 2) * geo;
}

}  // namespace ffdensity
