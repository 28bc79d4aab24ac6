#pragma once

// Univariate polynomials over F_q with exact arithmetic: division with
// remainder, monic gcd, evaluation, Rabin irreducibility, and enumeration
// plus Moebius counting of monic irreducibles. Coefficients are stored
// constant-term first and always trimmed, so representation is canonical.

#include "gf.hpp"
#include "rational.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ffdensity {

/// degree() of the zero polynomial; compares below every true degree.
inline constexpr std::int64_t kDegreeNegInfinity = std::numeric_limits<std::int64_t>::min();

class Poly {
public:
    Poly() = default;
    explicit Poly(Field field) : field_(std::move(field)) { check_field(); }
    Poly(Field field, std::vector<std::uint32_t> coeffs)
        : field_(std::move(field)), coeffs_(std::move(coeffs)) {
        check_field();
        for (std::uint32_t c : coeffs_)
            if (c >= field_->q()) throw std::invalid_argument("coefficient index out of range");
        trim();
    }

    static Poly zero(const Field& field) { return Poly(field); }
    static Poly constant(const Field& field, std::uint32_t c) { return Poly(field, {c}); }
    static Poly one(const Field& field) { return constant(field, 1); }
    static Poly x(const Field& field) { return Poly(field, {0, 1}); }
    static Poly monomial(const Field& field, std::uint64_t deg, std::uint32_t c) {
        std::vector<std::uint32_t> v(deg + 1, 0);
        v[deg] = c;
        return Poly(field, std::move(v));
    }

    const Field& field() const { return field_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t degree() const {
        return coeffs_.empty() ? kDegreeNegInfinity
                               : static_cast<std::int64_t>(coeffs_.size()) - 1;
    }
    std::uint32_t coeff_idx(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    FieldElement coeff(std::size_t i) const { return FieldElement(field_, coeff_idx(i)); }
    const std::vector<std::uint32_t>& coeffs() const { return coeffs_; }

    std::uint32_t leading_idx() const {
        if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
        return coeffs_.back();
    }
    FieldElement leading_coeff() const { return FieldElement(field_, leading_idx()); }
    bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        require_same_field(a.field_, b.field_);
        const FieldSpec& F = *a.field_;
        std::vector<std::uint32_t> r(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = F.add_idx(a.coeff_idx(i), b.coeff_idx(i));
        return Poly(a.field_, std::move(r));
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        require_same_field(a.field_, b.field_);
        const FieldSpec& F = *a.field_;
        std::vector<std::uint32_t> r(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = F.sub_idx(a.coeff_idx(i), b.coeff_idx(i));
        return Poly(a.field_, std::move(r));
    }

    Poly operator-() const {
        std::vector<std::uint32_t> r(coeffs_);
        for (auto& c : r) c = field_->neg_idx(c);
        return Poly(field_, std::move(r));
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        require_same_field(a.field_, b.field_);
        if (a.is_zero() || b.is_zero()) return Poly(a.field_);
        const FieldSpec& F = *a.field_;
        std::vector<std::uint32_t> r(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r[i + j] = F.add_idx(r[i + j], F.mul_idx(a.coeffs_[i], b.coeffs_[j]));
        }
        return Poly(a.field_, std::move(r));
    }

    Poly scaled(std::uint32_t c) const {
        std::vector<std::uint32_t> r(coeffs_);
        for (auto& v : r) v = field_->mul_idx(v, c);
        return Poly(field_, std::move(r));
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        require_same_field(a.field_, b.field_);
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    FieldElement eval(const FieldElement& at) const {
        require_same_field(field_, at.field());
        const FieldSpec& F = *field_;
        std::uint32_t acc = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            acc = F.add_idx(F.mul_idx(acc, at.index()), coeffs_[i]);
        return FieldElement(field_, acc);
    }

    Poly make_monic() const {
        if (is_zero()) return *this;
        return scaled(field_->inv_idx(coeffs_.back()));
    }

private:
    void check_field() const {
        if (!field_) throw std::invalid_argument("polynomial requires a field");
    }
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    Field field_;
    std::vector<std::uint32_t> coeffs_;
};

struct DivModResult {
    Poly quotient;
    Poly remainder;
};

inline DivModResult divmod(const Poly& a, const Poly& b) {
    require_same_field(a.field(), b.field());
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const Field& field = a.field();
    const FieldSpec& F = *field;
    if (a.degree() < b.degree()) return {Poly(field), a};
    std::vector<std::uint32_t> rem(a.coeffs());
    std::vector<std::uint32_t> quot(rem.size() - b.coeffs().size() + 1, 0);
    const std::uint32_t lead_inv = F.inv_idx(b.leading_idx());
    const std::size_t bsize = b.coeffs().size();
    for (std::size_t k = rem.size(); k >= bsize; --k) {
        const std::size_t pos = k - 1;  // coefficient being eliminated
        std::uint32_t factor = F.mul_idx(rem[pos], lead_inv);
        if (factor != 0) {
            std::size_t shift = pos - (bsize - 1);
            quot[shift] = factor;
            for (std::size_t i = 0; i < bsize; ++i)
                rem[shift + i] = F.sub_idx(rem[shift + i], F.mul_idx(factor, b.coeffs()[i]));
        }
    }
    return {Poly(field, std::move(quot)), Poly(field, std::move(rem))};
}

inline Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quotient; }
inline Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

inline bool divides(const Poly& d, const Poly& a) { return (a % d).is_zero(); }

/// Monic gcd; gcd(0, 0) = 0.
inline Poly gcd(Poly a, Poly b) {
    require_same_field(a.field(), b.field());
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.make_monic();
}

inline Poly pow_mod(const Poly& base, const BigInt& e, const Poly& mod) {
    if (e < 0) throw std::invalid_argument("pow_mod exponent must be nonnegative");
    Poly result = Poly::one(base.field());
    Poly b = base % mod;
    BigInt n = e;
    while (n > 0) {
        if (boost::multiprecision::bit_test(n, 0)) result = (result * b) % mod;
        n >>= 1;
        if (n > 0) b = (b * b) % mod;
    }
    return result;
}

namespace detail {

inline std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace detail

/// Rabin's test: f of degree d is irreducible iff x^(q^d) = x (mod f) and
/// gcd(x^(q^(d/r)) - x, f) = 1 for every prime r dividing d.
inline bool is_irreducible(const Poly& f) {
    const std::int64_t d = f.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    const Field& field = f.field();
    const std::uint64_t q = field->q();
    const auto primes = detail::distinct_prime_factors(static_cast<std::uint64_t>(d));
    const Poly x = Poly::x(field);
    // frob[k] = x^(q^k) mod f, built by iterating the q-power map.
    std::vector<Poly> frob(static_cast<std::size_t>(d) + 1, Poly(field));
    frob[0] = x % f;
    for (std::int64_t k = 1; k <= d; ++k) frob[k] = pow_mod(frob[k - 1], BigInt(q), f);
    if (!(frob[d] - x % f).is_zero()) return false;
    for (std::uint64_t r : primes) {
        const Poly diff = frob[d / static_cast<std::int64_t>(r)] - x % f;
        if (gcd(diff, f).degree() != 0) return false;
    }
    return true;
}

/// Polynomial of degree < bound_deg from a counting index: digit i of
/// `index` in base q is the coefficient of x^i, so index order enumerates
/// 0, 1, ..., then x, x+1, ... This is the canonical enumeration order.
inline Poly poly_from_counting_index(const Field& field, std::uint32_t bound_deg, std::uint64_t index) {
    std::vector<std::uint32_t> coeffs(bound_deg, 0);
    for (std::uint32_t i = 0; i < bound_deg; ++i) {
        coeffs[i] = static_cast<std::uint32_t>(index % field->q());
        index /= field->q();
    }
    if (index != 0) throw std::invalid_argument("counting index out of range");
    return Poly(field, std::move(coeffs));
}

/// All q^d polynomials of degree < d, in counting order.
inline std::vector<Poly> enumerate_polys_below_degree(const Field& field, std::uint32_t d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) {
        count *= field->q();
        if (count > (std::uint64_t{1} << 32))
            throw std::domain_error("enumeration too large; use a smaller degree bound");
    }
    std::vector<Poly> out;
    out.reserve(count);
    for (std::uint64_t idx = 0; idx < count; ++idx)
        out.push_back(poly_from_counting_index(field, d, idx));
    return out;
}

/// Monic irreducibles of exact degree d, ascending in counting order of the
/// lower coefficients (so over F_2, degree 1 gives [x, x+1]).
inline std::vector<Poly> monic_irreducibles(const Field& field, std::uint32_t d) {
    if (d < 1) throw std::invalid_argument("irreducible degree must be >= 1");
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) {
        count *= field->q();
        if (count > (std::uint64_t{1} << 28))
            throw std::domain_error("irreducible enumeration too large at this degree");
    }
    std::vector<Poly> out;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly f = poly_from_counting_index(field, d, idx) + Poly::monomial(field, d, 1);
        if (is_irreducible(f)) out.push_back(std::move(f));
    }
    return out;
}

namespace detail {

inline int moebius_mu(std::uint64_t n) {
    int mu = 1;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

}  // namespace detail

/// Number of monic irreducibles of degree d over F_q, by Moebius inversion
/// of q^n = sum over d|n of d * N_d; no enumeration involved.
inline BigInt count_monic_irreducibles(std::uint64_t q, std::uint64_t d) {
    if (d < 1) throw std::invalid_argument("irreducible degree must be >= 1");
    BigInt total = 0;
    for (std::uint64_t e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        int mu = detail::moebius_mu(e);
        if (mu == 0) continue;
        total += BigInt(mu) * pow_big(BigInt(q), d / e);
    }
    return total / d;
}

}  // namespace ffdensity
