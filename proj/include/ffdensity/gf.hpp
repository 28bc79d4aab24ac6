#pragma once

// Finite field F_q, q = p^e <= 2^16, as a value type. Elements are indices
// 0..q-1 encoding coordinate vectors over F_p in base p (coordinate of t^i
// is digit i), so 0 -> 0, 1 -> 1, p -> t. Multiplication runs through
// precomputed discrete log/exp tables built once per field.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace ffdensity {

namespace detail {

inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense polynomials over F_p as digit vectors, used only for field setup.
using FpPoly = std::vector<std::uint32_t>;

inline void fp_trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline FpPoly fp_mod(FpPoly a, const FpPoly& m, std::uint32_t p) {
    fp_trim(a);
    while (a.size() >= m.size()) {
        std::uint32_t lead = a.back();  // m is monic
        std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) {
            std::uint64_t cur = a[shift + i];
            std::uint64_t sub = static_cast<std::uint64_t>(lead) * m[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((cur + p - sub) % p);
        }
        fp_trim(a);
    }
    return a;
}

inline FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>(
                (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
    return fp_mod(std::move(r), m, p);
}

}  // namespace detail

class FieldSpec;
using Field = std::shared_ptr<const FieldSpec>;

class FieldSpec {
public:
    /// Prime field F_p.
    static Field make_prime(std::uint32_t p) { return make_extension(p, 1, {0, 1}); }

    /// F_{p^e} presented as F_p[t]/(modulus); modulus has e+1 coefficients
    /// over F_p, constant first, and must be monic and irreducible.
    static Field make_extension(std::uint32_t p, std::uint32_t e,
                                std::vector<std::uint32_t> modulus) {
        return Field(new FieldSpec(p, e, std::move(modulus)));
    }

    std::uint32_t p() const { return p_; }
    std::uint32_t extension_degree() const { return e_; }
    std::uint32_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    // --- index arithmetic (hot path; no element wrappers) ---

    std::uint32_t add_idx(std::uint32_t a, std::uint32_t b) const {
        if (p_ == 2) return a ^ b;
        std::uint32_t r = 0, mult = 1;
        for (std::uint32_t i = 0; i < e_; ++i) {
            r += (a % p_ + b % p_) % p_ * mult;
            a /= p_;
            b /= p_;
            mult *= p_;
        }
        return r;
    }

    std::uint32_t neg_idx(std::uint32_t a) const {
        if (p_ == 2) return a;
        std::uint32_t r = 0, mult = 1;
        for (std::uint32_t i = 0; i < e_; ++i) {
            r += (p_ - a % p_) % p_ * mult;
            a /= p_;
            mult *= p_;
        }
        return r;
    }

    std::uint32_t sub_idx(std::uint32_t a, std::uint32_t b) const {
        return add_idx(a, neg_idx(b));
    }

    std::uint32_t mul_idx(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[(log_[a] + log_[b]) % (q_ - 1)];
    }

    std::uint32_t inv_idx(std::uint32_t a) const {
        if (a == 0) throw std::domain_error("inverse of zero field element");
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }

    std::uint32_t div_idx(std::uint32_t a, std::uint32_t b) const {
        return mul_idx(a, inv_idx(b));
    }

    std::uint32_t pow_idx(std::uint32_t a, std::uint64_t n) const {
        if (a == 0) return n == 0 ? 1u : 0u;
        std::uint64_t r = log_[a] % (q_ - 1) * (n % (q_ - 1)) % (q_ - 1);
        return exp_[static_cast<std::uint32_t>(r)];
    }

    /// Embedding of integers through the prime subfield: k -> (k mod p) * 1.
    std::uint32_t from_integer(std::int64_t k) const {
        std::int64_t r = k % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<std::uint32_t>(r);
    }

    /// Coordinate of t^i in the F_p basis expansion of element a.
    std::uint32_t coord(std::uint32_t a, std::uint32_t i) const {
        for (std::uint32_t k = 0; k < i; ++k) a /= p_;
        return a % p_;
    }

    bool same_as(const FieldSpec& o) const {
        return this == &o || (p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_);
    }

private:
    FieldSpec(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus)
        : p_(p), e_(e), modulus_(std::move(modulus)) {
        if (!detail::is_prime_u32(p_)) throw std::invalid_argument("field characteristic must be prime");
        if (e_ < 1) throw std::invalid_argument("extension degree must be >= 1");
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < e_; ++i) {
            q *= p_;
            if (q > 65536) throw std::invalid_argument("field order must be <= 2^16");
        }
        q_ = static_cast<std::uint32_t>(q);
        validate_modulus();
        build_tables();
    }

    void validate_modulus() const {
        if (modulus_.size() != e_ + 1 || modulus_.back() != 1)
            throw std::invalid_argument("modulus must be monic of degree equal to the extension degree");
        for (std::uint32_t c : modulus_)
            if (c >= p_) throw std::invalid_argument("modulus coefficients must lie in [0, p)");
        if (e_ == 1) return;
        // Trial division by all monic polynomials of degree <= e/2; the
        // candidate count is at most q, which is tiny at this field size.
        for (std::uint32_t d = 1; 2 * d <= e_; ++d) {
            std::uint64_t count = 1;
            for (std::uint32_t i = 0; i < d; ++i) count *= p_;
            for (std::uint64_t idx = 0; idx < count; ++idx) {
                detail::FpPoly g(d + 1, 0);
                std::uint64_t v = idx;
                for (std::uint32_t i = 0; i < d; ++i) {
                    g[i] = static_cast<std::uint32_t>(v % p_);
                    v /= p_;
                }
                g[d] = 1;
                detail::FpPoly rem = detail::fp_mod(modulus_, g, p_);
                if (rem.empty()) throw std::invalid_argument("modulus is reducible");
            }
        }
    }

    void build_tables() {
        log_.assign(q_, 0);
        exp_.assign(q_ - 1, 0);
        std::uint32_t g = find_generator();
        std::uint32_t cur = 1;
        for (std::uint32_t i = 0; i < q_ - 1; ++i) {
            exp_[i] = cur;
            log_[cur] = i;
            cur = raw_mul(cur, g);
        }
    }

    detail::FpPoly idx_to_poly(std::uint32_t a) const {
        detail::FpPoly f;
        while (a) {
            f.push_back(a % p_);
            a /= p_;
        }
        return f;
    }

    std::uint32_t poly_to_idx(const detail::FpPoly& f) const {
        std::uint32_t r = 0;
        for (std::size_t i = f.size(); i-- > 0;) r = r * p_ + f[i];
        return r;
    }

    std::uint32_t raw_mul(std::uint32_t a, std::uint32_t b) const {
        return poly_to_idx(detail::fp_mulmod(idx_to_poly(a), idx_to_poly(b), modulus_, p_));
    }

    std::uint32_t raw_pow(std::uint32_t a, std::uint32_t n) const {
        std::uint32_t r = 1;
        while (n) {
            if (n & 1) r = raw_mul(r, a);
            a = raw_mul(a, a);
            n >>= 1;
        }
        return r;
    }

    std::uint32_t find_generator() const {
        std::vector<std::uint32_t> prime_factors;
        std::uint32_t m = q_ - 1;
        for (std::uint32_t d = 2; d * d <= m; ++d) {
            if (m % d == 0) {
                prime_factors.push_back(d);
                while (m % d == 0) m /= d;
            }
        }
        if (m > 1) prime_factors.push_back(m);
        for (std::uint32_t g = 1; g < q_; ++g) {
            bool primitive = true;
            for (std::uint32_t r : prime_factors) {
                if (raw_pow(g, (q_ - 1) / r) == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) return g;
        }
        throw std::logic_error("no multiplicative generator found");  // unreachable for a field
    }

    std::uint32_t p_, e_, q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> log_, exp_;
};

inline void require_same_field(const Field& a, const Field& b) {
    if (!a || !b || !a->same_as(*b))
        throw std::invalid_argument("operands belong to different fields");
}

/// Value-semantic field element; carries its field for cross-field checks.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(Field field, std::uint32_t idx) : field_(std::move(field)), idx_(idx) {
        if (!field_) throw std::invalid_argument("field element requires a field");
        if (idx_ >= field_->q()) throw std::invalid_argument("element index out of range");
    }

    const Field& field() const { return field_; }
    std::uint32_t index() const { return idx_; }
    bool is_zero() const { return idx_ == 0; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        require_same_field(a.field_, b.field_);
        return FieldElement(a.field_, a.field_->add_idx(a.idx_, b.idx_));
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        require_same_field(a.field_, b.field_);
        return FieldElement(a.field_, a.field_->sub_idx(a.idx_, b.idx_));
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        require_same_field(a.field_, b.field_);
        return FieldElement(a.field_, a.field_->mul_idx(a.idx_, b.idx_));
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        require_same_field(a.field_, b.field_);
        return FieldElement(a.field_, a.field_->div_idx(a.idx_, b.idx_));
    }
    FieldElement operator-() const { return FieldElement(field_, field_->neg_idx(idx_)); }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        require_same_field(a.field_, b.field_);
        return a.idx_ == b.idx_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

private:
    Field field_;
    std::uint32_t idx_ = 0;
};

inline FieldElement inverse(const FieldElement& a) {
    return FieldElement(a.field(), a.field()->inv_idx(a.index()));
}

inline FieldElement pow(const FieldElement& a, std::uint64_t n) {
    return FieldElement(a.field(), a.field()->pow_idx(a.index(), n));
}

/// All q elements in canonical order (index ascending; 0 first, then 1).
inline std::vector<FieldElement> enumerate_elements(const Field& field) {
    std::vector<FieldElement> out;
    out.reserve(field->q());
    for (std::uint32_t i = 0; i < field->q(); ++i) out.emplace_back(field, i);
    return out;
}

}  // namespace ffdensity
