#pragma once

// Rectangular matrices over a holomorphy ring and unimodularity: a k x m
// matrix (k < m) is unimodular exactly when its maximal minors generate
// the unit ideal. Includes exact local rank measures over residue fields
// and the closed-form global density through inverse zeta values.

#include "holomorphy.hpp"
#include "zeta.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ffdensity {

/// k x m matrix of holomorphy ring elements, row-major, 1 <= k < m.
class PolyMatrix {
public:
    PolyMatrix(const HolomorphySpec& spec, std::size_t rows, std::size_t cols,
               std::vector<RationalFunction> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (rows_ < 1 || rows_ >= cols_)
            throw std::invalid_argument("matrix shape must satisfy 1 <= rows < cols");
        if (entries_.size() != rows_ * cols_)
            throw std::invalid_argument("entry count does not match the matrix shape");
        for (const RationalFunction& u : entries_)
            if (!in_holomorphy_ring(u, spec))
                throw std::invalid_argument("matrix entries must lie in the holomorphy ring");
    }

    struct Unchecked {};  // for hot loops feeding entries already known to be in the ring
    PolyMatrix(Unchecked, std::size_t rows, std::size_t cols,
               std::vector<RationalFunction> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const RationalFunction& at(std::size_t r, std::size_t c) const {
        return entries_.at(r * cols_ + c);
    }
    const std::vector<RationalFunction>& entries() const { return entries_; }

private:
    std::size_t rows_, cols_;
    std::vector<RationalFunction> entries_;
};

namespace detail {

/// Exact determinant of a square block given by row set 0..k-1 and the
/// selected columns: cofactor expansion for k <= 3, fraction-free-friendly
/// Gaussian elimination with exact rational function arithmetic above.
inline RationalFunction block_det(const PolyMatrix& M, const std::vector<std::size_t>& cols) {
    const Field& field = M.entries().front().field();
    const std::size_t k = cols.size();
    if (k == 1) return M.at(0, cols[0]);
    if (k == 2)
        return M.at(0, cols[0]) * M.at(1, cols[1]) - M.at(0, cols[1]) * M.at(1, cols[0]);
    if (k == 3) {
        RationalFunction det = RationalFunction::zero(field);
        const std::size_t idx[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                       {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
        for (int t = 0; t < 6; ++t) {
            RationalFunction term = M.at(0, cols[idx[t][0]]) * M.at(1, cols[idx[t][1]]) *
                                    M.at(2, cols[idx[t][2]]);
            det = t < 3 ? det + term : det - term;
        }
        return det;
    }
    std::vector<std::vector<RationalFunction>> a(k);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) a[r].push_back(M.at(r, cols[c]));
    RationalFunction det = RationalFunction::one(field);
    bool negate = false;
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        while (pivot < k && a[pivot][col].is_zero()) ++pivot;
        if (pivot == k) return RationalFunction::zero(field);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            negate = !negate;
        }
        det = det * a[col][col];
        for (std::size_t r = col + 1; r < k; ++r) {
            if (a[r][col].is_zero()) continue;
            RationalFunction factor = a[r][col] / a[col][col];
            for (std::size_t c = col; c < k; ++c)
                a[r][c] = a[r][c] - factor * a[col][c];
        }
    }
    return negate ? -det : det;
}

}  // namespace detail

/// All k x k minors, column subsets in lexicographic order.
inline std::vector<RationalFunction> maximal_minors(const PolyMatrix& M) {
    const std::size_t k = M.rows(), m = M.cols();
    std::vector<RationalFunction> out;
    std::vector<std::size_t> cols(k);
    for (std::size_t i = 0; i < k; ++i) cols[i] = i;
    for (;;) {
        out.push_back(detail::block_det(M, cols));
        // next lexicographic k-subset of {0..m-1}
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (cols[i] != i + m - k) {
                ++cols[i];
                for (std::size_t j = i + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
                break;
            }
            if (i == 0) return out;
        }
    }
}

/// Unit-ideal test for the maximal minors: no ring place may divide them
/// all. Excluded prime factors are stripped from the minor gcd, and the
/// infinite place (when it is a ring place) is checked through valuations.
inline bool is_unimodular(const PolyMatrix& M, const HolomorphySpec& spec) {
    std::vector<RationalFunction> minors = maximal_minors(M);
    bool all_zero = true;
    Poly g(spec.field());
    std::int64_t best_inf_val = kValuationInfinity;
    for (const RationalFunction& minor : minors) {
        if (minor.is_zero()) continue;
        all_zero = false;
        g = gcd(g, minor.numerator());
        if (!spec.excludes_infinity()) {
            std::int64_t v = minor.denominator().degree() - minor.numerator().degree();
            if (v < best_inf_val) best_inf_val = v;
        }
    }
    if (all_zero) return false;
    // strip factors supported on the excluded places
    for (const Place& R : spec.excluded_places()) {
        if (R.is_infinite()) continue;
        for (;;) {
            DivModResult dm = divmod(g, R.prime());
            if (!dm.remainder.is_zero()) break;
            g = std::move(dm.quotient);
        }
    }
    if (g.degree() > 0) return false;  // common zero at a finite ring place
    if (!spec.excludes_infinity() && best_inf_val > 0) return false;
    return true;
}

/// Local obstruction measure: probability that a k x m matrix over the
/// residue field of P (size q^d) has rank < k,
/// 1 - prod_{i=0}^{k-1} (1 - q^(-d(m-i))).
inline BigRational local_nonunimodular_measure(const Place& P, std::size_t k, std::size_t m) {
    if (k < 1 || k >= m) throw std::invalid_argument("shape must satisfy 1 <= k < m");
    const BigInt qd = pow_big(BigInt(P.field()->q()), static_cast<std::uint64_t>(P.degree()));
    BigRational full_rank = 1;
    for (std::size_t i = 0; i < k; ++i)
        full_rank *= 1 - BigRational(1, pow_big(qd, m - i));
    return 1 - full_rank;
}

namespace detail {

/// Residue field O_P/P as polynomials of degree < deg(P) over the base
/// field; the infinite place uses its degree-one model.
struct ResidueField {
    explicit ResidueField(const Place& P)
        : prime(P.is_infinite() ? Poly::x(P.field()) : P.prime()),
          d(static_cast<std::uint32_t>(prime.degree())) {}

    Poly mul(const Poly& a, const Poly& b) const { return (a * b) % prime; }

    Poly inv(const Poly& a) const {
        // extended Euclid: a s + prime t = 1
        Poly r0 = prime, r1 = a % prime;
        const Field& field = prime.field();
        Poly s0(field), s1 = Poly::one(field);
        while (!r1.is_zero()) {
            DivModResult dm = divmod(r0, r1);
            Poly s2 = s0 - dm.quotient * s1;
            r0 = std::move(r1);
            r1 = std::move(dm.remainder);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (r0.degree() != 0) throw std::domain_error("inverse of zero residue");
        return s0.scaled(field->inv_idx(r0.coeff_idx(0))) % prime;
    }

    Poly prime;
    std::uint32_t d;
};

inline std::size_t residue_rank(std::vector<std::vector<Poly>> a, const ResidueField& F) {
    const std::size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        Poly inv = F.inv(a[rank][col]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (a[r][col].is_zero()) continue;
            Poly factor = F.mul(a[r][col], inv);
            for (std::size_t c = col; c < cols; ++c)
                a[r][c] = (a[r][c] - F.mul(factor, a[rank][c])) % F.prime;
        }
        ++rank;
    }
    return rank;
}

}  // namespace detail

/// Same local measure by exhausting all residue matrices and counting the
/// rank-deficient ones; exact and independent of the closed form.
inline BigRational local_nonunimodular_bruteforce(const Place& P, std::size_t k, std::size_t m,
                                                  std::uint64_t cap = default_enum_cap()) {
    if (k < 1 || k >= m) throw std::invalid_argument("shape must satisfy 1 <= k < m");
    const Field& field = P.field();
    detail::ResidueField F(P);
    const std::uint64_t fsize = pow_big(BigInt(field->q()), F.d).convert_to<std::uint64_t>();
    BigInt total_big = pow_big(BigInt(fsize), k * m);
    if (total_big > BigInt(cap))
        throw BoxTooLarge("residue matrix scan needs " + total_big.str() +
                          " matrices, over the cap of " + std::to_string(cap));
    std::vector<Poly> elems;
    elems.reserve(fsize);
    for (std::uint64_t i = 0; i < fsize; ++i)
        elems.push_back(poly_from_counting_index(field, F.d, i));
    const std::uint64_t total = total_big.convert_to<std::uint64_t>();
    std::uint64_t deficient = 0;
    std::vector<std::vector<Poly>> mat(k, std::vector<Poly>(m, Poly(field)));
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t v = idx;
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < m; ++c) {
                mat[r][c] = elems[v % fsize];
                v /= fsize;
            }
        if (detail::residue_rank(mat, F) < k) ++deficient;
    }
    return BigRational(BigInt(deficient), total_big);
}

/// Exact density of unimodular k x m matrices over the ring: the product
/// of 1/zeta_ring(i) for i = m-k+1 .. m. Strict k < m keeps every
/// argument at s >= 2, where the zeta values are finite.
inline BigRational unimodular_density_exact(const HolomorphySpec& spec, std::size_t k,
                                            std::size_t m,
                                            const LPolynomial& L = LPolynomial::trivial()) {
    if (k < 1 || k >= m) throw std::invalid_argument("shape must satisfy 1 <= k < m");
    BigRational density = 1;
    for (std::size_t i = m - k + 1; i <= m; ++i)
        density /= zeta_ring(spec, static_cast<std::uint32_t>(i), L);
    return density;
}

}  // namespace ffdensity
