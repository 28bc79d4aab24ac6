#include "ffdensity/holomorphy.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdlib>

using namespace ffdensity;

namespace {

Field f2() { return FieldSpec::make_prime(2); }

}  // namespace

TEST_CASE("spec construction sorts, dedupes and validates", "[holomorphy]") {
    Field F = f2();
    Place Px = Place::finite(Poly::x(F));
    Place Pinf = Place::infinity(F);
    HolomorphySpec spec(F, {Pinf, Px, Pinf});
    REQUIRE(spec.excluded_places().size() == 2);
    CHECK(spec.excluded_places()[0] == Px);
    CHECK(spec.excluded_places()[1] == Pinf);
    CHECK(spec.excludes_infinity());
    CHECK(spec.is_excluded(Px));
    CHECK_FALSE(spec.is_excluded(Place::finite(Poly(F, {1, 1}))));
    CHECK_THROWS_AS(HolomorphySpec(F, {}), std::invalid_argument);

    HolomorphySpec ring = HolomorphySpec::polynomial_ring(F);
    CHECK(ring.excluded_places().size() == 1);
    CHECK(ring.excludes_infinity());
    CHECK(ring == HolomorphySpec(F, {Place::infinity(F)}));
    CHECK_FALSE(ring == spec);
}

TEST_CASE("ring membership strips excluded primes only", "[holomorphy]") {
    Field F = f2();
    Poly x = Poly::x(F);
    Poly x1(F, {1, 1});
    HolomorphySpec ring = HolomorphySpec::polynomial_ring(F);
    CHECK(in_holomorphy_ring(RationalFunction(x * x + x1), ring));
    CHECK(in_holomorphy_ring(RationalFunction::zero(F), ring));
    CHECK_FALSE(in_holomorphy_ring(RationalFunction(Poly::one(F), x), ring));

    // excluding {inf, (x)} admits 1/x and x but not 1/(x+1)
    HolomorphySpec spec(F, {Place::infinity(F), Place::finite(x)});
    CHECK(in_holomorphy_ring(RationalFunction(Poly::one(F), x), spec));
    CHECK(in_holomorphy_ring(RationalFunction(x), spec));
    CHECK(in_holomorphy_ring(RationalFunction(x1, x * x), spec));
    CHECK_FALSE(in_holomorphy_ring(RationalFunction(Poly::one(F), x1), spec));

    // excluding only (x) forces "no pole at infinity": deg num <= deg den
    HolomorphySpec finite_only(F, {Place::finite(x)});
    CHECK(in_holomorphy_ring(RationalFunction(x1, x), finite_only));
    CHECK(in_holomorphy_ring(RationalFunction::one(F), finite_only));
    CHECK_FALSE(in_holomorphy_ring(RationalFunction(x), finite_only));
    CHECK_FALSE(in_holomorphy_ring(RationalFunction(x * x + x1, x), finite_only));
}

TEST_CASE("divisors validate support and multiplicities", "[holomorphy]") {
    Field F = f2();
    Place Px = Place::finite(Poly::x(F));
    Place Pinf = Place::infinity(F);
    HolomorphySpec spec(F, {Pinf, Px});
    Divisor D(spec, {{Pinf, 3}, {Px, 2}});
    CHECK(D.degree() == 5);
    CHECK(D.multiplicity(Px) == 2);
    CHECK(D.multiplicity(Pinf) == 3);
    CHECK(Divisor::zero(spec).degree() == 0);
    CHECK(Divisor::uniform(spec, 2) == Divisor(spec, {{Px, 2}, {Pinf, 2}}));
    CHECK_THROWS_AS(Divisor(spec, {{Px, -1}}), std::invalid_argument);
    CHECK_THROWS_AS(Divisor(spec, {{Px, 1}, {Px, 1}}), std::invalid_argument);
    // support must lie in the excluded set
    Place other = Place::finite(Poly(F, {1, 1}));
    CHECK_THROWS_AS(Divisor(spec, {{other, 1}}), std::invalid_argument);
    // multiplicity zero terms are dropped
    CHECK(Divisor(spec, {{Px, 0}}) == Divisor::zero(spec));

    CHECK(divisor_leq(Divisor::uniform(spec, 1), Divisor::uniform(spec, 2)));
    CHECK_FALSE(divisor_leq(Divisor::uniform(spec, 2), Divisor::uniform(spec, 1)));
    CHECK(divisor_leq(Divisor::zero(spec), Divisor::zero(spec)));
}

TEST_CASE("basis has dimension deg(D)+1 and the expected shape", "[holomorphy]") {
    Field F = f2();
    Place Px = Place::finite(Poly::x(F));
    Place Pinf = Place::infinity(F);
    HolomorphySpec spec(F, {Pinf, Px});
    // D = (x) + inf has degree 2: basis 1/x, 1, x
    auto basis = riemann_roch_basis(spec, Divisor::uniform(spec, 1));
    REQUIRE(basis.size() == 3);
    CHECK(basis[0] == RationalFunction(Poly::one(F), Poly::x(F)));
    CHECK(basis[1] == RationalFunction::one(F));
    CHECK(basis[2] == RationalFunction(Poly::x(F)));
    // every basis element lies in the ring
    for (const auto& u : basis) CHECK(in_holomorphy_ring(u, spec));

    // polynomial ring, D = 3*inf: basis 1, x, x^2, x^3
    HolomorphySpec ring = HolomorphySpec::polynomial_ring(F);
    auto pbasis = riemann_roch_basis(ring, Divisor::uniform(ring, 3));
    REQUIRE(pbasis.size() == 4);
    for (std::size_t j = 0; j < 4; ++j)
        CHECK(pbasis[j] == RationalFunction(Poly::monomial(F, j, 1)));
}

TEST_CASE("box enumerates in counting order", "[holomorphy]") {
    Field F = f2();
    HolomorphySpec ring = HolomorphySpec::polynomial_ring(F);
    auto box = enumerate_box(ring, Divisor::uniform(ring, 1));
    REQUIRE(box.size() == 4);
    CHECK(box[0].is_zero());
    CHECK(box[1] == RationalFunction::one(F));
    CHECK(box[2] == RationalFunction(Poly::x(F)));
    CHECK(box[3] == RationalFunction(Poly(F, {1, 1})));
}

TEST_CASE("box size, indexing and membership", "[holomorphy]") {
    Field F = f2();
    Place Px = Place::finite(Poly::x(F));
    Place Pinf = Place::infinity(F);
    HolomorphySpec spec(F, {Pinf, Px});
    Divisor D = Divisor::uniform(spec, 2);  // degree 4, dimension 5
    RiemannRochBox box(spec, D);
    CHECK(box.dimension() == 5);
    CHECK(box.size() == 32);
    CHECK(box.size_fits(32));
    CHECK_FALSE(box.size_fits(31));
    CHECK_THROWS_AS(box.element(32), std::invalid_argument);
    // every element is in the ring and dominated by D at the excluded places
    for (std::uint64_t i = 0; i < 32; ++i) {
        RationalFunction u = box.element(i);
        CHECK(in_holomorphy_ring(u, spec));
        if (!u.is_zero()) {
            CHECK(valuation(u, Px) >= -2);
            CHECK(valuation(u, Pinf) >= -2);
        }
    }
    // distinct indices give distinct elements
    for (std::uint64_t i = 1; i < 32; ++i) CHECK_FALSE(box.element(i) == box.element(0));
}

TEST_CASE("enumerate_box enforces the cap with guidance", "[holomorphy]") {
    Field F = f2();
    HolomorphySpec ring = HolomorphySpec::polynomial_ring(F);
    try {
        enumerate_box(ring, Divisor::uniform(ring, 5), 32);
        FAIL("expected BoxTooLarge");
    } catch (const BoxTooLarge& e) {
        CHECK(std::string(e.what()).find("sampled") != std::string::npos);
    }
    // BoxTooLarge is a domain error
    CHECK_THROWS_AS(enumerate_box(ring, Divisor::uniform(ring, 5), 32), std::domain_error);
}

TEST_CASE("sampling is reproducible and lands inside the box", "[holomorphy]") {
    Field F = f2();
    HolomorphySpec ring = HolomorphySpec::polynomial_ring(F);
    Divisor D = Divisor::uniform(ring, 3);
    auto all = enumerate_box(ring, D);
    RiemannRochBox box(ring, D);
    CounterRng rng(42);
    for (std::uint64_t i = 0; i < 64; ++i) {
        RationalFunction u = box.sample(rng, i);
        CHECK(u == sample_box(ring, D, 42, i));  // same seed, same index
        CHECK(std::find(all.begin(), all.end(), u) != all.end());
    }
    // different seeds disagree somewhere in a short window
    bool differs = false;
    for (std::uint64_t i = 0; i < 16 && !differs; ++i)
        differs = !(sample_box(ring, D, 1, i) == sample_box(ring, D, 2, i));
    CHECK(differs);
}

TEST_CASE("enum cap environment override is validated", "[holomorphy]") {
    ::setenv("FFDENSITY_MAX_ENUM", "1000", 1);
    CHECK(default_enum_cap() == 1000);
    ::setenv("FFDENSITY_MAX_ENUM", "zap", 1);
    CHECK_THROWS_AS(default_enum_cap(), std::invalid_argument);
    ::unsetenv("FFDENSITY_MAX_ENUM");
    CHECK(default_enum_cap() == (std::uint64_t{1} << 22));
}
