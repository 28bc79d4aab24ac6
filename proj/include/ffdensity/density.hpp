#pragma once

// Density experiment harness: runs an event (unimodularity, nice
// ramification, or a custom coprimality window) over a chain of growing
// Riemann-Roch boxes, either exhaustively (exact counts) or by seeded
// Monte Carlo, and compares the measured ratios against a reference
// density. Counts are exact integers and sampling is counter-based, so
// results are bit-identical for a fixed seed regardless of worker count.

#include "eisenstein.hpp"
#include "holomorphy.hpp"
#include "rational.hpp"
#include "rng.hpp"
#include "unimodular.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

namespace ffdensity {

/// Event: the k x m matrix built row-major from the tuple is unimodular.
struct UnimodularEvent {
    std::size_t rows;
    std::size_t cols;
};

/// Event: the degree-n coefficient tuple is nicely ramified at some ring
/// place of degree <= scan_degree.
struct RamifiedEvent {
    std::uint32_t n;
    std::uint32_t scan_degree;
};

/// Named pure function of the sample tuple, used by coprimality windows.
struct TupleRule {
    std::string name;
    std::function<RationalFunction(const std::vector<RationalFunction>&)> eval;
};

/// Event: some ring place with min_degree < deg P <= max_degree divides
/// both rule values (valuation >= 1). max_degree defaults to the degree of
/// the chain divisor at each point, past which a nonzero box element of
/// the polynomial ring cannot pick up new prime factors pairs.
struct CoprimalityWindowEvent {
    TupleRule f;
    TupleRule g;
    std::size_t arity;
    std::uint32_t min_degree;
    std::optional<std::uint32_t> max_degree;
};

using EventDescriptor = std::variant<UnimodularEvent, RamifiedEvent, CoprimalityWindowEvent>;

inline std::size_t event_arity(const EventDescriptor& event) {
    if (const auto* u = std::get_if<UnimodularEvent>(&event)) return u->rows * u->cols;
    if (const auto* r = std::get_if<RamifiedEvent>(&event)) return r->n + 1;
    return std::get<CoprimalityWindowEvent>(event).arity;
}

enum class SamplingMode { Exhaustive, Sampled };

struct DensityExperiment {
    HolomorphySpec spec;
    EventDescriptor event;
    std::vector<Divisor> chain;
    SamplingMode mode = SamplingMode::Exhaustive;
    std::uint64_t enum_cap = default_enum_cap();
    std::uint64_t samples = 100000;
    std::uint64_t seed = 42;
    unsigned workers = 1;
    std::optional<BigRational> reference;
};

/// The default chain: j * (sum of excluded places) for j = 0..j_max.
inline std::vector<Divisor> uniform_chain(const HolomorphySpec& spec, std::int64_t j_max) {
    std::vector<Divisor> chain;
    for (std::int64_t j = 0; j <= j_max; ++j) chain.push_back(Divisor::uniform(spec, j));
    return chain;
}

struct ChainPointResult {
    Divisor divisor;
    std::int64_t divisor_degree;
    std::size_t box_dimension;
    BigInt trials;
    BigInt hits;
    BigRational ratio;
    std::optional<double> standard_error;  // sampled mode only
};

struct DensityReport {
    std::vector<ChainPointResult> points;
    std::optional<BigRational> reference;
    std::string note;
};

namespace detail {

/// Exact or Monte Carlo count of tuples satisfying `hit` over the box,
/// split across workers on disjoint index ranges; integer reduction keeps
/// the result independent of the split.
inline std::pair<BigInt, BigInt> count_tuples(
    const RiemannRochBox& box, std::size_t arity, SamplingMode mode, std::uint64_t enum_cap,
    std::uint64_t samples, std::uint64_t seed, unsigned workers,
    const std::function<bool(const std::vector<RationalFunction>&)>& hit) {
    std::uint64_t total;
    std::uint64_t box_size = 0;
    if (mode == SamplingMode::Exhaustive) {
        BigInt big_total = pow_big(box.size(), static_cast<std::uint64_t>(arity));
        if (big_total > BigInt(enum_cap))
            throw BoxTooLarge("exhaustive run needs " + big_total.str() +
                              " tuples, over the cap of " + std::to_string(enum_cap) +
                              "; use sampled mode instead");
        total = big_total.convert_to<std::uint64_t>();
        box_size = box.size().convert_to<std::uint64_t>();
    } else {
        if (samples == 0) throw std::invalid_argument("sample count must be positive");
        total = samples;
    }
    if (workers == 0) throw std::invalid_argument("worker count must be positive");

    const CounterRng rng(seed);
    auto count_range = [&](std::uint64_t lo, std::uint64_t hi) -> std::uint64_t {
        std::uint64_t count = 0;
        std::vector<RationalFunction> tuple(arity, RationalFunction::zero(box.field()));
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            if (mode == SamplingMode::Exhaustive) {
                std::uint64_t v = idx;
                for (std::size_t c = 0; c < arity; ++c) {
                    tuple[c] = box.element(v % box_size);
                    v /= box_size;
                }
            } else {
                for (std::size_t c = 0; c < arity; ++c)
                    tuple[c] = box.sample(rng, idx * arity + c);
            }
            if (hit(tuple)) ++count;
        }
        return count;
    };

    std::uint64_t hits = 0;
    const unsigned n_workers =
        static_cast<unsigned>(std::min<std::uint64_t>(workers, total == 0 ? 1 : total));
    if (n_workers <= 1) {
        hits = count_range(0, total);
    } else {
        std::vector<std::uint64_t> partial(n_workers, 0);
        std::vector<std::thread> threads;
        threads.reserve(n_workers);
        for (unsigned w = 0; w < n_workers; ++w) {
            std::uint64_t lo = total / n_workers * w + std::min<std::uint64_t>(w, total % n_workers);
            std::uint64_t hi = lo + total / n_workers + (w < total % n_workers ? 1 : 0);
            threads.emplace_back([&, w, lo, hi] { partial[w] = count_range(lo, hi); });
        }
        for (auto& t : threads) t.join();
        for (std::uint64_t p : partial) hits += p;
    }
    return {BigInt(hits), BigInt(total)};
}

inline std::function<bool(const std::vector<RationalFunction>&)> make_evaluator(
    const HolomorphySpec& spec, const EventDescriptor& event, std::uint32_t window_max_degree) {
    if (const auto* u = std::get_if<UnimodularEvent>(&event)) {
        const std::size_t rows = u->rows, cols = u->cols;
        if (rows < 1 || rows >= cols)
            throw std::invalid_argument("matrix shape must satisfy 1 <= rows < cols");
        return [&spec, rows, cols](const std::vector<RationalFunction>& tuple) {
            PolyMatrix M(PolyMatrix::Unchecked{}, rows, cols, tuple);
            return is_unimodular(M, spec);
        };
    }
    if (const auto* r = std::get_if<RamifiedEvent>(&event)) {
        if (r->n < 2) throw std::invalid_argument("ramified event requires degree n >= 2");
        auto checkers = std::make_shared<std::vector<LocalRamificationChecker>>();
        for (std::uint32_t d = 1; d <= r->scan_degree; ++d)
            for (const Place& P : spec.ring_places_of_degree(d)) checkers->emplace_back(P);
        return [checkers](const std::vector<RationalFunction>& tuple) {
            for (const LocalRamificationChecker& c : *checkers)
                if (c.contains(tuple)) return true;
            return false;
        };
    }
    const auto& w = std::get<CoprimalityWindowEvent>(event);
    if (!w.f.eval || !w.g.eval) throw std::invalid_argument("coprimality rules must be callable");
    auto places = std::make_shared<std::vector<Place>>();
    for (std::uint32_t d = w.min_degree + 1; d <= window_max_degree; ++d)
        for (Place& P : spec.ring_places_of_degree(d)) places->push_back(std::move(P));
    auto feval = w.f.eval;
    auto geval = w.g.eval;
    return [places, feval, geval](const std::vector<RationalFunction>& tuple) {
        RationalFunction fv = feval(tuple);
        RationalFunction gv = geval(tuple);
        for (const Place& P : *places)
            if (valuation(fv, P) >= 1 && valuation(gv, P) >= 1) return true;
        return false;
    };
}

}  // namespace detail

/// Runs the experiment across its divisor chain.
inline DensityReport run(const DensityExperiment& experiment) {
    if (experiment.chain.empty()) return {{}, experiment.reference, ""};
    for (std::size_t i = 1; i < experiment.chain.size(); ++i)
        if (!divisor_leq(experiment.chain[i - 1], experiment.chain[i]))
            throw std::invalid_argument("divisor chain must be nondecreasing");

    const std::size_t arity = event_arity(experiment.event);
    DensityReport report;
    report.reference = experiment.reference;
    if (const auto* r = std::get_if<RamifiedEvent>(&experiment.event))
        report.note = "reference truncates the ramified product at place degree " +
                      std::to_string(r->scan_degree) + "; the untruncated density is larger";
    if (const auto* w = std::get_if<CoprimalityWindowEvent>(&experiment.event))
        if (!w->max_degree)
            report.note = "coprimality window scans place degrees in (" +
                          std::to_string(w->min_degree) + ", deg D] at each chain point";

    for (const Divisor& D : experiment.chain) {
        std::uint32_t window_max = 0;
        if (const auto* w = std::get_if<CoprimalityWindowEvent>(&experiment.event))
            window_max = w->max_degree ? *w->max_degree
                                       : static_cast<std::uint32_t>(std::max<std::int64_t>(
                                             D.degree(), w->min_degree));
        auto hit = detail::make_evaluator(experiment.spec, experiment.event, window_max);
        RiemannRochBox box(experiment.spec, D);
        auto [hits, trials] = detail::count_tuples(box, arity, experiment.mode,
                                                   experiment.enum_cap, experiment.samples,
                                                   experiment.seed, experiment.workers, hit);
        ChainPointResult point{D,
                               D.degree(),
                               box.dimension(),
                               trials,
                               hits,
                               BigRational(hits, trials),
                               std::nullopt};
        if (experiment.mode == SamplingMode::Sampled) {
            double p = approx(point.ratio);
            point.standard_error = std::sqrt(p * (1.0 - p) / approx(BigRational(trials)));
        }
        report.points.push_back(std::move(point));
    }
    return report;
}

struct GapSummary {
    std::vector<BigRational> gaps;  // |ratio - reference| per chain point
    bool last_three_nonincreasing = false;
};

/// Distance of each chain point from the reference; in a healthy run the
/// gaps settle, so the last three being nonincreasing is the smoke signal.
inline GapSummary compare(const DensityReport& report) {
    GapSummary summary;
    if (!report.reference) return summary;
    for (const ChainPointResult& p : report.points) {
        BigRational gap = p.ratio - *report.reference;
        if (gap < 0) gap = -gap;
        summary.gaps.push_back(std::move(gap));
    }
    const std::size_t n = summary.gaps.size();
    if (n >= 3)
        summary.last_three_nonincreasing =
            summary.gaps[n - 3] >= summary.gaps[n - 2] && summary.gaps[n - 2] >= summary.gaps[n - 1];
    return summary;
}

struct TailOptions {
    SamplingMode mode = SamplingMode::Exhaustive;
    std::uint64_t enum_cap = default_enum_cap();
    std::uint64_t samples = 100000;
    std::uint64_t seed = 42;
    unsigned workers = 1;
    std::optional<std::uint32_t> max_degree;
};

/// Fraction of tuples in the box of D whose rule values f(y), g(y) share a
/// ring place of degree in (t, max_degree]; max_degree defaults to deg D.
/// Exact in exhaustive mode. This is the quantity that must vanish as
/// t grows for coprimality events to localize.
inline BigRational tail_density(const HolomorphySpec& spec, TupleRule f, TupleRule g,
                                std::size_t arity, std::uint32_t t, const Divisor& D,
                                const TailOptions& options = {}) {
    DensityExperiment experiment{spec,
                                 CoprimalityWindowEvent{std::move(f), std::move(g), arity, t,
                                                        options.max_degree},
                                 {D},
                                 options.mode,
                                 options.enum_cap,
                                 options.samples,
                                 options.seed,
                                 options.workers,
                                 std::nullopt};
    return run(experiment).points.front().ratio;
}

/// Exact product density for a prescribed finite pattern: the local event
/// happens exactly at `selected` among all ring places of degree <= t,
/// giving prod mu(P) over selected times prod (1 - mu(P)) over the rest.
inline BigRational local_global_product(const HolomorphySpec& spec, std::uint32_t t,
                                        const std::vector<Place>& selected,
                                        const std::function<BigRational(const Place&)>& mu) {
    for (std::size_t i = 0; i < selected.size(); ++i) {
        if (selected[i].degree() > static_cast<std::int64_t>(t) || spec.is_excluded(selected[i]))
            throw std::invalid_argument("selected places must be ring places of degree <= t");
        for (std::size_t j = i + 1; j < selected.size(); ++j)
            if (selected[i] == selected[j])
                throw std::invalid_argument("selected places must be distinct");
    }
    BigRational density = 1;
    for (std::uint32_t d = 1; d <= t; ++d) {
        for (const Place& P : spec.ring_places_of_degree(d)) {
            bool inside = false;
            for (const Place& S : selected)
                if (S == P) inside = true;
            const BigRational m = mu(P);
            if (m < 0 || m > 1)
                throw std::domain_error("local measure must lie in [0, 1]");
            density *= inside ? m : 1 - m;
        }
    }
    return density;
}

/// Hit-count reference for the two built-in events (exact for unimodular,
/// certified truncation for ramified); none for custom windows.
inline std::optional<BigRational> auto_reference(const HolomorphySpec& spec,
                                                 const EventDescriptor& event) {
    if (const auto* u = std::get_if<UnimodularEvent>(&event))
        return unimodular_density_exact(spec, u->rows, u->cols);
    if (const auto* r = std::get_if<RamifiedEvent>(&event))
        return ramified_density_truncated_bounds(spec, r->n, r->scan_degree).lower;
    return std::nullopt;
}

}  // namespace ffdensity
