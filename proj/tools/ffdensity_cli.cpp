// Command line front end: exact and truncated density computations plus
// exhaustive / sampled counting experiments over holomorphy rings.
//
// Exit codes: 0 success, 1 usage or domain error, 2 internal error.

#include "ffdensity/ffdensity.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;
using namespace ffdensity;

struct OutputOptions {
    std::string format = "json";
};

void add_output_flag(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--output", out.format, "Output format: json or table")
        ->check(CLI::IsMember({"json", "table"}));
}

/// Flat JSON object -> "key: value" lines; arrays/objects get one line each.
void emit(const OutputOptions& out, const json& doc) {
    if (out.format == "json") {
        std::cout << doc.dump() << "\n";
        return;
    }
    for (const auto& [key, value] : doc.items()) {
        if (value.is_array()) {
            std::cout << key << ":\n";
            for (const auto& item : value)
                std::cout << "  " << (item.is_string() ? item.get<std::string>() : item.dump())
                          << "\n";
        } else if (value.is_string()) {
            std::cout << key << ": " << value.get<std::string>() << "\n";
        } else {
            std::cout << key << ": " << value.dump() << "\n";
        }
    }
}

json bounds_to_json(const RationalBounds& b) {
    json doc;
    doc["lower"] = to_fraction_string(b.lower);
    doc["upper"] = to_fraction_string(b.upper);
    doc["lower_value"] = approx(b.lower);
    doc["upper_value"] = approx(b.upper);
    doc["exact"] = b.exact;
    return doc;
}

json point_to_json(const ChainPointResult& pt) {
    json doc;
    doc["divisor"] = format_divisor(pt.divisor);
    doc["degree"] = pt.divisor_degree;
    doc["dimension"] = pt.box_dimension;
    doc["trials"] = pt.trials.str();
    doc["hits"] = pt.hits.str();
    doc["ratio"] = to_fraction_string(pt.ratio);
    doc["estimate"] = approx(pt.ratio);
    if (pt.standard_error) doc["stderr"] = *pt.standard_error;
    return doc;
}

int run_places(const std::string& ring_text, std::int64_t degree, bool include_excluded,
               const OutputOptions& out) {
    HolomorphySpec spec = parse_holomorphy_spec(ring_text);
    std::vector<Place> places =
        include_excluded ? places_of_degree(spec.field(), degree)
                         : spec.ring_places_of_degree(degree);
    json doc;
    doc["ring"] = format_holomorphy_spec(spec);
    doc["degree"] = degree;
    doc["count"] = places.size();
    json list = json::array();
    for (const Place& P : places) list.push_back(format_place(P));
    doc["places"] = list;
    emit(out, doc);
    return 0;
}

int run_eisenstein(const std::string& ring_text, const std::string& place_text,
                   const std::string& coeffs_text, const OutputOptions& out) {
    HolomorphySpec spec = parse_holomorphy_spec(ring_text);
    Place P = parse_place(spec.field(), place_text);
    std::vector<RationalFunction> coeffs = parse_coefficient_list(spec.field(), coeffs_text);
    if (coeffs.size() < 2)
        throw std::invalid_argument("need at least two coefficients (degree >= 1)");
    LocalRamificationChecker checker(P);
    json doc;
    doc["place"] = format_place(P);
    bool direct = true;
    try {
        direct = is_eisenstein(PolyOverField(coeffs), P);
    } catch (const std::invalid_argument&) {
        direct = false;  // zero leading coefficient: not a degree-n polynomial
    }
    doc["eisenstein"] = direct;
    auto witness = checker.shift_witness(coeffs);
    doc["shift_witness"] = witness ? json(format_rational_function(*witness)) : json(nullptr);
    bool inv = checker.inversion_member(coeffs);
    doc["via_inversion"] = inv;
    doc["nicely_ramified"] = witness.has_value() || inv;
    emit(out, doc);
    return 0;
}

int run_ramified_density(const std::string& ring_text, std::uint32_t n, std::int64_t max_degree,
                         const OutputOptions& out) {
    HolomorphySpec spec = parse_holomorphy_spec(ring_text);
    RationalBounds bounds = ramified_density_truncated_bounds(spec, n, max_degree);
    json doc;
    doc["ring"] = format_holomorphy_spec(spec);
    doc["n"] = n;
    doc["max_degree"] = max_degree;
    json b = bounds_to_json(bounds);
    for (auto& [key, value] : b.items()) doc[key] = value;
    if (n >= 3) doc["tail_bound"] = approx(ramified_tail_bound(spec, n, max_degree));
    emit(out, doc);
    return 0;
}

int run_unimodular(const std::string& ring_text, const std::string& matrix_text,
                   const OutputOptions& out) {
    HolomorphySpec spec = parse_holomorphy_spec(ring_text);
    auto rows = parse_matrix_rows(spec.field(), matrix_text);
    std::vector<RationalFunction> flat;
    for (auto& row : rows)
        for (auto& entry : row) flat.push_back(std::move(entry));
    const std::size_t n_rows = rows.size();
    const std::size_t n_cols = flat.size() / n_rows;
    PolyMatrix M(spec, n_rows, n_cols, std::move(flat));
    json doc;
    doc["rows"] = M.rows();
    doc["cols"] = M.cols();
    doc["unimodular"] = is_unimodular(M, spec);
    emit(out, doc);
    return 0;
}

int run_unimodular_density(const std::string& ring_text, std::size_t rows, std::size_t cols,
                           const std::string& lpoly_text, const OutputOptions& out) {
    HolomorphySpec spec = parse_holomorphy_spec(ring_text);
    LPolynomial L = lpoly_text.empty() ? LPolynomial::trivial() : parse_lpolynomial(lpoly_text);
    BigRational density = unimodular_density_exact(spec, rows, cols, L);
    json doc;
    doc["ring"] = format_holomorphy_spec(spec);
    doc["rows"] = rows;
    doc["cols"] = cols;
    doc["density"] = to_fraction_string(density);
    doc["value"] = approx(density);
    emit(out, doc);
    return 0;
}

int run_zeta(const std::string& ring_text, std::int64_t s, const std::string& lpoly_text,
             std::int64_t truncate, const OutputOptions& out) {
    HolomorphySpec spec = parse_holomorphy_spec(ring_text);
    LPolynomial L = lpoly_text.empty() ? LPolynomial::trivial() : parse_lpolynomial(lpoly_text);
    json doc;
    doc["ring"] = format_holomorphy_spec(spec);
    doc["s"] = s;
    if (truncate >= 0) {
        RationalBounds bounds = zeta_ring_truncated_bounds(spec, s, truncate);
        doc["max_degree"] = truncate;
        json b = bounds_to_json(bounds);
        for (auto& [key, value] : b.items()) doc[key] = value;
    } else {
        BigRational value = zeta_ring(spec, s, L);
        doc["value"] = to_fraction_string(value);
        doc["approx"] = approx(value);
    }
    emit(out, doc);
    return 0;
}

int run_local_measure(const std::string& ring_text, const std::string& place_text, std::uint32_t n,
                      bool brute, const OutputOptions& out) {
    HolomorphySpec spec = parse_holomorphy_spec(ring_text);
    Place P = parse_place(spec.field(), place_text);
    json doc;
    doc["place"] = format_place(P);
    doc["n"] = n;
    BigRational measure = local_ramified_measure(P, n);
    doc["measure"] = to_fraction_string(measure);
    doc["value"] = approx(measure);
    if (brute) doc["bruteforce"] = to_fraction_string(local_ramified_measure_bruteforce(P, n));
    emit(out, doc);
    return 0;
}

int run_experiment(const std::string& config_path, const std::string& mode_override,
                   std::int64_t samples_override, std::int64_t seed_override,
                   std::int64_t workers_override, std::int64_t enum_cap_override,
                   const OutputOptions& out) {
    std::ifstream in(config_path);
    if (!in) throw std::invalid_argument("cannot open config file '" + config_path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    DensityExperiment experiment = parse_experiment_config(buffer.str());
    if (!mode_override.empty()) {
        if (mode_override == "exhaustive") experiment.mode = SamplingMode::Exhaustive;
        else if (mode_override == "sampled") experiment.mode = SamplingMode::Sampled;
        else throw std::invalid_argument("mode must be exhaustive or sampled");
    }
    if (samples_override >= 0) experiment.samples = static_cast<std::uint64_t>(samples_override);
    if (seed_override >= 0) experiment.seed = static_cast<std::uint64_t>(seed_override);
    if (workers_override >= 0) experiment.workers = static_cast<unsigned>(workers_override);
    if (enum_cap_override >= 0) experiment.enum_cap = static_cast<std::uint64_t>(enum_cap_override);

    DensityReport report = run(experiment);
    json doc;
    doc["ring"] = format_holomorphy_spec(experiment.spec);
    doc["mode"] = experiment.mode == SamplingMode::Exhaustive ? "exhaustive" : "sampled";
    if (experiment.mode == SamplingMode::Sampled) {
        doc["samples"] = experiment.samples;
        doc["seed"] = experiment.seed;
    }
    json points = json::array();
    for (const ChainPointResult& pt : report.points) points.push_back(point_to_json(pt));
    doc["points"] = points;
    if (report.reference) {
        doc["reference"] = to_fraction_string(*report.reference);
        doc["reference_value"] = approx(*report.reference);
        GapSummary gaps = compare(report);
        json gap_list = json::array();
        for (const BigRational& gap : gaps.gaps) gap_list.push_back(approx(gap));
        doc["gaps"] = gap_list;
        doc["last_three_nonincreasing"] = gaps.last_three_nonincreasing;
    }
    if (!report.note.empty()) doc["note"] = report.note;
    emit(out, doc);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Densities of polynomial events over holomorphy rings of rational function "
                 "fields: exact local products, certified truncations, and counting experiments "
                 "over Riemann-Roch boxes."};
    app.require_subcommand(1);

    std::string ring = "q=2; excluded=inf";
    OutputOptions out;

    auto* places_cmd = app.add_subcommand("places", "List places of a given degree");
    std::int64_t places_degree = 1;
    bool places_all = false;
    places_cmd->add_option("--ring", ring, "Holomorphy ring, e.g. \"q=2; excluded=inf\"");
    places_cmd->add_option("--degree", places_degree, "Place degree")->required();
    places_cmd->add_flag("--include-excluded", places_all,
                         "List all places of the field, not just ring places");
    add_output_flag(places_cmd, out);

    auto* eis_cmd = app.add_subcommand(
        "eisenstein", "Test a coefficient tuple for the shifted Eisenstein property at a place");
    std::string place_text = "(x)";
    std::string coeffs_text;
    eis_cmd->add_option("--ring", ring, "Holomorphy ring");
    eis_cmd->add_option("--place", place_text, "Place, e.g. \"(x)\" or \"inf\"")->required();
    eis_cmd->add_option("--coeffs", coeffs_text, "Ascending coefficients, e.g. \"[x, 0, 1]\"")
        ->required();
    add_output_flag(eis_cmd, out);

    auto* rden_cmd = app.add_subcommand(
        "ramified-density", "Certified truncated density of picking up a ramified place");
    std::uint32_t rden_n = 2;
    std::int64_t rden_t = 1;
    rden_cmd->add_option("--ring", ring, "Holomorphy ring");
    rden_cmd->add_option("--n", rden_n, "Polynomial degree n >= 2")->required();
    rden_cmd->add_option("--max-degree", rden_t, "Truncation degree t >= 1")->required();
    add_output_flag(rden_cmd, out);

    auto* unim_cmd = app.add_subcommand("unimodular", "Test a matrix over the ring");
    std::string matrix_text;
    unim_cmd->add_option("--ring", ring, "Holomorphy ring");
    unim_cmd->add_option("--matrix", matrix_text, "Matrix, e.g. \"[[1, 0], [x, 1+x]]\" (k rows)")
        ->required();
    add_output_flag(unim_cmd, out);

    auto* uden_cmd =
        app.add_subcommand("unimodular-density", "Exact density of unimodular k x m matrices");
    std::size_t uden_rows = 1, uden_cols = 2;
    std::string lpoly_text;
    uden_cmd->add_option("--ring", ring, "Holomorphy ring");
    uden_cmd->add_option("--rows", uden_rows, "Row count k")->required();
    uden_cmd->add_option("--cols", uden_cols, "Column count m > k")->required();
    uden_cmd->add_option("--lpoly", lpoly_text, "Numerator coefficients, e.g. \"1,0,2\"");
    add_output_flag(uden_cmd, out);

    auto* zeta_cmd = app.add_subcommand("zeta", "Zeta value of the ring at an integer s >= 2");
    std::int64_t zeta_s = 2;
    std::int64_t zeta_trunc = -1;
    zeta_cmd->add_option("--ring", ring, "Holomorphy ring");
    zeta_cmd->add_option("--s", zeta_s, "Evaluation point s >= 2")->required();
    zeta_cmd->add_option("--lpoly", lpoly_text, "Numerator coefficients, e.g. \"1,0,2\"");
    zeta_cmd->add_option("--truncate", zeta_trunc,
                         "Certified Euler product over places of degree <= t");
    add_output_flag(zeta_cmd, out);

    auto* lm_cmd = app.add_subcommand("local-measure",
                                      "Local measure of the shifted Eisenstein event at a place");
    std::uint32_t lm_n = 2;
    bool lm_brute = false;
    lm_cmd->add_option("--ring", ring, "Holomorphy ring");
    lm_cmd->add_option("--place", place_text, "Place, e.g. \"(x)\" or \"inf\"")->required();
    lm_cmd->add_option("--n", lm_n, "Polynomial degree n >= 2")->required();
    lm_cmd->add_flag("--bruteforce", lm_brute, "Also count residue tuples exhaustively");
    add_output_flag(lm_cmd, out);

    auto* run_cmd = app.add_subcommand("run", "Run a density experiment from a config file");
    std::string config_path;
    std::string mode_override;
    std::int64_t samples_override = -1, seed_override = -1, workers_override = -1,
                 enum_cap_override = -1;
    run_cmd->add_option("--config", config_path, "Config file, one key=value per line")
        ->required();
    run_cmd->add_option("--mode", mode_override, "Override: exhaustive or sampled");
    run_cmd->add_option("--samples", samples_override, "Override sample count");
    run_cmd->add_option("--seed", seed_override, "Override RNG seed");
    run_cmd->add_option("--workers", workers_override, "Override worker thread count");
    run_cmd->add_option("--max-enum", enum_cap_override, "Override exhaustive enumeration cap");
    add_output_flag(run_cmd, out);

    try {
        app.parse(argc, argv);
        if (places_cmd->parsed()) return run_places(ring, places_degree, places_all, out);
        if (eis_cmd->parsed()) return run_eisenstein(ring, place_text, coeffs_text, out);
        if (rden_cmd->parsed()) return run_ramified_density(ring, rden_n, rden_t, out);
        if (unim_cmd->parsed()) return run_unimodular(ring, matrix_text, out);
        if (uden_cmd->parsed())
            return run_unimodular_density(ring, uden_rows, uden_cols, lpoly_text, out);
        if (zeta_cmd->parsed()) return run_zeta(ring, zeta_s, lpoly_text, zeta_trunc, out);
        if (lm_cmd->parsed()) return run_local_measure(ring, place_text, lm_n, lm_brute, out);
        if (run_cmd->parsed())
            return run_experiment(config_path, mode_override, samples_override, seed_override,
                                  workers_override, enum_cap_override, out);
        std::cerr << "error: no subcommand\n";
        return 1;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
