// Command-line front end: validate | lattice | generic | matroid | complex |
// betti | scarf | selftest over a presentation document.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage/schema error,
// 3 presentation validation error.

#include "multibetti/betti.hpp"
#include "multibetti/errors.hpp"
#include "multibetti/matroid.hpp"
#include "multibetti/scarf.hpp"
#include "multibetti/selftest.hpp"
#include "multibetti/v_complexes.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <string>

namespace {

using namespace multibetti;
using nlohmann::json;

struct RunConfig {
    std::string input;
    std::string field_spec;
    std::string alpha_csv;
    std::string format = "table";
    std::uint64_t seed = 20260810;
    std::size_t max_ground = 20;
};

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;

std::optional<Field> parse_field_flag(const std::string& spec) {
    if (spec.empty()) return std::nullopt;
    if (spec == "rational") return Field::rationals();
    if (spec.size() > 1 && spec.front() == 'p')
        return Field::prime(std::stoul(spec.substr(1)));
    throw SchemaError("bad --field value '" + spec + "' (want rational or p<prime>)");
}

Presentation load(const RunConfig& cfg) {
    if (cfg.input.empty()) throw SchemaError("--input is required for this command");
    return Presentation::parse_file(cfg.input, parse_field_flag(cfg.field_spec));
}

Multidegree require_alpha(const RunConfig& cfg, const Presentation& p) {
    if (cfg.alpha_csv.empty()) throw SchemaError("--alpha is required for this command");
    const Multidegree alpha = parse_multidegree_csv(cfg.alpha_csv);
    if (alpha.size() != p.variables())
        throw SchemaError("--alpha has " + std::to_string(alpha.size()) + " components, expected " +
                          std::to_string(p.variables()));
    return alpha;
}

// Reports carry the field and ordering convention so runs are reproducible.
void print_header(const Presentation& p, const RunConfig& cfg) {
    if (cfg.format != "table") return;
    std::cout << "# field: " << p.field().name() << "  ordering: source order  seed: " << cfg.seed
              << "\n";
}

json header_json(const Presentation& p, const RunConfig& cfg) {
    return json{{"field", p.field().name()}, {"ordering", "source order"}, {"seed", cfg.seed}};
}

std::string labels_of(const Presentation& p, const std::vector<std::size_t>& idx) {
    std::string out = "{";
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k) out += ",";
        out += p.sources()[idx[k]].label;
    }
    return out + "}";
}

json labels_json(const Presentation& p, const std::vector<std::size_t>& idx) {
    json out = json::array();
    for (std::size_t s : idx) out.push_back(p.sources()[s].label);
    return out;
}

void emit(const RunConfig& cfg, const json& doc, const std::vector<std::string>& csv_lines) {
    if (cfg.format == "json") {
        std::cout << doc.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        for (const auto& line : csv_lines) std::cout << line << "\n";
    }
}

int cmd_validate(const RunConfig& cfg) {
    const Presentation p = load(cfg);
    print_header(p, cfg);
    if (cfg.format == "table") {
        std::cout << "presentation ok: " << p.variables() << " variables, " << p.targets().size()
                  << " targets, " << p.source_count() << " sources over " << p.field().name()
                  << "\n";
        std::cout << "multihomogeneity: ok\nminimality: ok\n";
    } else {
        json doc = header_json(p, cfg);
        doc["valid"] = true;
        doc["variables"] = p.variables();
        doc["targets"] = p.targets().size();
        doc["sources"] = p.source_count();
        emit(cfg, doc, {"valid,variables,targets,sources",
                        "true," + std::to_string(p.variables()) + "," +
                            std::to_string(p.targets().size()) + "," +
                            std::to_string(p.source_count())});
    }
    return kExitOk;
}

int cmd_lattice(const RunConfig& cfg) {
    const Presentation p = load(cfg);
    const LcmLattice lat = p.lcm_lattice();
    print_header(p, cfg);
    json degrees = json::array();
    std::vector<std::string> csv{"alpha"};
    for (const Multidegree& a : lat.elements) {
        if (cfg.format == "table") std::cout << a.to_string() << "\n";
        degrees.push_back(a.exponents());
        std::string flat;
        for (std::size_t i = 0; i < a.size(); ++i) flat += (i ? ";" : "") + std::to_string(a[i]);
        csv.push_back(flat);
    }
    if (cfg.format == "table")
        std::cout << "lattice size: " << lat.elements.size() << "\n";
    json doc = header_json(p, cfg);
    doc["lattice"] = degrees;
    emit(cfg, doc, csv);
    return kExitOk;
}

int cmd_generic(const RunConfig& cfg) {
    const Presentation p = load(cfg);
    print_header(p, cfg);
    json entries = json::array();
    std::vector<std::string> csv{"alpha,generic,i_upper,minimal_sets"};
    bool all_generic = true;
    Multidegree witness;
    for (const Multidegree& a : p.lcm_lattice().elements) {
        const FiberStructure fs = p.fiber_structure(a);
        if (!fs.is_generic && all_generic) {
            all_generic = false;
            witness = a;
        }
        std::string minsets;
        for (std::size_t k = 0; k < fs.minimal_sets.size(); ++k)
            minsets += (k ? " " : "") + labels_of(p, fs.minimal_sets[k]);
        if (cfg.format == "table") {
            std::cout << a.to_string() << "  I^a=" << labels_of(p, fs.i_upper)
                      << "  minimal: " << minsets
                      << (fs.is_generic ? "  generic, I_a=" + labels_of(p, *fs.i_lower)
                                        : "  NOT generic")
                      << "\n";
        }
        json e{{"alpha", a.exponents()},
               {"generic", fs.is_generic},
               {"i_upper", labels_json(p, fs.i_upper)}};
        json mins = json::array();
        for (const auto& ms : fs.minimal_sets) mins.push_back(labels_json(p, ms));
        e["minimal_sets"] = mins;
        if (fs.is_generic) e["i_lower"] = labels_json(p, *fs.i_lower);
        entries.push_back(e);
        csv.push_back(a.to_string() + "," + (fs.is_generic ? "yes" : "no") + "," +
                      labels_of(p, fs.i_upper) + "," + minsets);
    }
    if (cfg.format == "table") {
        std::cout << "generic type: " << (all_generic ? "yes" : "no");
        if (!all_generic) std::cout << "  (witness " << witness.to_string() << ")";
        std::cout << "\n";
    }
    json doc = header_json(p, cfg);
    doc["degrees"] = entries;
    doc["generic_type"] = all_generic;
    if (!all_generic) doc["witness"] = witness.exponents();
    emit(cfg, doc, csv);
    return kExitOk;
}

int cmd_matroid(const RunConfig& cfg) {
    const Presentation p = load(cfg);
    print_header(p, cfg);
    const RepresentedMatroid m = matroid_of(p);
    json doc = header_json(p, cfg);
    std::vector<std::string> csv;

    if (cfg.alpha_csv.empty()) {
        // whole-matroid summary
        const long long beta = beta_invariant(m, cfg.max_ground);
        std::vector<std::string> loop_labels;
        for (std::size_t x = 0; x < m.size(); ++x)
            if (m.is_loop(x)) loop_labels.push_back(m.ground()[x]);
        if (cfg.format == "table") {
            std::cout << "rank: " << m.rank() << "\nbeta: " << beta << "\nloops:";
            for (const auto& l : loop_labels) std::cout << " " << l;
            std::cout << "\ncircuits:";
            for (std::uint64_t c : m.circuits()) std::cout << " " << m.subset_labels(c);
            std::cout << "\nhyperplanes:";
            for (std::uint64_t h : m.hyperplanes()) std::cout << " " << m.subset_labels(h);
            std::cout << "\n";
        }
        doc["rank"] = m.rank();
        doc["beta"] = beta;
        doc["loops"] = loop_labels;
        json circuits = json::array(), hyperplanes = json::array();
        for (std::uint64_t c : m.circuits()) circuits.push_back(m.subset_labels(c));
        for (std::uint64_t h : m.hyperplanes()) hyperplanes.push_back(m.subset_labels(h));
        doc["circuits"] = circuits;
        doc["hyperplanes"] = hyperplanes;
        csv = {"rank,beta", std::to_string(m.rank()) + "," + std::to_string(beta)};
        emit(cfg, doc, csv);
        return kExitOk;
    }

    const Multidegree alpha = require_alpha(cfg, p);
    const MinorPair minors = minors_at(p, alpha);
    const long long beta = beta_invariant(minors.m_lower, cfg.max_ground);
    std::vector<std::string> loop_labels;
    for (std::size_t x = 0; x < minors.m_lower.size(); ++x)
        if (minors.m_lower.is_loop(x)) loop_labels.push_back(minors.m_lower.ground()[x]);
    if (cfg.format == "table") {
        std::cout << "alpha=" << alpha.to_string() << "  I^a=" << labels_of(p, minors.i_upper)
                  << "  I_a=" << labels_of(p, minors.i_lower)
                  << "  I(a)=" << labels_of(p, minors.i_of_alpha) << "\n";
        std::cout << "r(M^a)=" << minors.m_upper.rank() << "  r(M_a)=" << minors.m_lower.rank()
                  << "  beta(M_a)=" << beta << "\nloops of M_a:";
        for (const auto& l : loop_labels) std::cout << " " << l;
        std::cout << "\n";
    }
    doc["alpha"] = alpha.exponents();
    doc["i_upper"] = labels_json(p, minors.i_upper);
    doc["i_lower"] = labels_json(p, minors.i_lower);
    doc["i_of_alpha"] = labels_json(p, minors.i_of_alpha);
    doc["rank_upper"] = minors.m_upper.rank();
    doc["rank_lower"] = minors.m_lower.rank();
    doc["beta"] = beta;
    doc["loops_lower"] = loop_labels;
    csv = {"alpha,rank_upper,rank_lower,beta",
           alpha.to_string() + "," + std::to_string(minors.m_upper.rank()) + "," +
               std::to_string(minors.m_lower.rank()) + "," + std::to_string(beta)};
    emit(cfg, doc, csv);
    return kExitOk;
}

int cmd_complex(const RunConfig& cfg) {
    const Presentation p = load(cfg);
    const Multidegree alpha = require_alpha(cfg, p);
    print_header(p, cfg);
    const GradedSubspaceComplex v = build_v_alpha(p, alpha);
    json doc = header_json(p, cfg);
    doc["alpha"] = alpha.exponents();
    doc["dims"] = v.dims();
    json hom = json::object();
    std::string hom_flat;
    for (const auto& [i, h] : v.complex.homology_dims()) {
        if (h == 0) continue;
        hom[std::to_string(i)] = h;
        hom_flat += (hom_flat.empty() ? "" : " ") + std::to_string(i) + ":" + std::to_string(h);
    }
    doc["homology"] = hom;
    if (cfg.format == "table") {
        std::cout << "V(alpha) dims (degree 0..):";
        for (std::size_t d : v.dims()) std::cout << " " << d;
        std::cout << "\nhomology: " << (hom_flat.empty() ? "zero" : hom_flat) << "\n";
    }
    std::string dims_flat;
    for (std::size_t d : v.dims()) dims_flat += (dims_flat.empty() ? "" : ";") + std::to_string(d);
    emit(cfg, doc, {"alpha,dims,homology", alpha.to_string() + "," + dims_flat + "," + hom_flat});
    return kExitOk;
}

int cmd_betti(const RunConfig& cfg) {
    const Presentation p = load(cfg);
    print_header(p, cfg);

    // the lattice sweep fans out per degree; --alpha restricts to one
    std::vector<DegreeVerdict> verdicts;
    if (cfg.alpha_csv.empty()) {
        verdicts = verify_main_theorem(p, {.parallel = true}).degrees;
    } else {
        const Multidegree alpha = require_alpha(cfg, p);
        DegreeVerdict v;
        v.alpha = alpha;
        v.generic = p.is_generic_relative(alpha);
        for (const auto& [i, val] : koszul_betti(p, alpha))
            if (i >= 1 && val != 0) v.oracle[i] = val;
        if (v.generic) {
            v.predicted = predicted_betti(p, alpha);
            v.pass = v.oracle == v.predicted && v.oracle.size() <= 1;
        }
        verdicts.push_back(std::move(v));
    }

    json rows = json::array();
    std::vector<std::string> csv{"alpha,oracle,predicted,verdict"};
    bool mismatch = false;
    for (const DegreeVerdict& dv : verdicts) {
        const Multidegree& alpha = dv.alpha;
        const bool in_lat = p.in_lattice(alpha);
        const bool generic = dv.generic;
        const std::map<int, std::size_t>& oracle = dv.oracle;
        const std::map<int, std::size_t>& predicted = dv.predicted;

        std::string verdict;
        if (!generic)
            verdict = "theorem silent (not generic)";
        else if (dv.pass)
            verdict = "MATCH";
        else {
            verdict = "MISMATCH";
            mismatch = true;
        }

        auto flat = [](const std::map<int, std::size_t>& m) {
            std::string out;
            for (const auto& [i, v] : m)
                out += (out.empty() ? "" : " ") + std::string("i=") + std::to_string(i) + "->" +
                       std::to_string(v);
            return out.empty() ? std::string("0") : out;
        };
        if (cfg.format == "table") {
            std::cout << alpha.to_string() << (in_lat ? "" : " (outside lattice)")
                      << "  oracle: " << flat(oracle);
            if (generic) std::cout << "  predicted: " << flat(predicted);
            std::cout << "  " << verdict << "\n";
        }
        json row{{"alpha", alpha.exponents()}, {"generic", generic}, {"verdict", verdict}};
        json o = json::object(), q = json::object();
        for (const auto& [i, v] : oracle) o[std::to_string(i)] = v;
        for (const auto& [i, v] : predicted) q[std::to_string(i)] = v;
        row["oracle"] = o;
        row["predicted"] = q;
        rows.push_back(row);
        csv.push_back(alpha.to_string() + "," + flat(oracle) + "," +
                      (generic ? flat(predicted) : "-") + "," + verdict);
    }
    json doc = header_json(p, cfg);
    doc["degrees"] = rows;
    doc["pass"] = !mismatch;
    // beta_0 data comes from the targets of the presentation
    json b0 = json::array();
    for (const BettiRecord& rec : betti_table(p, BettiMode::oracle, {.parallel = false}))
        if (rec.i == 0) b0.push_back({{"alpha", rec.alpha.exponents()}, {"value", rec.value}});
    doc["beta0"] = b0;
    emit(cfg, doc, csv);
    return mismatch ? kExitMismatch : kExitOk;
}

int cmd_scarf(const RunConfig& cfg) {
    const Presentation p = load(cfg);
    if (p.targets().size() != 1)
        throw SchemaError("scarf requires a monomial presentation (single target); "
                          "use `generic` and `betti` for modules with several targets");
    print_header(p, cfg);
    const ScarfReport report = verify_scarf_theorem(p);
    json doc = header_json(p, cfg);
    doc["generic_type"] = report.generic_type;
    doc["total_ranks"] = report.total_ranks;
    doc["minimal_resolution"] = report.generic_type && report.pass();
    if (cfg.format == "table") {
        std::cout << "generic type: " << (report.generic_type ? "yes" : "no");
        if (!report.generic_type) std::cout << "  (witness " << report.witness.to_string() << ")";
        std::cout << "\nScarf ranks:";
        for (std::size_t r : report.total_ranks) std::cout << " " << r;
        std::cout << "\n";
        if (report.generic_type) {
            std::cout << "minimal resolution: " << (report.pass() ? "yes" : "NO") << "\n";
            if (!report.resolution)
                for (const Multidegree& a : report.failing)
                    std::cout << "  non-exact strand at " << a.to_string() << "\n";
            for (const auto& mm : report.mismatches)
                std::cout << "  rank mismatch at i=" << mm.i << " alpha=" << mm.alpha.to_string()
                          << ": scarf " << mm.scarf_rank << " vs oracle " << mm.oracle_value
                          << "\n";
        } else {
            std::cout << "informational: Scarf complex "
                      << (report.resolution ? "still resolves" : "fails to resolve") << "\n";
            for (const Multidegree& a : report.failing)
                std::cout << "  non-exact strand at " << a.to_string() << "\n";
        }
    }
    if (!report.generic_type) {
        doc["witness"] = report.witness.exponents();
        doc["resolves_anyway"] = report.resolution;
    }
    json failing = json::array();
    for (const Multidegree& a : report.failing) failing.push_back(a.exponents());
    doc["failing_strands"] = failing;
    std::string ranks_flat;
    for (std::size_t r : report.total_ranks)
        ranks_flat += (ranks_flat.empty() ? "" : ";") + std::to_string(r);
    emit(cfg, doc, {"generic_type,minimal_resolution,ranks",
                    std::string(report.generic_type ? "yes" : "no") + "," +
                        (report.generic_type && report.pass() ? "yes" : "no") + "," + ranks_flat});
    return report.pass() ? kExitOk : kExitMismatch;
}

int cmd_selftest(const RunConfig& cfg) {
    SelftestOptions opts;
    opts.seed = cfg.seed;
    bool all = true;
    for (const CriterionResult& r : run_acceptance(opts)) {
        std::cout << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << " — " << r.name
                  << " (" << r.detail << ")\n";
        all = all && r.pass;
    }
    std::cout << (all ? "selftest: all criteria passed" : "selftest: FAILURES above") << "\n";
    return all ? kExitOk : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multigraded Betti numbers via matroid minors, with an exact Koszul oracle"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--input", cfg.input, "presentation JSON document");
    app.add_option("--field", cfg.field_spec, "rational | p<prime> (overrides the document)");
    app.add_option("--alpha", cfg.alpha_csv, "multidegree as comma-separated integers");
    app.add_option("--format", cfg.format, "table | json | csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_option("--seed", cfg.seed, "seed for randomized suites");
    app.add_option("--max-ground", cfg.max_ground, "beta-invariant ground set limit");

    const std::pair<const char*, const char*> commands[] = {
        {"validate", "parse and check the presentation"},
        {"lattice", "print the LCM-lattice"},
        {"generic", "fiber data per lattice degree and the generic-type verdict"},
        {"matroid", "matroid summary, or the minors at --alpha"},
        {"complex", "dims and homology of the signed-inclusion complex at --alpha"},
        {"betti", "oracle vs predicted Betti numbers with MATCH verdicts"},
        {"scarf", "Scarf complex and minimal-resolution verification"},
        {"selftest", "run the acceptance suite"},
    };
    for (const auto& [name, desc] : commands) app.add_subcommand(name, desc)->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        if (command == "validate") return cmd_validate(cfg);
        if (command == "lattice") return cmd_lattice(cfg);
        if (command == "generic") return cmd_generic(cfg);
        if (command == "matroid") return cmd_matroid(cfg);
        if (command == "complex") return cmd_complex(cfg);
        if (command == "betti") return cmd_betti(cfg);
        if (command == "scarf") return cmd_scarf(cfg);
        if (command == "selftest") return cmd_selftest(cfg);
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
