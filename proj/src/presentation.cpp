#include "multibetti/presentation.hpp"

#include "multibetti/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace multibetti {

std::vector<std::size_t> mask_to_indices(std::uint64_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; mask; ++i, mask >>= 1)
        if (mask & 1) out.push_back(i);
    return out;
}

std::uint64_t indices_to_mask(const std::vector<std::size_t>& indices) {
    std::uint64_t mask = 0;
    for (std::size_t i : indices) mask |= (std::uint64_t{1} << i);
    return mask;
}

bool LcmLattice::contains(const Multidegree& alpha) const {
    return std::any_of(elements.begin(), elements.end(),
                       [&](const Multidegree& e) { return e == alpha; });
}

Presentation::Presentation(Field field, std::size_t variables, std::vector<Generator> targets,
                           std::vector<Generator> sources, Matrix coeffs)
    : m_(variables), targets_(std::move(targets)), sources_(std::move(sources)),
      coeffs_(std::move(coeffs)) {
    (void)field; // the matrix carries the field
    validate();
}

void Presentation::validate() const {
    if (m_ == 0) throw ValidationError("variable count must be positive");
    if (targets_.empty()) throw ValidationError("presentation needs at least one target");
    if (sources_.empty()) throw ValidationError("presentation needs at least one source");
    if (sources_.size() > 64) throw ValidationError("source basis larger than 64 is unsupported");
    if (coeffs_.rows() != targets_.size() || coeffs_.cols() != sources_.size())
        throw ValidationError("coefficient matrix shape does not match targets x sources");

    auto check_degrees = [&](const std::vector<Generator>& gens, const char* kind) {
        std::set<std::string> labels;
        for (const Generator& g : gens) {
            if (g.degree.size() != m_)
                throw ValidationError(std::string(kind) + " '" + g.label + "' degree length != variables");
            if (!g.degree.is_nonnegative())
                throw ValidationError(std::string(kind) + " '" + g.label + "' has a negative exponent");
            if (!labels.insert(g.label).second)
                throw ValidationError(std::string("duplicate ") + kind + " label '" + g.label + "'");
        }
    };
    check_degrees(targets_, "target");
    check_degrees(sources_, "source");

    for (std::size_t s = 0; s < sources_.size(); ++s) {
        bool nonzero = false;
        for (std::size_t g = 0; g < targets_.size(); ++g) {
            if (coeffs_.at(g, s) == 0) continue;
            nonzero = true;
            if (!targets_[g].degree.leq(sources_[s].degree))
                throw ValidationError("multihomogeneity violated at (" + targets_[g].label + ", " +
                                      sources_[s].label + "): target degree exceeds source degree");
            if (targets_[g].degree == sources_[s].degree)
                throw ValidationError("minimality violated at (" + targets_[g].label + ", " +
                                      sources_[s].label + "): unit entry at equal degrees");
        }
        if (!nonzero)
            throw ValidationError("minimality violated: source '" + sources_[s].label +
                                  "' has a zero column");
    }
}

Presentation Presentation::monomial_ideal(Field field, const std::vector<Multidegree>& exponents) {
    if (exponents.empty()) throw ValidationError("monomial ideal needs at least one generator");
    const std::size_t m = exponents.front().size();
    std::vector<Generator> targets{{"g1", Multidegree::zero(m)}};
    std::vector<Generator> sources;
    Matrix coeffs(field, 1, exponents.size());
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        sources.push_back({"s" + std::to_string(i + 1), exponents[i]});
        coeffs.set(0, i, Rational(1));
    }
    return Presentation(field, m, std::move(targets), std::move(sources), std::move(coeffs));
}

namespace {

Multidegree json_degree(const nlohmann::json& j, std::size_t expect, const std::string& where) {
    if (!j.is_array()) throw SchemaError(where + ": degree must be an array");
    std::vector<int> exps;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw SchemaError(where + ": degree entries must be integers");
        exps.push_back(x.get<int>());
    }
    if (expect != 0 && exps.size() != expect)
        throw SchemaError(where + ": degree length " + std::to_string(exps.size()) +
                          " != variables " + std::to_string(expect));
    return Multidegree(std::move(exps));
}

Field json_field(const nlohmann::json& doc) {
    if (!doc.contains("field")) return Field::rationals();
    const auto& f = doc.at("field");
    if (f.is_string()) {
        if (f.get<std::string>() == "rational") return Field::rationals();
        throw SchemaError("unknown field tag '" + f.get<std::string>() + "'");
    }
    if (f.is_object() && f.contains("prime"))
        return Field::prime(f.at("prime").get<unsigned long>());
    throw SchemaError("field must be \"rational\" or {\"prime\": p}");
}

} // namespace

Presentation Presentation::parse(const nlohmann::json& doc, std::optional<Field> field_override) {
    if (!doc.is_object()) throw SchemaError("input document must be a JSON object");
    const Field field = field_override ? *field_override : json_field(doc);

    if (doc.contains("monomial_ideal")) {
        const auto& gens = doc.at("monomial_ideal");
        if (!gens.is_array() || gens.empty())
            throw SchemaError("monomial_ideal must be a nonempty array of exponent vectors");
        std::vector<Multidegree> exps;
        for (const auto& g : gens) exps.push_back(json_degree(g, 0, "monomial_ideal"));
        for (const auto& e : exps)
            if (e.size() != exps.front().size())
                throw SchemaError("monomial_ideal: exponent vectors of unequal length");
        if (doc.contains("variables") &&
            doc.at("variables").get<std::size_t>() != exps.front().size())
            throw SchemaError("monomial_ideal: variables does not match exponent length");
        return monomial_ideal(field, exps);
    }

    for (const char* key : {"variables", "targets", "sources", "matrix"})
        if (!doc.contains(key)) throw SchemaError(std::string("missing key '") + key + "'");

    const std::size_t m = doc.at("variables").get<std::size_t>();
    auto parse_gens = [&](const char* key) {
        std::vector<Generator> out;
        for (const auto& g : doc.at(key)) {
            if (!g.is_object() || !g.contains("label") || !g.contains("degree"))
                throw SchemaError(std::string(key) + " entries need label and degree");
            out.push_back({g.at("label").get<std::string>(),
                           json_degree(g.at("degree"), m, key)});
        }
        return out;
    };
    std::vector<Generator> targets = parse_gens("targets");
    std::vector<Generator> sources = parse_gens("sources");

    const auto& rows = doc.at("matrix");
    if (!rows.is_array() || rows.size() != targets.size())
        throw SchemaError("matrix must have one row per target");
    Matrix coeffs(field, targets.size(), sources.size());
    for (std::size_t i = 0; i < targets.size(); ++i) {
        const auto& row = rows[i];
        if (!row.is_array() || row.size() != sources.size())
            throw SchemaError("matrix row " + std::to_string(i) + " must have one entry per source");
        for (std::size_t j = 0; j < sources.size(); ++j) {
            const auto& v = row[j];
            if (v.is_number_integer())
                coeffs.set(i, j, field.from_int(v.get<long long>()));
            else if (v.is_string())
                coeffs.set(i, j, field.parse(v.get<std::string>()));
            else
                throw SchemaError("matrix entries must be integers or \"p/q\" strings");
        }
    }
    return Presentation(field, m, std::move(targets), std::move(sources), std::move(coeffs));
}

Presentation Presentation::parse_file(const std::string& path, std::optional<Field> field_override) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open input file '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError("malformed JSON in '" + path + "': " + e.what());
    }
    return parse(doc, field_override);
}

bool Presentation::is_monomial() const {
    return targets_.size() == 1 && targets_.front().degree == Multidegree::zero(m_);
}

Multidegree Presentation::degree_of_set(const std::vector<std::size_t>& subset) const {
    Multidegree d = Multidegree::zero(m_); // join over the empty set
    for (std::size_t s : subset) d = d.join(sources_[s].degree);
    return d;
}

Multidegree Presentation::degree_of_mask(std::uint64_t mask) const {
    return degree_of_set(mask_to_indices(mask));
}

LcmLattice Presentation::lcm_lattice() const {
    LcmLattice lat;
    for (const Generator& s : sources_) lat.generator_degrees.push_back(s.degree);

    std::set<std::vector<int>> seen;
    std::vector<Multidegree> frontier;
    for (const auto& d : lat.generator_degrees)
        if (seen.insert(d.exponents()).second) frontier.push_back(d);
    // close under pairwise join
    std::vector<Multidegree> all(frontier);
    while (!frontier.empty()) {
        std::vector<Multidegree> next;
        for (const auto& f : frontier)
            for (const auto& g : lat.generator_degrees) {
                Multidegree j = f.join(g);
                if (seen.insert(j.exponents()).second) {
                    next.push_back(j);
                    all.push_back(j);
                }
            }
        frontier = std::move(next);
    }
    std::sort(all.begin(), all.end(), degree_lex_less);
    lat.elements = std::move(all);
    return lat;
}

std::vector<std::size_t> Presentation::upper_set(const Multidegree& alpha) const {
    std::vector<std::size_t> out;
    for (std::size_t s = 0; s < sources_.size(); ++s)
        if (sources_[s].degree.leq(alpha)) out.push_back(s);
    return out;
}

bool Presentation::in_lattice(const Multidegree& alpha) const {
    if (alpha.size() != m_) return false;
    const std::vector<std::size_t> up = upper_set(alpha);
    return !up.empty() && degree_of_set(up) == alpha;
}

FiberStructure Presentation::fiber_structure(const Multidegree& alpha) const {
    FiberStructure fs;
    fs.alpha = alpha;
    fs.i_upper = upper_set(alpha);
    if (fs.i_upper.empty() || degree_of_set(fs.i_upper) != alpha)
        throw DomainError("multidegree " + alpha.to_string() + " is not in the LCM-lattice");

    // Descend from I^alpha removing elements that keep the degree; every set
    // in the fiber sits between some minimal set and I^alpha, so this walk
    // reaches all minimal sets.
    const std::uint64_t top = indices_to_mask(fs.i_upper);
    std::unordered_set<std::uint64_t> visited;
    std::set<std::uint64_t> minimal;
    std::vector<std::uint64_t> stack{top};
    visited.insert(top);
    while (!stack.empty()) {
        const std::uint64_t cur = stack.back();
        stack.pop_back();
        bool is_minimal = true;
        for (std::size_t s : mask_to_indices(cur)) {
            const std::uint64_t sub = cur & ~(std::uint64_t{1} << s);
            if (degree_of_mask(sub) == alpha) {
                is_minimal = false;
                if (visited.insert(sub).second) stack.push_back(sub);
            }
        }
        if (is_minimal) minimal.insert(cur);
    }
    for (std::uint64_t msk : minimal) fs.minimal_sets.push_back(mask_to_indices(msk));
    fs.is_generic = fs.minimal_sets.size() == 1;
    if (fs.is_generic) fs.i_lower = fs.minimal_sets.front();
    return fs;
}

bool Presentation::is_generic_relative(const Multidegree& alpha) const {
    if (!in_lattice(alpha)) return true;
    return fiber_structure(alpha).is_generic;
}

bool Presentation::is_generic_type(Multidegree* witness) const {
    for (const Multidegree& alpha : lcm_lattice().elements) {
        if (!fiber_structure(alpha).is_generic) {
            if (witness) *witness = alpha;
            return false;
        }
    }
    return true;
}

bool Presentation::uniform_rank() const {
    const std::size_t n = sources_.size();
    const std::size_t r = coeffs_.rank();
    // all size-r column subsets must have rank r
    std::vector<std::size_t> idx(r);
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
        if (pos == r) return coeffs_.column_space_dim(idx) == r;
        for (std::size_t c = start; c + (r - pos) <= n; ++c) {
            idx[pos] = c;
            if (!rec(pos + 1, c + 1)) return false;
        }
        return true;
    };
    return rec(0, 0);
}

bool Presentation::bps_generic() const {
    if (targets_.size() != 1)
        throw DomainError("BPS-genericity is defined for monomial-ideal presentations");
    for (std::size_t a = 0; a < sources_.size(); ++a)
        for (std::size_t b = a + 1; b < sources_.size(); ++b)
            for (std::size_t v = 0; v < m_; ++v) {
                const int ea = sources_[a].degree[v];
                if (ea > 0 && ea == sources_[b].degree[v]) return false;
            }
    return true;
}

} // namespace multibetti
