#include "multibetti/selftest.hpp"

#include "multibetti/betti.hpp"
#include "multibetti/matroid.hpp"
#include "multibetti/random_instances.hpp"
#include "multibetti/scarf.hpp"
#include "multibetti/simplicial.hpp"
#include "multibetti/v_complexes.hpp"

#include <algorithm>
#include <sstream>

namespace multibetti {

namespace {

// Per-instance failure collector usable from parallel loops.
struct Failures {
    std::vector<std::string> slots;
    explicit Failures(std::size_t n) : slots(n) {}
    void note(std::size_t k, const std::string& msg) {
        if (slots[k].empty()) slots[k] = msg;
    }
    std::string first() const {
        for (const auto& s : slots)
            if (!s.empty()) return s;
        return {};
    }
    bool clean() const { return first().empty(); }
};

template <typename Fn>
void parallel_for(std::size_t n, bool parallel, Fn&& fn) {
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long k = 0; k < static_cast<long long>(n); ++k) fn(static_cast<std::size_t>(k));
    } else {
        for (std::size_t k = 0; k < n; ++k) fn(k);
    }
}

std::string show(const std::map<int, std::size_t>& m) {
    std::ostringstream ss;
    ss << '{';
    bool first = true;
    for (const auto& [k, v] : m) {
        if (!first) ss << ", ";
        ss << k << ":" << v;
        first = false;
    }
    ss << '}';
    return ss.str();
}

std::map<int, std::size_t> nonzero(const std::map<int, std::size_t>& m) {
    std::map<int, std::size_t> out;
    for (const auto& [k, v] : m)
        if (v != 0) out[k] = v;
    return out;
}

// homology concentrated at `where` with value `expect` (absent when 0)
bool concentrated(const std::map<int, std::size_t>& hom, int where, long long expect) {
    const std::map<int, std::size_t> nz = nonzero(hom);
    if (expect == 0) return nz.empty();
    return nz.size() == 1 && nz.count(where) &&
           nz.at(where) == static_cast<std::size_t>(expect);
}

CriterionResult minors_example_333() {
    CriterionResult r{1, "worked module, alpha=(3,3,3): V dims 2,6,6,1, H at i=2; r(M_a)=1, beta=1",
                      false, ""};
    const Presentation p = sample_two_target_module();
    const Multidegree alpha({3, 3, 3});
    const GradedSubspaceComplex v = build_v_alpha(p, alpha);
    const MinorPair minors = minors_at(p, alpha);
    const bool dims_ok = v.dims() == std::vector<std::size_t>{2, 6, 6, 1};
    const bool hom_ok = concentrated(v.complex.homology_dims(), 2, 1);
    const bool rank_ok = minors.m_lower.rank() == 1;
    const long long beta = beta_invariant(minors.m_lower);
    const bool beta_ok = beta == 1 && beta == beta_invariant_serial(minors.m_lower);
    r.pass = dims_ok && hom_ok && rank_ok && beta_ok;
    std::ostringstream ss;
    ss << "dims " << (dims_ok ? "ok" : "BAD") << ", homology "
       << show(nonzero(v.complex.homology_dims())) << ", r=" << minors.m_lower.rank()
       << ", beta=" << beta;
    r.detail = ss.str();
    return r;
}

CriterionResult minors_example_323() {
    CriterionResult r{2, "worked module, alpha=(3,2,3): V dims 2,6,3, H at i=1; r(M_a)=2, beta=1",
                      false, ""};
    const Presentation p = sample_two_target_module();
    const Multidegree alpha({3, 2, 3});
    const GradedSubspaceComplex v = build_v_alpha(p, alpha);
    const MinorPair minors = minors_at(p, alpha);
    const std::vector<std::size_t> dims = v.dims();
    const bool dims_ok = dims.size() == 4 && dims[0] == 2 && dims[1] == 6 && dims[2] == 3 &&
                         dims[3] == 0; // top summand V_emptyset
    const bool hom_ok = concentrated(v.complex.homology_dims(), 1, 1);
    const long long beta = beta_invariant(minors.m_lower);
    r.pass = dims_ok && hom_ok && minors.m_lower.rank() == 2 && beta == 1;
    std::ostringstream ss;
    ss << "dims " << (dims_ok ? "ok" : "BAD") << ", homology "
       << show(nonzero(v.complex.homology_dims())) << ", r=" << minors.m_lower.rank()
       << ", beta=" << beta;
    r.detail = ss.str();
    return r;
}

CriterionResult oracle_vs_predictor_333() {
    CriterionResult r{3, "worked module: oracle and predictor give beta_{3,(3,3,3)}=1, 0 elsewhere",
                      false, ""};
    const Presentation p = sample_two_target_module();
    const Multidegree alpha({3, 3, 3});
    const std::map<int, std::size_t> oracle = nonzero(koszul_betti(p, alpha));
    std::map<int, std::size_t> oracle_pos;
    for (const auto& [i, v] : oracle)
        if (i >= 1) oracle_pos[i] = v;
    const std::map<int, std::size_t> predicted = nonzero(predicted_betti(p, alpha));
    const std::map<int, std::size_t> expect{{3, 1}};
    r.pass = oracle_pos == expect && predicted == expect;
    r.detail = "oracle " + show(oracle_pos) + ", predicted " + show(predicted);
    return r;
}

CriterionResult genericity_fixtures() {
    CriterionResult r{4, "genericity fixtures match the worked claims", false, ""};
    std::ostringstream bad;

    const Presentation j1 = make_monomial({{2, 0, 0}, {1, 1, 0}, {1, 0, 1}}); // x^2, xy, xz
    if (!j1.is_generic_type()) bad << "[x2,xy,xz not generic type]";
    if (j1.bps_generic()) bad << "[x2,xy,xz reported BPS-generic]";

    // x^3z^2, x^2y^3, xy^2z, y^3z^2 at (3,3,2): minimal sets {1,2},{1,4}
    const Presentation j2 =
        make_monomial({{3, 0, 2}, {2, 3, 0}, {1, 2, 1}, {0, 3, 2}});
    const FiberStructure fs = j2.fiber_structure(Multidegree({3, 3, 2}));
    const std::vector<std::vector<std::size_t>> expect_min{{0, 1}, {0, 3}};
    if (fs.is_generic || fs.minimal_sets != expect_min) bad << "[(3,3,2) fiber wrong]";

    const Presentation j3 = make_monomial({{1, 1, 0}, {1, 0, 1}}); // xy, xz
    if (!j3.is_generic_type()) bad << "[xy,xz not generic type]";

    // xy, xz, x^2, y^2, z^2: not generic type, witnessed at (1,2,2)
    const Presentation j4 =
        make_monomial({{1, 1, 0}, {1, 0, 1}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
    Multidegree witness;
    if (j4.is_generic_type(&witness)) bad << "[frontier ideal generic type]";
    else if (witness != Multidegree({1, 2, 2}))
        bad << "[witness " << witness.to_string() << " != (1,2,2)]";

    r.pass = bad.str().empty();
    r.detail = r.pass ? "4 fixtures" : bad.str();
    return r;
}

CriterionResult hyperplane_complex_suite(const SelftestOptions& opts) {
    CriterionResult r{5, "random matroids: H~_i(Delta_b) = beta(M) at i=r-2, 0 elsewhere", false, ""};
    Rng rng(opts.seed + 5);
    std::vector<RepresentedMatroid> instances;
    for (int t = 0; t < opts.matroid_trials; ++t)
        instances.push_back(random_represented_matroid(rng));

    Failures fails(instances.size());
    parallel_for(instances.size(), opts.parallel, [&](std::size_t k) {
        const RepresentedMatroid& m = instances[k];
        const long long beta = beta_invariant_serial(m);
        const int where = static_cast<int>(m.rank()) - 2;
        for (std::size_t b = 0; b < m.size(); ++b) {
            if (m.is_loop(b)) continue;
            const auto hom = delta_b(m, b).reduced_homology(m.columns().field());
            if (!concentrated(hom, where, beta)) {
                fails.note(k, "instance " + std::to_string(k) + " b=" + m.ground()[b] +
                                  ": homology " + show(nonzero(hom)) + " vs beta " +
                                  std::to_string(beta) + " at " + std::to_string(where));
                return;
            }
        }
    });
    r.pass = fails.clean();
    r.detail = r.pass ? std::to_string(instances.size()) + " matroids, every non-loop b"
                      : fails.first();
    return r;
}

CriterionResult v_complex_suite(const SelftestOptions& opts) {
    CriterionResult r{6, "random matroids: H(V(phi,omega)) = beta at |S|-r, matches shifted Delta_b, "
                         "omega-invariant", false, ""};
    Rng rng(opts.seed + 6);
    std::vector<RepresentedMatroid> instances;
    std::vector<std::vector<std::vector<std::size_t>>> orders;
    for (int t = 0; t < opts.matroid_trials; ++t) {
        instances.push_back(random_represented_matroid(rng));
        std::vector<std::vector<std::size_t>> om;
        for (int j = 0; j < 3; ++j) om.push_back(rng.permutation(instances.back().size()));
        orders.push_back(std::move(om));
    }

    Failures fails(instances.size());
    parallel_for(instances.size(), opts.parallel, [&](std::size_t k) {
        const RepresentedMatroid& m = instances[k];
        const long long beta = beta_invariant_serial(m);
        const int n = static_cast<int>(m.size());
        const int where = n - static_cast<int>(m.rank());
        const auto base = build_v(m.columns()).complex.homology_dims();
        if (!concentrated(base, where, beta)) {
            fails.note(k, "instance " + std::to_string(k) + ": H(V) " + show(nonzero(base)) +
                              " vs beta " + std::to_string(beta) + " at " + std::to_string(where));
            return;
        }
        for (const auto& om : orders[k]) {
            if (build_v(m.columns(), om).complex.homology_dims() != base) {
                fails.note(k, "instance " + std::to_string(k) + ": omega changed homology");
                return;
            }
        }
        for (std::size_t b = 0; b < m.size(); ++b) {
            if (m.is_loop(b)) continue;
            const auto delta = delta_b(m, b).reduced_homology(m.columns().field());
            for (int i = 0; i <= n; ++i) {
                const int j = n - i - 2;
                const std::size_t lhs = base.count(i) ? base.at(i) : 0;
                const std::size_t rhs = delta.count(j) ? delta.at(j) : 0;
                if (lhs != rhs) {
                    fails.note(k, "instance " + std::to_string(k) +
                                      ": H_i(V) != H~_{n-i-2}(Delta_b) at i=" + std::to_string(i));
                    return;
                }
            }
        }
    });
    r.pass = fails.clean();
    r.detail = r.pass ? std::to_string(instances.size()) + " matroids, 3 orderings each"
                      : fails.first();
    return r;
}

struct GenericPair {
    Presentation p;
    Multidegree alpha;
    std::vector<std::size_t> omega;
};

std::vector<GenericPair> collect_generic_pairs(Rng& rng, int want) {
    std::vector<GenericPair> out;
    while (static_cast<int>(out.size()) < want) {
        const Presentation p = random_presentation(rng);
        for (const Multidegree& alpha : p.lcm_lattice().elements) {
            const FiberStructure fs = p.fiber_structure(alpha);
            if (!fs.is_generic) continue;
            out.push_back({p, alpha, rng.permutation_of(*fs.i_lower)});
            if (static_cast<int>(out.size()) == want) break;
        }
    }
    return out;
}

CriterionResult interval_complex_suite(const SelftestOptions& opts) {
    CriterionResult r{7, "random generic (P,alpha): H(V_alpha)=H(V_bar)=beta(M_a) at |I_a|-r, "
                         "exact subcomplex, additive dims", false, ""};
    Rng rng(opts.seed + 7);
    const std::vector<GenericPair> pairs = collect_generic_pairs(rng, opts.pair_trials);

    Failures fails(pairs.size());
    parallel_for(pairs.size(), opts.parallel, [&](std::size_t k) {
        const auto& [p, alpha, omega] = pairs[k];
        const std::string tag = "pair " + std::to_string(k) + " alpha=" + alpha.to_string();
        const MinorPair minors = minors_at(p, alpha);
        const long long beta = beta_invariant_serial(minors.m_lower);
        const int where = static_cast<int>(minors.i_lower.size()) -
                          static_cast<int>(minors.m_lower.rank());

        const GradedSubspaceComplex va = build_v_alpha(p, alpha, omega);
        const GradedSubspaceComplex vb = build_v_bar(p, alpha, omega);
        const auto ha = va.complex.homology_dims();
        const auto hb = vb.complex.homology_dims();
        if (!concentrated(ha, where, beta)) {
            fails.note(k, tag + ": H(V_alpha) " + show(nonzero(ha)) + " vs beta " +
                              std::to_string(beta) + " at " + std::to_string(where));
            return;
        }
        if (nonzero(ha) != nonzero(hb)) {
            fails.note(k, tag + ": H(V_alpha) != H(V_bar)");
            return;
        }
        const SubcomplexEmbedding sub = v_alpha_subcomplex(p, alpha, va, omega);
        if (!sub.sub.is_exact()) {
            fails.note(k, tag + ": tensor subcomplex not exact");
            return;
        }
        for (int i = 0; i <= static_cast<int>(minors.i_lower.size()); ++i) {
            if (va.complex.dim_at(i) != sub.sub.dim_at(i) + vb.complex.dim_at(i)) {
                fails.note(k, tag + ": dims not additive at degree " + std::to_string(i));
                return;
            }
            if (sub.embeddings[i].rank() != sub.sub.dim_at(i)) {
                fails.note(k, tag + ": embedding not injective at degree " + std::to_string(i));
                return;
            }
            if (i >= 1) {
                const Matrix lhs = va.complex.boundary_at(i) * sub.embeddings[i];
                const Matrix rhs = sub.embeddings[i - 1] * sub.sub.boundary_at(i);
                if (!(lhs == rhs)) {
                    fails.note(k, tag + ": embedding is not a chain map at degree " +
                                      std::to_string(i));
                    return;
                }
            }
        }
    });
    r.pass = fails.clean();
    r.detail = r.pass ? std::to_string(pairs.size()) + " generic pairs" : fails.first();
    return r;
}

CriterionResult main_theorem_suite(const SelftestOptions& opts) {
    CriterionResult r{8, "random modules: Koszul oracle equals predictor at every generic degree",
                      false, ""};
    Rng rng(opts.seed + 8);
    std::vector<Presentation> instances{sample_two_target_module()};
    const int want = std::max(20, opts.pair_trials / 2);
    for (int t = 0; t < want; ++t) instances.push_back(random_presentation(rng));

    Failures fails(instances.size());
    parallel_for(instances.size(), opts.parallel, [&](std::size_t k) {
        const TheoremReport report = verify_main_theorem(instances[k], {.parallel = false});
        if (report.pass) return;
        for (const DegreeVerdict& v : report.degrees)
            if (v.generic && !v.pass) {
                fails.note(k, "instance " + std::to_string(k) + " alpha=" + v.alpha.to_string() +
                                  ": oracle " + show(v.oracle) + " predicted " + show(v.predicted));
                return;
            }
    });
    r.pass = fails.clean();
    r.detail = r.pass ? std::to_string(instances.size()) + " modules, all lattice degrees"
                      : fails.first();
    return r;
}

CriterionResult monomial_corollary_suite(const SelftestOptions& opts) {
    CriterionResult r{9, "random monomial ideals: oracle is 1 at i=|I_a| iff I_a=I^a, else 0",
                      false, ""};
    Rng rng(opts.seed + 9);
    std::vector<Presentation> instances;
    for (int t = 0; t < opts.monomial_trials; ++t)
        instances.push_back(random_monomial_ideal(rng));

    Failures fails(instances.size());
    parallel_for(instances.size(), opts.parallel, [&](std::size_t k) {
        const Presentation& p = instances[k];
        ModuleFibers fibers(p);
        for (const Multidegree& alpha : p.lcm_lattice().elements) {
            const FiberStructure fs = p.fiber_structure(alpha);
            if (!fs.is_generic) continue;
            std::map<int, std::size_t> oracle;
            for (const auto& [i, v] : nonzero(koszul_betti(fibers, alpha)))
                if (i >= 1) oracle[i] = v;
            std::map<int, std::size_t> expect;
            if (*fs.i_lower == fs.i_upper)
                expect[static_cast<int>(fs.i_lower->size())] = 1;
            if (oracle != expect) {
                fails.note(k, "ideal " + std::to_string(k) + " alpha=" + alpha.to_string() +
                                  ": oracle " + show(oracle) + " expected " + show(expect));
                return;
            }
        }
    });
    r.pass = fails.clean();
    r.detail = r.pass ? std::to_string(instances.size()) + " ideals" : fails.first();
    return r;
}

CriterionResult scarf_suite(const SelftestOptions& opts) {
    CriterionResult r{10, "generic-type monomial ideals: algebraic Scarf complex is the minimal "
                          "resolution with oracle ranks", false, ""};
    Rng rng(opts.seed + 10);
    std::vector<Presentation> instances{make_monomial({{2, 0, 0}, {1, 1, 0}, {1, 0, 1}})};
    for (int t = 0; t < opts.monomial_trials; ++t)
        instances.push_back(random_monomial_ideal(rng));
    for (int t = 0; t < opts.monomial_trials / 4; ++t)
        instances.push_back(random_bps_monomial_ideal(rng));

    Failures fails(instances.size());
    std::vector<char> generic_type(instances.size(), 0);
    parallel_for(instances.size(), opts.parallel, [&](std::size_t k) {
        const Presentation& p = instances[k];
        if (!p.is_generic_type()) return;
        generic_type[k] = 1;
        const ScarfReport report = verify_scarf_theorem(p, {.parallel = false});
        if (!report.pass()) {
            std::string why = !report.built        ? "differential broken"
                              : !report.resolution ? "not a resolution"
                              : !report.minimal    ? "not minimal"
                                                   : "ranks differ from oracle";
            fails.note(k, "ideal " + std::to_string(k) + ": " + why);
        }
    });

    // pinned totals for x^2, xy, xz
    const std::vector<std::size_t> ranks = algebraic_scarf(instances.front()).total_ranks();
    const bool ranks_ok = ranks == std::vector<std::size_t>{1, 3, 3, 1};
    if (!ranks_ok) fails.note(0, "x2,xy,xz Scarf ranks are not 1,3,3,1");

    const int count = static_cast<int>(std::count(generic_type.begin(), generic_type.end(), 1));
    r.pass = fails.clean() && count > 0;
    r.detail = r.pass ? std::to_string(count) + " generic-type ideals, ranks 1,3,3,1 pinned"
                      : fails.first();
    return r;
}

} // namespace

std::vector<CriterionResult> run_acceptance(const SelftestOptions& opts) {
    std::vector<CriterionResult> out;
    out.push_back(minors_example_333());
    out.push_back(minors_example_323());
    out.push_back(oracle_vs_predictor_333());
    out.push_back(genericity_fixtures());
    out.push_back(hyperplane_complex_suite(opts));
    out.push_back(v_complex_suite(opts));
    out.push_back(interval_complex_suite(opts));
    out.push_back(main_theorem_suite(opts));
    out.push_back(monomial_corollary_suite(opts));
    out.push_back(scarf_suite(opts));
    return out;
}

} // namespace multibetti
