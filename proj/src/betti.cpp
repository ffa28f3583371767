#include "multibetti/betti.hpp"

#include "multibetti/errors.hpp"
#include "multibetti/matroid.hpp"

#include <algorithm>
#include <bit>

namespace multibetti {

namespace {

GradedPiece compute_piece(const Presentation& p, const Multidegree& beta) {
    GradedPiece out;
    out.beta = beta;
    if (!beta.is_nonnegative()) return out; // L_beta = 0 below the first orthant
    for (std::size_t g = 0; g < p.targets().size(); ++g)
        if (p.targets()[g].degree.leq(beta)) out.ambient_targets.push_back(g);
    std::vector<std::size_t> cols;
    for (std::size_t s = 0; s < p.sources().size(); ++s)
        if (p.sources()[s].degree.leq(beta)) cols.push_back(s);

    // multihomogeneity puts every nonzero entry of an eligible column in an
    // eligible row, so restricting rows loses nothing
    std::vector<std::size_t> all_cols(cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i) all_cols[i] = i;
    const Matrix block = p.coeffs().submatrix(out.ambient_targets, cols);
    out.image = std::make_shared<const ColumnSpace>(block, all_cols);
    for (std::size_t q : out.image->quotient_coords())
        out.quotient_basis.push_back(out.ambient_targets[q]);
    out.dim = out.quotient_basis.size();
    return out;
}

} // namespace

GradedPiece module_piece(const Presentation& p, const Multidegree& beta) {
    return compute_piece(p, beta);
}

GradedPiece ModuleFibers::piece(const Multidegree& beta) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = memo_.find(beta.exponents());
        if (it != memo_.end()) return it->second;
    }
    GradedPiece fresh = compute_piece(p_, beta);
    std::lock_guard<std::mutex> lock(mutex_);
    return memo_.emplace(beta.exponents(), std::move(fresh)).first->second;
}

Matrix ModuleFibers::multiplication_map(const Multidegree& beta, std::size_t var) const {
    const GradedPiece src = piece(beta);
    const GradedPiece dst = piece(beta.plus_unit(var));
    Matrix out(p_.field(), dst.dim, src.dim);
    for (std::size_t j = 0; j < src.dim; ++j) {
        // basis coordinate g of L_beta maps to the class of g at beta + e_var
        const std::size_t g = src.quotient_basis[j];
        std::vector<Rational> v(dst.ambient_targets.size(), Rational(0));
        const auto it = std::find(dst.ambient_targets.begin(), dst.ambient_targets.end(), g);
        v[it - dst.ambient_targets.begin()] = Rational(1);
        const std::vector<Rational> img = dst.image->project(v);
        for (std::size_t i = 0; i < img.size(); ++i) out.set(i, j, img[i]);
    }
    return out;
}

ChainComplex koszul_strand(const ModuleFibers& fibers, const Multidegree& alpha) {
    const std::size_t m = fibers.presentation().variables();
    const Field field = fibers.presentation().field();

    // summand per variable subset F, grouped by |F|, increasing mask order
    std::vector<std::vector<std::uint64_t>> by_card(m + 1);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask)
        by_card[std::popcount(mask)].push_back(mask);

    std::vector<std::size_t> dims(m + 1, 0);
    std::vector<std::vector<std::size_t>> offsets(m + 1);
    std::vector<std::vector<Multidegree>> degrees(m + 1);
    for (std::size_t i = 0; i <= m; ++i) {
        for (std::uint64_t f : by_card[i]) {
            const Multidegree beta = alpha.minus_ones(mask_to_indices(f));
            offsets[i].push_back(dims[i]);
            degrees[i].push_back(beta);
            dims[i] += fibers.piece(beta).dim;
        }
    }

    std::vector<Matrix> bnds;
    for (std::size_t i = 0; i <= m; ++i) {
        Matrix b(field, i == 0 ? 0 : dims[i - 1], dims[i]);
        if (i > 0) {
            for (std::size_t a = 0; a < by_card[i].size(); ++a) {
                const std::uint64_t fmask = by_card[i][a];
                if (fibers.piece(degrees[i][a]).dim == 0) continue;
                for (std::size_t v = 0; v < m; ++v) {
                    if (!(fmask >> v & 1)) continue;
                    const std::uint64_t tmask = fmask & ~(std::uint64_t{1} << v);
                    const std::size_t t =
                        std::lower_bound(by_card[i - 1].begin(), by_card[i - 1].end(), tmask) -
                        by_card[i - 1].begin();
                    const std::size_t sign_count =
                        std::popcount(fmask & ((std::uint64_t{1} << v) - 1));
                    const Rational sign = field.from_int(sign_count % 2 == 0 ? 1 : -1);
                    const Matrix mult = fibers.multiplication_map(degrees[i][a], v);
                    for (std::size_t r = 0; r < mult.rows(); ++r)
                        for (std::size_t c = 0; c < mult.cols(); ++c)
                            if (mult.at(r, c) != 0)
                                b.set(offsets[i - 1][t] + r, offsets[i][a] + c,
                                      field.mul(sign, mult.at(r, c)));
                }
            }
        }
        bnds.push_back(std::move(b));
    }
    return ChainComplex(field, 0, std::move(dims), std::move(bnds));
}

std::map<int, std::size_t> koszul_betti(const ModuleFibers& fibers, const Multidegree& alpha) {
    return koszul_strand(fibers, alpha).homology_dims();
}

std::map<int, std::size_t> koszul_betti(const Presentation& p, const Multidegree& alpha) {
    ModuleFibers fibers(p);
    return koszul_betti(fibers, alpha);
}

std::map<int, std::size_t> predicted_betti(const Presentation& p, const Multidegree& alpha) {
    std::map<int, std::size_t> out;
    if (!p.in_lattice(alpha)) return out;
    const MinorPair minors = minors_at(p, alpha); // throws when not generic
    const long long beta = beta_invariant(minors.m_lower);
    if (beta != 0) {
        const int i = static_cast<int>(minors.i_lower.size()) -
                      static_cast<int>(minors.m_lower.rank()) + 1;
        out[i] = static_cast<std::size_t>(beta);
    }
    return out;
}

namespace {

std::map<int, std::size_t> positive_part(const std::map<int, std::size_t>& betti) {
    std::map<int, std::size_t> out;
    for (const auto& [i, v] : betti)
        if (i >= 1 && v != 0) out[i] = v;
    return out;
}

template <typename Fn>
void for_each_lattice_degree(const std::vector<Multidegree>& lattice, bool parallel, Fn&& fn) {
    const long long n = static_cast<long long>(lattice.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long k = 0; k < n; ++k) fn(static_cast<std::size_t>(k));
    } else {
        for (long long k = 0; k < n; ++k) fn(static_cast<std::size_t>(k));
    }
}

} // namespace

std::vector<BettiRecord> betti_table(const Presentation& p, BettiMode mode,
                                     const BettiOptions& opts) {
    std::vector<BettiRecord> out;

    // beta_0 rows: one per distinct target degree, multiplicities summed
    std::map<std::vector<int>, std::size_t> target_degrees;
    for (const Generator& g : p.targets()) target_degrees[g.degree.exponents()] += 1;
    std::vector<Multidegree> t0;
    for (const auto& [e, count] : target_degrees) t0.push_back(Multidegree(e));
    std::sort(t0.begin(), t0.end(), degree_lex_less);
    const std::string source0 = mode == BettiMode::predicted ? "predicted" : "oracle";
    for (const Multidegree& d : t0)
        out.push_back({0, d, target_degrees.at(d.exponents()), source0});

    const std::vector<Multidegree> lattice = p.lcm_lattice().elements;
    std::vector<std::vector<BettiRecord>> slots(lattice.size());
    ModuleFibers fibers(p);
    for_each_lattice_degree(lattice, opts.parallel, [&](std::size_t k) {
        const Multidegree& alpha = lattice[k];
        if (mode == BettiMode::oracle || mode == BettiMode::both)
            for (const auto& [i, v] : positive_part(koszul_betti(fibers, alpha)))
                slots[k].push_back({i, alpha, v, "oracle"});
        if (mode == BettiMode::predicted || mode == BettiMode::both) {
            if (p.fiber_structure(alpha).is_generic)
                for (const auto& [i, v] : positive_part(predicted_betti(p, alpha)))
                    slots[k].push_back({i, alpha, v, "predicted"});
        }
    });
    for (auto& slot : slots)
        for (auto& rec : slot) out.push_back(std::move(rec));
    return out;
}

TheoremReport verify_main_theorem(const Presentation& p, const BettiOptions& opts) {
    TheoremReport report;
    const std::vector<Multidegree> lattice = p.lcm_lattice().elements;
    report.degrees.resize(lattice.size());
    ModuleFibers fibers(p);
    for_each_lattice_degree(lattice, opts.parallel, [&](std::size_t k) {
        DegreeVerdict& v = report.degrees[k];
        v.alpha = lattice[k];
        v.generic = p.fiber_structure(v.alpha).is_generic;
        v.oracle = positive_part(koszul_betti(fibers, v.alpha));
        if (v.generic) {
            v.predicted = positive_part(predicted_betti(p, v.alpha));
            v.pass = (v.oracle == v.predicted) && v.oracle.size() <= 1;
        }
    });
    for (const DegreeVerdict& v : report.degrees)
        if (v.generic && !v.pass) report.pass = false;
    return report;
}

} // namespace multibetti
