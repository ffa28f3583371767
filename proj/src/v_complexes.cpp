#include "multibetti/v_complexes.hpp"

#include "multibetti/errors.hpp"
#include "multibetti/presentation.hpp"
#include "multibetti/simplicial.hpp"

#include <algorithm>
#include <bit>

namespace multibetti {

namespace {

// subsets of {0..n-1} with the given cardinality, increasing mask order
std::vector<std::uint64_t> masks_of_card(std::size_t n, std::size_t card) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
        if (static_cast<std::size_t>(std::popcount(mask)) == card) out.push_back(mask);
    return out;
}

std::vector<Rational> coords_in_basis(const Matrix& columns, const std::vector<std::size_t>& basis,
                                      std::size_t col) {
    if (basis.empty()) throw DomainError("coords_in_basis: empty basis");
    auto x = columns.columns_at(basis).solve(columns.column(col));
    if (!x) throw DomainError("coords_in_basis: vector outside summand span");
    return *x;
}

} // namespace

GradedSubspaceComplex build_interval_complex(const Matrix& columns,
                                             const std::vector<std::size_t>& upper,
                                             const std::vector<std::size_t>& lower,
                                             const std::vector<std::size_t>& omega) {
    for (std::size_t x : lower)
        if (std::find(upper.begin(), upper.end(), x) == upper.end())
            throw DomainError("interval complex: lower set must sit inside the upper set");

    std::vector<std::size_t> om = omega.empty() ? lower : omega;
    {
        std::vector<std::size_t> a = om, b = lower;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) throw DomainError("omega must order exactly the lower set");
    }
    // ω-position of each lower element, keyed by global column index
    std::vector<std::size_t> om_pos(columns.cols(), 0);
    for (std::size_t k = 0; k < om.size(); ++k) om_pos[om[k]] = k;

    const std::size_t nl = lower.size();
    const Field field = columns.field();

    GradedSubspaceComplex out{{}, {}, ChainComplex::zero(field)};
    out.index_sets.resize(nl + 1);
    out.bases.resize(nl + 1);

    // per degree: the deleted sets A as masks over positions of `lower`
    std::vector<std::vector<std::uint64_t>> deleted(nl + 1);
    std::vector<std::vector<std::size_t>> offsets(nl + 1); // summand offsets in the degree
    std::vector<std::size_t> dims(nl + 1, 0);
    for (std::size_t i = 0; i <= nl; ++i) {
        deleted[i] = masks_of_card(nl, i);
        for (std::uint64_t amask : deleted[i]) {
            std::vector<std::size_t> b;
            for (std::size_t x : upper) {
                bool dropped = false;
                for (std::size_t k = 0; k < nl; ++k)
                    if ((amask >> k & 1) && lower[k] == x) dropped = true;
                if (!dropped) b.push_back(x);
            }
            const std::vector<std::size_t> basis = columns.greedy_basis(b);
            offsets[i].push_back(dims[i]);
            dims[i] += basis.size();
            out.index_sets[i].push_back(std::move(b));
            out.bases[i].push_back(basis);
        }
    }

    std::vector<Matrix> bnds;
    for (std::size_t i = 0; i <= nl; ++i) {
        Matrix b(field, i == 0 ? 0 : dims[i - 1], dims[i]);
        if (i > 0) {
            for (std::size_t a = 0; a < deleted[i].size(); ++a) {
                const std::uint64_t amask = deleted[i][a];
                const auto& src_basis = out.bases[i][a];
                for (std::size_t k = 0; k < nl; ++k) {
                    if (!(amask >> k & 1)) continue;
                    const std::uint64_t tmask = amask & ~(std::uint64_t{1} << k);
                    const std::size_t t =
                        std::lower_bound(deleted[i - 1].begin(), deleted[i - 1].end(), tmask) -
                        deleted[i - 1].begin();
                    // retained lower elements ω-smaller than the inserted one
                    std::size_t count = 0;
                    for (std::size_t j = 0; j < nl; ++j)
                        if (!(amask >> j & 1) && om_pos[lower[j]] < om_pos[lower[k]]) ++count;
                    const Rational sign = field.from_int(count % 2 == 0 ? 1 : -1);
                    const auto& tgt_basis = out.bases[i - 1][t];
                    for (std::size_t c = 0; c < src_basis.size(); ++c) {
                        const std::vector<Rational> x =
                            coords_in_basis(columns, tgt_basis, src_basis[c]);
                        for (std::size_t r = 0; r < x.size(); ++r) {
                            if (x[r] == 0) continue;
                            b.set(offsets[i - 1][t] + r, offsets[i][a] + c,
                                  field.mul(sign, x[r]));
                        }
                    }
                }
            }
        }
        bnds.push_back(std::move(b));
    }
    std::vector<std::size_t> dims_copy = dims;
    out.complex = ChainComplex(field, 0, std::move(dims_copy), std::move(bnds));
    return out;
}

GradedSubspaceComplex build_v(const Matrix& columns, const std::vector<std::size_t>& omega) {
    std::vector<std::size_t> all(columns.cols());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return build_interval_complex(columns, all, all, omega);
}

namespace {

FiberStructure generic_fiber(const Presentation& p, const Multidegree& alpha) {
    const FiberStructure fs = p.fiber_structure(alpha);
    if (!fs.is_generic)
        throw DomainError("multidegree " + alpha.to_string() + " is not a generic element");
    return fs;
}

} // namespace

GradedSubspaceComplex build_v_alpha(const Presentation& p, const Multidegree& alpha,
                                    const std::vector<std::size_t>& omega) {
    const FiberStructure fs = generic_fiber(p, alpha);
    return build_interval_complex(p.coeffs(), fs.i_upper, *fs.i_lower, omega);
}

GradedSubspaceComplex build_v_bar(const Presentation& p, const Multidegree& alpha,
                                  const std::vector<std::size_t>& omega) {
    const FiberStructure fs = generic_fiber(p, alpha);
    const std::vector<std::size_t>& lower = *fs.i_lower;
    std::vector<std::size_t> i_alpha; // I(α) = I^α \ I_α
    for (std::size_t x : fs.i_upper)
        if (!std::binary_search(lower.begin(), lower.end(), x)) i_alpha.push_back(x);

    const Matrix quotient = p.coeffs().quotient_map(i_alpha, lower);
    // translate ω from global indices to positions within I_α
    std::vector<std::size_t> om;
    for (std::size_t x : (omega.empty() ? lower : omega)) {
        const auto it = std::lower_bound(lower.begin(), lower.end(), x);
        if (it == lower.end() || *it != x)
            throw DomainError("omega must order exactly I_alpha");
        om.push_back(it - lower.begin());
    }
    return build_v(quotient, om);
}

ChainComplex simplex_dual_shifted(const Field& field, std::size_t n) {
    if (n == 0) throw DomainError("simplex_dual_shifted needs at least one vertex");
    std::vector<std::string> vs;
    for (std::size_t i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i + 1));
    const ChainComplex reduced =
        SimplicialComplex::full_simplex(std::move(vs)).reduced_chain_complex(field);
    return reduced.dual().hshift(-static_cast<int>(n) + 1);
}

SubcomplexEmbedding v_alpha_subcomplex(const Presentation& p, const Multidegree& alpha,
                                       const GradedSubspaceComplex& v_alpha,
                                       const std::vector<std::size_t>& omega) {
    const FiberStructure fs = generic_fiber(p, alpha);
    const std::vector<std::size_t>& lower = *fs.i_lower;
    std::vector<std::size_t> i_alpha;
    for (std::size_t x : fs.i_upper)
        if (!std::binary_search(lower.begin(), lower.end(), x)) i_alpha.push_back(x);

    const Matrix& columns = p.coeffs();
    const std::vector<std::size_t> fiber_basis = columns.greedy_basis(i_alpha);
    const std::size_t d = fiber_basis.size();
    const std::size_t nl = lower.size();
    const Field field = columns.field();

    std::vector<std::size_t> om = omega.empty() ? lower : omega;
    std::vector<std::size_t> om_pos(columns.cols(), 0);
    for (std::size_t k = 0; k < om.size(); ++k) om_pos[om[k]] = k;

    // V_{I(α)} ⊗ C' laid out in the V(α) summand order: basis (A, copy k).
    std::vector<std::vector<std::uint64_t>> deleted(nl + 1);
    std::vector<std::size_t> dims(nl + 1);
    for (std::size_t i = 0; i <= nl; ++i) {
        deleted[i] = masks_of_card(nl, i);
        dims[i] = deleted[i].size() * d;
    }
    std::vector<Matrix> bnds;
    for (std::size_t i = 0; i <= nl; ++i) {
        Matrix b(field, i == 0 ? 0 : dims[i - 1], dims[i]);
        if (i > 0) {
            for (std::size_t a = 0; a < deleted[i].size(); ++a) {
                const std::uint64_t amask = deleted[i][a];
                for (std::size_t k = 0; k < nl; ++k) {
                    if (!(amask >> k & 1)) continue;
                    const std::uint64_t tmask = amask & ~(std::uint64_t{1} << k);
                    const std::size_t t =
                        std::lower_bound(deleted[i - 1].begin(), deleted[i - 1].end(), tmask) -
                        deleted[i - 1].begin();
                    std::size_t count = 0;
                    for (std::size_t j = 0; j < nl; ++j)
                        if (!(amask >> j & 1) && om_pos[lower[j]] < om_pos[lower[k]]) ++count;
                    const Rational sign = field.from_int(count % 2 == 0 ? 1 : -1);
                    for (std::size_t c = 0; c < d; ++c) b.set(t * d + c, a * d + c, sign);
                }
            }
        }
        bnds.push_back(std::move(b));
    }
    SubcomplexEmbedding out{ChainComplex(field, 0, dims, std::move(bnds)), {}};

    // embeddings: copy k of summand A is the basis vector fiber_basis[k]
    // of V_{I(α)}, written in the summand basis of V_{I^α \ A}
    for (std::size_t i = 0; i <= nl; ++i) {
        Matrix e(field, v_alpha.complex.dim_at(static_cast<int>(i)), dims[i]);
        std::size_t offset = 0;
        for (std::size_t a = 0; a < deleted[i].size(); ++a) {
            const auto& tgt_basis = v_alpha.bases[i][a];
            for (std::size_t k = 0; k < d; ++k) {
                const std::vector<Rational> x = coords_in_basis(columns, tgt_basis, fiber_basis[k]);
                for (std::size_t r = 0; r < x.size(); ++r)
                    if (x[r] != 0) e.set(offset + r, a * d + k, x[r]);
            }
            offset += tgt_basis.size();
        }
        out.embeddings.push_back(std::move(e));
    }
    return out;
}

} // namespace multibetti
