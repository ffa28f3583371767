#include "multibetti/random_instances.hpp"

#include "multibetti/errors.hpp"

#include <algorithm>
#include <set>

namespace multibetti {

int Rng::uniform(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(next() % span);
}

std::vector<std::size_t> Rng::permutation(std::size_t n) {
    std::vector<std::size_t> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = i;
    for (std::size_t i = n; i > 1; --i)
        std::swap(out[i - 1], out[next() % i]);
    return out;
}

std::vector<std::size_t> Rng::permutation_of(const std::vector<std::size_t>& items) {
    std::vector<std::size_t> out;
    for (std::size_t i : permutation(items.size())) out.push_back(items[i]);
    return out;
}

Matrix random_matrix(Rng& rng, const Field& field, std::size_t rows, std::size_t cols, int lo,
                     int hi) {
    Matrix m(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.set(i, j, field.from_int(rng.uniform(lo, hi)));
    return m;
}

RepresentedMatroid random_represented_matroid(Rng& rng, std::size_t max_elements,
                                              std::size_t max_rows) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, static_cast<int>(max_elements)));
    const std::size_t r = static_cast<std::size_t>(rng.uniform(1, static_cast<int>(max_rows)));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
    return RepresentedMatroid(std::move(labels), random_matrix(rng, Field::rationals(), r, n));
}

Presentation random_presentation(Rng& rng, std::size_t max_vars, std::size_t max_sources,
                                 std::size_t max_targets) {
    const Field field = Field::rationals();
    for (;;) {
        const std::size_t m = static_cast<std::size_t>(rng.uniform(1, static_cast<int>(max_vars)));
        const std::size_t ns =
            static_cast<std::size_t>(rng.uniform(1, static_cast<int>(max_sources)));
        const std::size_t ng =
            static_cast<std::size_t>(rng.uniform(1, static_cast<int>(max_targets)));

        std::vector<Generator> targets;
        for (std::size_t g = 0; g < ng; ++g) {
            std::vector<int> d(m, 0);
            if (rng.uniform(0, 3) == 0) d[rng.uniform(0, static_cast<int>(m) - 1)] = 1;
            targets.push_back({"g" + std::to_string(g + 1), Multidegree(d)});
        }
        std::vector<Generator> sources;
        for (std::size_t s = 0; s < ns; ++s) {
            std::vector<int> d(m);
            for (std::size_t v = 0; v < m; ++v) d[v] = rng.uniform(0, 3);
            sources.push_back({"s" + std::to_string(s + 1), Multidegree(d)});
        }

        Matrix coeffs(field, ng, ns);
        bool ok = true;
        for (std::size_t s = 0; s < ns && ok; ++s) {
            bool nonzero = false;
            for (std::size_t g = 0; g < ng; ++g) {
                const bool eligible = targets[g].degree.leq(sources[s].degree) &&
                                      targets[g].degree != sources[s].degree;
                if (!eligible) continue;
                const int c = rng.uniform(-2, 2);
                coeffs.set(g, s, field.from_int(c));
                nonzero = nonzero || c != 0;
            }
            if (!nonzero) {
                // force a unit on some eligible row, or give up on this draw
                std::vector<std::size_t> eligible;
                for (std::size_t g = 0; g < ng; ++g)
                    if (targets[g].degree.leq(sources[s].degree) &&
                        targets[g].degree != sources[s].degree)
                        eligible.push_back(g);
                if (eligible.empty()) {
                    ok = false;
                } else {
                    const std::size_t g =
                        eligible[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(eligible.size()) - 1))];
                    coeffs.set(g, s, field.from_int(rng.uniform(0, 1) ? 1 : -1));
                }
            }
        }
        if (!ok) continue;
        try {
            return Presentation(field, m, std::move(targets), std::move(sources),
                                std::move(coeffs));
        } catch (const ValidationError&) {
            continue;
        }
    }
}

namespace {

std::vector<std::vector<int>> prune_to_minimal(std::vector<std::vector<int>> exps) {
    std::sort(exps.begin(), exps.end());
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        bool divisible = false;
        for (std::size_t j = 0; j < exps.size() && !divisible; ++j)
            if (i != j && Multidegree(exps[j]).leq(Multidegree(exps[i])))
                divisible = true;
        if (!divisible) out.push_back(exps[i]);
    }
    return out;
}

bool is_zero_vec(const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

} // namespace

Presentation random_monomial_ideal(Rng& rng, std::size_t max_generators, std::size_t max_vars,
                                   int max_exponent) {
    for (;;) {
        const std::size_t m = static_cast<std::size_t>(rng.uniform(1, static_cast<int>(max_vars)));
        const std::size_t k =
            static_cast<std::size_t>(rng.uniform(1, static_cast<int>(max_generators)));
        std::vector<std::vector<int>> exps;
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<int> e(m);
            for (std::size_t v = 0; v < m; ++v) e[v] = rng.uniform(0, max_exponent);
            if (!is_zero_vec(e)) exps.push_back(e);
        }
        exps = prune_to_minimal(exps);
        if (!exps.empty()) return make_monomial(exps);
    }
}

Presentation random_bps_monomial_ideal(Rng& rng, std::size_t max_generators,
                                       std::size_t max_vars) {
    for (;;) {
        const std::size_t m = static_cast<std::size_t>(rng.uniform(1, static_cast<int>(max_vars)));
        const std::size_t k =
            static_cast<std::size_t>(rng.uniform(1, static_cast<int>(max_generators)));
        std::vector<std::vector<int>> exps(k, std::vector<int>(m, 0));
        // per variable, hand distinct positive exponents to a random subset
        for (std::size_t v = 0; v < m; ++v) {
            const std::vector<std::size_t> order = rng.permutation(k);
            const std::size_t t = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(k)));
            std::set<int> used;
            for (std::size_t idx = 0; idx < t; ++idx) {
                int e;
                do {
                    e = rng.uniform(1, static_cast<int>(2 * k + 2));
                } while (used.count(e));
                used.insert(e);
                exps[order[idx]][v] = e;
            }
        }
        // zero rows get a fresh exponent in variable 0, still all-distinct
        int bump = 2 * static_cast<int>(k) + 3;
        for (auto& e : exps)
            if (is_zero_vec(e)) e[0] = bump++;
        exps = prune_to_minimal(exps);
        if (!exps.empty()) return make_monomial(exps);
    }
}

Presentation make_monomial(const std::vector<std::vector<int>>& exponents, Field field) {
    std::vector<Multidegree> degs;
    for (const auto& e : exponents) degs.push_back(Multidegree(e));
    return Presentation::monomial_ideal(field, degs);
}

Presentation sample_two_target_module(Field field) {
    std::vector<Generator> targets{{"g1", Multidegree({0, 0, 0})}, {"g2", Multidegree({0, 0, 0})}};
    std::vector<Generator> sources{{"a", Multidegree({3, 1, 1})},
                                   {"b", Multidegree({1, 3, 1})},
                                   {"c", Multidegree({1, 1, 3})},
                                   {"d", Multidegree({1, 2, 2})}};
    Matrix coeffs = Matrix::from_rows(field, {{1, 1, 1, 1}, {1, 1, 2, 3}});
    return Presentation(field, 3, std::move(targets), std::move(sources), std::move(coeffs));
}

} // namespace multibetti
