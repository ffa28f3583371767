#include "multibetti/simplicial.hpp"

#include "multibetti/errors.hpp"
#include "multibetti/presentation.hpp"

#include <algorithm>
#include <bit>

namespace multibetti {

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertices,
                                     std::vector<std::uint64_t> faces, bool check_closure)
    : vertices_(std::move(vertices)), faces_(std::move(faces)) {
    if (vertices_.size() > 64) throw DomainError("vertex sets larger than 64 are unsupported");
    std::sort(faces_.begin(), faces_.end());
    faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
    if (check_closure && !faces_.empty()) {
        for (std::uint64_t f : faces_)
            for (std::uint64_t rest = f; rest; rest &= rest - 1) {
                const std::uint64_t sub = f & ~(rest & (~rest + 1));
                if (!std::binary_search(faces_.begin(), faces_.end(), sub))
                    throw DomainError("face family is not downward closed");
            }
    }
}

SimplicialComplex SimplicialComplex::void_complex(std::vector<std::string> vertices) {
    return SimplicialComplex(std::move(vertices), {});
}

SimplicialComplex SimplicialComplex::empty_complex(std::vector<std::string> vertices) {
    return SimplicialComplex(std::move(vertices), {0});
}

SimplicialComplex SimplicialComplex::full_simplex(std::vector<std::string> vertices) {
    const std::size_t n = vertices.size();
    std::vector<std::uint64_t> faces;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) faces.push_back(mask);
    return SimplicialComplex(std::move(vertices), std::move(faces), false);
}

bool SimplicialComplex::has_face(std::uint64_t mask) const {
    return std::binary_search(faces_.begin(), faces_.end(), mask);
}

int SimplicialComplex::dim() const {
    if (faces_.empty()) return -2;
    int d = -1;
    for (std::uint64_t f : faces_) d = std::max(d, std::popcount(f) - 1);
    return d;
}

ChainComplex SimplicialComplex::reduced_chain_complex(
    const Field& field, const std::vector<std::size_t>& vertex_order) const {
    if (is_void()) return ChainComplex::zero(field);

    std::vector<std::size_t> pos(vertices_.size());
    if (vertex_order.empty()) {
        for (std::size_t i = 0; i < pos.size(); ++i) pos[i] = i;
    } else {
        if (vertex_order.size() != vertices_.size())
            throw DomainError("vertex order must be a permutation of the vertex set");
        for (std::size_t i = 0; i < vertex_order.size(); ++i) pos[vertex_order[i]] = i;
    }

    const int top = dim();
    // faces grouped by cardinality; index of each face within its group
    std::vector<std::vector<std::uint64_t>> by_card(top + 2);
    std::map<std::uint64_t, std::size_t> index;
    for (std::uint64_t f : faces_) by_card[std::popcount(f)].push_back(f);
    for (auto& group : by_card)
        for (std::size_t i = 0; i < group.size(); ++i) index[group[i]] = i;

    std::vector<std::size_t> dims(top + 2);
    std::vector<Matrix> bnds;
    for (int k = 0; k <= top + 1; ++k) dims[k] = by_card[k].size();
    for (int k = 0; k <= top + 1; ++k) {
        Matrix b(field, k == 0 ? 0 : dims[k - 1], dims[k]);
        if (k > 0) {
            for (std::size_t j = 0; j < by_card[k].size(); ++j) {
                const std::uint64_t face = by_card[k][j];
                // vertices of the face in orientation order
                std::vector<std::size_t> vs = mask_to_indices(face);
                std::sort(vs.begin(), vs.end(),
                          [&](std::size_t a, std::size_t c) { return pos[a] < pos[c]; });
                for (std::size_t t = 0; t < vs.size(); ++t) {
                    const std::uint64_t sub = face & ~(std::uint64_t{1} << vs[t]);
                    b.set(index.at(sub), j, field.from_int(t % 2 == 0 ? 1 : -1));
                }
            }
        }
        bnds.push_back(std::move(b));
    }
    return ChainComplex(field, -1, std::move(dims), std::move(bnds));
}

std::map<int, std::size_t> SimplicialComplex::reduced_homology(
    const Field& field, const std::vector<std::size_t>& vertex_order) const {
    if (is_void()) return {};
    return reduced_chain_complex(field, vertex_order).homology_dims();
}

SimplicialComplex delta_b(const RepresentedMatroid& m, std::size_t b) {
    if (b >= m.size()) throw DomainError("delta_b: vertex out of range");
    std::vector<std::uint64_t> faces;
    const std::uint64_t bbit = std::uint64_t{1} << b;
    const std::uint64_t full = m.full_mask();
    if (!m.is_loop(b)) {
        for (std::uint64_t mask = 0; ; ++mask) {
            // b ∉ closure(J)  <=>  rank(J ∪ b) > rank(J)
            if ((mask & bbit) == 0 && m.rank(mask | bbit) != m.rank(mask)) faces.push_back(mask);
            if (mask == full) break;
        }
    }
    return SimplicialComplex(m.ground(), std::move(faces), false);
}

} // namespace multibetti
