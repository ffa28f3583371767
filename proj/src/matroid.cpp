#include "multibetti/matroid.hpp"

#include "multibetti/errors.hpp"
#include "multibetti/presentation.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace multibetti {

RepresentedMatroid::RepresentedMatroid(std::vector<std::string> ground, Matrix columns)
    : ground_(std::move(ground)), columns_(std::move(columns)) {
    if (ground_.size() != columns_.cols())
        throw DomainError("matroid ground size does not match column count");
    if (ground_.size() > 64) throw DomainError("ground sets larger than 64 are unsupported");
}

RepresentedMatroid::RepresentedMatroid(const RepresentedMatroid& other)
    : ground_(other.ground_), columns_(other.columns_) {
    std::lock_guard<std::mutex> lock(other.memo_mutex_);
    rank_memo_ = other.rank_memo_;
}

std::uint64_t RepresentedMatroid::full_mask() const {
    return ground_.empty() ? 0 : (~std::uint64_t{0} >> (64 - ground_.size()));
}

std::size_t RepresentedMatroid::rank(std::uint64_t subset) const {
    {
        std::lock_guard<std::mutex> lock(memo_mutex_);
        auto it = rank_memo_.find(subset);
        if (it != rank_memo_.end()) return it->second;
    }
    const std::size_t r = columns_.column_space_dim(mask_to_indices(subset));
    std::lock_guard<std::mutex> lock(memo_mutex_);
    rank_memo_.emplace(subset, r);
    return r;
}

bool RepresentedMatroid::is_independent(std::uint64_t subset) const {
    return rank(subset) == static_cast<std::size_t>(std::popcount(subset));
}

bool RepresentedMatroid::is_loop(std::size_t x) const {
    return rank(std::uint64_t{1} << x) == 0;
}

std::uint64_t RepresentedMatroid::loops() const {
    std::uint64_t out = 0;
    for (std::size_t x = 0; x < size(); ++x)
        if (is_loop(x)) out |= (std::uint64_t{1} << x);
    return out;
}

bool RepresentedMatroid::are_parallel(std::size_t x, std::size_t y) const {
    if (is_loop(x) || is_loop(y)) return false;
    return closure(std::uint64_t{1} << x) == closure(std::uint64_t{1} << y);
}

std::uint64_t RepresentedMatroid::closure(std::uint64_t subset) const {
    const std::size_t r = rank(subset);
    std::uint64_t out = subset;
    for (std::size_t x = 0; x < size(); ++x) {
        const std::uint64_t bit = std::uint64_t{1} << x;
        if ((subset & bit) == 0 && rank(subset | bit) == r) out |= bit;
    }
    return out;
}

bool RepresentedMatroid::is_flat(std::uint64_t subset) const { return closure(subset) == subset; }

std::vector<std::uint64_t> RepresentedMatroid::hyperplanes() const {
    // closures of rank-(r-1) subsets, deduplicated; every hyperplane arises
    // this way and closed rank-(r-1) sets are automatically maximal proper.
    if (rank() == 0) return {};
    const std::size_t target = rank() - 1;
    std::vector<std::uint64_t> out;
    const std::uint64_t full = full_mask();
    for (std::uint64_t mask = 0; ; ++mask) {
        if (rank(mask) == target) {
            const std::uint64_t flat = closure(mask);
            if (std::find(out.begin(), out.end(), flat) == out.end()) out.push_back(flat);
        }
        if (mask == full) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> RepresentedMatroid::circuits() const {
    std::vector<std::uint64_t> out;
    if (ground_.empty()) return out;
    const std::uint64_t full = full_mask();
    for (std::uint64_t mask = 1; ; ++mask) {
        const std::size_t n = std::popcount(mask);
        if (rank(mask) == n - 1) {
            // dependent; a circuit iff every single deletion is independent
            bool circuit = true;
            for (std::uint64_t rest = mask; rest && circuit; rest &= rest - 1) {
                const std::uint64_t sub = mask & ~(rest & (~rest + 1));
                if (!is_independent(sub)) circuit = false;
            }
            if (circuit) out.push_back(mask);
        }
        if (mask >= full) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

RepresentedMatroid RepresentedMatroid::restrict_to(std::uint64_t subset) const {
    const std::vector<std::size_t> idx = mask_to_indices(subset);
    std::vector<std::string> labels;
    for (std::size_t i : idx) labels.push_back(ground_[i]);
    return RepresentedMatroid(std::move(labels), columns_.columns_at(idx));
}

RepresentedMatroid RepresentedMatroid::contract_to(std::uint64_t subset) const {
    const std::vector<std::size_t> keep = mask_to_indices(subset);
    const std::vector<std::size_t> mod = mask_to_indices(full_mask() & ~subset);
    std::vector<std::string> labels;
    for (std::size_t i : keep) labels.push_back(ground_[i]);
    return RepresentedMatroid(std::move(labels), columns_.quotient_map(mod, keep));
}

std::string RepresentedMatroid::subset_labels(std::uint64_t subset) const {
    std::ostringstream ss;
    ss << '{';
    bool first = true;
    for (std::size_t i : mask_to_indices(subset)) {
        if (!first) ss << ',';
        ss << ground_[i];
        first = false;
    }
    ss << '}';
    return ss.str();
}

RepresentedMatroid matroid_of(const Presentation& p) {
    std::vector<std::string> labels;
    for (const Generator& s : p.sources()) labels.push_back(s.label);
    return RepresentedMatroid(std::move(labels), p.coeffs());
}

namespace {

long long beta_sum_range(const Matrix& columns, std::uint64_t lo, std::uint64_t hi) {
    long long sum = 0;
    std::vector<std::size_t> idx;
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
        idx.clear();
        for (std::uint64_t rest = mask; rest; rest &= rest - 1)
            idx.push_back(std::countr_zero(rest));
        const long long r = static_cast<long long>(columns.greedy_basis(idx).size());
        sum += (std::popcount(mask) % 2 == 0) ? r : -r;
    }
    return sum;
}

long long beta_finish(const RepresentedMatroid& m, long long sum) {
    const long long beta = (m.rank() % 2 == 0) ? sum : -sum;
    if (beta < 0) throw DomainError("beta-invariant came out negative; rank oracle is broken");
    return beta;
}

} // namespace

long long beta_invariant(const RepresentedMatroid& m, std::size_t max_ground) {
    const std::size_t n = m.size();
    if (n > max_ground)
        throw DomainError("beta_invariant: ground set of size " + std::to_string(n) +
                          " exceeds the limit " + std::to_string(max_ground));
    if (n == 0) return 0;
    const std::uint64_t total = std::uint64_t{1} << n;
    const Matrix& columns = m.columns();
    const long long nblocks = static_cast<long long>(std::min<std::uint64_t>(total, 512));
    const std::uint64_t block = total / nblocks;
    long long sum = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : sum)
    for (long long b = 0; b < nblocks; ++b) {
        const std::uint64_t lo = b * block;
        const std::uint64_t hi = (b + 1 == nblocks) ? total : lo + block;
        sum += beta_sum_range(columns, lo, hi);
    }
    return beta_finish(m, sum);
}

long long beta_invariant_serial(const RepresentedMatroid& m, std::size_t max_ground) {
    const std::size_t n = m.size();
    if (n > max_ground)
        throw DomainError("beta_invariant: ground set of size " + std::to_string(n) +
                          " exceeds the limit " + std::to_string(max_ground));
    if (n == 0) return 0;
    return beta_finish(m, beta_sum_range(m.columns(), 0, std::uint64_t{1} << n));
}

MinorPair minors_at(const Presentation& p, const Multidegree& alpha) {
    if (!p.in_lattice(alpha))
        throw DomainError("multidegree " + alpha.to_string() + " is not in the LCM-lattice");
    const FiberStructure fs = p.fiber_structure(alpha);
    if (!fs.is_generic)
        throw DomainError("multidegree " + alpha.to_string() + " is not a generic element");

    RepresentedMatroid m = matroid_of(p);
    const std::uint64_t upper_mask = indices_to_mask(fs.i_upper);
    RepresentedMatroid m_upper = m.restrict_to(upper_mask);

    // positions of I_alpha within I^alpha
    std::vector<std::size_t> lower_pos;
    std::vector<std::size_t> i_of_alpha;
    for (std::size_t k = 0; k < fs.i_upper.size(); ++k) {
        if (std::binary_search(fs.i_lower->begin(), fs.i_lower->end(), fs.i_upper[k]))
            lower_pos.push_back(k);
        else
            i_of_alpha.push_back(fs.i_upper[k]);
    }
    RepresentedMatroid m_lower = m_upper.contract_to(indices_to_mask(lower_pos));

    return MinorPair{alpha, fs.i_upper, *fs.i_lower, i_of_alpha,
                     std::move(m_upper), std::move(m_lower)};
}

} // namespace multibetti
