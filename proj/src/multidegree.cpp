#include "multibetti/multidegree.hpp"

#include "multibetti/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace multibetti {

bool Multidegree::is_nonnegative() const {
    return std::all_of(e_.begin(), e_.end(), [](int x) { return x >= 0; });
}

int Multidegree::total() const { return std::accumulate(e_.begin(), e_.end(), 0); }

Multidegree Multidegree::join(const Multidegree& other) const {
    std::vector<int> out(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) out[i] = std::max(e_[i], other.e_[i]);
    return Multidegree(std::move(out));
}

bool Multidegree::leq(const Multidegree& other) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > other.e_[i]) return false;
    return true;
}

Multidegree Multidegree::plus_unit(std::size_t var) const {
    std::vector<int> out = e_;
    out[var] += 1;
    return Multidegree(std::move(out));
}

Multidegree Multidegree::minus_ones(const std::vector<std::size_t>& vars) const {
    std::vector<int> out = e_;
    for (std::size_t v : vars) out[v] -= 1;
    return Multidegree(std::move(out));
}

std::string Multidegree::to_string() const {
    std::ostringstream ss;
    ss << '(';
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (i) ss << ',';
        ss << e_[i];
    }
    ss << ')';
    return ss.str();
}

bool degree_lex_less(const Multidegree& a, const Multidegree& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    return a.exponents() < b.exponents();
}

Multidegree parse_multidegree_csv(const std::string& csv) {
    std::vector<int> exps;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            exps.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw SchemaError("bad multidegree component '" + item + "' in '" + csv + "'");
        }
    }
    if (exps.empty()) throw SchemaError("empty multidegree '" + csv + "'");
    return Multidegree(std::move(exps));
}

} // namespace multibetti
