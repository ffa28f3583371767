#pragma once

#include <string>
#include <vector>

namespace multibetti {

// Element of Z^m. Presentation degrees are nonnegative; intermediate Koszul
// degrees alpha - epsilon_F may dip below zero, so components are plain ints.
class Multidegree {
public:
    Multidegree() = default;
    explicit Multidegree(std::vector<int> exps) : e_(std::move(exps)) {}
    static Multidegree zero(std::size_t m) { return Multidegree(std::vector<int>(m, 0)); }

    std::size_t size() const { return e_.size(); }
    int operator[](std::size_t i) const { return e_[i]; }
    const std::vector<int>& exponents() const { return e_; }

    bool is_nonnegative() const;
    int total() const;

    Multidegree join(const Multidegree& other) const; // componentwise max
    bool leq(const Multidegree& other) const;         // componentwise <=
    Multidegree plus_unit(std::size_t var) const;     // + e_var
    Multidegree minus_ones(const std::vector<std::size_t>& vars) const; // - epsilon_F

    bool operator==(const Multidegree& other) const { return e_ == other.e_; }
    bool operator!=(const Multidegree& other) const { return !(*this == other); }

    std::string to_string() const; // "(3,1,1)"

private:
    std::vector<int> e_;
};

// Total degree first, then lexicographic. The canonical order for reports.
bool degree_lex_less(const Multidegree& a, const Multidegree& b);

Multidegree parse_multidegree_csv(const std::string& csv); // "3,1,1"

} // namespace multibetti
