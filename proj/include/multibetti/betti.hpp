#pragma once

#include "multibetti/chain_complex.hpp"
#include "multibetti/multidegree.hpp"
#include "multibetti/presentation.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace multibetti {

// Degree-beta piece of L = coker(Phi): the quotient of the eligible target
// coordinates {g : deg g <= beta} by the image of the eligible sources.
struct GradedPiece {
    Multidegree beta;
    std::vector<std::size_t> ambient_targets;  // targets with deg g <= beta
    std::vector<std::size_t> quotient_basis;   // target indices giving a basis of L_beta
    std::shared_ptr<const ColumnSpace> image;  // image of Phi_beta in k^{ambient_targets}
    std::size_t dim = 0;
};

// Thread-safe memo of graded pieces, shared across the Koszul strands of
// many multidegrees (fills are idempotent).
class ModuleFibers {
public:
    explicit ModuleFibers(const Presentation& p) : p_(p) {}
    const Presentation& presentation() const { return p_; }

    GradedPiece piece(const Multidegree& beta) const;
    // Matrix of x_var : L_beta -> L_{beta + e_var} in the quotient bases.
    Matrix multiplication_map(const Multidegree& beta, std::size_t var) const;

private:
    const Presentation& p_;
    mutable std::map<std::vector<int>, GradedPiece> memo_;
    mutable std::mutex mutex_;
};

GradedPiece module_piece(const Presentation& p, const Multidegree& beta);

// The alpha-strand of L tensor the Koszul complex on x_1..x_m: degree i
// carries one summand L_{alpha - eps_F} per variable subset F with |F| = i.
ChainComplex koszul_strand(const ModuleFibers& fibers, const Multidegree& alpha);

// Oracle: beta_{i,alpha}(L) = dim Tor_i(L,k)_alpha for i = 0..m.
std::map<int, std::size_t> koszul_betti(const Presentation& p, const Multidegree& alpha);
std::map<int, std::size_t> koszul_betti(const ModuleFibers& fibers, const Multidegree& alpha);

// Predictor (main theorem): off the lattice everything vanishes; at a
// generic lattice degree the only possibly-nonzero value for i >= 1 is
// beta(M_alpha) at i = |I_alpha| - rank(M_alpha) + 1. Throws DomainError at
// non-generic lattice degrees, where the theorem is silent.
std::map<int, std::size_t> predicted_betti(const Presentation& p, const Multidegree& alpha);

struct BettiRecord {
    int i = 0;
    Multidegree alpha;
    std::size_t value = 0;
    std::string source; // "oracle" | "predicted"
};

enum class BettiMode { oracle, predicted, both };

struct BettiOptions {
    bool parallel = true;
};

// Nonzero records: beta_0 rows from the target degrees, then i >= 1 rows per
// lattice degree in degree-lex order. Deterministic for fixed inputs.
std::vector<BettiRecord> betti_table(const Presentation& p, BettiMode mode,
                                     const BettiOptions& opts = {});

struct DegreeVerdict {
    Multidegree alpha;
    bool generic = false;                  // "theorem silent" when false
    bool pass = true;                      // meaningful only when generic
    std::map<int, std::size_t> oracle;     // nonzero oracle values, i >= 1
    std::map<int, std::size_t> predicted;  // nonzero predicted values, i >= 1
};

struct TheoremReport {
    bool pass = true; // every generic degree matched
    std::vector<DegreeVerdict> degrees;
};

// Checks oracle == predictor in every homological degree at every generic
// lattice element, and that the oracle is supported in at most one i >= 1.
TheoremReport verify_main_theorem(const Presentation& p, const BettiOptions& opts = {});

} // namespace multibetti
