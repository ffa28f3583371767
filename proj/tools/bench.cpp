// Times the OpenMP kernels against their serial references on generated
// instances and checks they agree.
//
//   bench [ground-size] [monomial-generators] [seed]

#include "multibetti/betti.hpp"
#include "multibetti/random_instances.hpp"
#include "multibetti/scarf.hpp"

#include <omp.h>

#include <cstdlib>
#include <iostream>

using namespace multibetti;

namespace {

double now() { return omp_get_wtime(); }

void report(const char* name, double serial, double parallel, bool agree) {
    std::cout << name << ": serial " << serial << "s, parallel " << parallel << "s, speedup "
              << (parallel > 0 ? serial / parallel : 0.0) << "x, results "
              << (agree ? "agree" : "DISAGREE") << "\n";
}

} // namespace

int main(int argc, char** argv) {
    const std::size_t ground = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 14;
    const std::size_t gens = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 6;
    const std::uint64_t seed = argc > 3 ? std::strtoull(argv[3], nullptr, 10) : 1;
    std::cout << "threads: " << omp_get_max_threads() << "\n";

    Rng rng(seed);
    {
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < ground; ++i) labels.push_back("e" + std::to_string(i + 1));
        const RepresentedMatroid m(labels,
                                   random_matrix(rng, Field::rationals(), 3, ground));
        double t0 = now();
        const long long serial = beta_invariant_serial(m, ground);
        double t1 = now();
        const long long parallel = beta_invariant(m, ground);
        double t2 = now();
        std::cout << "beta-invariant on " << ground << " elements = " << serial << "\n";
        report("beta_invariant", t1 - t0, t2 - t1, serial == parallel);
    }
    {
        Presentation p = random_monomial_ideal(rng, gens, 3, 8);
        while (p.source_count() < std::max<std::size_t>(gens - 1, 1))
            p = random_monomial_ideal(rng, gens, 3, 8);
        std::cout << "monomial ideal with " << p.source_count() << " generators, lattice size "
                  << p.lcm_lattice().elements.size() << "\n";
        double t0 = now();
        const auto serial = betti_table(p, BettiMode::both, {.parallel = false});
        double t1 = now();
        const auto parallel = betti_table(p, BettiMode::both, {.parallel = true});
        double t2 = now();
        bool agree = serial.size() == parallel.size();
        for (std::size_t i = 0; agree && i < serial.size(); ++i)
            agree = serial[i].i == parallel[i].i && serial[i].alpha == parallel[i].alpha &&
                    serial[i].value == parallel[i].value && serial[i].source == parallel[i].source;
        report("betti_table", t1 - t0, t2 - t1, agree);

        const MonomialResolution taylor = taylor_complex(p);
        double t3 = now();
        const bool rs = is_resolution(taylor, p, {.parallel = false});
        double t4 = now();
        const bool rp = is_resolution(taylor, p, {.parallel = true});
        double t5 = now();
        report("taylor_strands", t4 - t3, t5 - t4, rs == rp && rs);
    }
    return 0;
}
