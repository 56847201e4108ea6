#pragma once

#include "pcoh/cohomology.hpp"

namespace pcoh {

/// Even-degree generators of H^even(G) through degree D, the subalgebra S
/// over which elementary abelian restrictions are checked module-finite.
std::vector<CohomologyClass> choose_S(const GroupPtr& g, std::size_t D, ResolutionCache& cache);

struct Lemma1PerE {
    Subgroup e;
    std::vector<std::size_t> restricted_degrees;  ///< degrees of the S-generator images
    std::vector<std::size_t> generator_degrees;   ///< module gens of H^*(E) over the image
    std::size_t max_generator_degree = 0;
};

/// Truncated certificate that H^*(E) is finite over H^even(G) for every
/// maximal elementary abelian E: certified through degree D, not a proof.
struct FiniteGenerationReport {
    GroupPtr group;
    std::size_t maxdeg = 0;
    std::vector<CohomologyClass> s_generators;
    std::size_t d_stab = 0;  ///< D - max S-generator degree
    std::vector<Lemma1PerE> per_e;
    bool pass = false;        ///< no module generator in (d_stab, D] for any E
    bool conclusive = false;  ///< stabilization window was nonempty
};

FiniteGenerationReport lemma1_check(const GroupPtr& g, std::size_t D, ResolutionCache& cache);

struct ModuleFGReport {
    GroupPtr group;
    ModulePtr coefficients;
    std::size_t maxdeg = 0;
    std::vector<std::size_t> s_degrees;          ///< degrees of the chosen S-generators
    std::vector<std::size_t> hn_dims;            ///< dim H^n(G, M) for n <= D
    std::vector<std::size_t> generator_degrees;  ///< where the S-span fails to cover
    std::size_t stabilization = 0;               ///< last generator degree
    bool conclusive = false;
};

/// Module generators of truncated H^*(G, M) over S, via the Yoneda action
/// of the S-generators lifted to chain maps.
ModuleFGReport module_generators(const GroupPtr& g, const ModulePtr& m, std::size_t D,
                                 ResolutionCache& cache);

} // namespace pcoh
