#pragma once

#include "pcoh/cohomology.hpp"

#include <optional>

namespace pcoh {

/// A minimal vanishing product of degree-1 Bocksteins:
/// nonzero z_1..z_m in H^1 with beta(z_1)...beta(z_m) = 0.
struct SerreWitness {
    GroupPtr group;
    std::size_t m = 0;
    std::vector<std::vector<Fp>> homs;  ///< z_i as G -> Z/p value vectors
    std::vector<Subgroup> kernels;      ///< H_i = ker(z_i), index p
    bool product_checked = false;
};

/// The exact sequence 0 -> k -> X_{2m-1} -> ... -> X_0 -> k -> 0 built from
/// a witness; each X is the permutation module k[G/H_i], two per entry.
struct SplicedSequence {
    GroupPtr group;
    std::vector<std::vector<Fp>> homs;  ///< the z_i defining the pieces
    std::vector<Subgroup> pieces;       ///< H_i; piece i occupies terms 2i, 2i+1
    ModuleSequence seq;
    ExactnessReport exact_report;
};

/// 0 -> k --norm--> k[G/H] --(1-sigma)--> k[G/H] --aug--> k -> 0,
/// H = ker(z), sigma the image of the least g with z(g) = 1.
SplicedSequence two_extension(const GroupPtr& g, const std::vector<Fp>& hom);
SplicedSequence two_extension(const CohomologyClass& z, ResolutionCache& cache);

/// Exhaustive search in increasing m over projectivized tuples of nonzero
/// H^1 classes; returns a minimal-(m, lex) witness or nullopt if none with
/// m <= max_m ("none found up to bound", not "proven absent").
std::optional<SerreWitness> find_witness(const GroupPtr& g, std::size_t max_m,
                                         ResolutionCache& cache);

/// Yoneda splice of the m two-extensions, exactness verified.
SplicedSequence splice(const SerreWitness& w);

struct ZeroClassReport {
    CohomologyClass ext_class;  ///< extension class of the sequence
    CohomologyClass product;    ///< cup product of the beta(z_i)
    bool match = false;         ///< the two routes agree
    bool is_zero = false;
};

/// Extension class of the spliced sequence against the minimal resolution
/// of k, compared with the independently computed Bockstein product.
ZeroClassReport verify_zero_class(const SplicedSequence& s, ResolutionCache& cache);

} // namespace pcoh
