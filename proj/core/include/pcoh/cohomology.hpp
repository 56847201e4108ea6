#pragma once

#include "pcoh/resolution.hpp"

#include <optional>

namespace pcoh {

/// A cohomology class in H^n(G, M) = Ext^n_kG(k, M), stored as the
/// canonical representative of its coordinate vector on the cached minimal
/// resolution of k (free-generator coordinates, reduced mod coboundaries).
///
/// The same shape also carries classes of Ext^n(L, M) when the resolved
/// module is L instead of k (extension classes of sequences with ends L).
struct CohomologyClass {
    GroupPtr group;
    ModulePtr resolved;      ///< module whose resolution carries the class (k for H^*)
    ModulePtr coefficients;  ///< M
    std::size_t degree = 0;
    std::vector<Fp> vec;  ///< length betti[degree] * dim(M), canonical

    bool is_zero() const;
    bool operator==(const CohomologyClass& o) const;
};

/// Matrix of  Hom_kG(F, M) -> Hom_kG(F', M),  phi -> phi ∘ d,  in
/// free-generator coordinates, where d : F' -> F between free modules.
FpMatrix hom_induced(const KGModule& coeff, const FpMatrix& d, std::size_t group_order);

/// Cocycle space / coboundary space of Hom(F_n, M) on the resolution of k.
struct CochainData {
    FpMatrix cocycles;      ///< rows span Z^n (kernel basis, canonical)
    FpMatrix coboundaries;  ///< rows span B^n (rref)
    std::size_t dim_hn() const { return cocycles.rows() - coboundaries.rows(); }
};
CochainData cochain_data(const FreeResolution& res, const ModulePtr& coeff, std::size_t n);

std::size_t cohomology_dim(const GroupPtr& g, const ModulePtr& coeff, std::size_t n,
                           ResolutionCache& cache);

std::vector<CohomologyClass> cocycle_basis(const GroupPtr& g, const ModulePtr& coeff,
                                           std::size_t n, ResolutionCache& cache);

/// Class from a raw coordinate vector (checked to be a cocycle, canonicalized).
CohomologyClass make_class(const GroupPtr& g, const ModulePtr& coeff, std::size_t n,
                           std::vector<Fp> raw, ResolutionCache& cache);

/// Yoneda (cup) product on H^*(G, k).
CohomologyClass cup(const CohomologyClass& u, const CohomologyClass& v, ResolutionCache& cache);

/// Multiplication by a fixed class u of H^*(G,k): matrices H^d -> H^{d+|u|}.
class ClassMultiplier {
public:
    ClassMultiplier(const CohomologyClass& u, std::size_t max_source_deg, ResolutionCache& cache);
    /// Operator on degree-d coordinates (b_{d+|u|} x b_d).
    FpMatrix at(std::size_t d) const;
    std::size_t class_degree() const { return deg_; }

private:
    std::size_t deg_;
    std::size_t group_order_;
    std::vector<std::size_t> betti_;
    ChainMap lift_;
};

// --- degree-1 classes and the Bockstein -------------------------------------

/// H^1(G,k) = Hom(G, Z/p): the class of a homomorphism (values per element).
CohomologyClass class_of_hom(const GroupPtr& g, const std::vector<Fp>& hom,
                             ResolutionCache& cache);
/// Inverse direction; z must have degree 1 and trivial coefficients.
std::vector<Fp> hom_of_class(const CohomologyClass& z, ResolutionCache& cache);

/// Degree-1 Bockstein: lift the homomorphism mod p^2, take the defect
/// 2-cocycle (z(g) + z(h) - z(gh))/p on the bar complex, transport to the
/// minimal resolution.
CohomologyClass bockstein_h1(const CohomologyClass& z, ResolutionCache& cache);

/// Transport a bar 2-cocycle c : G x G -> k (given as an order x order
/// matrix) to the minimal resolution.  Validates the cocycle condition.
CohomologyClass bar_to_minimal(const GroupPtr& g, const FpMatrix& cocycle,
                               ResolutionCache& cache);

/// Independent oracle: dim H^n(G,k) from the normalized bar complex
/// (raw function spaces (G\1)^n -> k with the simplicial differential).
std::size_t bar_cohomology_dim(const GroupPtr& g, std::size_t n, std::size_t cell_cap = 200000);

// --- functoriality ------------------------------------------------------------

/// res^G_H(u): compare H's minimal resolution with the restricted resolution.
CohomologyClass restrict_class(const CohomologyClass& u, const Subgroup& h,
                               ResolutionCache& cache);

/// inf^G_{G/N}(u): pull back along the projection.
CohomologyClass inflate_class(const CohomologyClass& u, const QuotientGroup& q,
                              ResolutionCache& cache);

// --- extension classes ----------------------------------------------------------

/// Yoneda class in Ext^n(right, left) of an exact sequence, by lifting the
/// identity of `right` through the sequence against the minimal resolution
/// of `right`.  Requires the sequence to verify exact.
CohomologyClass extension_class(const ModuleSequence& seq, ResolutionCache& cache);

// --- ring presentations -----------------------------------------------------------

struct RingGenerator {
    std::size_t degree = 0;
    std::size_t index = 0;  ///< position within its degree's basis
    std::vector<Fp> vec;    ///< coordinates in H^degree
};

struct RingProduct {
    std::size_t i = 0, j = 0;  ///< generator indices, i <= j
    std::vector<Fp> vec;       ///< coordinates of gen_i * gen_j in its degree
};

struct RingPresentation {
    GroupPtr group;
    std::size_t maxdeg = 0;
    std::vector<std::size_t> hilbert;  ///< b_0 .. b_maxdeg
    std::vector<RingGenerator> generators;
    std::vector<RingProduct> products;  ///< all pairs with degree sum <= maxdeg
};

RingPresentation ring_presentation(const GroupPtr& g, std::size_t maxdeg, ResolutionCache& cache);

// --- the polynomial subalgebra of an elementary abelian group ----------------------

struct PolSubalgebra {
    GroupPtr group;
    std::size_t maxdeg = 0;
    std::vector<CohomologyClass> generators;  ///< Bocksteins of the H^1 basis
    std::vector<FpMatrix> span;               ///< span[d]: rref rows inside H^d coords
};

PolSubalgebra pol_subalgebra(const GroupPtr& e, std::size_t maxdeg, ResolutionCache& cache);

} // namespace pcoh
