#pragma once

#include "pcoh/fp.hpp"
#include "pcoh/group.hpp"

#include <memory>
#include <vector>

namespace pcoh {

/// Finite-dimensional F_pG-module: one invertible action matrix per group
/// element, cached at construction so later use is read-only.
class KGModule {
public:
    /// `actions` has one dim x dim matrix per element id.
    KGModule(GroupPtr g, std::vector<FpMatrix> actions);

    /// Derive all element actions from generator matrices (aligned with
    /// g->generator_ids()) via the group's BFS words.
    static KGModule from_generator_actions(GroupPtr g, const std::vector<FpMatrix>& gen_mats);

    const GroupPtr& group() const { return g_; }
    std::size_t dim() const { return dim_; }
    std::uint32_t p() const { return g_->p(); }
    const FpMatrix& action(ElementId e) const { return act_[e]; }

    /// Full homomorphism check: action(a) action(b) = action(ab) for all pairs.
    void validate() const;

    std::uint64_t fingerprint() const { return fingerprint_; }
    bool is_trivial() const;  ///< dim 1 and every action the identity

private:
    GroupPtr g_;
    std::size_t dim_ = 0;
    std::vector<FpMatrix> act_;
    std::uint64_t fingerprint_ = 0;
};

using ModulePtr = std::shared_ptr<const KGModule>;

/// Equivariant map between modules over the same group.
struct ModuleMap {
    ModulePtr src;
    ModulePtr tgt;
    FpMatrix mat;  ///< dim(tgt) x dim(src)

    bool is_equivariant() const;
    void check_equivariant(const char* where) const;
};

ModuleMap compose(const ModuleMap& second, const ModuleMap& first);  ///< second ∘ first

ModulePtr trivial_module(GroupPtr g);
ModulePtr regular_module(GroupPtr g);
/// regular^rank with basis (copy, element); free generators at (copy, id 0).
ModulePtr free_module(GroupPtr g, std::size_t rank);

/// Same space, action restricted to h (re-indexed as a standalone group).
ModulePtr restrict_module(const ModulePtr& m, const Subgroup& h);

/// Induced module k[G] ⊗_{kH} m; basis (transversal rep, basis vector of m).
ModulePtr induce_module(const ModulePtr& m_over_h, const Subgroup& h);

/// Pull back along the quotient projection.
ModulePtr inflate_module(const ModulePtr& m_over_quotient, const QuotientGroup& q);

/// Tensor over the base field with diagonal action (Kronecker products).
ModulePtr tensor_module(const ModulePtr& a, const ModulePtr& b);

/// Explicit isomorphism  Ind_H^G(k) ⊗ l  ->  Ind_H^G Res_H^G(l),
/// (coset of t) ⊗ v  |->  t ⊗ t^{-1} v.  Fully verified equivariant.
ModuleMap frobenius_iso(const Subgroup& h, const ModulePtr& l);

/// Rows spanning the Jacobson radical Σ_g (action(g) - 1) m (p-groups).
FpMatrix radical_basis(const KGModule& m);

/// Rows spanning the fixed subspace m^G.
FpMatrix fixed_space(const KGModule& m);

struct ProjectiveCover {
    ModulePtr free;   ///< regular^rank
    ModuleMap cover;  ///< surjective, kernel inside radical(free)
    std::size_t rank = 0;
};
ProjectiveCover projective_cover(const ModulePtr& m);

/// Chain 0 ⊂ M_1 ⊂ ... ⊂ M_dim = m of invariant subspaces with trivial
/// quotients; each entry the rref basis of M_i in m's coordinates.
std::vector<FpMatrix> composition_series(const ModulePtr& m);

/// The action induced on an invariant subspace (rows of `basis` in rref).
ModulePtr submodule(const KGModule& m, const FpMatrix& basis);

/// The action induced on m / rowspace(basis), in quotient_map coordinates.
ModulePtr quotient_module(const KGModule& m, const FpMatrix& basis);

} // namespace pcoh
