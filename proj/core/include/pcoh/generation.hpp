#pragma once

#include "pcoh/config.hpp"
#include "pcoh/serre.hpp"

#include <memory>
#include <optional>

namespace pcoh {

enum class CertKind {
    LeafInducedTrivial,  ///< trivial module over an elementary abelian group
    CompositionStep,     ///< iterated extensions of trivial modules
    SerreSpliceStep,     ///< tensored Theorem-2 sequence with vanishing class
    SylowDescentStep,    ///< split unit/retraction through a Sylow subgroup
    UnprovenFrontier,    ///< a cap was hit; claim not established here
};

const char* cert_kind_name(CertKind k);
std::optional<CertKind> cert_kind_from_name(const std::string& s);

struct GenerationCertificate;
using CertPtr = std::shared_ptr<const GenerationCertificate>;

struct SpliceStepData {
    SerreWitness witness;
    ModuleSequence tensored;  ///< ends l, middle terms Ind_{H_i} Res_{H_i} l
    ExactnessReport exact;
    CohomologyClass ext_class;  ///< in Ext^{2m}(l, l)
    bool ext_zero = false;
    std::vector<Subgroup> child_subgroups;  ///< distinct H_i, in witness order
};

struct CompositionStepData {
    std::vector<FpMatrix> series;  ///< nested bases with trivial quotients
    std::size_t cover_rank = 0;    ///< rank of the projective cover of l
};

struct SylowStepData {
    Subgroup sylow;
    FpMatrix unit;        ///< l -> Ind_P^G Res_P^G l
    FpMatrix retraction;  ///< back; composite = [G:P] id, invertible mod p
    Fp composite_scalar = 0;
};

/// Node of the recursive evidence that `module` lies in the thick
/// subcategory generated by modules induced from elementary abelian
/// subgroups.  Leaves are exactly trivial modules over elementary abelian
/// groups (over F_p the corollary's one-dimensional modules are trivial).
struct GenerationCertificate {
    CertKind kind = CertKind::UnprovenFrontier;
    GroupPtr group;
    ModulePtr module;
    std::optional<SpliceStepData> splice;
    std::optional<CompositionStepData> composition;
    std::optional<SylowStepData> sylow;
    std::string frontier_reason;
    std::vector<CertPtr> children;

    bool complete() const;  ///< no unproven frontier anywhere in the tree
    /// Every leaf is a trivial module over an elementary abelian group.
    bool leaves_induced_trivial() const;
};

/// Termwise tensor of the spliced sequence with l, rewritten through
/// frobenius_iso so every middle term is Ind_{H_i}^G Res_{H_i}^G(l).
ModuleSequence tensor_sequence(const SplicedSequence& s, const ModulePtr& l);

/// Extension class of an exact sequence with both ends l, plus vanishing flag.
std::pair<CohomologyClass, bool> ext_class_vanishes(const ModuleSequence& seq,
                                                    ResolutionCache& cache);

CertPtr elementary_abelian_certificate(const GroupPtr& e, const ModulePtr& l);

/// One Sylow-descent node: l -> Ind_P Res_P l -> l composes to [G:P] id.
/// `child` must certify (P, Res_P l).
CertPtr sylow_descent(const GroupPtr& g, const ModulePtr& l, CertPtr child);

/// Full recursion of the generation argument.  Caps produce partial
/// certificates with explicit unproven-frontier nodes rather than failures.
CertPtr generation_certificate(const GroupPtr& g, const ModulePtr& l, const SessionConfig& cfg,
                               ResolutionCache& cache);

/// Re-derive the Sylow unit/retraction pair (used by certificate verify).
SylowStepData make_sylow_step(const GroupPtr& g, const ModulePtr& l);

} // namespace pcoh
