#pragma once

#include "pcoh/fp.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace pcoh {

using ElementId = std::uint16_t;

/// Ingestion form of a group: permutation generators on points 1..degree.
struct GroupSpec {
    std::string name;
    std::uint32_t p = 2;
    std::size_t degree = 0;
    std::vector<std::vector<int>> generators;  ///< 1-based image lists
};

/// Multiplication-table-backed finite group with a distinguished prime p.
///
/// Element ids are canonical: id 0 is the identity, the rest follow the
/// BFS order over generator words (generators in listed order).
class FiniteGroup {
public:
    /// Closure of permutation generators; deterministic element order.
    static std::shared_ptr<const FiniteGroup> from_permutations(const GroupSpec& spec,
                                                                std::size_t order_cap = 512);
    /// Wrap an explicit table (identity must sit at id 0).  Validates the
    /// group axioms by full enumeration.
    static std::shared_ptr<const FiniteGroup> from_table(std::uint32_t p, std::string name,
                                                         std::vector<ElementId> table,
                                                         std::vector<ElementId> generator_ids);

    std::uint32_t p() const { return p_; }
    std::size_t order() const { return order_; }
    const std::string& name() const { return name_; }

    ElementId mult(ElementId a, ElementId b) const { return table_[a * order_ + b]; }
    ElementId inv(ElementId a) const { return inv_[a]; }
    std::size_t element_order(ElementId a) const;

    const std::vector<ElementId>& generator_ids() const { return gen_ids_; }
    const std::vector<ElementId>& table() const { return table_; }

    bool is_abelian() const;
    bool is_p_group() const;
    bool is_elementary_abelian() const;

    /// For each element, a word in generator_ids() multiplying out to it
    /// (empty word = identity).  Deterministic BFS order.
    std::vector<std::vector<std::size_t>> element_words() const;

    std::uint64_t fingerprint() const { return fingerprint_; }

private:
    FiniteGroup() = default;
    void finish_init();

    std::uint32_t p_ = 2;
    std::size_t order_ = 1;
    std::string name_;
    std::vector<ElementId> table_;
    std::vector<ElementId> inv_;
    std::vector<ElementId> gen_ids_;
    std::uint64_t fingerprint_ = 0;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Subgroup given by its sorted member set plus a canonical left transversal
/// (least element id per coset, identity first).
struct Subgroup {
    GroupPtr parent;
    std::vector<ElementId> members;
    std::vector<ElementId> transversal;

    std::size_t order() const { return members.size(); }
    std::size_t index() const { return parent->order() / members.size(); }
    bool contains(ElementId e) const;
    /// Position of e in members; throws if absent.
    std::size_t member_index(ElementId e) const;
    /// Coset index of e in the transversal order.
    std::size_t coset_of(ElementId e) const;

    /// The subgroup as a standalone group; element i = members[i].
    GroupPtr as_group() const;

    bool is_normal() const;
    bool is_elementary_abelian() const;
};

Subgroup make_subgroup(GroupPtr g, std::vector<ElementId> members);
Subgroup subgroup_generated(GroupPtr g, const std::vector<ElementId>& gens);
/// Right-coset representatives (least id per coset Hg), ascending.
std::vector<ElementId> right_transversal(const Subgroup& h);

struct QuotientGroup {
    GroupPtr parent;
    GroupPtr quotient;
    std::vector<ElementId> projection;  ///< element id of parent -> id of quotient
};

// --- operations ----------------------------------------------------------

Subgroup center(GroupPtr g);
std::vector<Subgroup> central_order_p_subgroups(GroupPtr g);

/// Quotient by the subgroup generated by commutators and p-th powers, plus
/// its F_p-rank.  Parametrizes homomorphisms G -> Z/p.
std::pair<QuotientGroup, std::size_t> frattini_quotient(GroupPtr g);

struct IndexPSubgroup {
    Subgroup kernel;
    std::vector<Fp> hom;  ///< values of the defining surjection G -> Z/p per element id
};

/// One entry per nonzero class of Hom(G, Z/p) up to scalar.
std::vector<IndexPSubgroup> index_p_subgroups(GroupPtr g);

std::vector<Subgroup> elementary_abelian_subgroups(GroupPtr g, bool maximal_only);

QuotientGroup quotient(GroupPtr g, const Subgroup& n);

Subgroup sylow_p(GroupPtr g);

/// All homomorphisms G -> Z/p, one vector of values per element id,
/// enumerated deterministically; index 0 is the zero map.
std::vector<std::vector<Fp>> all_homs_to_zp(GroupPtr g);

/// A maximal independent set of homomorphisms G -> Z/p (duals of a basis
/// of the elementary abelian quotient); size = rank of Hom(G, Z/p).
std::vector<std::vector<Fp>> hom_basis_to_zp(GroupPtr g);

// --- catalog --------------------------------------------------------------

std::vector<std::string> catalog_names();
bool catalog_has(const std::string& name);
/// Built-in group; p_override replaces the catalog prime when nonzero.
GroupPtr catalog_group(const std::string& name, std::uint32_t p_override = 0);

} // namespace pcoh
