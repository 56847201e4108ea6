#include "pcoh/generation.hpp"

#include "pcoh/error.hpp"

#include <algorithm>
#include <map>

namespace pcoh {

const char* cert_kind_name(CertKind k) {
    switch (k) {
        case CertKind::LeafInducedTrivial: return "leaf-induced-trivial";
        case CertKind::CompositionStep: return "composition-step";
        case CertKind::SerreSpliceStep: return "serre-splice-step";
        case CertKind::SylowDescentStep: return "sylow-descent-step";
        case CertKind::UnprovenFrontier: return "unproven-frontier";
    }
    return "?";
}

std::optional<CertKind> cert_kind_from_name(const std::string& s) {
    for (CertKind k : {CertKind::LeafInducedTrivial, CertKind::CompositionStep,
                       CertKind::SerreSpliceStep, CertKind::SylowDescentStep,
                       CertKind::UnprovenFrontier})
        if (s == cert_kind_name(k)) return k;
    return std::nullopt;
}

bool GenerationCertificate::complete() const {
    if (kind == CertKind::UnprovenFrontier) return false;
    for (const auto& c : children)
        if (!c->complete()) return false;
    return true;
}

bool GenerationCertificate::leaves_induced_trivial() const {
    if (children.empty())
        return kind == CertKind::LeafInducedTrivial && module->is_trivial() &&
               group->is_elementary_abelian();
    for (const auto& c : children)
        if (!c->leaves_induced_trivial()) return false;
    return true;
}

ModuleSequence tensor_sequence(const SplicedSequence& s, const ModulePtr& l) {
    if (s.group->fingerprint() != l->group()->fingerprint())
        throw InputError("tensor_sequence: module over a different group");
    const std::size_t n = s.seq.n();
    const std::size_t dl = l->dim();
    FpMatrix idl = FpMatrix::identity(l->p(), dl);

    // per piece: the Frobenius isomorphism tensor(k[G/H], l) -> Ind Res l
    std::vector<ModuleMap> isos;
    std::vector<FpMatrix> isos_inv;
    std::vector<ModulePtr> ind_res;
    for (const Subgroup& h : s.pieces) {
        ModuleMap iso = frobenius_iso(h, l);
        auto inv_mat = inverse(iso.mat);
        if (!inv_mat) throw InternalError("tensor_sequence: iso not invertible");
        isos.push_back(iso);
        isos_inv.push_back(std::move(*inv_mat));
        ind_res.push_back(iso.tgt);
    }
    auto piece_of = [](std::size_t term) { return term / 2; };

    auto kron_with_id = [&](const FpMatrix& m, std::size_t dim_l) {
        FpMatrix out(m.p(), m.rows() * dim_l, m.cols() * dim_l);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                Fp v = m(i, j);
                if (v == 0) continue;
                for (std::size_t t = 0; t < dim_l; ++t) out.set(i * dim_l + t, j * dim_l + t, v);
            }
        return out;
    };

    ModuleSequence out;
    out.left = l;
    out.right = l;
    for (std::size_t i = 0; i < n; ++i) out.terms.push_back(ind_res[piece_of(i)]);
    // ends: k ⊗ l and l share coordinates under the Kronecker indexing
    out.into = isos[piece_of(n - 1)].mat * kron_with_id(s.seq.into, dl);
    out.onto = kron_with_id(s.seq.onto, dl) * isos_inv[piece_of(0)];
    for (std::size_t i = 0; i + 1 < n; ++i)
        out.maps.push_back(isos[piece_of(i)].mat * kron_with_id(s.seq.maps[i], dl) *
                           isos_inv[piece_of(i + 1)]);
    return out;
}

std::pair<CohomologyClass, bool> ext_class_vanishes(const ModuleSequence& seq,
                                                    ResolutionCache& cache) {
    if (seq.left->fingerprint() != seq.right->fingerprint())
        throw InputError("ext_class_vanishes: sequence ends differ");
    CohomologyClass cls = extension_class(seq, cache);
    return {cls, cls.is_zero()};
}

CertPtr elementary_abelian_certificate(const GroupPtr& e, const ModulePtr& l) {
    if (!e->is_elementary_abelian())
        throw DomainError("elementary_abelian_certificate: group not elementary abelian");
    auto node = std::make_shared<GenerationCertificate>();
    node->group = e;
    node->module = l;
    if (l->is_trivial()) {
        node->kind = CertKind::LeafInducedTrivial;
        return node;
    }
    node->kind = CertKind::CompositionStep;
    CompositionStepData data;
    data.series = composition_series(l);
    data.cover_rank = projective_cover(l).rank;
    node->composition = std::move(data);
    CertPtr leaf = elementary_abelian_certificate(e, trivial_module(e));
    node->children.assign(l->dim(), leaf);
    return node;
}

SylowStepData make_sylow_step(const GroupPtr& g, const ModulePtr& l) {
    if (g->is_p_group()) throw DomainError("sylow_descent: group is already a p-group");
    if (g->order() % g->p() != 0) throw DomainError("sylow_descent: p does not divide |G|");
    SylowStepData data;
    data.sylow = sylow_p(g);
    const Subgroup& h = data.sylow;
    const std::size_t k = h.transversal.size();
    const std::size_t dl = l->dim();
    ModulePtr ind = induce_module(restrict_module(l, h), h);

    FpMatrix unit(l->p(), k * dl, dl);
    FpMatrix retr(l->p(), dl, k * dl);
    for (std::size_t c = 0; c < k; ++c) {
        unit.set_block(c * dl, 0, l->action(g->inv(h.transversal[c])));
        retr.set_block(0, c * dl, l->action(h.transversal[c]));
    }
    ModuleMap{l, ind, unit}.check_equivariant("sylow_descent: unit");
    ModuleMap{ind, l, retr}.check_equivariant("sylow_descent: retraction");

    FpMatrix comp = retr * unit;
    Fp scalar = static_cast<Fp>(k % l->p());
    if (scalar == 0) throw InternalError("sylow_descent: index divisible by p");
    if (!(comp == FpMatrix::identity(l->p(), dl).scaled(scalar)))
        throw InternalError("sylow_descent: composite is not [G:P] id");
    data.unit = std::move(unit);
    data.retraction = std::move(retr);
    data.composite_scalar = scalar;
    return data;
}

CertPtr sylow_descent(const GroupPtr& g, const ModulePtr& l, CertPtr child) {
    auto node = std::make_shared<GenerationCertificate>();
    node->kind = CertKind::SylowDescentStep;
    node->group = g;
    node->module = l;
    node->sylow = make_sylow_step(g, l);
    node->children.push_back(std::move(child));
    return node;
}

namespace {

struct CertBuilder {
    const SessionConfig& cfg;
    ResolutionCache& cache;
    std::map<std::pair<std::uint64_t, std::uint64_t>, CertPtr> memo;

    CertPtr frontier(const GroupPtr& g, const ModulePtr& l, std::string reason) {
        auto node = std::make_shared<GenerationCertificate>();
        node->kind = CertKind::UnprovenFrontier;
        node->group = g;
        node->module = l;
        node->frontier_reason = std::move(reason);
        return node;
    }

    CertPtr build(const GroupPtr& g, const ModulePtr& l, std::size_t depth) {
        auto key = std::make_pair(g->fingerprint(), l->fingerprint());
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        if (depth > cfg.cert_depth_cap) {
            return frontier(g, l, "depth cap exceeded");
        }
        CertPtr node;
        try {
            node = dispatch(g, l, depth);
        } catch (const CapError& e) {
            node = frontier(g, l, e.what());
        }
        memo.emplace(key, node);
        return node;
    }

    CertPtr dispatch(const GroupPtr& g, const ModulePtr& l, std::size_t depth) {
        if (g->is_elementary_abelian()) return elementary_abelian_certificate(g, l);
        if (!g->is_p_group()) {
            Subgroup p = sylow_p(g);
            CertPtr child = build(p.as_group(), restrict_module(l, p), depth + 1);
            return sylow_descent(g, l, child);
        }
        auto witness = find_witness(g, cfg.max_m, cache);
        if (!witness)
            return frontier(g, l,
                            "no Bockstein-product witness with m <= " +
                                std::to_string(cfg.max_m));
        SplicedSequence s = splice(*witness);
        auto node = std::make_shared<GenerationCertificate>();
        node->kind = CertKind::SerreSpliceStep;
        node->group = g;
        node->module = l;
        SpliceStepData data;
        data.witness = *witness;
        data.tensored = tensor_sequence(s, l);
        data.exact = verify_exact(data.tensored);
        if (!data.exact.pass) throw InternalError("generation: tensored sequence not exact");
        auto [cls, zero] = ext_class_vanishes(data.tensored, cache);
        data.ext_class = std::move(cls);
        data.ext_zero = zero;
        if (!zero)
            throw InternalError("generation: witness sequence has nonzero Ext class");
        // one child per distinct H_i (distinct member sets), in witness order
        std::vector<std::vector<ElementId>> seen;
        for (const Subgroup& h : witness->kernels) {
            if (std::find(seen.begin(), seen.end(), h.members) != seen.end()) continue;
            seen.push_back(h.members);
            data.child_subgroups.push_back(h);
            node->children.push_back(build(h.as_group(), restrict_module(l, h), depth + 1));
        }
        node->splice = std::move(data);
        return node;
    }
};

} // namespace

CertPtr generation_certificate(const GroupPtr& g, const ModulePtr& l, const SessionConfig& cfg,
                               ResolutionCache& cache) {
    if (l->dim() == 0) throw DomainError("generation_certificate: zero module");
    CertBuilder builder{cfg, cache, {}};
    return builder.build(g, l, 0);
}

} // namespace pcoh
