#include "pcoh/module.hpp"

#include "pcoh/error.hpp"

#include <algorithm>

namespace pcoh {

KGModule::KGModule(GroupPtr g, std::vector<FpMatrix> actions) : g_(std::move(g)) {
    if (actions.size() != g_->order())
        throw InputError("KGModule: need one action matrix per group element");
    dim_ = actions.empty() ? 0 : actions[0].rows();
    for (const auto& a : actions) {
        if (a.rows() != dim_ || a.cols() != dim_)
            throw InputError("KGModule: action matrices must be square of equal size");
        if (a.p() != g_->p()) throw InputError("KGModule: action modulus differs from group prime");
    }
    if (!actions.empty() && !(actions[0] == FpMatrix::identity(g_->p(), dim_)))
        throw InputError("KGModule: identity element must act as the identity matrix");
    act_ = std::move(actions);

    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(g_->fingerprint());
    mix(dim_);
    for (const auto& a : act_) mix(a.fingerprint());
    fingerprint_ = h;
}

KGModule KGModule::from_generator_actions(GroupPtr g, const std::vector<FpMatrix>& gen_mats) {
    if (gen_mats.size() != g->generator_ids().size())
        throw InputError("KGModule: one matrix per stored generator required");
    std::size_t dim = gen_mats.empty() ? 1 : gen_mats[0].rows();
    auto words = g->element_words();
    std::vector<FpMatrix> act;
    act.reserve(g->order());
    for (std::size_t e = 0; e < g->order(); ++e) {
        FpMatrix m = FpMatrix::identity(g->p(), dim);
        for (std::size_t j : words[e]) m = m * gen_mats[j];
        act.push_back(std::move(m));
    }
    return KGModule(std::move(g), std::move(act));
}

void KGModule::validate() const {
    for (std::size_t a = 0; a < g_->order(); ++a)
        for (std::size_t b = 0; b < g_->order(); ++b) {
            ElementId ea = static_cast<ElementId>(a), eb = static_cast<ElementId>(b);
            if (!(act_[ea] * act_[eb] == act_[g_->mult(ea, eb)]))
                throw VerifyError("KGModule: action is not a homomorphism");
        }
}

bool KGModule::is_trivial() const {
    if (dim_ != 1) return false;
    for (const auto& a : act_)
        if (a(0, 0) != 1) return false;
    return true;
}

bool ModuleMap::is_equivariant() const {
    if (src->group()->fingerprint() != tgt->group()->fingerprint()) return false;
    for (std::size_t e = 0; e < src->group()->order(); ++e) {
        ElementId id = static_cast<ElementId>(e);
        if (!(mat * src->action(id) == tgt->action(id) * mat)) return false;
    }
    return true;
}

void ModuleMap::check_equivariant(const char* where) const {
    if (!is_equivariant()) throw VerifyError(std::string(where) + ": map is not equivariant");
}

ModuleMap compose(const ModuleMap& second, const ModuleMap& first) {
    if (second.src->fingerprint() != first.tgt->fingerprint())
        throw InputError("compose: maps not composable");
    return {first.src, second.tgt, second.mat * first.mat};
}

ModulePtr trivial_module(GroupPtr g) {
    std::vector<FpMatrix> act(g->order(), FpMatrix::identity(g->p(), 1));
    return std::make_shared<KGModule>(std::move(g), std::move(act));
}

ModulePtr regular_module(GroupPtr g) { return free_module(std::move(g), 1); }

ModulePtr free_module(GroupPtr g, std::size_t rank) {
    const std::size_t n = g->order();
    std::vector<FpMatrix> act;
    act.reserve(n);
    for (std::size_t e = 0; e < n; ++e) {
        FpMatrix m(g->p(), rank * n, rank * n);
        for (std::size_t c = 0; c < rank; ++c)
            for (std::size_t x = 0; x < n; ++x)
                m.set(c * n + g->mult(static_cast<ElementId>(e), static_cast<ElementId>(x)),
                      c * n + x, 1);
        act.push_back(std::move(m));
    }
    return std::make_shared<KGModule>(std::move(g), std::move(act));
}

ModulePtr restrict_module(const ModulePtr& m, const Subgroup& h) {
    if (h.parent->fingerprint() != m->group()->fingerprint())
        throw InputError("restrict_module: subgroup of a different group");
    GroupPtr hg = h.as_group();
    std::vector<FpMatrix> act;
    act.reserve(h.members.size());
    for (ElementId e : h.members) act.push_back(m->action(e));
    return std::make_shared<KGModule>(std::move(hg), std::move(act));
}

ModulePtr induce_module(const ModulePtr& m_over_h, const Subgroup& h) {
    GroupPtr g = h.parent;
    GroupPtr hg = h.as_group();
    if (m_over_h->group()->fingerprint() != hg->fingerprint())
        throw InputError("induce_module: module is not over the given subgroup");
    const std::size_t k = h.transversal.size();
    const std::size_t d = m_over_h->dim();
    // coset index per element
    std::vector<std::size_t> coset_idx(g->order());
    for (std::size_t c = 0; c < k; ++c)
        for (ElementId m : h.members) coset_idx[g->mult(h.transversal[c], m)] = c;

    std::vector<FpMatrix> act;
    act.reserve(g->order());
    for (std::size_t e = 0; e < g->order(); ++e) {
        ElementId a = static_cast<ElementId>(e);
        FpMatrix mat(g->p(), k * d, k * d);
        for (std::size_t c = 0; c < k; ++c) {
            ElementId at = g->mult(a, h.transversal[c]);
            std::size_t c2 = coset_idx[at];
            // a t_c = t_{c2} h_el
            ElementId hel = g->mult(g->inv(h.transversal[c2]), at);
            mat.set_block(c2 * d, c * d,
                          m_over_h->action(static_cast<ElementId>(h.member_index(hel))));
        }
        act.push_back(std::move(mat));
    }
    return std::make_shared<KGModule>(g, std::move(act));
}

ModulePtr inflate_module(const ModulePtr& m_over_quotient, const QuotientGroup& q) {
    if (m_over_quotient->group()->fingerprint() != q.quotient->fingerprint())
        throw InputError("inflate_module: module is not over the quotient");
    std::vector<FpMatrix> act;
    act.reserve(q.parent->order());
    for (std::size_t e = 0; e < q.parent->order(); ++e)
        act.push_back(m_over_quotient->action(q.projection[e]));
    return std::make_shared<KGModule>(q.parent, std::move(act));
}

namespace {
FpMatrix kronecker(const FpMatrix& a, const FpMatrix& b) {
    FpMatrix out(a.p(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            Fp v = a(i, j);
            if (v == 0) continue;
            out.set_block(i * b.rows(), j * b.cols(), b.scaled(v));
        }
    return out;
}
} // namespace

ModulePtr tensor_module(const ModulePtr& a, const ModulePtr& b) {
    if (a->group()->fingerprint() != b->group()->fingerprint())
        throw InputError("tensor_module: modules over different groups");
    std::vector<FpMatrix> act;
    act.reserve(a->group()->order());
    for (std::size_t e = 0; e < a->group()->order(); ++e)
        act.push_back(
            kronecker(a->action(static_cast<ElementId>(e)), b->action(static_cast<ElementId>(e))));
    return std::make_shared<KGModule>(a->group(), std::move(act));
}

ModuleMap frobenius_iso(const Subgroup& h, const ModulePtr& l) {
    GroupPtr g = h.parent;
    if (l->group()->fingerprint() != g->fingerprint())
        throw InputError("frobenius_iso: module over a different group");
    ModulePtr permmod = induce_module(trivial_module(h.as_group()), h);
    ModulePtr lhs = tensor_module(permmod, l);
    ModulePtr rhs = induce_module(restrict_module(l, h), h);
    const std::size_t k = h.transversal.size();
    const std::size_t d = l->dim();
    FpMatrix mat(g->p(), k * d, k * d);
    for (std::size_t c = 0; c < k; ++c)
        mat.set_block(c * d, c * d, l->action(g->inv(h.transversal[c])));
    ModuleMap iso{lhs, rhs, std::move(mat)};
    iso.check_equivariant("frobenius_iso");
    return iso;
}

FpMatrix radical_basis(const KGModule& m) {
    if (!m.group()->is_p_group()) throw DomainError("radical_basis: not a p-group");
    const auto& gens = m.group()->generator_ids();
    FpMatrix stacked(m.p(), 0, m.dim());
    FpMatrix id = FpMatrix::identity(m.p(), m.dim());
    for (ElementId e : gens) {
        // image of (action - 1) = column space; collect as rows via transpose
        stacked = stack_rows(stacked, (m.action(e) - id).transposed());
    }
    return row_space_basis(stacked);
}

FpMatrix fixed_space(const KGModule& m) {
    const auto& gens = m.group()->generator_ids();
    FpMatrix id = FpMatrix::identity(m.p(), m.dim());
    FpMatrix stacked(m.p(), 0, m.dim());
    for (ElementId e : gens) stacked = stack_rows(stacked, m.action(e) - id);
    return kernel_basis(stacked);
}

ProjectiveCover projective_cover(const ModulePtr& m) {
    if (m->dim() == 0) throw DomainError("projective_cover: zero module");
    if (!m->group()->is_p_group()) throw DomainError("projective_cover: not a p-group");
    GroupPtr g = m->group();
    FpMatrix rad = radical_basis(*m);
    const std::size_t r = m->dim() - rad.rows();

    // first standard basis vectors completing the radical to all of m
    std::vector<std::vector<Fp>> heads;
    FpMatrix span = rad;
    for (std::size_t j = 0; j < m->dim() && heads.size() < r; ++j) {
        std::vector<Fp> e(m->dim(), 0);
        e[j] = 1;
        FpMatrix cand(m->p(), 1, m->dim());
        cand.set(0, j, 1);
        FpMatrix bigger = row_space_basis(stack_rows(span, cand));
        if (bigger.rows() > span.rows()) {
            span = std::move(bigger);
            heads.push_back(std::move(e));
        }
    }
    if (heads.size() != r) throw InternalError("projective_cover: head extraction failed");

    ModulePtr fr = free_module(g, r);
    const std::size_t n = g->order();
    FpMatrix cover(m->p(), m->dim(), r * n);
    for (std::size_t c = 0; c < r; ++c)
        for (std::size_t e = 0; e < n; ++e) {
            auto col = m->action(static_cast<ElementId>(e)).apply(heads[c]);
            for (std::size_t i = 0; i < m->dim(); ++i) cover.set(i, c * n + e, col[i]);
        }
    ModuleMap cm{fr, m, std::move(cover)};
    if (rank(cm.mat) != m->dim()) throw InternalError("projective_cover: cover not surjective");
    return {fr, std::move(cm), r};
}

std::vector<FpMatrix> composition_series(const ModulePtr& m) {
    if (!m->group()->is_p_group()) throw DomainError("composition_series: not a p-group");
    const auto& gens = m->group()->generator_ids();
    const std::size_t d = m->dim();
    FpMatrix id = FpMatrix::identity(m->p(), d);
    std::vector<FpMatrix> chain;
    FpMatrix cur(m->p(), 0, d);
    while (cur.rows() < d) {
        // vectors moved into span(cur) by every generator: the preimage of
        // the fixed space of m / cur
        FpMatrix q = quotient_map(cur, d);
        FpMatrix stacked(m->p(), 0, d);
        for (ElementId e : gens) stacked = stack_rows(stacked, q * (m->action(e) - id));
        FpMatrix ker = stacked.rows() == 0 ? FpMatrix::identity(m->p(), d) : kernel_basis(stacked);
        // first kernel vector outside the current subspace
        bool found = false;
        for (std::size_t i = 0; i < ker.rows() && !found; ++i) {
            auto v = reduce_mod_rows(cur, ker.row(i));
            if (std::all_of(v.begin(), v.end(), [](Fp x) { return x == 0; })) continue;
            FpMatrix vrow(m->p(), 1, d);
            for (std::size_t j = 0; j < d; ++j) vrow.set(0, j, v[j]);
            cur = row_space_basis(stack_rows(cur, vrow));
            found = true;
        }
        if (!found) throw InternalError("composition_series: no fixed vector (not a p-group?)");
        chain.push_back(cur);
    }
    return chain;
}

ModulePtr submodule(const KGModule& m, const FpMatrix& basis) {
    const std::size_t k = basis.rows();
    FpMatrix bt = basis.transposed();
    std::vector<FpMatrix> act;
    act.reserve(m.group()->order());
    for (std::size_t e = 0; e < m.group()->order(); ++e) {
        auto x = solve_matrix(bt, m.action(static_cast<ElementId>(e)) * bt);
        if (!x) throw InputError("submodule: subspace is not invariant");
        if (x->rows() != k) throw InternalError("submodule: bad solve shape");
        act.push_back(std::move(*x));
    }
    return std::make_shared<KGModule>(m.group(), std::move(act));
}

ModulePtr quotient_module(const KGModule& m, const FpMatrix& basis) {
    FpMatrix q = quotient_map(basis, m.dim());
    // section: identity at non-pivot columns
    std::vector<std::size_t> pivots;
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        std::size_t c = 0;
        while (c < basis.cols() && basis(i, c) == 0) ++c;
        pivots.push_back(c);
    }
    std::vector<bool> is_pivot(m.dim(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    FpMatrix s(m.p(), m.dim(), m.dim() - basis.rows());
    std::size_t col = 0;
    for (std::size_t j = 0; j < m.dim(); ++j)
        if (!is_pivot[j]) s.set(j, col++, 1);

    std::vector<FpMatrix> act;
    act.reserve(m.group()->order());
    for (std::size_t e = 0; e < m.group()->order(); ++e) {
        const FpMatrix& a = m.action(static_cast<ElementId>(e));
        // invariance: each basis row must stay inside the subspace
        for (std::size_t i = 0; i < basis.rows(); ++i) {
            auto w = a.apply(basis.row(i));
            if (!in_row_space(basis, w))
                throw InputError("quotient_module: subspace is not invariant");
        }
        act.push_back(q * a * s);
    }
    return std::make_shared<KGModule>(m.group(), std::move(act));
}

} // namespace pcoh
