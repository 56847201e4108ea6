#include "pcoh/fingen.hpp"

#include "pcoh/error.hpp"

#include <algorithm>

namespace pcoh {

std::vector<CohomologyClass> choose_S(const GroupPtr& g, std::size_t D, ResolutionCache& cache) {
    if (!g->is_p_group()) throw DomainError("choose_S: not a p-group");
    if (D < 4) throw DomainError("choose_S: need D >= 4");
    const FreeResolution& res = cache.get(trivial_module(g), D + 1);
    std::vector<CohomologyClass> gens;
    std::vector<ClassMultiplier> mult;
    for (std::size_t d = 2; d <= D; d += 2) {
        const std::size_t bd = res.betti[d];
        if (bd == 0) continue;
        FpMatrix span(g->p(), 0, bd);
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const std::size_t a = gens[i].degree;
            if (a >= d) continue;
            span = stack_rows(span, mult[i].at(d - a).transposed());
        }
        span = row_space_basis(span);
        for (std::size_t t = 0; t < bd && span.rows() < bd; ++t) {
            FpMatrix cand(g->p(), 1, bd);
            cand.set(0, t, 1);
            FpMatrix bigger = row_space_basis(stack_rows(span, cand));
            if (bigger.rows() == span.rows()) continue;
            span = std::move(bigger);
            CohomologyClass cls;
            cls.group = g;
            cls.resolved = res.module;
            cls.coefficients = trivial_module(g);
            cls.degree = d;
            cls.vec.assign(bd, 0);
            cls.vec[t] = 1;
            gens.push_back(cls);
            mult.emplace_back(cls, D - d, cache);
        }
    }
    return gens;
}

namespace {

/// Degrees (with multiplicity) of module generators of H^*(E, k), truncated
/// at D, over the subalgebra generated by the given classes.
std::vector<std::size_t> module_generator_degrees_over(const GroupPtr& e,
                                                       const std::vector<CohomologyClass>& algebra,
                                                       std::size_t D, ResolutionCache& cache) {
    const FreeResolution& res = cache.get(trivial_module(e), D + 1);
    std::vector<ClassMultiplier> mult;
    for (const auto& cls : algebra)
        mult.emplace_back(cls, cls.degree <= D ? D - cls.degree : 0, cache);

    std::vector<std::size_t> out;
    for (std::size_t d = 0; d <= D; ++d) {
        const std::size_t bd = res.betti[d];
        if (bd == 0) continue;
        FpMatrix covered(e->p(), 0, bd);
        for (std::size_t i = 0; i < algebra.size(); ++i) {
            const std::size_t a = algebra[i].degree;
            if (a == 0 || a > d) continue;
            covered = stack_rows(covered, mult[i].at(d - a).transposed());
        }
        covered = row_space_basis(covered);
        for (std::size_t k = covered.rows(); k < bd; ++k) out.push_back(d);
    }
    return out;
}

} // namespace

FiniteGenerationReport lemma1_check(const GroupPtr& g, std::size_t D, ResolutionCache& cache) {
    if (!g->is_p_group()) throw DomainError("lemma1_check: not a p-group");
    FiniteGenerationReport rep;
    rep.group = g;
    rep.maxdeg = D;
    if (D < 4) {
        rep.conclusive = false;
        rep.pass = false;
        return rep;
    }
    rep.s_generators = choose_S(g, D, cache);
    std::size_t max_s = 0;
    for (const auto& s : rep.s_generators) max_s = std::max(max_s, s.degree);
    rep.d_stab = D - max_s;
    rep.conclusive = !rep.s_generators.empty();

    rep.pass = true;
    for (Subgroup& e : elementary_abelian_subgroups(g, /*maximal_only=*/true)) {
        Lemma1PerE per;
        per.e = e;
        std::vector<CohomologyClass> images;
        for (const auto& s : rep.s_generators) {
            images.push_back(restrict_class(s, e, cache));
            per.restricted_degrees.push_back(s.degree);
        }
        per.generator_degrees = module_generator_degrees_over(e.as_group(), images, D, cache);
        per.max_generator_degree =
            per.generator_degrees.empty() ? 0 : per.generator_degrees.back();
        if (per.max_generator_degree > rep.d_stab) rep.pass = false;
        rep.per_e.push_back(std::move(per));
    }
    if (!rep.conclusive) rep.pass = false;
    return rep;
}

ModuleFGReport module_generators(const GroupPtr& g, const ModulePtr& m, std::size_t D,
                                 ResolutionCache& cache) {
    if (!g->is_p_group()) throw DomainError("module_generators: not a p-group");
    if (m->group()->fingerprint() != g->fingerprint())
        throw InputError("module_generators: module over a different group");
    ModuleFGReport rep;
    rep.group = g;
    rep.coefficients = m;
    rep.maxdeg = D;
    if (D < 4) {
        rep.conclusive = false;
        return rep;
    }
    auto s_gens = choose_S(g, D, cache);
    std::size_t max_s = 0;
    for (const auto& s : s_gens) {
        rep.s_degrees.push_back(s.degree);
        max_s = std::max(max_s, s.degree);
    }
    const FreeResolution& res = cache.get(trivial_module(g), D + 1);
    const std::size_t order = g->order();

    // chain-map lift of each S-generator, then its Yoneda action on
    // Hom(F_n, m) coordinates
    std::vector<ChainMap> lifts;
    for (const auto& s : s_gens) {
        FpMatrix smat(g->p(), 1, res.betti[s.degree] * order);
        for (std::size_t j = 0; j < res.betti[s.degree]; ++j)
            for (std::size_t e = 0; e < order; ++e) smat.set(0, j * order + e, s.vec[j]);
        lifts.push_back(lift_chain_map(smat, res, as_lift_target(res), s.degree, D - s.degree));
    }

    std::vector<std::vector<CohomologyClass>> bases(D + 1);
    std::vector<FpMatrix> cobound(D + 1);
    for (std::size_t d = 0; d <= D; ++d) {
        bases[d] = cocycle_basis(g, m, d, cache);
        cobound[d] = cochain_data(res, m, d).coboundaries;
        rep.hn_dims.push_back(bases[d].size());
    }

    for (std::size_t d = 0; d <= D; ++d) {
        const std::size_t hd = bases[d].size();
        if (hd == 0) continue;
        const std::size_t width = res.betti[d] * m->dim();
        FpMatrix covered(g->p(), 0, width);
        for (std::size_t i = 0; i < s_gens.size(); ++i) {
            const std::size_t a = s_gens[i].degree;
            if (a > d) continue;
            FpMatrix op = hom_induced(*m, lifts[i].components[d - a], order);
            for (const auto& cls : bases[d - a]) {
                auto w = op.apply(cls.vec);
                auto wr = reduce_mod_rows(cobound[d], w);
                FpMatrix row(g->p(), 1, width);
                for (std::size_t j = 0; j < width; ++j) row.set(0, j, wr[j]);
                covered = stack_rows(covered, row);
            }
        }
        covered = row_space_basis(covered);
        for (std::size_t k = covered.rows(); k < hd; ++k) rep.generator_degrees.push_back(d);
    }
    rep.stabilization = rep.generator_degrees.empty() ? 0 : rep.generator_degrees.back();
    rep.conclusive = !s_gens.empty() && rep.stabilization + max_s <= D;
    return rep;
}

} // namespace pcoh
