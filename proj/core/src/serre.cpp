#include "pcoh/serre.hpp"

#include "pcoh/error.hpp"

#include <algorithm>

namespace pcoh {

namespace {

void check_hom(const GroupPtr& g, const std::vector<Fp>& hom) {
    if (hom.size() != g->order()) throw InputError("two_extension: wrong hom length");
    const std::uint32_t p = g->p();
    for (std::size_t a = 0; a < g->order(); ++a)
        for (std::size_t b = 0; b < g->order(); ++b) {
            Fp expect = static_cast<Fp>((hom[a] + hom[b]) % p);
            if (hom[g->mult(static_cast<ElementId>(a), static_cast<ElementId>(b))] != expect)
                throw InputError("two_extension: not a homomorphism to Z/p");
        }
}

} // namespace

SplicedSequence two_extension(const GroupPtr& g, const std::vector<Fp>& hom) {
    check_hom(g, hom);
    const std::uint32_t p = g->p();
    bool nonzero = std::any_of(hom.begin(), hom.end(), [](Fp v) { return v != 0; });
    if (!nonzero) throw DomainError("two_extension: z must be nonzero");

    std::vector<ElementId> ker;
    for (std::size_t e = 0; e < g->order(); ++e)
        if (hom[e] == 0) ker.push_back(static_cast<ElementId>(e));
    Subgroup h = make_subgroup(g, std::move(ker));
    ModulePtr x = induce_module(trivial_module(h.as_group()), h);

    // sigma = image of the least g0 with z(g0) = 1; right multiplication on
    // cosets is kG-linear since H is normal (index p in a p-group)
    ElementId g0 = 0;
    for (std::size_t e = 0; e < g->order(); ++e)
        if (hom[e] == 1) {
            g0 = static_cast<ElementId>(e);
            break;
        }
    const std::size_t k = h.transversal.size();
    std::vector<std::size_t> sigma(k);
    for (std::size_t c = 0; c < k; ++c) sigma[c] = h.coset_of(g->mult(h.transversal[c], g0));

    ModulePtr kk = trivial_module(g);
    FpMatrix norm(p, k, 1);
    for (std::size_t c = 0; c < k; ++c) norm.set(c, 0, 1);
    FpMatrix mid = FpMatrix::identity(p, k);
    for (std::size_t c = 0; c < k; ++c) mid.set(sigma[c], c, (mid(sigma[c], c) + p - 1) % p);
    FpMatrix aug(p, 1, k);
    for (std::size_t c = 0; c < k; ++c) aug.set(0, c, 1);

    ModuleMap{kk, x, norm}.check_equivariant("two_extension: norm");
    ModuleMap{x, x, mid}.check_equivariant("two_extension: 1-sigma");
    ModuleMap{x, kk, aug}.check_equivariant("two_extension: augmentation");

    SplicedSequence out;
    out.group = g;
    out.homs = {hom};
    out.pieces = {h};
    out.seq.left = kk;
    out.seq.right = kk;
    out.seq.terms = {x, x};
    out.seq.into = std::move(norm);
    out.seq.maps = {std::move(mid)};
    out.seq.onto = std::move(aug);
    out.exact_report = verify_exact(out.seq);
    if (!out.exact_report.pass) throw InternalError("two_extension: sequence not exact");
    return out;
}

SplicedSequence two_extension(const CohomologyClass& z, ResolutionCache& cache) {
    return two_extension(z.group, hom_of_class(z, cache));
}

SplicedSequence splice(const SerreWitness& w) {
    if (w.m == 0) throw InputError("splice: empty witness");
    std::vector<SplicedSequence> pieces;
    for (std::size_t i = 0; i < w.m; ++i) pieces.push_back(two_extension(w.group, w.homs[i]));

    SplicedSequence out;
    out.group = w.group;
    out.seq.left = pieces.front().seq.left;
    out.seq.right = pieces.front().seq.right;
    // terms right to left: piece 1 rightmost (positions 0,1), piece m leftmost
    for (std::size_t i = 0; i < w.m; ++i) {
        out.homs.push_back(w.homs[i]);
        out.pieces.push_back(pieces[i].pieces[0]);
        out.seq.terms.push_back(pieces[i].seq.terms[0]);
        out.seq.terms.push_back(pieces[i].seq.terms[1]);
    }
    out.seq.onto = pieces.front().seq.onto;
    out.seq.into = pieces.back().seq.into;
    for (std::size_t i = 0; i < w.m; ++i) {
        out.seq.maps.push_back(pieces[i].seq.maps[0]);
        if (i + 1 < w.m) {
            // joint: X_0 of piece i+2 -> k -> X_1 of piece i+1
            out.seq.maps.push_back(pieces[i].seq.into * pieces[i + 1].seq.onto);
        }
    }
    out.exact_report = verify_exact(out.seq);
    if (!out.exact_report.pass) throw InternalError("splice: sequence not exact");
    return out;
}

std::optional<SerreWitness> find_witness(const GroupPtr& g, std::size_t max_m,
                                         ResolutionCache& cache) {
    if (!g->is_p_group() || g->order() == 1)
        throw DomainError("find_witness: need a p-group of order > 1");
    const std::uint32_t p = g->p();
    auto h1 = cocycle_basis(g, trivial_module(g), 1, cache);
    const std::size_t r = h1.size();

    // projectivized nonzero classes, coordinate-lexicographic
    std::vector<std::vector<Fp>> classes;
    {
        std::vector<Fp> c(r, 0);
        std::size_t total = 1;
        for (std::size_t i = 0; i < r; ++i) total *= p;
        for (std::size_t n = 1; n < total; ++n) {
            // big-endian increment for lexicographic order
            for (std::size_t i = r; i-- > 0;) {
                if (++c[i] < p) break;
                c[i] = 0;
            }
            Fp first = 0;
            for (std::size_t i = 0; i < r && first == 0; ++i) first = c[i];
            if (first == 1) classes.push_back(c);
        }
    }

    std::vector<std::vector<Fp>> betas;  // H^2 coordinates of beta(z)
    for (const auto& c : classes) {
        CohomologyClass z;
        z.group = g;
        z.resolved = trivial_module(g);
        z.coefficients = trivial_module(g);
        z.degree = 1;
        z.vec = c;
        betas.push_back(bockstein_h1(z, cache).vec);
    }

    const FreeResolution& res = cache.get(trivial_module(g), 2 * max_m + 1);
    const std::size_t b2 = res.betti[2];
    std::vector<ClassMultiplier> mult;
    if (max_m >= 2) {
        for (std::size_t t = 0; t < b2; ++t) {
            CohomologyClass w;
            w.group = g;
            w.resolved = trivial_module(g);
            w.coefficients = trivial_module(g);
            w.degree = 2;
            w.vec.assign(b2, 0);
            w.vec[t] = 1;
            mult.emplace_back(w, 2 * max_m - 2, cache);
        }
    }

    auto multiply = [&](const std::vector<Fp>& v, std::size_t vdeg,
                        const std::vector<Fp>& beta) {
        std::vector<Fp> out(res.betti[vdeg + 2], 0);
        for (std::size_t t = 0; t < b2; ++t) {
            if (beta[t] == 0) continue;
            auto img = mult[t].at(vdeg).apply(v);
            for (std::size_t j = 0; j < out.size(); ++j)
                out[j] = static_cast<Fp>((out[j] + static_cast<std::uint64_t>(beta[t]) * img[j]) %
                                         p);
        }
        return out;
    };

    auto build = [&](const std::vector<std::size_t>& tuple) {
        SerreWitness w;
        w.group = g;
        w.m = tuple.size();
        for (std::size_t idx : tuple) {
            CohomologyClass z;
            z.group = g;
            z.resolved = trivial_module(g);
            z.coefficients = trivial_module(g);
            z.degree = 1;
            z.vec = classes[idx];
            auto hom = hom_of_class(z, cache);
            std::vector<ElementId> ker;
            for (std::size_t e = 0; e < g->order(); ++e)
                if (hom[e] == 0) ker.push_back(static_cast<ElementId>(e));
            w.kernels.push_back(make_subgroup(g, std::move(ker)));
            w.homs.push_back(std::move(hom));
        }
        w.product_checked = true;
        return w;
    };

    // next non-decreasing tuple over [0, K) in lexicographic order
    auto next_tuple = [&](std::vector<std::size_t>& t) {
        for (std::size_t pos = t.size(); pos-- > 0;) {
            if (t[pos] + 1 < classes.size()) {
                ++t[pos];
                for (std::size_t q = pos + 1; q < t.size(); ++q) t[q] = t[pos];
                return true;
            }
        }
        return false;
    };

    for (std::size_t m = 1; m <= max_m; ++m) {
        std::vector<std::size_t> tuple(m, 0);
        do {
            std::vector<Fp> v = betas[tuple[0]];
            for (std::size_t k = 1; k < m; ++k) v = multiply(v, 2 * k, betas[tuple[k]]);
            if (std::all_of(v.begin(), v.end(), [](Fp x) { return x == 0; }))
                return build(tuple);
        } while (next_tuple(tuple));
    }
    return std::nullopt;
}

ZeroClassReport verify_zero_class(const SplicedSequence& s, ResolutionCache& cache) {
    ZeroClassReport rep;
    rep.ext_class = extension_class(s.seq, cache);
    // independent route: cup product of the Bocksteins
    std::optional<CohomologyClass> prod;
    for (const auto& hom : s.homs) {
        CohomologyClass z = class_of_hom(s.group, hom, cache);
        CohomologyClass beta = bockstein_h1(z, cache);
        prod = prod ? cup(*prod, beta, cache) : beta;
    }
    rep.product = *prod;
    rep.match = rep.ext_class == rep.product;
    rep.is_zero = rep.ext_class.is_zero() && rep.product.is_zero();
    return rep;
}

} // namespace pcoh
