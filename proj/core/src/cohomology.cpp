#include "pcoh/cohomology.hpp"

#include "pcoh/error.hpp"

#include <algorithm>

namespace pcoh {

bool CohomologyClass::is_zero() const {
    return std::all_of(vec.begin(), vec.end(), [](Fp v) { return v == 0; });
}

bool CohomologyClass::operator==(const CohomologyClass& o) const {
    return group->fingerprint() == o.group->fingerprint() &&
           resolved->fingerprint() == o.resolved->fingerprint() &&
           coefficients->fingerprint() == o.coefficients->fingerprint() && degree == o.degree &&
           vec == o.vec;
}

FpMatrix hom_induced(const KGModule& coeff, const FpMatrix& d, std::size_t group_order) {
    const std::size_t n = group_order;
    const std::size_t b_tgt = d.rows() / n;   // copies in F (target of d)
    const std::size_t b_src = d.cols() / n;   // copies in F' (source of d)
    if (b_tgt * n != d.rows() || b_src * n != d.cols())
        throw InternalError("hom_induced: matrix dimensions not multiples of |G|");
    const std::size_t m = coeff.dim();
    FpMatrix out(coeff.p(), b_src * m, b_tgt * m);
    for (std::size_t jp = 0; jp < b_src; ++jp) {
        for (std::size_t i = 0; i < b_tgt; ++i) {
            // block = sum_g d[i n + g][jp n] * action(g)
            FpMatrix block(coeff.p(), m, m);
            for (std::size_t g = 0; g < n; ++g) {
                Fp c = d(i * n + g, jp * n);
                if (c == 0) continue;
                block = block + coeff.action(static_cast<ElementId>(g)).scaled(c);
            }
            out.set_block(jp * m, i * m, block);
        }
    }
    return out;
}

CochainData cochain_data(const FreeResolution& res, const ModulePtr& coeff, std::size_t n) {
    if (res.length() < n + 1) throw InputError("cochain_data: resolution too short");
    const std::size_t order = res.group->order();
    FpMatrix delta_n = hom_induced(*coeff, res.boundary(n + 1), order);
    CochainData out;
    out.cocycles = kernel_basis(delta_n);
    if (n == 0) {
        out.coboundaries = FpMatrix(coeff->p(), 0, res.betti[0] * coeff->dim());
    } else {
        FpMatrix delta_prev = hom_induced(*coeff, res.boundary(n), order);
        out.coboundaries = row_space_basis(delta_prev.transposed());
    }
    return out;
}

std::size_t cohomology_dim(const GroupPtr& g, const ModulePtr& coeff, std::size_t n,
                           ResolutionCache& cache) {
    const FreeResolution& res = cache.get(trivial_module(g), n + 1);
    return cochain_data(res, coeff, n).dim_hn();
}

namespace {

CohomologyClass make_class_on(const FreeResolution& res, const ModulePtr& coeff, std::size_t n,
                              std::vector<Fp> raw) {
    const std::size_t expected = res.betti[n] * coeff->dim();
    if (raw.size() != expected) throw InputError("make_class: wrong coordinate length");
    CochainData cd = cochain_data(res, coeff, n);
    // cocycle condition
    FpMatrix delta = hom_induced(*coeff, res.boundary(n + 1), res.group->order());
    auto img = delta.apply(raw);
    if (!std::all_of(img.begin(), img.end(), [](Fp v) { return v == 0; }))
        throw DomainError("make_class: vector is not a cocycle");
    CohomologyClass out;
    out.group = res.group;
    out.resolved = res.module;
    out.coefficients = coeff;
    out.degree = n;
    out.vec = reduce_mod_rows(cd.coboundaries, raw);
    return out;
}

/// Matrix of a trivial-coefficient class as a map F_n -> k.
FpMatrix class_matrix(const CohomologyClass& u, const FreeResolution& res) {
    const std::size_t n = res.group->order();
    FpMatrix m(res.group->p(), 1, res.betti[u.degree] * n);
    for (std::size_t j = 0; j < res.betti[u.degree]; ++j)
        for (std::size_t g = 0; g < n; ++g) m.set(0, j * n + g, u.vec[j]);
    return m;
}

std::vector<Fp> gen_spot_coords(const FpMatrix& w, std::size_t group_order, std::size_t b) {
    std::vector<Fp> out(b);
    for (std::size_t j = 0; j < b; ++j) out[j] = w(0, j * group_order);
    return out;
}

} // namespace

CohomologyClass make_class(const GroupPtr& g, const ModulePtr& coeff, std::size_t n,
                           std::vector<Fp> raw, ResolutionCache& cache) {
    const FreeResolution& res = cache.get(trivial_module(g), n + 1);
    return make_class_on(res, coeff, n, std::move(raw));
}

std::vector<CohomologyClass> cocycle_basis(const GroupPtr& g, const ModulePtr& coeff,
                                           std::size_t n, ResolutionCache& cache) {
    const FreeResolution& res = cache.get(trivial_module(g), n + 1);
    CochainData cd = cochain_data(res, coeff, n);
    std::vector<CohomologyClass> out;
    FpMatrix span = cd.coboundaries;
    for (std::size_t i = 0; i < cd.cocycles.rows(); ++i) {
        auto rep = reduce_mod_rows(cd.coboundaries, cd.cocycles.row(i));
        FpMatrix cand(coeff->p(), 1, cd.cocycles.cols());
        for (std::size_t j = 0; j < rep.size(); ++j) cand.set(0, j, rep[j]);
        FpMatrix bigger = row_space_basis(stack_rows(span, cand));
        if (bigger.rows() == span.rows()) continue;
        span = std::move(bigger);
        CohomologyClass c;
        c.group = g;
        c.resolved = res.module;
        c.coefficients = coeff;
        c.degree = n;
        c.vec = std::move(rep);
        out.push_back(std::move(c));
    }
    return out;
}

CohomologyClass cup(const CohomologyClass& u, const CohomologyClass& v, ResolutionCache& cache) {
    if (u.group->fingerprint() != v.group->fingerprint())
        throw InputError("cup: classes over different groups");
    if (!u.coefficients->is_trivial() || !v.coefficients->is_trivial())
        throw InputError("cup: trivial coefficients required");
    const std::size_t a = u.degree, b = v.degree;
    const FreeResolution& res = cache.get(trivial_module(u.group), a + b + 1);
    ChainMap lift = lift_chain_map(class_matrix(u, res), res, as_lift_target(res), a, b);
    FpMatrix w = class_matrix(v, res) * lift.components[b];
    return make_class_on(res, u.coefficients, a + b,
                         gen_spot_coords(w, u.group->order(), res.betti[a + b]));
}

ClassMultiplier::ClassMultiplier(const CohomologyClass& u, std::size_t max_source_deg,
                                 ResolutionCache& cache) {
    if (!u.coefficients->is_trivial()) throw InputError("ClassMultiplier: coefficients must be k");
    deg_ = u.degree;
    group_order_ = u.group->order();
    const FreeResolution& res = cache.get(trivial_module(u.group), u.degree + max_source_deg + 1);
    betti_ = res.betti;
    lift_ = lift_chain_map(class_matrix(u, res), res, as_lift_target(res), u.degree,
                           max_source_deg);
}

FpMatrix ClassMultiplier::at(std::size_t d) const {
    if (d >= lift_.components.size()) throw InputError("ClassMultiplier: degree beyond lift");
    const FpMatrix& comp = lift_.components[d];  // F_{deg+d} -> F_d
    const std::size_t b_src = betti_[d];
    const std::size_t b_dst = betti_[deg_ + d];
    FpMatrix out(comp.p(), b_dst, b_src);
    for (std::size_t s = 0; s < b_src; ++s)
        for (std::size_t j = 0; j < b_dst; ++j) {
            std::uint64_t acc = 0;
            for (std::size_t g = 0; g < group_order_; ++g)
                acc += comp(s * group_order_ + g, j * group_order_);
            out.set(j, s, static_cast<Fp>(acc % comp.p()));
        }
    return out;
}

// --- degree 1 and the Bockstein ------------------------------------------------

CohomologyClass class_of_hom(const GroupPtr& g, const std::vector<Fp>& hom,
                             ResolutionCache& cache) {
    if (hom.size() != g->order()) throw InputError("class_of_hom: wrong value count");
    const FreeResolution& res = cache.get(trivial_module(g), 2);
    const std::size_t n = g->order();
    const FpMatrix& d1 = res.boundary(1);
    std::vector<Fp> vec(res.betti[1], 0);
    for (std::size_t j = 0; j < res.betti[1]; ++j) {
        std::uint64_t acc = 0;
        for (std::size_t e = 0; e < n; ++e)
            acc += static_cast<std::uint64_t>(hom[e]) * d1(e, j * n);
        vec[j] = static_cast<Fp>(acc % g->p());
    }
    return make_class_on(res, trivial_module(g), 1, std::move(vec));
}

std::vector<Fp> hom_of_class(const CohomologyClass& z, ResolutionCache& cache) {
    if (z.degree != 1 || !z.coefficients->is_trivial())
        throw InputError("hom_of_class: need a degree-1 class with trivial coefficients");
    GroupPtr g = z.group;
    auto basis = hom_basis_to_zp(g);
    const std::size_t r = basis.size();
    if (z.vec.size() != r) throw InternalError("hom_of_class: rank mismatch with H^1");
    FpMatrix t(g->p(), r, r);
    for (std::size_t i = 0; i < r; ++i) {
        CohomologyClass ci = class_of_hom(g, basis[i], cache);
        for (std::size_t j = 0; j < r; ++j) t.set(j, i, ci.vec[j]);
    }
    auto alpha = solve(t, z.vec);
    if (!alpha) throw InternalError("hom_of_class: basis transport not invertible");
    std::vector<Fp> hom(g->order(), 0);
    for (std::size_t e = 0; e < g->order(); ++e) {
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < r; ++i)
            acc += static_cast<std::uint64_t>((*alpha)[i]) * basis[i][e];
        hom[e] = static_cast<Fp>(acc % g->p());
    }
    return hom;
}

CohomologyClass bockstein_h1(const CohomologyClass& z, ResolutionCache& cache) {
    if (z.degree != 1) throw DomainError("bockstein_h1: degree must be 1");
    GroupPtr g = z.group;
    const std::uint32_t p = g->p();
    auto hom = hom_of_class(z, cache);
    // canonical lift to residues mod p^2; the defect lands in p Z/p^2
    FpMatrix defect(p, g->order(), g->order());
    for (std::size_t a = 0; a < g->order(); ++a)
        for (std::size_t b = 0; b < g->order(); ++b) {
            Zp2Scalar d = Zp2Scalar(p, hom[a]) + Zp2Scalar(p, hom[b]) -
                          Zp2Scalar(p, hom[g->mult(static_cast<ElementId>(a),
                                                   static_cast<ElementId>(b))]);
            defect.set(a, b, d.quotient_by_p());
        }
    return bar_to_minimal(g, defect, cache);
}

CohomologyClass bar_to_minimal(const GroupPtr& g, const FpMatrix& cocycle,
                               ResolutionCache& cache) {
    const std::size_t n = g->order();
    if (cocycle.rows() != n || cocycle.cols() != n)
        throw InputError("bar_to_minimal: cocycle must be |G| x |G|");
    const std::uint32_t p = g->p();
    // 2-cocycle condition c(b,e) - c(ab,e) + c(a,be) - c(a,b) = 0
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t e = 0; e < n; ++e) {
                ElementId ea = static_cast<ElementId>(a), eb = static_cast<ElementId>(b),
                          ee = static_cast<ElementId>(e);
                std::uint64_t acc = cocycle(b, e) + cocycle(a, g->mult(eb, ee)) +
                                    2ull * p -  cocycle(g->mult(ea, eb), e) - cocycle(a, b);
                if (acc % p != 0) throw DomainError("bar_to_minimal: not a 2-cocycle");
            }

    const FreeResolution& res = cache.get(trivial_module(g), 3);
    const FpMatrix& d1 = res.boundary(1);
    const FpMatrix& d2 = res.boundary(2);
    // Phi_1(gen_i) = sum_h d1[h][i n] [h];  Phi_2 via the bar homotopy
    // g[h] -> [g|h]; evaluate the cocycle on the resulting chains.
    // w_i(gg) = sum_h d1[h][i n] c(gg, h)
    std::vector<std::vector<Fp>> w(res.betti[1], std::vector<Fp>(n, 0));
    for (std::size_t i = 0; i < res.betti[1]; ++i)
        for (std::size_t gg = 0; gg < n; ++gg) {
            std::uint64_t acc = 0;
            for (std::size_t h = 0; h < n; ++h)
                acc += static_cast<std::uint64_t>(d1(h, i * n)) * cocycle(gg, h);
            w[i][gg] = static_cast<Fp>(acc % p);
        }
    std::vector<Fp> vec(res.betti[2], 0);
    for (std::size_t j = 0; j < res.betti[2]; ++j) {
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < res.betti[1]; ++i)
            for (std::size_t gg = 0; gg < n; ++gg)
                acc += static_cast<std::uint64_t>(d2(i * n + gg, j * n)) * w[i][gg];
        vec[j] = static_cast<Fp>(acc % p);
    }
    return make_class_on(res, trivial_module(g), 2, std::move(vec));
}

// --- bar-complex oracle ----------------------------------------------------------

namespace {

/// rank of the simplicial differential C^k -> C^{k+1} of the normalized bar
/// complex (trivial coefficients), fed column by column
std::size_t bar_delta_rank(const GroupPtr& g, std::size_t k) {
    if (k == 0) return 0;  // trivial action: delta^0 = 0
    const std::uint32_t p = g->p();
    const std::size_t q = g->order() - 1;  // nondegenerate letters, ids 1..q
    std::size_t src = 1, dst = 1;
    for (std::size_t i = 0; i < k; ++i) src *= q;
    dst = src * q;

    auto decode = [&](std::size_t idx, std::size_t len) {
        std::vector<std::size_t> digits(len);
        for (std::size_t i = len; i-- > 0;) {
            digits[i] = idx % q;
            idx /= q;
        }
        return digits;
    };
    auto encode = [&](const std::vector<std::size_t>& digits) {
        std::size_t idx = 0;
        for (std::size_t d : digits) idx = idx * q + d;
        return idx;
    };

    RankAccumulator acc(p, dst);
    std::vector<std::pair<std::size_t, Fp>> entries;
    const Fp minus = p - 1;
    for (std::size_t t = 0; t < src; ++t) {
        entries.clear();
        auto tau = decode(t, k);
        // faces dropping the first / last letter
        for (std::size_t x = 0; x < q; ++x) {
            std::vector<std::size_t> sigma;
            sigma.reserve(k + 1);
            sigma.push_back(x);
            sigma.insert(sigma.end(), tau.begin(), tau.end());
            entries.emplace_back(encode(sigma), 1);
            sigma = tau;
            sigma.push_back(x);
            entries.emplace_back(encode(sigma), (k + 1) % 2 == 0 ? 1 : minus);
        }
        // inner faces: split tau_i into a * b
        for (std::size_t i = 0; i < k; ++i) {
            ElementId target = static_cast<ElementId>(tau[i] + 1);
            Fp sign = (i + 1) % 2 == 0 ? 1 : minus;
            for (std::size_t a = 1; a <= q; ++a) {
                ElementId b = g->mult(g->inv(static_cast<ElementId>(a)), target);
                if (b == 0) continue;
                std::vector<std::size_t> sigma;
                sigma.reserve(k + 1);
                sigma.insert(sigma.end(), tau.begin(), tau.begin() + i);
                sigma.push_back(a - 1);
                sigma.push_back(static_cast<std::size_t>(b) - 1);
                sigma.insert(sigma.end(), tau.begin() + i + 1, tau.end());
                entries.emplace_back(encode(sigma), sign);
            }
        }
        acc.add_row(entries);
    }
    return acc.rank();
}

} // namespace

std::size_t bar_cohomology_dim(const GroupPtr& g, std::size_t n, std::size_t cell_cap) {
    if (n == 0) return 1;
    const std::size_t q = g->order() - 1;
    std::size_t cells = 1;
    for (std::size_t i = 0; i < n + 1; ++i) {
        cells *= q;
        if (cells > cell_cap)
            throw CapError("bar_cohomology_dim: " + std::to_string(cells) +
                           " cells exceed the cap of " + std::to_string(cell_cap));
    }
    std::size_t dim_cn = 1;
    for (std::size_t i = 0; i < n; ++i) dim_cn *= q;
    std::size_t r_n = bar_delta_rank(g, n);
    std::size_t r_prev = bar_delta_rank(g, n - 1);
    return dim_cn - r_n - r_prev;
}

// --- functoriality ------------------------------------------------------------------

CohomologyClass restrict_class(const CohomologyClass& u, const Subgroup& h,
                               ResolutionCache& cache) {
    if (u.group->fingerprint() != h.parent->fingerprint())
        throw InputError("restrict_class: subgroup of a different group");
    if (!u.coefficients->is_trivial()) throw InputError("restrict_class: coefficients must be k");
    const std::size_t n = u.degree;
    GroupPtr hg = h.as_group();
    const FreeResolution& resg = cache.get(trivial_module(u.group), n + 1);
    const FreeResolution& resh = cache.get(trivial_module(hg), n + 1);

    LiftTarget tgt;
    tgt.base = trivial_module(hg);
    tgt.maps.push_back(resg.augmentation.mat);
    for (std::size_t i = 0; i <= n; ++i) {
        tgt.terms.push_back(restrict_module(resg.terms[i], h));
        if (i >= 1) tgt.maps.push_back(resg.boundary(i));
    }
    FpMatrix id1 = FpMatrix::identity(u.group->p(), 1);
    ChainMap cm = lift_chain_map(id1, resh, tgt, 0, n);
    FpMatrix w = class_matrix(u, resg) * cm.components[n];
    return make_class_on(resh, trivial_module(hg), n,
                         gen_spot_coords(w, hg->order(), resh.betti[n]));
}

CohomologyClass inflate_class(const CohomologyClass& u, const QuotientGroup& q,
                              ResolutionCache& cache) {
    if (u.group->fingerprint() != q.quotient->fingerprint())
        throw InputError("inflate_class: class is not over the quotient");
    if (!u.coefficients->is_trivial()) throw InputError("inflate_class: coefficients must be k");
    const std::size_t n = u.degree;
    GroupPtr g = q.parent;
    const FreeResolution& resq = cache.get(trivial_module(q.quotient), n + 1);
    const FreeResolution& resg = cache.get(trivial_module(g), n + 1);

    LiftTarget tgt;
    tgt.base = trivial_module(g);
    tgt.maps.push_back(resq.augmentation.mat);
    for (std::size_t i = 0; i <= n; ++i) {
        tgt.terms.push_back(inflate_module(resq.terms[i], q));
        if (i >= 1) tgt.maps.push_back(resq.boundary(i));
    }
    FpMatrix id1 = FpMatrix::identity(g->p(), 1);
    ChainMap cm = lift_chain_map(id1, resg, tgt, 0, n);
    FpMatrix w = class_matrix(u, resq) * cm.components[n];
    return make_class_on(resg, trivial_module(g), n,
                         gen_spot_coords(w, g->order(), resg.betti[n]));
}

// --- extension classes ---------------------------------------------------------------

CohomologyClass extension_class(const ModuleSequence& seq, ResolutionCache& cache) {
    ExactnessReport rep = verify_exact(seq);
    if (!rep.pass) throw DomainError("extension_class: sequence is not exact");
    const std::size_t n = seq.n();
    const FreeResolution& res = cache.get(seq.right, n + 1);

    LiftTarget tgt;
    tgt.base = seq.right;
    tgt.terms = seq.terms;
    tgt.terms.push_back(seq.left);
    tgt.maps.push_back(seq.onto);
    for (std::size_t i = 0; i + 1 < n; ++i) tgt.maps.push_back(seq.maps[i]);
    tgt.maps.push_back(seq.into);

    FpMatrix id = FpMatrix::identity(seq.right->p(), seq.right->dim());
    ChainMap cm = lift_chain_map(id, res, tgt, 0, n);
    const FpMatrix& phi = cm.components[n];  // F_n -> left
    const std::size_t order = res.group->order();
    std::vector<Fp> raw(res.betti[n] * seq.left->dim());
    for (std::size_t j = 0; j < res.betti[n]; ++j)
        for (std::size_t i = 0; i < seq.left->dim(); ++i)
            raw[j * seq.left->dim() + i] = phi(i, j * order);
    return make_class_on(res, seq.left, n, std::move(raw));
}

// --- ring presentations -----------------------------------------------------------------

RingPresentation ring_presentation(const GroupPtr& g, std::size_t maxdeg, ResolutionCache& cache) {
    const FreeResolution& res = cache.get(trivial_module(g), maxdeg + 1);
    RingPresentation out;
    out.group = g;
    out.maxdeg = maxdeg;
    out.hilbert.assign(res.betti.begin(), res.betti.begin() + maxdeg + 1);

    std::vector<ClassMultiplier> mult;
    for (std::size_t d = 1; d <= maxdeg; ++d) {
        const std::size_t bd = out.hilbert[d];
        if (bd == 0) continue;
        // decomposable span: products of existing generators with H^{d - a}
        FpMatrix span(g->p(), 0, bd);
        for (std::size_t gi = 0; gi < out.generators.size(); ++gi) {
            const std::size_t a = out.generators[gi].degree;
            if (a >= d) continue;
            FpMatrix op = mult[gi].at(d - a);  // b_d x b_{d-a}
            span = stack_rows(span, op.transposed());
        }
        span = row_space_basis(span);
        // first standard basis vectors completing the decomposables
        for (std::size_t t = 0; t < bd && span.rows() < bd; ++t) {
            FpMatrix cand(g->p(), 1, bd);
            cand.set(0, t, 1);
            FpMatrix bigger = row_space_basis(stack_rows(span, cand));
            if (bigger.rows() == span.rows()) continue;
            span = std::move(bigger);
            RingGenerator gen;
            gen.degree = d;
            gen.index = t;
            gen.vec.assign(bd, 0);
            gen.vec[t] = 1;
            out.generators.push_back(gen);
            CohomologyClass cls;
            cls.group = g;
            cls.resolved = res.module;
            cls.coefficients = trivial_module(g);
            cls.degree = d;
            cls.vec = gen.vec;
            mult.emplace_back(cls, maxdeg - d, cache);
        }
    }

    for (std::size_t i = 0; i < out.generators.size(); ++i)
        for (std::size_t j = i; j < out.generators.size(); ++j) {
            const std::size_t ds = out.generators[i].degree + out.generators[j].degree;
            if (ds > maxdeg) continue;
            RingProduct prod;
            prod.i = i;
            prod.j = j;
            FpMatrix op = mult[i].at(out.generators[j].degree);
            prod.vec = op.apply(out.generators[j].vec);
            out.products.push_back(std::move(prod));
        }
    return out;
}

// --- polynomial subalgebra ---------------------------------------------------------------

PolSubalgebra pol_subalgebra(const GroupPtr& e, std::size_t maxdeg, ResolutionCache& cache) {
    if (!e->is_elementary_abelian()) throw DomainError("pol_subalgebra: not elementary abelian");
    const FreeResolution& res = cache.get(trivial_module(e), maxdeg + 1);
    PolSubalgebra out;
    out.group = e;
    out.maxdeg = maxdeg;
    auto h1 = cocycle_basis(e, trivial_module(e), 1, cache);
    std::vector<ClassMultiplier> mult;
    for (const auto& z : h1) {
        out.generators.push_back(bockstein_h1(z, cache));
        if (maxdeg >= 2) mult.emplace_back(out.generators.back(), maxdeg - 2, cache);
    }
    out.span.resize(maxdeg + 1, FpMatrix(e->p(), 0, 0));
    for (std::size_t d = 0; d <= maxdeg; ++d) {
        const std::size_t bd = res.betti[d];
        if (d == 0) {
            FpMatrix one(e->p(), 1, 1);
            one.set(0, 0, 1);
            out.span[0] = one;
            continue;
        }
        if (d % 2 == 1 || d < 2) {
            out.span[d] = FpMatrix(e->p(), 0, bd);
            continue;
        }
        FpMatrix rows(e->p(), 0, bd);
        const FpMatrix& prev = out.span[d - 2];
        for (auto& m : mult) {
            FpMatrix op = m.at(d - 2);  // b_d x b_{d-2}
            for (std::size_t r = 0; r < prev.rows(); ++r) {
                auto img = op.apply(prev.row(r));
                FpMatrix rr(e->p(), 1, bd);
                for (std::size_t j = 0; j < bd; ++j) rr.set(0, j, img[j]);
                rows = stack_rows(rows, rr);
            }
        }
        out.span[d] = row_space_basis(rows);
    }
    return out;
}

} // namespace pcoh
