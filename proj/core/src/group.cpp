#include "pcoh/group.hpp"

#include "pcoh/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pcoh {

namespace {

using Perm = std::vector<ElementId>;

Perm compose(const Perm& a, const Perm& b) {  // apply b first, then a
    Perm out(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) out[x] = a[b[x]];
    return out;
}

std::uint64_t fnv(std::uint64_t h, std::uint64_t v) {
    h ^= v;
    return h * 1099511628211ull;
}

} // namespace

std::shared_ptr<const FiniteGroup> FiniteGroup::from_permutations(const GroupSpec& spec,
                                                                  std::size_t order_cap) {
    if (!is_prime(spec.p)) throw InputError("group '" + spec.name + "': p must be prime");
    const std::size_t n = spec.degree;
    std::vector<Perm> gens;
    for (const auto& images : spec.generators) {
        if (images.size() != n)
            throw InputError("group '" + spec.name + "': generator has wrong degree");
        Perm g(n);
        std::vector<bool> seen(n, false);
        for (std::size_t x = 0; x < n; ++x) {
            int img = images[x];
            if (img < 1 || static_cast<std::size_t>(img) > n || seen[img - 1])
                throw InputError("group '" + spec.name + "': not a permutation");
            seen[img - 1] = true;
            g[x] = static_cast<ElementId>(img - 1);
        }
        gens.push_back(std::move(g));
    }

    Perm id(n);
    for (std::size_t x = 0; x < n; ++x) id[x] = static_cast<ElementId>(x);

    // BFS over generator words, generators in listed order.
    std::vector<Perm> elems{id};
    std::map<Perm, ElementId> ids{{id, 0}};
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const Perm& g : gens) {
            Perm next = compose(elems[head], g);
            if (ids.emplace(next, static_cast<ElementId>(elems.size())).second) {
                elems.push_back(std::move(next));
                if (elems.size() > order_cap)
                    throw CapError("group '" + spec.name + "': closure exceeds cap of " +
                                   std::to_string(order_cap));
            }
        }
    }

    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->p_ = spec.p;
    g->order_ = elems.size();
    g->name_ = spec.name;
    g->table_.resize(g->order_ * g->order_);
    for (std::size_t a = 0; a < g->order_; ++a)
        for (std::size_t b = 0; b < g->order_; ++b)
            g->table_[a * g->order_ + b] = ids.at(compose(elems[a], elems[b]));
    for (const Perm& gen : gens) g->gen_ids_.push_back(ids.at(gen));
    g->finish_init();
    return g;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::from_table(std::uint32_t p, std::string name,
                                                           std::vector<ElementId> table,
                                                           std::vector<ElementId> generator_ids) {
    if (!is_prime(p)) throw InputError("group '" + name + "': p must be prime");
    std::size_t n = 0;
    while (n * n < table.size()) ++n;
    if (n * n != table.size() || n == 0)
        throw InputError("group '" + name + "': table is not square");
    auto at = [&](std::size_t a, std::size_t b) { return table[a * n + b]; };
    for (ElementId v : table)
        if (v >= n) throw InputError("group '" + name + "': table entry out of range");
    for (std::size_t a = 0; a < n; ++a)
        if (at(0, a) != a || at(a, 0) != a)
            throw InputError("group '" + name + "': id 0 is not an identity");
    for (std::size_t a = 0; a < n; ++a) {
        bool has_inv = false;
        for (std::size_t b = 0; b < n; ++b) has_inv |= (at(a, b) == 0 && at(b, a) == 0);
        if (!has_inv) throw InputError("group '" + name + "': missing inverse");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (at(at(a, b), c) != at(a, at(b, c)))
                    throw InputError("group '" + name + "': table not associative");
    for (ElementId e : generator_ids)
        if (e >= n) throw InputError("group '" + name + "': generator id out of range");

    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->p_ = p;
    g->order_ = n;
    g->name_ = std::move(name);
    g->table_ = std::move(table);
    g->gen_ids_ = std::move(generator_ids);
    g->finish_init();
    return g;
}

void FiniteGroup::finish_init() {
    inv_.assign(order_, 0);
    for (std::size_t a = 0; a < order_; ++a)
        for (std::size_t b = 0; b < order_; ++b)
            if (mult(static_cast<ElementId>(a), static_cast<ElementId>(b)) == 0)
                inv_[a] = static_cast<ElementId>(b);
    std::uint64_t h = 1469598103934665603ull;
    h = fnv(h, p_);
    h = fnv(h, order_);
    for (ElementId v : table_) h = fnv(h, v);
    fingerprint_ = h;
}

std::size_t FiniteGroup::element_order(ElementId a) const {
    std::size_t k = 1;
    ElementId x = a;
    while (x != 0) {
        x = mult(x, a);
        ++k;
    }
    return k;
}

bool FiniteGroup::is_abelian() const {
    for (std::size_t a = 0; a < order_; ++a)
        for (std::size_t b = a + 1; b < order_; ++b)
            if (mult(static_cast<ElementId>(a), static_cast<ElementId>(b)) !=
                mult(static_cast<ElementId>(b), static_cast<ElementId>(a)))
                return false;
    return true;
}

bool FiniteGroup::is_p_group() const {
    std::size_t n = order_;
    while (n % p_ == 0) n /= p_;
    return n == 1;
}

bool FiniteGroup::is_elementary_abelian() const {
    if (!is_abelian() || !is_p_group()) return false;
    for (std::size_t a = 1; a < order_; ++a)
        if (element_order(static_cast<ElementId>(a)) != p_) return false;
    return true;
}

std::vector<std::vector<std::size_t>> FiniteGroup::element_words() const {
    std::vector<std::vector<std::size_t>> words(order_);
    std::vector<bool> seen(order_, false);
    seen[0] = true;
    std::vector<ElementId> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        ElementId e = queue[head];
        for (std::size_t j = 0; j < gen_ids_.size(); ++j) {
            ElementId f = mult(e, gen_ids_[j]);
            if (!seen[f]) {
                seen[f] = true;
                words[f] = words[e];
                words[f].push_back(j);
                queue.push_back(f);
            }
        }
    }
    if (queue.size() != order_)
        throw InternalError("element_words: stored generators do not generate");
    return words;
}

// --- Subgroup --------------------------------------------------------------

bool Subgroup::contains(ElementId e) const {
    return std::binary_search(members.begin(), members.end(), e);
}

std::size_t Subgroup::member_index(ElementId e) const {
    auto it = std::lower_bound(members.begin(), members.end(), e);
    if (it == members.end() || *it != e) throw InputError("Subgroup: element not a member");
    return static_cast<std::size_t>(it - members.begin());
}

std::size_t Subgroup::coset_of(ElementId e) const {
    for (std::size_t c = 0; c < transversal.size(); ++c)
        if (contains(parent->mult(parent->inv(transversal[c]), e))) return c;
    throw InternalError("Subgroup::coset_of: no coset found");
}

GroupPtr Subgroup::as_group() const {
    std::size_t n = members.size();
    std::vector<ElementId> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            table[i * n + j] =
                static_cast<ElementId>(member_index(parent->mult(members[i], members[j])));
    // every element as a one-letter generator keeps word machinery trivial
    std::vector<ElementId> gens;
    for (std::size_t i = 1; i < n; ++i) gens.push_back(static_cast<ElementId>(i));
    std::uint64_t h = 1469598103934665603ull;
    for (ElementId m : members) h = fnv(h, m);
    char buf[32];
    std::snprintf(buf, sizeof buf, ":H%zu.%04x", n, static_cast<unsigned>(h & 0xffff));
    return FiniteGroup::from_table(parent->p(), parent->name() + buf, std::move(table),
                                   std::move(gens));
}

bool Subgroup::is_normal() const {
    for (std::size_t g = 0; g < parent->order(); ++g)
        for (ElementId h : members) {
            ElementId gid = static_cast<ElementId>(g);
            if (!contains(parent->mult(parent->mult(gid, h), parent->inv(gid)))) return false;
        }
    return true;
}

bool Subgroup::is_elementary_abelian() const {
    for (ElementId a : members)
        for (ElementId b : members)
            if (parent->mult(a, b) != parent->mult(b, a)) return false;
    for (ElementId a : members)
        if (a != 0 && parent->element_order(a) != parent->p()) return false;
    return true;
}

Subgroup make_subgroup(GroupPtr g, std::vector<ElementId> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty() || members[0] != 0)
        throw InputError("make_subgroup: members must contain the identity");
    auto in = [&](ElementId e) {
        return std::binary_search(members.begin(), members.end(), e);
    };
    for (ElementId a : members) {
        if (!in(g->inv(a))) throw InputError("make_subgroup: not closed under inverse");
        for (ElementId b : members)
            if (!in(g->mult(a, b))) throw InputError("make_subgroup: not closed under product");
    }
    if (g->order() % members.size() != 0)
        throw InternalError("make_subgroup: order does not divide |G|");

    Subgroup h;
    h.parent = std::move(g);
    h.members = std::move(members);
    // least element id per left coset, ascending; identity coset first
    std::vector<bool> taken(h.parent->order(), false);
    for (std::size_t e = 0; e < h.parent->order(); ++e) {
        if (taken[e]) continue;
        h.transversal.push_back(static_cast<ElementId>(e));
        for (ElementId m : h.members) taken[h.parent->mult(static_cast<ElementId>(e), m)] = true;
    }
    return h;
}

Subgroup subgroup_generated(GroupPtr g, const std::vector<ElementId>& gens) {
    std::set<ElementId> members{0};
    std::vector<ElementId> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (ElementId s : gens) {
            ElementId f = g->mult(queue[head], s);
            if (members.insert(f).second) queue.push_back(f);
        }
    }
    // gens may not include inverses explicitly; close under them
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<ElementId> cur(members.begin(), members.end());
        for (ElementId a : cur)
            for (ElementId b : cur)
                if (members.insert(g->mult(a, b)).second) grew = true;
        for (ElementId a : cur)
            if (members.insert(g->inv(a)).second) grew = true;
    }
    return make_subgroup(std::move(g), {members.begin(), members.end()});
}

std::vector<ElementId> right_transversal(const Subgroup& h) {
    std::vector<ElementId> reps;
    std::vector<bool> taken(h.parent->order(), false);
    for (std::size_t e = 0; e < h.parent->order(); ++e) {
        if (taken[e]) continue;
        reps.push_back(static_cast<ElementId>(e));
        for (ElementId m : h.members) taken[h.parent->mult(m, static_cast<ElementId>(e))] = true;
    }
    return reps;
}

// --- operations ------------------------------------------------------------

Subgroup center(GroupPtr g) {
    std::vector<ElementId> z;
    for (std::size_t a = 0; a < g->order(); ++a) {
        bool central = true;
        for (std::size_t b = 0; b < g->order() && central; ++b)
            central = g->mult(static_cast<ElementId>(a), static_cast<ElementId>(b)) ==
                      g->mult(static_cast<ElementId>(b), static_cast<ElementId>(a));
        if (central) z.push_back(static_cast<ElementId>(a));
    }
    return make_subgroup(std::move(g), std::move(z));
}

std::vector<Subgroup> central_order_p_subgroups(GroupPtr g) {
    if (!g->is_p_group()) throw DomainError("central_order_p_subgroups: not a p-group");
    if (g->order() == 1) throw DomainError("central_order_p_subgroups: trivial group");
    Subgroup z = center(g);
    std::set<std::vector<ElementId>> seen;
    std::vector<Subgroup> out;
    for (ElementId e : z.members) {
        if (e == 0 || g->element_order(e) != g->p()) continue;
        Subgroup s = subgroup_generated(g, {e});
        if (seen.insert(s.members).second) out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(),
              [](const Subgroup& a, const Subgroup& b) { return a.members < b.members; });
    return out;
}

QuotientGroup quotient(GroupPtr g, const Subgroup& n) {
    if (n.parent->fingerprint() != g->fingerprint())
        throw InputError("quotient: subgroup of a different group");
    if (!n.is_normal()) throw DomainError("quotient: subgroup is not normal");
    // cosets ordered by least member; identity coset is first
    std::vector<ElementId> proj(g->order(), 0);
    std::vector<ElementId> reps = n.transversal;
    for (std::size_t c = 0; c < reps.size(); ++c)
        for (ElementId m : n.members)
            proj[g->mult(reps[c], m)] = static_cast<ElementId>(c);
    std::size_t q = reps.size();
    std::vector<ElementId> table(q * q);
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b) table[a * q + b] = proj[g->mult(reps[a], reps[b])];
    std::vector<ElementId> gens;
    for (ElementId e : g->generator_ids())
        if (proj[e] != 0) gens.push_back(proj[e]);
    if (gens.empty() && q > 1)
        for (std::size_t e = 1; e < q; ++e) gens.push_back(static_cast<ElementId>(e));
    QuotientGroup out;
    out.parent = g;
    out.quotient = FiniteGroup::from_table(g->p(), g->name() + "/N" + std::to_string(n.order()),
                                           std::move(table), std::move(gens));
    out.projection = std::move(proj);
    return out;
}

std::pair<QuotientGroup, std::size_t> frattini_quotient(GroupPtr g) {
    if (!g->is_p_group()) throw DomainError("frattini_quotient: not a p-group");
    std::vector<ElementId> gens;
    for (std::size_t a = 0; a < g->order(); ++a) {
        ElementId ea = static_cast<ElementId>(a);
        // p-th power
        ElementId pw = 0;
        for (std::uint32_t k = 0; k < g->p(); ++k) pw = g->mult(pw, ea);
        gens.push_back(pw);
        for (std::size_t b = 0; b < g->order(); ++b) {
            ElementId eb = static_cast<ElementId>(b);
            ElementId comm =
                g->mult(g->mult(g->mult(ea, eb), g->inv(ea)), g->inv(eb));
            gens.push_back(comm);
        }
    }
    Subgroup phi = subgroup_generated(g, gens);
    QuotientGroup q = quotient(g, phi);
    std::size_t rank = 0;
    std::size_t n = q.quotient->order();
    while (n > 1) {
        n /= g->p();
        ++rank;
    }
    if (!q.quotient->is_elementary_abelian())
        throw InternalError("frattini_quotient: quotient not elementary abelian");
    return {std::move(q), rank};
}

namespace {

struct HomData {
    std::size_t rank = 0;
    /// coordinate vector in F_p^rank of each element's image in the
    /// elementary abelian quotient
    std::vector<std::vector<Fp>> coords;
};

HomData hom_data(const GroupPtr& g) {
    const std::uint32_t p = g->p();
    // Hom(G, Z/p) factors through G/([G,G] G^p) for any finite G.
    std::vector<ElementId> gens;
    for (std::size_t a = 0; a < g->order(); ++a) {
        ElementId ea = static_cast<ElementId>(a);
        ElementId pw = 0;
        for (std::uint32_t k = 0; k < p; ++k) pw = g->mult(pw, ea);
        gens.push_back(pw);
        for (std::size_t b = 0; b < g->order(); ++b) {
            ElementId eb = static_cast<ElementId>(b);
            gens.push_back(g->mult(g->mult(g->mult(ea, eb), g->inv(ea)), g->inv(eb)));
        }
    }
    Subgroup phi = subgroup_generated(g, gens);
    QuotientGroup q = quotient(g, phi);
    GroupPtr Q = q.quotient;

    // greedy F_p-basis of the elementary abelian quotient
    std::vector<ElementId> basis;
    {
        std::set<ElementId> span{0};
        for (std::size_t e = 1; e < Q->order(); ++e) {
            if (span.count(static_cast<ElementId>(e))) continue;
            basis.push_back(static_cast<ElementId>(e));
            std::set<ElementId> next;
            for (ElementId s : span) {
                ElementId x = s;
                for (std::uint32_t k = 0; k < p; ++k) {
                    next.insert(x);
                    x = Q->mult(x, static_cast<ElementId>(e));
                }
            }
            span = std::move(next);
        }
    }
    const std::size_t r = basis.size();

    // coordinates of each quotient element in the chosen basis
    std::vector<std::vector<Fp>> qcoords(Q->order());
    std::vector<Fp> digits(r, 0);
    for (std::size_t n = 0; n < Q->order(); ++n) {
        ElementId e = 0;
        for (std::size_t i = 0; i < r; ++i)
            for (Fp k = 0; k < digits[i]; ++k) e = Q->mult(e, basis[i]);
        qcoords[e] = digits;
        // increment base-p counter, last digit fastest
        for (std::size_t i = r; i-- > 0;) {
            if (++digits[i] < p) break;
            digits[i] = 0;
        }
    }

    HomData out;
    out.rank = r;
    out.coords.resize(g->order());
    for (std::size_t e = 0; e < g->order(); ++e) out.coords[e] = qcoords[q.projection[e]];
    return out;
}

} // namespace

std::vector<std::vector<Fp>> hom_basis_to_zp(GroupPtr g) {
    HomData hd = hom_data(g);
    std::vector<std::vector<Fp>> out;
    for (std::size_t i = 0; i < hd.rank; ++i) {
        std::vector<Fp> hom(g->order());
        for (std::size_t e = 0; e < g->order(); ++e) hom[e] = hd.coords[e][i];
        out.push_back(std::move(hom));
    }
    return out;
}

std::vector<std::vector<Fp>> all_homs_to_zp(GroupPtr g) {
    const std::uint32_t p = g->p();
    HomData hd = hom_data(g);
    const std::size_t r = hd.rank;
    std::vector<std::vector<Fp>> homs;
    std::vector<Fp> lambda(r, 0);
    std::size_t total = 1;
    for (std::size_t i = 0; i < r; ++i) total *= p;
    for (std::size_t n = 0; n < total; ++n) {
        std::vector<Fp> hom(g->order(), 0);
        for (std::size_t e = 0; e < g->order(); ++e) {
            std::uint64_t acc = 0;
            for (std::size_t i = 0; i < r; ++i)
                acc += static_cast<std::uint64_t>(lambda[i]) * hd.coords[e][i];
            hom[e] = static_cast<Fp>(acc % p);
        }
        homs.push_back(std::move(hom));
        for (std::size_t i = r; i-- > 0;) {
            if (++lambda[i] < p) break;
            lambda[i] = 0;
        }
    }
    return homs;
}

std::vector<IndexPSubgroup> index_p_subgroups(GroupPtr g) {
    if (!g->is_p_group()) throw DomainError("index_p_subgroups: not a p-group");
    if (g->order() == 1) throw DomainError("index_p_subgroups: trivial group");
    const std::uint32_t p = g->p();
    auto homs = all_homs_to_zp(g);
    std::vector<IndexPSubgroup> out;
    for (const auto& hom : homs) {
        // keep only scalar-canonical nonzero homs: first nonzero value is 1
        Fp first = 0;
        for (std::size_t e = 0; e < hom.size() && first == 0; ++e) first = hom[e];
        if (first != 1) continue;
        std::vector<ElementId> ker;
        for (std::size_t e = 0; e < hom.size(); ++e)
            if (hom[e] == 0) ker.push_back(static_cast<ElementId>(e));
        IndexPSubgroup entry{make_subgroup(g, std::move(ker)), hom};
        if (entry.kernel.index() != p) throw InternalError("index_p_subgroups: bad kernel index");
        out.push_back(std::move(entry));
    }
    return out;
}

std::vector<Subgroup> elementary_abelian_subgroups(GroupPtr g, bool maximal_only) {
    const std::uint32_t p = g->p();
    std::vector<ElementId> order_p;
    for (std::size_t e = 1; e < g->order(); ++e)
        if (g->element_order(static_cast<ElementId>(e)) == p)
            order_p.push_back(static_cast<ElementId>(e));

    std::set<std::vector<ElementId>> all;
    all.insert({0});  // trivial subgroup, rank 0
    std::vector<std::vector<ElementId>> level{{0}};
    while (!level.empty()) {
        std::vector<std::vector<ElementId>> next;
        for (const auto& mem : level) {
            for (ElementId x : order_p) {
                if (std::binary_search(mem.begin(), mem.end(), x)) continue;
                bool commutes = true;
                for (ElementId m : mem)
                    if (g->mult(m, x) != g->mult(x, m)) {
                        commutes = false;
                        break;
                    }
                if (!commutes) continue;
                // extension stays elementary abelian: products m * x^k
                std::vector<ElementId> bigger;
                for (ElementId m : mem) {
                    ElementId e = m;
                    for (std::uint32_t k = 0; k < p; ++k) {
                        bigger.push_back(e);
                        e = g->mult(e, x);
                    }
                }
                std::sort(bigger.begin(), bigger.end());
                bigger.erase(std::unique(bigger.begin(), bigger.end()), bigger.end());
                if (all.insert(bigger).second) next.push_back(std::move(bigger));
            }
        }
        level = std::move(next);
    }

    std::vector<Subgroup> out;
    for (const auto& mem : all) {
        if (maximal_only) {
            bool extendable = false;
            for (ElementId x : order_p) {
                if (std::binary_search(mem.begin(), mem.end(), x)) continue;
                bool commutes = true;
                for (ElementId m : mem)
                    if (g->mult(m, x) != g->mult(x, m)) {
                        commutes = false;
                        break;
                    }
                if (commutes) {
                    extendable = true;
                    break;
                }
            }
            if (extendable) continue;
            if (mem.size() == 1 && !order_p.empty()) continue;
        }
        out.push_back(make_subgroup(g, mem));
    }
    std::sort(out.begin(), out.end(),
              [](const Subgroup& a, const Subgroup& b) { return a.members < b.members; });
    return out;
}

Subgroup sylow_p(GroupPtr g) {
    const std::uint32_t p = g->p();
    std::size_t ppart = 1;
    std::size_t n = g->order();
    while (n % p == 0) {
        n /= p;
        ppart *= p;
    }
    Subgroup cur = make_subgroup(g, {0});
    while (cur.order() < ppart) {
        // normalizer of cur
        std::vector<ElementId> norm;
        for (std::size_t a = 0; a < g->order(); ++a) {
            ElementId ea = static_cast<ElementId>(a);
            bool ok = true;
            for (ElementId m : cur.members)
                if (!cur.contains(g->mult(g->mult(ea, m), g->inv(ea)))) {
                    ok = false;
                    break;
                }
            if (ok) norm.push_back(ea);
        }
        // least element of N \ P whose image in N/P has order p
        bool grew = false;
        for (ElementId x : norm) {
            if (cur.contains(x)) continue;
            // order of xP in N/P: first k with x^k in P
            ElementId e = x;
            std::size_t k = 1;
            while (!cur.contains(e)) {
                e = g->mult(e, x);
                ++k;
            }
            if (k == p) {
                std::vector<ElementId> gens = cur.members;
                gens.push_back(x);
                cur = subgroup_generated(g, gens);
                grew = true;
                break;
            }
        }
        if (!grew) throw InternalError("sylow_p: extension step failed");
    }
    return cur;
}

// --- catalog -----------------------------------------------------------------

namespace {

const std::vector<GroupSpec>& catalog_specs() {
    static const std::vector<GroupSpec> specs = {
        {"Z2", 2, 2, {{2, 1}}},
        {"Z3", 3, 3, {{2, 3, 1}}},
        {"Z4", 2, 4, {{2, 3, 4, 1}}},
        {"Z8", 2, 8, {{2, 3, 4, 5, 6, 7, 8, 1}}},
        {"Z9", 3, 9, {{2, 3, 4, 5, 6, 7, 8, 9, 1}}},
        {"V4", 2, 4, {{2, 1, 3, 4}, {1, 2, 4, 3}}},
        {"E8", 2, 6, {{2, 1, 3, 4, 5, 6}, {1, 2, 4, 3, 5, 6}, {1, 2, 3, 4, 6, 5}}},
        {"Z2xZ4", 2, 6, {{2, 1, 3, 4, 5, 6}, {1, 2, 4, 5, 6, 3}}},
        {"D8", 2, 4, {{2, 3, 4, 1}, {2, 1, 4, 3}}},
        {"Q8", 2, 8, {{2, 3, 4, 1, 6, 7, 8, 5}, {5, 8, 7, 6, 3, 2, 1, 4}}},
        {"D16", 2, 8, {{2, 3, 4, 5, 6, 7, 8, 1}, {8, 7, 6, 5, 4, 3, 2, 1}}},
        {"Q16", 2, 16,
         {{2, 3, 4, 5, 6, 7, 8, 1, 10, 11, 12, 13, 14, 15, 16, 9},
          {9, 16, 15, 14, 13, 12, 11, 10, 5, 4, 3, 2, 1, 8, 7, 6}}},
        {"SD16", 2, 8, {{2, 3, 4, 5, 6, 7, 8, 1}, {1, 4, 7, 2, 5, 8, 3, 6}}},
        {"E9", 3, 6, {{2, 3, 1, 4, 5, 6}, {1, 2, 3, 5, 6, 4}}},
        {"He3", 3, 9, {{2, 3, 1, 5, 6, 4, 8, 9, 7}, {1, 5, 9, 4, 8, 3, 7, 2, 6}}},
        {"S3", 3, 3, {{2, 3, 1}, {2, 1, 3}}},
    };
    return specs;
}

const std::map<std::string, std::string>& catalog_aliases() {
    static const std::map<std::string, std::string> aliases = {
        {"Z2xZ2", "V4"},
        {"Z2xZ2xZ2", "E8"},
        {"Z3xZ3", "E9"},
    };
    return aliases;
}

} // namespace

std::vector<std::string> catalog_names() {
    std::vector<std::string> out;
    for (const auto& s : catalog_specs()) out.push_back(s.name);
    return out;
}

bool catalog_has(const std::string& name) {
    std::string key = name;
    if (auto it = catalog_aliases().find(key); it != catalog_aliases().end()) key = it->second;
    for (const auto& s : catalog_specs())
        if (s.name == key) return true;
    return false;
}

GroupPtr catalog_group(const std::string& name, std::uint32_t p_override) {
    std::string key = name;
    if (auto it = catalog_aliases().find(key); it != catalog_aliases().end()) key = it->second;
    for (const auto& s : catalog_specs()) {
        if (s.name != key) continue;
        GroupSpec spec = s;
        if (p_override != 0) spec.p = p_override;
        return FiniteGroup::from_permutations(spec);
    }
    throw InputError("unknown catalog group '" + name + "'");
}

} // namespace pcoh
