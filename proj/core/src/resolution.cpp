#include "pcoh/resolution.hpp"

#include "pcoh/error.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>

namespace pcoh {

namespace {

// One syzygy step: cover the kernel sitting inside the previous free term.
struct Step {
    ModulePtr term;     // new free term
    FpMatrix boundary;  // new term -> previous term
    FpMatrix syzygy;    // kernel basis inside the new term
    std::size_t rank;
};

Step syzygy_step(const ModulePtr& prev_term, const FpMatrix& syz, const Limits& limits) {
    GroupPtr g = prev_term->group();
    if (syz.rows() == 0) {
        ModulePtr zero = free_module(g, 0);
        return {zero, FpMatrix(g->p(), prev_term->dim(), 0), FpMatrix(g->p(), 0, 0), 0};
    }
    ModulePtr k = submodule(*prev_term, syz);
    ProjectiveCover cover = projective_cover(k);
    if (cover.free->dim() > limits.rank_ceiling)
        throw CapError("minimal_resolution: rank ceiling exceeded (" +
                       std::to_string(cover.free->dim()) + " > " +
                       std::to_string(limits.rank_ceiling) + ")");
    FpMatrix boundary = syz.transposed() * cover.cover.mat;
    FpMatrix next_syz = kernel_basis(cover.cover.mat);
    return {cover.free, std::move(boundary), std::move(next_syz), cover.rank};
}

} // namespace

FreeResolution minimal_resolution(const ModulePtr& m, std::size_t maxdeg, const Limits& limits) {
    if (m->dim() == 0) throw DomainError("minimal_resolution: zero module");
    FreeResolution res;
    res.module = m;
    res.group = m->group();
    ProjectiveCover c0 = projective_cover(m);
    if (c0.free->dim() > limits.rank_ceiling)
        throw CapError("minimal_resolution: rank ceiling exceeded in degree 0");
    res.betti.push_back(c0.rank);
    res.terms.push_back(c0.free);
    res.augmentation = c0.cover;
    res.syzygy = kernel_basis(c0.cover.mat);
    extend_resolution(res, maxdeg, limits);
    return res;
}

void extend_resolution(FreeResolution& res, std::size_t maxdeg, const Limits& limits) {
    while (res.length() < maxdeg) {
        Step s = syzygy_step(res.terms.back(), res.syzygy, limits);
        res.betti.push_back(s.rank);
        res.boundaries.push_back(ModuleMap{s.term, res.terms.back(), std::move(s.boundary)});
        res.terms.push_back(s.term);
        res.syzygy = std::move(s.syzygy);
    }
}

// --- cache with optional on-disk persistence -------------------------------

namespace {

nlohmann::json matrix_to_json(const FpMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

FpMatrix matrix_from_json(std::uint32_t p, const nlohmann::json& j) {
    std::size_t r = j.at("rows").get<std::size_t>();
    std::size_t c = j.at("cols").get<std::size_t>();
    FpMatrix m(p, r, c);
    const auto& rows = j.at("entries");
    if (rows.size() != r) throw InputError("matrix_from_json: row count mismatch");
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw InputError("matrix_from_json: column count mismatch");
        for (std::size_t k = 0; k < c; ++k) m.set(i, k, rows[i][k].get<Fp>());
    }
    return m;
}

std::filesystem::path cache_file(const std::string& dir, std::uint64_t key) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "res-%016llx.json", static_cast<unsigned long long>(key));
    return std::filesystem::path(dir) / buf;
}

bool load_cached(const std::string& dir, const ModulePtr& m, FreeResolution& out) {
    auto path = cache_file(dir, m->fingerprint());
    std::ifstream in(path);
    if (!in) return false;
    nlohmann::json j;
    try {
        in >> j;
        if (j.at("module") != m->fingerprint()) return false;
        std::uint32_t p = m->p();
        GroupPtr g = m->group();
        FreeResolution res;
        res.module = m;
        res.group = g;
        res.betti = j.at("betti").get<std::vector<std::size_t>>();
        for (std::size_t b : res.betti) res.terms.push_back(free_module(g, b));
        res.augmentation =
            ModuleMap{res.terms[0], m, matrix_from_json(p, j.at("augmentation"))};
        const auto& bnd = j.at("boundaries");
        for (std::size_t i = 0; i + 1 < res.terms.size(); ++i)
            res.boundaries.push_back(
                ModuleMap{res.terms[i + 1], res.terms[i], matrix_from_json(p, bnd.at(i))});
        res.syzygy = matrix_from_json(p, j.at("syzygy"));
        // cheap structural validation before trusting the file
        if (!(res.augmentation.mat.rows() == m->dim())) return false;
        for (std::size_t i = 1; i <= res.length(); ++i) {
            const FpMatrix& d = res.boundary(i);
            if (d.rows() != res.terms[i - 1]->dim() || d.cols() != res.terms[i]->dim())
                return false;
            const FpMatrix composite = i == 1 ? res.augmentation.mat * d
                                              : res.boundary(i - 1) * d;
            if (!composite.is_zero()) return false;
        }
        out = std::move(res);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

void save_cached(const std::string& dir, const FreeResolution& res) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    nlohmann::json j;
    j["module"] = res.module->fingerprint();
    j["betti"] = res.betti;
    j["augmentation"] = matrix_to_json(res.augmentation.mat);
    nlohmann::json bnd = nlohmann::json::array();
    for (const auto& b : res.boundaries) bnd.push_back(matrix_to_json(b.mat));
    j["boundaries"] = std::move(bnd);
    j["syzygy"] = matrix_to_json(res.syzygy);
    std::ofstream out(cache_file(dir, res.module->fingerprint()));
    out << j.dump();
}

} // namespace

const FreeResolution& ResolutionCache::get(const ModulePtr& m, std::size_t maxdeg) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = store_.find(m->fingerprint());
    if (it == store_.end()) {
        FreeResolution res;
        if (!dir_.empty() && load_cached(dir_, m, res)) {
            it = store_.emplace(m->fingerprint(), std::move(res)).first;
        } else {
            it = store_.emplace(m->fingerprint(), minimal_resolution(m, maxdeg, limits_)).first;
            if (!dir_.empty()) save_cached(dir_, it->second);
        }
    }
    if (it->second.length() < maxdeg) {
        extend_resolution(it->second, maxdeg, limits_);
        if (!dir_.empty()) save_cached(dir_, it->second);
    }
    return it->second;
}

// --- comparison-theorem lifting ---------------------------------------------

LiftTarget as_lift_target(const FreeResolution& r) {
    LiftTarget t;
    t.base = r.module;
    t.terms = r.terms;
    t.maps.push_back(r.augmentation.mat);
    for (const auto& b : r.boundaries) t.maps.push_back(b.mat);
    return t;
}

FpMatrix lift_through(const KGModule& f_free, const KGModule& y, const FpMatrix& q,
                      const FpMatrix& r) {
    const std::size_t n = f_free.group()->order();
    const std::size_t b = n == 0 ? 0 : f_free.dim() / n;
    if (b * n != f_free.dim()) throw InternalError("lift_through: source is not free");
    if (q.rows() != r.rows()) throw InternalError("lift_through: target dimension mismatch");
    FpMatrix rhs(q.p(), q.rows(), b);
    for (std::size_t j = 0; j < b; ++j)
        for (std::size_t i = 0; i < q.rows(); ++i) rhs.set(i, j, r(i, j * n));
    auto v = solve_matrix(q, rhs);
    if (!v) throw InternalError("lift_through: inconsistent system (target not exact?)");
    FpMatrix s(q.p(), y.dim(), f_free.dim());
    for (std::size_t g = 0; g < n; ++g) {
        FpMatrix w = y.action(static_cast<ElementId>(g)) * *v;
        for (std::size_t j = 0; j < b; ++j)
            for (std::size_t i = 0; i < y.dim(); ++i) s.set(i, j * n + g, w(i, j));
    }
    return s;
}

ChainMap lift_chain_map(const FpMatrix& f, const FreeResolution& src, const LiftTarget& tgt,
                        std::size_t shift, std::size_t up_to) {
    if (src.length() < shift + up_to)
        throw InputError("lift_chain_map: source resolution too short");
    if (tgt.terms.size() < up_to + 1 || tgt.maps.size() < up_to + 1)
        throw InputError("lift_chain_map: target too short");
    ChainMap out;
    out.shift = shift;
    FpMatrix r0 = shift == 0 ? f * src.augmentation.mat : f;
    out.components.push_back(
        lift_through(*src.terms[shift], *tgt.terms[0], tgt.maps[0], r0));
    for (std::size_t i = 1; i <= up_to; ++i) {
        FpMatrix r = out.components[i - 1] * src.boundary(shift + i);
        out.components.push_back(
            lift_through(*src.terms[shift + i], *tgt.terms[i], tgt.maps[i], r));
    }
    return out;
}

ChainMap lift_chain_map(const ModuleMap& f, const FreeResolution& src, const FreeResolution& tgt,
                        std::size_t shift, std::size_t up_to) {
    return lift_chain_map(f.mat, src, as_lift_target(tgt), shift, up_to);
}

// --- exact sequences ----------------------------------------------------------

ExactnessReport verify_exact(const ModuleSequence& seq) {
    ExactnessReport rep;
    const std::size_t n = seq.n();
    if (n == 0) throw InputError("verify_exact: empty sequence");

    auto outgoing = [&](std::size_t i) -> const FpMatrix& {
        return i == 0 ? seq.onto : seq.maps[i - 1];
    };
    auto incoming = [&](std::size_t i) -> const FpMatrix& {
        return i + 1 == n ? seq.into : seq.maps[i];
    };

    rep.pass = true;
    {
        ExactnessPosition pos;
        pos.at = "left";
        pos.dim = seq.left->dim();
        pos.rank_out = rank(seq.into);
        pos.exact = pos.rank_out == seq.left->dim();  // injectivity
        rep.pass = rep.pass && pos.exact;
        rep.positions.push_back(pos);
    }
    for (std::size_t i = n; i-- > 0;) {
        ExactnessPosition pos;
        pos.at = "X" + std::to_string(i);
        pos.dim = seq.terms[i]->dim();
        const FpMatrix& in = incoming(i);
        const FpMatrix& out = outgoing(i);
        pos.rank_in = rank(in);
        pos.rank_out = rank(out);
        pos.composite_zero = (out * in).is_zero();
        pos.exact = pos.composite_zero && pos.rank_in + pos.rank_out == pos.dim;
        rep.pass = rep.pass && pos.exact;
        rep.positions.push_back(pos);
    }
    {
        ExactnessPosition pos;
        pos.at = "right";
        pos.dim = seq.right->dim();
        pos.rank_in = rank(seq.onto);
        pos.exact = pos.rank_in == seq.right->dim();  // surjectivity
        rep.pass = rep.pass && pos.exact;
        rep.positions.push_back(pos);
    }
    return rep;
}

} // namespace pcoh
