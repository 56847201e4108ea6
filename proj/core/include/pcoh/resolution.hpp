#pragma once

#include "pcoh/module.hpp"

#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace pcoh {

struct Limits {
    std::size_t rank_ceiling = 4096;  ///< max total F_p dimension per degree
};

/// Minimal free resolution  ... -> F_1 -> F_0 -> module -> 0  over kG,
/// built by iterated projective covers of syzygies (G a p-group, so kG is
/// local and minimality is automatic).
struct FreeResolution {
    ModulePtr module;
    GroupPtr group;
    std::vector<std::size_t> betti;    ///< b_0 .. b_length
    std::vector<ModulePtr> terms;      ///< F_i = regular^{b_i}
    std::vector<ModuleMap> boundaries; ///< boundaries[i-1] : F_i -> F_{i-1}, i >= 1
    ModuleMap augmentation;            ///< F_0 -> module
    FpMatrix syzygy;                   ///< rref basis of the last kernel, inside F_length

    std::size_t length() const { return betti.size() - 1; }
    const FpMatrix& boundary(std::size_t i) const { return boundaries.at(i - 1).mat; }
};

FreeResolution minimal_resolution(const ModulePtr& m, std::size_t maxdeg,
                                  const Limits& limits = {});
void extend_resolution(FreeResolution& res, std::size_t maxdeg, const Limits& limits = {});

/// Per-(module fingerprint) cache of resolutions, extended incrementally.
/// Optionally persists boundary data as JSON under `cache_dir`.
class ResolutionCache {
public:
    ResolutionCache() = default;
    explicit ResolutionCache(std::string cache_dir, Limits limits = {})
        : dir_(std::move(cache_dir)), limits_(limits) {}

    /// Resolution of m computed at least to `maxdeg`.
    const FreeResolution& get(const ModulePtr& m, std::size_t maxdeg);
    const Limits& limits() const { return limits_; }

private:
    std::string dir_;
    Limits limits_;
    std::mutex mu_;
    std::map<std::uint64_t, FreeResolution> store_;
};

/// Degreewise lift: components[i] maps src term (shift + i) to tgt term i.
struct ChainMap {
    std::size_t shift = 0;
    std::vector<FpMatrix> components;
};

/// Exact complex  ... -> Y_1 -> Y_0 -> M -> 0  used as a lifting target.
struct LiftTarget {
    ModulePtr base;                ///< M
    std::vector<ModulePtr> terms;  ///< Y_0, Y_1, ...
    std::vector<FpMatrix> maps;    ///< maps[0]: Y_0 -> M; maps[i]: Y_i -> Y_{i-1}
};
LiftTarget as_lift_target(const FreeResolution& r);

/// Solve q ∘ s = r for s : F -> Y, where F = regular^b is free over its
/// group with generator spots at basis indices j*|G|, q : Y -> Z is
/// equivariant and r : F -> Z lands in the image of q.
FpMatrix lift_through(const KGModule& f_free, const KGModule& y, const FpMatrix& q,
                      const FpMatrix& r);

/// Comparison-theorem lift of f through resolutions / exact targets.
/// shift = 0: f : module(src) -> target base.
/// shift = n: f : src F_n -> target base (a degree-n cocycle).
ChainMap lift_chain_map(const FpMatrix& f, const FreeResolution& src, const LiftTarget& tgt,
                        std::size_t shift, std::size_t up_to);
ChainMap lift_chain_map(const ModuleMap& f, const FreeResolution& src, const FreeResolution& tgt,
                        std::size_t shift, std::size_t up_to);

/// 0 -> left -> X_{n-1} -> ... -> X_0 -> right -> 0.
/// terms are listed right to left: terms[0] = X_0.
struct ModuleSequence {
    ModulePtr left;
    std::vector<ModulePtr> terms;
    ModulePtr right;
    FpMatrix into;               ///< left -> X_{n-1}
    std::vector<FpMatrix> maps;  ///< maps[i]: X_{i+1} -> X_i  (i = 0..n-2)
    FpMatrix onto;               ///< X_0 -> right

    std::size_t n() const { return terms.size(); }
};

struct ExactnessPosition {
    std::string at;
    std::size_t dim = 0;
    std::size_t rank_in = 0;   ///< rank of the incoming map
    std::size_t rank_out = 0;  ///< rank of the outgoing map
    bool composite_zero = true;
    bool exact = false;
};

struct ExactnessReport {
    bool pass = false;
    std::vector<ExactnessPosition> positions;
};

/// Exactness at every position by rank arithmetic, including injectivity
/// and surjectivity at the ends.
ExactnessReport verify_exact(const ModuleSequence& seq);

} // namespace pcoh
