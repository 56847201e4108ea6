#pragma once

#include "pcoh/config.hpp"
#include "pcoh/fingen.hpp"
#include "pcoh/generation.hpp"

#include <string>

namespace pcoh::io {

/// {"name": str, "p": int, "degree": int, "generators": [[1-based ints]]}
GroupSpec group_spec_from_json(const std::string& text);

struct ModuleFile {
    std::string group;
    std::size_t dim = 0;
    std::vector<FpMatrix> generators;  ///< one action matrix per group generator
};
/// {"group": name, "dim": n, "generators": [[[row], ...], ...]}
ModuleFile module_file_from_json(const std::string& text, std::uint32_t p);
std::string module_file_to_json(const std::string& group_name, const KGModule& m);

// --- reports; every one embeds the SessionConfig and a schema version ------

std::string ring_report(const RingPresentation& r, const SessionConfig& cfg);
std::string betti_report(const GroupPtr& g, const std::vector<std::size_t>& betti,
                         const SessionConfig& cfg);
std::string oracle_report(const GroupPtr& g, const std::vector<std::size_t>& dims,
                          const SessionConfig& cfg);
std::string witness_report(const SerreWitness& w, const SessionConfig& cfg);
std::string witness_absent_report(const GroupPtr& g, std::size_t max_m, bool elementary_abelian,
                                  const SessionConfig& cfg);
std::string splice_report(const SplicedSequence& s, const ZeroClassReport& z,
                          const SessionConfig& cfg);
std::string lemma1_report(const FiniteGenerationReport& r, const SessionConfig& cfg);
std::string module_fg_report(const ModuleFGReport& r, const SessionConfig& cfg);

/// Self-contained certificate file: group tables and module actions are
/// embedded so verification needs no caches or search.
std::string certificate_file(const CertPtr& c, const SessionConfig& cfg);

struct VerifyOutcome {
    bool pass = false;
    std::string message;
    std::string path;  ///< JSON path of the first failing claim
};
/// Re-check every stored claim (group axioms, module actions, equivariance,
/// exactness, zero Ext classes, child consistency) from the raw data.
VerifyOutcome verify_certificate(const std::string& text);

/// Plain-text rendering of a JSON report for --format text.
std::string render_text(const std::string& json_report);

} // namespace pcoh::io
