#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matspec/matrix.hpp"

namespace matspec {

enum class CheckMode { Quadrature, Formal, Laplace, Expansion, Pointwise, Extraction };
enum class EntryKind { ExpectedPass, SuspectedTypo };
enum class CheckStatus { Pass, Fail, Corrected };

std::string to_string(CheckMode mode);
std::string to_string(CheckStatus status);

// What a residual function gets to work with for one sample.
struct SampleContext {
    std::uint64_t seed = 1;
    std::size_t dim = 1;
    int truncation = 40;
    std::string salt;  // the entry id, so entries draw independent parameters

    // A sampler over one random eigenbasis, deterministic in (seed, dim, salt).
    SpectralSampler sampler() const;
};

using ResidualFn = std::function<double(const SampleContext&)>;

struct IdentityEntry {
    std::string id;
    std::string paperEq;
    std::string description;
    CheckMode mode = CheckMode::Quadrature;
    EntryKind kind = EntryKind::ExpectedPass;
    ResidualFn printed;
    ResidualFn corrected;       // empty when only the printed form exists
    std::string correctedForm;  // the alternative the corrected residual tests
    std::string analysis;       // why the entry may legitimately stay FAIL
    std::vector<std::size_t> dims;  // empty: the run's dims
    int maxSeeds = 0;               // 0: every seed of the run
    double tolerance = 0.0;         // 0: the run's tolerance for the mode
};

struct RunConfig {
    std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    std::vector<std::size_t> dims{1, 2, 3};
    std::map<std::string, double> tolerances{{"quadrature", 1e-8}, {"formal", 1e-10}, {"laplace", 1e-6},
                                             {"expansion", 1e-6},  {"pointwise", 1e-9}, {"extraction", 1e-8}};
    int truncationK = 40;
    std::string outputPath;

    void validate() const;  // ConfigError on violation
    double tolerance_for(CheckMode mode) const;
};

struct IdentityCheckReport {
    std::string id;
    std::string paperEq;
    double residual = 0.0;
    double tolerance = 0.0;
    CheckStatus status = CheckStatus::Pass;
    std::optional<std::string> correctedForm;
    int samples = 0;
    std::string diagnostics;  // first error seen, not part of the file format
};

IdentityCheckReport run_identity(const IdentityEntry& entry, const RunConfig& config);

// Entries whose id matches the shell-style glob, sorted by id.
std::vector<const IdentityEntry*> select_entries(const std::vector<IdentityEntry>& entries, const std::string& glob);
std::vector<IdentityCheckReport> run_catalog(const std::vector<const IdentityEntry*>& entries,
                                             const RunConfig& config);

std::string report_to_json(const std::vector<IdentityCheckReport>& reports);
std::vector<IdentityCheckReport> report_from_json(const std::string& text);  // ParseError
std::string render_table(const std::vector<IdentityCheckReport>& reports);

std::vector<IdentityEntry> transform_identity_catalog();
std::vector<IdentityEntry> bateman_identity_catalog();
std::vector<IdentityEntry> young_identity_catalog();
std::vector<IdentityEntry> full_catalog();

}  // namespace matspec
