#include "matspec/catalog.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace matspec {

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string sci(double v) {
    if (!std::isfinite(v)) return "n/a";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

struct Outcome {
    double residual = 0.0;
    int samples = 0;
    std::string error;
};

Outcome evaluate(const ResidualFn& fn, const IdentityEntry& entry, const RunConfig& config) {
    Outcome out;
    const std::vector<std::size_t>& dims = entry.dims.empty() ? config.dims : entry.dims;
    std::size_t seed_count = config.seeds.size();
    if (entry.maxSeeds > 0) seed_count = std::min<std::size_t>(seed_count, entry.maxSeeds);
    for (std::size_t dim : dims) {
        for (std::size_t i = 0; i < seed_count; ++i) {
            SampleContext ctx{config.seeds[i], dim, config.truncationK, entry.id};
            ++out.samples;
            double r;
            try {
                r = fn(ctx);
            } catch (const std::exception& e) {
                if (out.error.empty())
                    out.error = "dim " + std::to_string(dim) + ", seed " + std::to_string(ctx.seed) + ": " + e.what();
                r = HUGE_VAL;
            }
            if (std::isnan(r)) r = HUGE_VAL;
            out.residual = std::max(out.residual, r);
        }
    }
    return out;
}

}  // namespace

std::string to_string(CheckMode mode) {
    switch (mode) {
    case CheckMode::Quadrature: return "quadrature";
    case CheckMode::Formal: return "formal";
    case CheckMode::Laplace: return "laplace";
    case CheckMode::Expansion: return "expansion";
    case CheckMode::Pointwise: return "pointwise";
    case CheckMode::Extraction: return "extraction";
    }
    return "unknown";
}

std::string to_string(CheckStatus status) {
    switch (status) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Corrected: return "CORRECTED";
    }
    return "FAIL";
}

SpectralSampler SampleContext::sampler() const {
    return SpectralSampler(seed * 0x9E3779B97F4A7C15ULL ^ fnv1a(salt) ^ (dim << 48), dim);
}

void RunConfig::validate() const {
    if (seeds.empty()) throw Error(ErrorCode::ConfigError, "at least one seed is required");
    if (dims.empty()) throw Error(ErrorCode::ConfigError, "at least one dimension is required");
    for (std::size_t d : dims)
        if (d < 1 || d > 4) throw Error(ErrorCode::ConfigError, "dims must lie in {1,2,3,4}");
    if (truncationK < 10 || truncationK > 100) throw Error(ErrorCode::ConfigError, "truncationK must lie in [10, 100]");
    for (const auto& [name, tol] : tolerances) {
        if (!(tol > 0.0)) throw Error(ErrorCode::ConfigError, "tolerance for " + name + " must be positive");
    }
    for (CheckMode m : {CheckMode::Quadrature, CheckMode::Formal, CheckMode::Laplace, CheckMode::Expansion,
                        CheckMode::Pointwise, CheckMode::Extraction})
        if (!tolerances.count(to_string(m))) throw Error(ErrorCode::ConfigError, "missing tolerance for " + to_string(m));
}

double RunConfig::tolerance_for(CheckMode mode) const {
    auto it = tolerances.find(to_string(mode));
    if (it == tolerances.end()) throw Error(ErrorCode::ConfigError, "missing tolerance for " + to_string(mode));
    return it->second;
}

IdentityCheckReport run_identity(const IdentityEntry& entry, const RunConfig& config) {
    IdentityCheckReport rep;
    rep.id = entry.id;
    rep.paperEq = entry.paperEq;
    rep.tolerance = entry.tolerance > 0.0 ? entry.tolerance : config.tolerance_for(entry.mode);

    const Outcome printed = evaluate(entry.printed, entry, config);
    rep.samples = printed.samples;
    rep.diagnostics = printed.error;
    if (printed.residual <= rep.tolerance) {
        rep.status = CheckStatus::Pass;
        rep.residual = printed.residual;
        return rep;
    }
    rep.status = CheckStatus::Fail;
    rep.residual = printed.residual;
    std::string note = "printed form residual " + sci(printed.residual);
    if (!printed.error.empty()) note += " (" + printed.error + ")";

    if (entry.corrected) {
        const Outcome fixed = evaluate(entry.corrected, entry, config);
        if (fixed.residual <= rep.tolerance) {
            rep.status = CheckStatus::Corrected;
            rep.residual = fixed.residual;
            rep.correctedForm = entry.correctedForm + "; " + note;
            return rep;
        }
        note += "; corrected form " + entry.correctedForm + " residual " + sci(fixed.residual);
        if (!fixed.error.empty()) note += " (" + fixed.error + ")";
        if (rep.diagnostics.empty()) rep.diagnostics = fixed.error;
    }
    if (!entry.analysis.empty()) note += "; analysis: " + entry.analysis;
    rep.correctedForm = note;
    return rep;
}

std::vector<const IdentityEntry*> select_entries(const std::vector<IdentityEntry>& entries, const std::string& glob) {
    std::vector<const IdentityEntry*> out;
    for (const IdentityEntry& e : entries)
        if (glob.empty() || fnmatch(glob.c_str(), e.id.c_str(), 0) == 0) out.push_back(&e);
    std::sort(out.begin(), out.end(), [](const IdentityEntry* a, const IdentityEntry* b) { return a->id < b->id; });
    return out;
}

std::vector<IdentityCheckReport> run_catalog(const std::vector<const IdentityEntry*>& entries,
                                             const RunConfig& config) {
    config.validate();
    std::vector<IdentityCheckReport> out;
    out.reserve(entries.size());
    for (const IdentityEntry* e : entries) out.push_back(run_identity(*e, config));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return out;
}

std::string report_to_json(const std::vector<IdentityCheckReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const IdentityCheckReport& r : reports) {
        nlohmann::ordered_json o;
        o["id"] = r.id;
        o["paperEq"] = r.paperEq;
        if (std::isfinite(r.residual))
            o["residual"] = r.residual;
        else
            o["residual"] = nullptr;
        o["tolerance"] = r.tolerance;
        o["status"] = to_string(r.status);
        if (r.correctedForm)
            o["correctedForm"] = *r.correctedForm;
        else
            o["correctedForm"] = nullptr;
        o["samples"] = r.samples;
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

std::vector<IdentityCheckReport> report_from_json(const std::string& text) {
    std::vector<IdentityCheckReport> out;
    try {
        const nlohmann::json arr = nlohmann::json::parse(text);
        if (!arr.is_array()) throw Error(ErrorCode::ParseError, "report must be a JSON array");
        for (const auto& o : arr) {
            IdentityCheckReport r;
            r.id = o.at("id").get<std::string>();
            r.paperEq = o.at("paperEq").get<std::string>();
            r.residual = o.at("residual").is_null() ? HUGE_VAL : o.at("residual").get<double>();
            r.tolerance = o.at("tolerance").get<double>();
            const std::string st = o.at("status").get<std::string>();
            if (st == "PASS")
                r.status = CheckStatus::Pass;
            else if (st == "FAIL")
                r.status = CheckStatus::Fail;
            else if (st == "CORRECTED")
                r.status = CheckStatus::Corrected;
            else
                throw Error(ErrorCode::ParseError, "unknown status " + st);
            if (!o.at("correctedForm").is_null()) r.correctedForm = o.at("correctedForm").get<std::string>();
            r.samples = o.at("samples").get<int>();
            out.push_back(std::move(r));
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return out;
}

std::string render_table(const std::vector<IdentityCheckReport>& reports) {
    std::vector<const IdentityCheckReport*> rows;
    for (const auto& r : reports) rows.push_back(&r);
    std::sort(rows.begin(), rows.end(), [](auto* a, auto* b) { return a->id < b->id; });
    std::size_t w_id = 2, w_eq = 8;
    for (auto* r : rows) {
        w_id = std::max(w_id, r->id.size());
        w_eq = std::max(w_eq, r->paperEq.size());
    }
    std::ostringstream os;
    auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); };
    os << pad("id", w_id) << "  " << pad("equation", w_eq) << "  " << pad("residual", 10) << "  "
       << pad("status", 9) << "  note\n";
    for (auto* r : rows) {
        std::string line = pad(r->id, w_id) + "  " + pad(r->paperEq, w_eq) + "  " + pad(sci(r->residual), 10) + "  " +
                           pad(to_string(r->status), 9) + "  " +
                           (r->status == CheckStatus::Pass ? "" : r->correctedForm.value_or(""));
        line.erase(line.find_last_not_of(' ') + 1);
        os << line << "\n";
    }
    return os.str();
}

std::vector<IdentityEntry> full_catalog() {
    std::vector<IdentityEntry> all = transform_identity_catalog();
    for (auto&& part : {bateman_identity_catalog(), young_identity_catalog()})
        all.insert(all.end(), part.begin(), part.end());
    return all;
}

}  // namespace matspec
