#include <set>

#include "matspec/catalog.hpp"
#include "support.hpp"

using namespace matspec;
using namespace testing;

namespace {

IdentityEntry constant_entry(std::string id, double printed, double corrected = -1.0) {
    IdentityEntry e;
    e.id = std::move(id);
    e.paperEq = "t";
    e.mode = CheckMode::Pointwise;
    e.printed = [printed](const SampleContext&) { return printed; };
    if (corrected >= 0.0) {
        e.kind = EntryKind::SuspectedTypo;
        e.corrected = [corrected](const SampleContext&) { return corrected; };
        e.correctedForm = "alternative";
    }
    return e;
}

RunConfig small_config() {
    RunConfig cfg;
    cfg.seeds = {1, 2};
    cfg.dims = {1};
    return cfg;
}

}  // namespace

TEST_SUITE("catalog") {

TEST_CASE("status rules") {
    const RunConfig cfg = small_config();
    CHECK(run_identity(constant_entry("a", 0.0), cfg).status == CheckStatus::Pass);
    const IdentityCheckReport c = run_identity(constant_entry("b", 1.0, 0.0), cfg);
    CHECK(c.status == CheckStatus::Corrected);
    REQUIRE(c.correctedForm.has_value());
    CHECK(c.correctedForm->find("alternative") == 0);
    CHECK(run_identity(constant_entry("c", 1.0, 1.0), cfg).status == CheckStatus::Fail);
    CHECK(run_identity(constant_entry("d", 1.0), cfg).status == CheckStatus::Fail);
    CHECK(run_identity(constant_entry("e", 0.0), cfg).samples == 2);
}

TEST_CASE("errors inside a residual fail the entry") {
    IdentityEntry e = constant_entry("thrower", 0.0);
    e.printed = [](const SampleContext&) -> double { throw Error(ErrorCode::Nonconvergence, "boom"); };
    const IdentityCheckReport r = run_identity(e, small_config());
    CHECK(r.status == CheckStatus::Fail);
    CHECK(r.diagnostics.find("Nonconvergence") != std::string::npos);
}

TEST_CASE("glob selection is sorted") {
    const std::vector<IdentityEntry> v{constant_entry("eq3.2", 0), constant_entry("eq2.1", 0), constant_entry("gf1", 0)};
    const auto s = select_entries(v, "eq*");
    REQUIRE(s.size() == 2);
    CHECK(s[0]->id == "eq2.1");
    CHECK(select_entries(v, "eq?.1").size() == 1);
    CHECK(select_entries(v, "").size() == 3);
    CHECK(select_entries(v, "nothing").empty());
}

TEST_CASE("report JSON round trip") {
    const RunConfig cfg = small_config();
    const std::vector<IdentityEntry> v{constant_entry("a", 0.0), constant_entry("b", 1.0, 0.0)};
    const auto reports = run_catalog(select_entries(v, "*"), cfg);
    const std::string json = report_to_json(reports);
    CHECK(json.find("\"id\"") < json.find("\"paperEq\""));
    const auto back = report_from_json(json);
    REQUIRE(back.size() == 2);
    CHECK(back[1].status == CheckStatus::Corrected);
    CHECK(report_to_json(back) == json);
    CHECK_THROWS_AS(report_from_json("{"), Error);
    CHECK(render_table({}).find("id") == 0);
}

TEST_CASE("catalog ids are unique and typo entries carry an alternative") {
    const std::vector<IdentityEntry> all = full_catalog();
    std::set<std::string> ids;
    for (const IdentityEntry& e : all) {
        CAPTURE(e.id);
        CHECK(ids.insert(e.id).second);
        CHECK(static_cast<bool>(e.printed));
        if (e.kind == EntryKind::SuspectedTypo) CHECK((static_cast<bool>(e.corrected) || !e.analysis.empty()));
    }
    CHECK(all.size() >= 70);
}

}
