#include "catalog_support.hpp"
#include "matspec/young.hpp"

namespace matspec {

namespace {

using namespace detail;

IdentityEntry entry(std::string id, std::string eq, std::string desc, CheckMode mode, ResidualFn printed) {
    IdentityEntry e;
    e.id = std::move(id);
    e.paperEq = std::move(eq);
    e.description = std::move(desc);
    e.mode = mode;
    e.printed = std::move(printed);
    return e;
}

double definition(const SampleContext& ctx) {
    SpectralSampler s = ctx.sampler();
    const SquareMatrix a = draw(s);
    const double x = s.uniform(0.2, 3.0);
    return rel(young_Y(a, x), young_Y_gamma_sum(a, x));
}

double expansion(const SampleContext& ctx, YoungExpansion v, ExpansionForm form) {
    SpectralSampler s = ctx.sampler();
    const SquareMatrix a = draw(s);
    const double x = s.uniform(0.2, 1.0);
    return young_expansion(v, a, x, 20, form).error;
}

ResidualFn expansion_fn(YoungExpansion v, ExpansionForm form) {
    return [=](const SampleContext& c) { return expansion(c, v, form); };
}

ResidualFn ode_fn(YoungOde form) {
    return [=](const SampleContext& c) {
        SpectralSampler s = c.sampler();
        return young_ode_residual(draw(s, 0.3, 2.5, 0.3), c.truncation, form);
    };
}

}  // namespace

std::vector<IdentityEntry> young_identity_catalog() {
    using M = CheckMode;
    using E = YoungExpansion;
    const ExpansionForm printed = ExpansionForm::Printed, fixed = ExpansionForm::Corrected;
    std::vector<IdentityEntry> v;

    v.push_back(entry("young-definition", "Young definition", "1F2 form against the Gamma^{-1}(A+(2k+1)I) sum form",
                      M::Pointwise, definition));

    IdentityEntry e39 = entry("eq4.39", "4.39", "Y_A as a series of J_{(A+2kI)/2}, k <= 20, x in (0.2, 1)",
                              M::Expansion, expansion_fn(E::Eq39, printed));
    e39.kind = EntryKind::SuspectedTypo;
    e39.corrected = expansion_fn(E::Eq39, fixed);
    e39.correctedForm = "drop the factor x^{2k} and read (2z) as (2x)";
    v.push_back(std::move(e39));

    v.push_back(entry("eq4.40", "4.40", "Y_A as a series of J_{(A+(2k-1)I)/2}, k <= 20", M::Expansion,
                      expansion_fn(E::Eq40, printed)));
    v.push_back(entry("eq4.41", "4.41", "J_{A/2} as a series of Y_{A+2kI}, k <= 20", M::Expansion,
                      expansion_fn(E::Eq41, printed)));

    IdentityEntry e42 = entry("eq4.42", "4.42", "J_{(A-I)/2} as a series of Y_{A+2kI}, k <= 20", M::Expansion,
                              expansion_fn(E::Eq42, printed));
    e42.kind = EntryKind::SuspectedTypo;
    e42.corrected = expansion_fn(E::Eq42, fixed);
    e42.correctedForm = "(2x)^{-(A+I)/2} in place of (2x)^{-A/2}";
    v.push_back(std::move(e42));

    v.push_back(entry("eq4.45", "4.45", "third-order equation for W = 1F2(I;(A+I)/2,(A+2I)/2;-x^2/4)", M::Formal,
                      ode_fn(YoungOde::Eq45)));
    v.push_back(entry("eq4.47", "4.47", "x^3 Y''' + (2I-A) x^2 Y'' + x^3 Y' + (2I-A) x^2 Y = 0", M::Formal,
                      ode_fn(YoungOde::Eq47)));
    v.push_back(entry("young-ode", "Young equation", "x Y''' + (2I-A) Y'' + x Y' + (2I-A) Y = 0", M::Formal,
                      ode_fn(YoungOde::Prose)));
    return v;
}

}  // namespace matspec
