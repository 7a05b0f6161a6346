#include "degjc/closedform.hpp"
#include "degjc/entanglement.hpp"
#include "degjc/specialfn.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace degjc;
using namespace degjc::closedform;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> grid(int n, double hi = 2.0 * kPi) {
    std::vector<double> g(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) g[static_cast<std::size_t>(k)] = hi * k / (n - 1);
    return g;
}

// Reference values from tests/oracle/freeze_values.py: dense matrix exponentials of
// the two displaced-oscillator branches in a 141-level Fock space, and Wootters
// evaluated in 60-digit arithmetic on the explicitly built two-qubit state.
struct FrozenCoherence {
    FieldSpec field;
    double beta, omega_t;
    cplx c;            // Tr_f[U_up F U_down^dag]
    double phi_plus;   // concurrence of evolved Phi+
};

const std::vector<FrozenCoherence>& frozen() {
    static const std::vector<FrozenCoherence> table = {
        {FieldSpec::vacuum(), 0.1, 1.0471975511965976, {0.9801986733067365, 0.0}, 0.9607894391522855},
        {FieldSpec::vacuum(), 0.1, 3.141592653589793, {0.9231163463866454, 0.0}, 0.8521437889662282},
        {FieldSpec::vacuum(), 0.1, 2.5, {0.9304883300008434, 0.0}, 0.8658085322677576},
        {FieldSpec::vacuum(), 0.5, 1.0471975511965976, {0.6065306597126261, 0.0}, 0.3678794411714332},
        {FieldSpec::vacuum(), 0.5, 3.141592653589793, {0.13533528323661692, 0.0}, 0.01831563888873533},
        {FieldSpec::vacuum(), 0.5, 2.5, {0.16510995789554836, 0.0}, 0.027261298196269712},
        {FieldSpec::coherent({1, 0.5}), 0.1, 1.0471975511965976, {0.8841419018249868, -0.4231814464146678}, 0.9607894391523142},
        {FieldSpec::coherent({1, 0.5}), 0.1, 3.141592653589793, {0.8502464595831893, -0.3594784373679015}, 0.8521437889662157},
        {FieldSpec::coherent({1, 0.5}), 0.1, 2.5, {0.7681660223325573, -0.5250995090471027}, 0.8658085322677302},
        {FieldSpec::coherent({1, 0.5}), 0.5, 1.0471975511965976, {-0.37247496605720976, -0.47868762343737226}, 0.3678794411714388},
        {FieldSpec::coherent({1, 0.5}), 0.5, 3.141592653589793, {-0.056319349992128086, -0.12306002480578114}, 0.018315638888735268},
        {FieldSpec::coherent({1, 0.5}), 0.5, 2.5, {-0.16341276819647294, -0.02361282250461469}, 0.027261298196268564},
        {FieldSpec::number(1), 0.1, 1.0471975511965976, {0.9409907263744793, 0.0}, 0.8854635471227694},
        {FieldSpec::number(1), 0.1, 3.141592653589793, {0.775417730964775, 0.0}, 0.6012726574945595},
        {FieldSpec::number(1), 0.1, 2.5, {0.7964128808070714, 0.0}, 0.6342734767154179},
        {FieldSpec::number(1), 0.5, 1.0471975511965976, {0.0, 0.0}, 0.0},
        {FieldSpec::number(1), 0.5, 3.141592653589793, {-0.40600584970984865, 0.0}, 0.16484074999861614},
        {FieldSpec::number(1), 0.5, 2.5, {-0.4296635351580246, 0.0}, 0.18461075344449096},
        {FieldSpec::number(5), 0.1, 1.0471975511965976, {0.7918964954429019, 0.0}, 0.6271000594947493},
        {FieldSpec::number(5), 0.1, 3.141592653589793, {0.296605583543933, 0.0}, 0.08797487218943695},
        {FieldSpec::number(5), 0.1, 2.5, {0.3521502855539187, 0.0}, 0.12400982361570634},
        {FieldSpec::number(5), 0.5, 1.0471975511965976, {-0.2830476411992319, 0.0}, 0.08011596718844904},
        {FieldSpec::number(5), 0.5, 3.141592653589793, {-0.11729057880506524, 0.0}, 0.013757079876427214},
        {FieldSpec::number(5), 0.5, 2.5, {-0.0018557402156017533, 0.0}, 3.4437717477686647e-06},
        {FieldSpec::thermal(1), 0.1, 1.0471975511965976, {0.9417645335842396, 0.0}, 0.8869204367171395},
        {FieldSpec::thermal(1), 0.1, 3.141592653589793, {0.7866278610665586, 0.0}, 0.6187833918061485},
        {FieldSpec::thermal(1), 0.1, 2.5, {0.8056247352902557, 0.0}, 0.649031214111494},
        {FieldSpec::thermal(1), 0.5, 1.0471975511965976, {0.22313016014842554, 0.0}, 0.04978706836786201},
        {FieldSpec::thermal(1), 0.5, 3.141592653589793, {0.0024787521766660536, 0.0}, 6.144212353342837e-06},
        {FieldSpec::thermal(1), 0.5, 2.5, {0.004501111797365251, 0.0}, 2.0260007412398195e-05},
        {FieldSpec::thermal(2), 0.1, 1.0471975511965976, {0.904837418035954, 0.0}, 0.8187307530779708},
        {FieldSpec::thermal(2), 0.1, 3.141592653589793, {0.6703200460356422, 0.0}, 0.4493289641172251},
        {FieldSpec::thermal(2), 0.1, 2.5, {0.6975167696202161, 0.0}, 0.4865296439014213},
        {FieldSpec::thermal(2), 0.5, 1.0471975511965976, {0.08208499862389587, 0.0}, 0.006737946999084976},
        {FieldSpec::thermal(2), 0.5, 3.141592653589793, {4.5399929761783884e-05, 0.0}, 2.0611536366565986e-09},
        {FieldSpec::thermal(2), 0.5, 2.5, {0.00012270615092376886, 0.0}, 1.5056799529400422e-08},
    };
    return table;
}

struct FrozenEsd {
    double beta, nbar, omega_t, c;
};

const FrozenEsd kFrozenEsd[] = {
    {0.1, 25.0, 0.6, 0.11776439985690407},
    {0.1, 25.0, 3.141592653589793, 0.0},
    {0.1, 2.0, 3.141592653589793, 0.08699672308791895},
    {0.25, 1.0, 1.0, 0.12635267354420793},
    {0.5, 2.0, 0.3, 0.22983298612716024},
};

const FieldSpec kClasses[] = {FieldSpec::vacuum(), FieldSpec::coherent({1.0, 0.5}), FieldSpec::number(1),
                              FieldSpec::number(5), FieldSpec::thermal(1.0), FieldSpec::thermal(25.0)};

}  // namespace

TEST_CASE("gamma") {
    const GammaValue g0 = closedform::gamma(0.0);
    CHECK(g0.gamma == cplx(0.0, 0.0));
    CHECK(g0.abs2 == 0.0);
    const GammaValue gp = closedform::gamma(kPi);
    CHECK(std::abs(gp.gamma - cplx(-2.0, 0.0)) < 1e-15);
    CHECK(gp.abs2 == doctest::Approx(4.0).epsilon(1e-15));
    const GammaValue g2 = closedform::gamma(2.0 * kPi);
    CHECK(std::abs(g2.gamma) < 1e-15);
    CHECK(g2.abs2 < 1e-30);

    for (double wt : grid(1000, 6.0 * kPi)) {
        const GammaValue g = closedform::gamma(wt);
        CHECK(std::abs(std::abs(g.gamma + 1.0) - 1.0) < 1e-15);  // circle of radius 1 around -1
        CHECK(g.abs2 >= 0.0);
        CHECK(g.abs2 <= 4.0);
        CHECK(std::abs(g.abs2 - std::norm(g.gamma)) < 1e-14);
        CHECK(std::abs(g.gamma - (std::polar(1.0, wt) - 1.0)) < 1e-14);
    }
    CHECK_THROWS_AS(closedform::gamma(NAN), InvalidInput);
}

TEST_CASE("modulation factor") {
    CHECK(modulation_factor(0.75, kPi) == doctest::Approx(std::exp(-4.5)).epsilon(1e-14));
    CHECK(modulation_factor(0.75, kPi) == doctest::Approx(1.1109e-2).epsilon(1e-4));
    CHECK(modulation_factor(0.1, kPi) == doctest::Approx(std::exp(-0.08)).epsilon(1e-14));
    for (double beta : {0.0, 0.1, 0.75, 2.0}) CHECK(modulation_factor(beta, 2.0 * kPi) == 1.0);
    for (double wt : grid(50)) CHECK(modulation_factor(0.0, wt) == 1.0);
    CHECK_THROWS_AS(modulation_factor(-0.1, 1.0), InvalidInput);
}

TEST_CASE("characteristic integral") {
    for (double wt : grid(200)) {
        const GammaValue g = closedform::gamma(wt);
        CHECK(std::abs(std::abs(characteristic_integral(FieldSpec::coherent({3.0, -2.0}), 0.7, g)) - 1.0) < 1e-14);
        CHECK(characteristic_integral(FieldSpec::number(0), 0.7, g) == cplx(1.0));
        CHECK(characteristic_integral(FieldSpec::vacuum(), 0.7, g) == cplx(1.0));
    }
    CHECK(std::abs(characteristic_integral(FieldSpec::thermal(1.0), 0.5, closedform::gamma(kPi)) - std::exp(-4.0)) < 1e-15);
}

TEST_CASE("single-qubit coherence") {
    const ModelParams p = ModelParams::from_beta(0.3);
    for (const auto& f : kClasses) {
        const cplx q0(0.3, -0.2);
        CHECK(std::abs(single_qubit_coherence(q0, f, p, 2.0 * kPi) - q0) < 1e-14);
        for (double wt : grid(100)) {
            const cplx c = single_qubit_coherence(0.5, f, p, wt);
            CHECK(std::abs(c) <= 0.5 * modulation_factor(0.3, wt) * (1.0 + 1e-14));
        }
    }
    for (double wt : {0.4, 1.9, 3.0}) {
        const double a2 = closedform::gamma(wt).abs2;
        CHECK(std::abs(single_qubit_coherence(0.5, FieldSpec::thermal(1.0), p, wt) -
                       0.5 * std::exp(-2.0 * 3.0 * 0.09 * a2)) < 1e-15);
    }
    // Real alpha at half period: Im[alpha conj(gamma)] = 0.
    CHECK(std::abs(single_qubit_coherence(0.5, FieldSpec::coherent({2.0, 0.0}), p, kPi) -
                   0.5 * std::exp(-8.0 * 0.09)) < 1e-15);

    CHECK_THROWS_AS(single_qubit_coherence(0.6, FieldSpec::vacuum(), p, 1.0), InvalidInput);
    CHECK_THROWS_AS(single_qubit_coherence(0.5, FieldSpec::vacuum(), ModelParams(1.0, 0.2, 0.3), 1.0), InvalidInput);
}

TEST_CASE("coherence and concurrence against frozen brute-force values") {
    for (const auto& r : frozen()) {
        CAPTURE(r.field.describe());
        CAPTURE(r.beta);
        CAPTURE(r.omega_t);
        const cplx got = single_qubit_coherence(0.5, r.field, ModelParams::from_beta(r.beta), r.omega_t);
        CHECK(std::abs(got - 0.5 * r.c) < 1e-11);
        for (BellState b : {BellState::PhiPlus, BellState::PhiMinus, BellState::PsiPlus, BellState::PsiMinus})
            CHECK(std::abs(concurrence_closed(b, r.field, r.beta, r.omega_t) - r.phi_plus) < 1e-11);
        const QubitPairState s =
            evolve_pair_closed(make_bell(BellState::PhiPlus, QubitBasis::SigmaZ), r.field, r.beta, r.omega_t);
        CHECK(std::abs(entanglement::concurrence(s).value - r.phi_plus) < 1e-11);
    }
}

TEST_CASE("ESD mixture against frozen brute-force values") {
    for (const auto& r : kFrozenEsd) {
        CHECK(std::abs(esd_concurrence_closed(r.beta, r.nbar, r.omega_t) - r.c) < 1e-11);
        const QubitPairState s = evolve_pair_closed(make_esd_mixture(), FieldSpec::thermal(r.nbar), r.beta, r.omega_t);
        CHECK(std::abs(entanglement::wootters_concurrence(s).value - r.c) < 1e-7);
        CHECK(std::abs(entanglement::concurrence(s).value - r.c) < 1e-12);
    }
}

TEST_CASE("two-qubit off-diagonal elements") {
    const FieldSpec coh = FieldSpec::coherent({0.7, -1.3});
    for (double wt : {0.3, 1.1, 2.9, 5.0}) {
        const GammaValue g = closedform::gamma(wt);
        const cplx expected = 0.5 * std::polar(1.0, 8.0 * 0.4 * std::imag(cplx(0.7, -1.3) * std::conj(g.gamma))) *
                              std::exp(-4.0 * 0.16 * g.abs2);
        CHECK(std::abs(two_qubit_offdiagonal(BellState::PhiPlus, coh, 0.4, wt) - expected) < 1e-15);
        CHECK(std::abs(two_qubit_offdiagonal(BellState::PhiMinus, FieldSpec::thermal(2.0), 0.4, wt) -
                       0.5 * std::exp(-4.0 * 5.0 * 0.16 * g.abs2)) < 1e-15);
    }
    for (BellState b : {BellState::PhiPlus, BellState::PhiMinus, BellState::PsiPlus, BellState::PsiMinus})
        for (const auto& f : kClasses) CHECK(std::abs(two_qubit_offdiagonal(b, f, 0.9, 2.0 * kPi) - 0.5) < 1e-14);
}

TEST_CASE("concurrence examples") {
    for (const auto& f : kClasses) CHECK(std::abs(concurrence_closed(BellState::PhiPlus, f, 1.3, 2.0 * kPi) - 1.0) < 1e-12);
    CHECK(concurrence_closed(BellState::PhiPlus, FieldSpec::number(1), 0.25, kPi) == 0.0);
    CHECK(concurrence_closed(BellState::PhiPlus, FieldSpec::thermal(1.0), 0.1, kPi) ==
          doctest::Approx(std::exp(-0.48)).epsilon(1e-14));
    CHECK(concurrence_closed(BellState::PhiPlus, FieldSpec::thermal(1.0), 0.1, kPi) ==
          doctest::Approx(0.6188).epsilon(1e-4));
    // Number(1), beta = 0.5 touches zero where |gamma|^2 = 1.
    CHECK(concurrence_closed(BellState::PhiPlus, FieldSpec::number(1), 0.5, kPi / 3.0) < 1e-30);
    CHECK(concurrence_closed(BellState::PhiPlus, FieldSpec::number(1), 0.5, 5.0 * kPi / 3.0) < 1e-28);
    // Coherent, beta = 0.5 reaches e^{-4} at half period.
    CHECK(concurrence_closed(BellState::PhiPlus, FieldSpec::coherent({1.0, 0.0}), 0.5, kPi) ==
          doctest::Approx(std::exp(-4.0)).epsilon(1e-14));
}

TEST_CASE("concurrence at half period") {
    CHECK(concurrence_at_half_period(FieldSpec::coherent({5.0, 2.0}), 0.3) ==
          doctest::Approx(std::exp(-1.44)).epsilon(1e-14));
    CHECK(concurrence_at_half_period(FieldSpec::coherent({5.0, 2.0}), 0.3) == doctest::Approx(0.2369).epsilon(1e-4));
    const double l25 = specialfn::laguerre(25, 0.16);
    CHECK(concurrence_at_half_period(FieldSpec::number(25), 0.1) ==
          doctest::Approx(std::exp(-0.16) * l25 * l25).epsilon(1e-14));
    CHECK(concurrence_at_half_period(FieldSpec::thermal(25.0), 0.1) ==
          doctest::Approx(std::exp(-8.16)).epsilon(1e-13));
    CHECK(concurrence_at_half_period(FieldSpec::thermal(25.0), 0.1) == doctest::Approx(2.860e-4).epsilon(1e-3));
    CHECK(concurrence_at_half_period(FieldSpec::coherent({1.0, 0.0}), 0.5) ==
          doctest::Approx(std::exp(-4.0)).epsilon(1e-14));
    CHECK(concurrence_at_half_period(FieldSpec::number(1), 0.25) == 0.0);
    CHECK(concurrence_at_half_period(FieldSpec::thermal(1.0), 0.25) == doctest::Approx(std::exp(-3.0)).epsilon(1e-14));
    for (const auto& f : kClasses)
        for (double beta : {0.05, 0.3, 0.8})
            CHECK(std::abs(concurrence_at_half_period(f, beta) - concurrence_closed(BellState::PhiPlus, f, beta, kPi)) <
                  1e-14);
}

TEST_CASE("ESD closed form") {
    for (double beta : {0.1, 0.5, 2.0})
        for (double nbar : {0.0, 2.0, 25.0}) {
            CHECK(esd_concurrence_closed(beta, nbar, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
            CHECK(esd_concurrence_closed(beta, nbar, 2.0 * kPi) == doctest::Approx(0.5).epsilon(1e-12));
        }
    CHECK(0.75 * std::exp(-8.16) - 0.25 < 0.0);
    CHECK(esd_concurrence_closed(0.1, 25.0, kPi) == 0.0);
    CHECK(esd_concurrence_closed(0.1, 2.0, kPi) == doctest::Approx(0.75 * std::exp(-0.8) - 0.25).epsilon(1e-14));
    CHECK(esd_concurrence_closed(0.1, 2.0, kPi) == doctest::Approx(0.0870).epsilon(1e-3));
    CHECK_THROWS_AS(esd_concurrence_closed(0.1, -1.0, 1.0), InvalidInput);
}

TEST_CASE("evolved vacuum amplitude") {
    CHECK(evolved_vacuum_state_amplitude(0.7, 0.0) == cplx(0.0, 0.0));
    CHECK(std::abs(evolved_vacuum_state_amplitude(0.7, kPi) - cplx(-1.4, 0.0)) < 1e-15);
    const cplx b = evolved_vacuum_state_amplitude(0.75, kPi);
    const double overlap = std::abs(specialfn::coherent_overlap(b, -b));
    CHECK(overlap == doctest::Approx(std::exp(-2.0 * std::norm(b))).epsilon(1e-14));
    CHECK(overlap == doctest::Approx(std::exp(-4.5)).epsilon(1e-14));
    CHECK(overlap == doctest::Approx(0.0111).epsilon(1e-3));
    // Agrees with the up branch of the propagation identity started from vacuum.
    for (double wt : {0.2, 1.7, 4.4})
        CHECK(std::abs(propagate_coherent(0.0, true, 0.6, wt).amplitude - evolved_vacuum_state_amplitude(0.6, wt)) <
              1e-15);
}

TEST_CASE("coherent propagation identity") {
    for (double wt : grid(25)) {
        CHECK(std::abs(propagate_coherent(-0.4, true, 0.4, wt).amplitude - cplx(-0.4, 0.0)) < 1e-15);
        CHECK(std::abs(propagate_coherent(0.4, false, 0.4, wt).amplitude - cplx(0.4, 0.0)) < 1e-15);
    }
    CHECK(std::abs(propagate_coherent(0.0, true, 0.3, kPi).amplitude - cplx(-0.6, 0.0)) < 1e-15);
    CHECK(std::abs(propagate_coherent(0.0, false, 0.3, kPi).amplitude - cplx(0.6, 0.0)) < 1e-15);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 100; ++i) {
        const cplx a(u(rng), u(rng));
        const double beta = std::abs(u(rng)), wt = 3.0 * u(rng);
        for (bool up : {true, false}) {
            const auto r = propagate_coherent(a, up, beta, wt);
            CHECK(std::abs(std::abs(r.phase) - 1.0) < 1e-15);
        }
        // The down branch is the up branch with beta -> -beta.
        const auto dn = propagate_coherent(a, false, beta, wt);
        const cplx rot = std::polar(1.0, -wt);
        CHECK(std::abs(dn.amplitude - ((a - beta) * rot + beta)) < 1e-14);
        CHECK(std::abs(propagate_coherent(a, true, beta, wt + 2.0 * kPi).amplitude -
                       propagate_coherent(a, true, beta, wt).amplitude) < 1e-12);
    }
}

TEST_CASE("evolve_pair_closed keeps the sigma_x diagonal and matches the off-diagonal formula") {
    for (BellState b : {BellState::PhiPlus, BellState::PhiMinus, BellState::PsiPlus, BellState::PsiMinus}) {
        const QubitPairState init = make_bell(b, QubitBasis::SigmaX);
        for (double wt : {0.7, 2.2, kPi}) {
            const QubitPairState s = evolve_pair_closed(init, FieldSpec::coherent({0.5, 0.2}), 0.45, wt);
            for (int i = 0; i < 4; ++i) CHECK(std::abs(s(i, i) - init(i, i)) < 1e-15);
            double largest = 0.0;
            for (int i = 0; i < 4; ++i) largest = std::max(largest, std::abs(s(i, 3 - i)));
            CHECK(std::abs(largest - std::abs(two_qubit_offdiagonal(b, FieldSpec::coherent({0.5, 0.2}), 0.45, wt))) <
                  1e-15);
        }
    }
}

TEST_CASE("vacuum branch purities") {
    const auto p0 = vacuum_branch_purities(0.75, 0.0);
    CHECK(p0.qubit == 0.5);
    CHECK(p0.field == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(p0.qubit_pair == doctest::Approx(1.0).epsilon(1e-15));
    const auto pi = vacuum_branch_purities(0.75, kPi);
    CHECK(pi.field == doctest::Approx(0.5 + 0.5 * std::exp(-9.0)).epsilon(1e-14));
    CHECK(pi.qubit_pair == doctest::Approx(0.5 + 0.5 * std::exp(-18.0)).epsilon(1e-14));
    CHECK(pi.field_pair == pi.qubit_pair);
}

// ---- properties ---------------------------------------------------------------------------

TEST_CASE("periodicity of every closed-form observable") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.0, 2.0 * kPi), b(0.0, 1.5);
    for (int i = 0; i < 300; ++i) {
        const double wt = u(rng), beta = b(rng);
        const ModelParams p = ModelParams::from_beta(beta);
        CHECK(std::abs(modulation_factor(beta, wt) - modulation_factor(beta, wt + 2.0 * kPi)) < 1e-12);
        CHECK(std::abs(esd_concurrence_closed(beta, 1.5, wt) - esd_concurrence_closed(beta, 1.5, wt + 2.0 * kPi)) <
              1e-12);
        for (const auto& f : kClasses) {
            CHECK(std::abs(single_qubit_coherence(0.5, f, p, wt) - single_qubit_coherence(0.5, f, p, wt + 2.0 * kPi)) <
                  1e-12);
            CHECK(std::abs(concurrence_closed(BellState::PhiPlus, f, beta, wt) -
                           concurrence_closed(BellState::PhiPlus, f, beta, wt + 2.0 * kPi)) < 1e-12);
        }
    }
}

TEST_CASE("revival at every multiple of the period") {
    for (int k = 0; k <= 5; ++k)
        for (const auto& f : kClasses)
            for (double beta : {0.1, 0.5, 2.0})
                for (BellState b : {BellState::PhiPlus, BellState::PhiMinus, BellState::PsiPlus, BellState::PsiMinus})
                    CHECK(std::abs(concurrence_closed(b, f, beta, 2.0 * kPi * k) - 1.0) <= 1e-12);
}

TEST_CASE("field classes coincide in their common limit") {
    for (double beta : {0.1, 0.5, 1.2})
        for (double wt : grid(1000)) {
            const double v = concurrence_closed(BellState::PhiPlus, FieldSpec::vacuum(), beta, wt);
            CHECK(std::abs(v - concurrence_closed(BellState::PhiPlus, FieldSpec::coherent(0.0), beta, wt)) <= 1e-12);
            CHECK(std::abs(v - concurrence_closed(BellState::PhiPlus, FieldSpec::number(0), beta, wt)) <= 1e-12);
            CHECK(std::abs(v - concurrence_closed(BellState::PhiPlus, FieldSpec::thermal(0.0), beta, wt)) <= 1e-12);
        }
}

TEST_CASE("thermal field acts as an enhanced coupling") {
    for (double nbar : {0.5, 1.0, 25.0})
        for (double beta : {0.05, 0.1, 0.5})
            for (double wt : grid(1000))
                CHECK(std::abs(concurrence_closed(BellState::PhiPlus, FieldSpec::thermal(nbar), beta, wt) -
                               concurrence_closed(BellState::PhiPlus, FieldSpec::coherent(0.3),
                                                  beta * std::sqrt(1.0 + 2.0 * nbar), wt)) <= 1e-12);
}

TEST_CASE("coherent amplitude does not affect the concurrence") {
    for (double beta : {0.1, 0.5})
        for (double wt : grid(1000)) {
            const double ref = concurrence_closed(BellState::PhiPlus, FieldSpec::coherent(0.0), beta, wt);
            for (cplx a : {cplx(1.0), cplx(10.0, 3.0), cplx(100.0)})
                CHECK(std::abs(concurrence_closed(BellState::PhiPlus, FieldSpec::coherent(a), beta, wt) - ref) <= 1e-12);
        }
}

TEST_CASE("all Bell states share the same concurrence trace") {
    for (const auto& f : kClasses)
        for (double wt : grid(1000)) {
            const double ref = concurrence_closed(BellState::PhiPlus, f, 0.3, wt);
            for (BellState b : {BellState::PhiMinus, BellState::PsiPlus, BellState::PsiMinus})
                CHECK(std::abs(concurrence_closed(b, f, 0.3, wt) - ref) <= 1e-12);
        }
}

TEST_CASE("envelope exponents: 2 beta^2 for one qubit, 4 beta^2 for the pair") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.1, 6.0), b(0.05, 0.8);
    for (int i = 0; i < 200; ++i) {
        const double wt = u(rng), beta = b(rng);
        const FieldSpec f = FieldSpec::coherent({0.4, -0.9});
        const double single = std::abs(single_qubit_coherence(0.5, f, ModelParams::from_beta(beta), wt)) / 0.5;
        const double pair = 2.0 * std::abs(two_qubit_offdiagonal(BellState::PhiPlus, f, beta, wt));
        CHECK(std::abs(single - modulation_factor(beta, wt)) < 1e-14);
        CHECK(std::abs(pair / (single * single) - 1.0) < 1e-12);
    }
}

TEST_CASE("number-state zero crossings") {
    for (int n : {1, 2, 5, 25})
        for (double beta : {0.1, 0.5}) {
            const int counted = count_number_state_zeros(n, beta, 200001);
            const int predicted = predicted_number_state_zeros(n, beta);
            CAPTURE(n);
            CAPTURE(beta);
            CHECK(counted == predicted);
            CHECK(counted <= 2 * n);
        }
    CHECK(predicted_number_state_zeros(1, 0.5) == 2);
    CHECK(predicted_number_state_zeros(1, 0.1) == 0);
    CHECK(predicted_number_state_zeros(1, 0.25) == 0);  // root exactly at the peak is touched, not crossed
}

TEST_CASE("pure Bell input never dies under thermal fields") {
    for (double beta : {0.05, 0.1, 0.5, 1.0, 2.0})
        for (double nbar : {0.0, 1.0, 2.0, 25.0})
            for (double wt : grid(1001)) {
                const double logc = log_concurrence_closed(BellState::PhiPlus, FieldSpec::thermal(nbar), beta, wt);
                CHECK(std::isfinite(logc));
                const double c = concurrence_closed(BellState::PhiPlus, FieldSpec::thermal(nbar), beta, wt);
                if (logc > -700.0) {
                    CHECK(c > 0.0);
                    CHECK(std::abs(std::log(c) - logc) < 1e-9 * std::max(1.0, std::abs(logc)));
                }
            }
}

TEST_CASE("ESD interval exists exactly when 16 (1 + 2 nbar) beta^2 >= ln 3") {
    for (double beta : {0.02, 0.05, 0.1, 0.25, 0.5})
        for (double nbar : {0.0, 0.5, 1.0, 2.0, 10.0, 25.0}) {
            double lowest = 1.0;
            for (double wt : grid(2001)) lowest = std::min(lowest, esd_concurrence_closed(beta, nbar, wt));
            const bool predicted = 16.0 * (1.0 + 2.0 * nbar) * beta * beta >= std::log(3.0);
            CHECK((lowest == 0.0) == predicted);
        }
}
