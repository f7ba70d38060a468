#include <doctest.h>

#include <cmath>
#include <numbers>

#include "tfa/phase_space.hpp"
#include "tfa/random.hpp"
#include "tfa/stft.hpp"
#include "tfa/wigner.hpp"

#include "oracles.hpp"

using namespace tfa;
constexpr double kPi = std::numbers::pi;

namespace {
int wrapi(int i, int n) {
    int r = i % n;
    return r < 0 ? r + n : r;
}
}  // namespace

TEST_CASE("tf_shift") {
    GridSpec g = make_grid(64, 8.0);
    Rng rng(3);
    SampledSignal f = random_signal(g, rng);

    SampledSignal id = tf_shift(f, 0, 0);
    CHECK((id.samples - f.samples).cwiseAbs().maxCoeff() == 0.0);

    CHECK(l2_norm(tf_shift(f, 11, -7)) == doctest::Approx(l2_norm(f)).epsilon(1e-14));

    // Modulation after translation composes exactly.
    SampledSignal two_step = tf_shift(tf_shift(f, 9, 0), 0, 5);
    SampledSignal one_step = tf_shift(f, 9, 5);
    CHECK((two_step.samples - one_step.samples).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("stft closed form and Moyal identity") {
    GridSpec g = make_grid(64, 8.0);
    SampledSignal gamma = dilated_gaussian(g, 1.0);
    StftMatrix V = stft(gamma, gamma);

    // V(0,0) = 2^{-1/2}; V(1,0) = 2^{-1/2} e^{-pi/2}, both real.
    CHECK(V.values(32, 32).real() == doctest::Approx(std::pow(2.0, -0.5)).epsilon(1e-10));
    CHECK(std::abs(V.values(32, 32).imag()) < 1e-15);
    CHECK(V.values(40, 32).real() ==
          doctest::Approx(std::pow(2.0, -0.5) * std::exp(-kPi / 2)).epsilon(1e-10));

    double maxdev = 0.0;
    for (int m = 0; m < 64; ++m) {
        for (int n = 0; n < 64; ++n) {
            const double x = g.time_node(m), w = g.freq_node(n);
            const cplx ref = std::pow(2.0, -0.5) * std::polar(1.0, -kPi * x * w) *
                             std::exp(-kPi / 2 * (x * x + w * w));
            maxdev = std::max(maxdev, std::abs(V.values(m, n) - ref));
        }
    }
    CHECK(maxdev < 1e-6);

    StftMatrix Z = stft(zero_signal(g), gamma);
    CHECK(Z.values.cwiseAbs().maxCoeff() == 0.0);
    CHECK_THROWS_AS(stft(gamma, zero_signal(g)), std::invalid_argument);

    // Moyal: (dx/L) sum |V_h f|^2 = ||f||^2 ||h||^2 for Schwartz-type inputs.
    Rng rng(5);
    SampledSignal f = random_schwartz_signal(g, rng), h = random_schwartz_signal(g, rng);
    StftMatrix Vfh = stft(f, h);
    const double lhs = g.spacing / g.period * Vfh.values.squaredNorm();
    const double rhs = std::pow(l2_norm(f) * l2_norm(h), 2);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-6));
}

TEST_CASE("stft matches the direct inner-product definition") {
    GridSpec g = make_grid(64, 8.0);
    Rng rng(11);
    SampledSignal f = random_signal(g, rng), win = random_schwartz_signal(g, rng);
    StftMatrix V = stft(f, win);
    // row m, column n hold <f, M T win> at shift counts (m - N/2, n - N/2)
    for (auto [m, n] : {std::pair<int, int>{32, 32}, {0, 17}, {55, 63}, {20, 5}}) {
        const cplx direct = l2_inner(f, tf_shift(win, m - 32, n - 32));
        CHECK(std::abs(V.values(m, n) - direct) < 1e-12);
    }
}

TEST_CASE("cross_wigner values, marginal, realness") {
    GridSpec g = make_grid(128, 12.0);
    SampledSignal phi = gaussian_window(g);
    WignerMatrix W = cross_wigner(phi, phi);

    // Continuum value at the origin: int 2^{1/2} e^{-pi t^2 / 2} dt = 2.
    const double origin =
        oracle::simpson([](double t) { return std::sqrt(2.0) * std::exp(-kPi * t * t / 2); },
                        -12.0, 12.0);
    CHECK(origin == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(W.values(64, 64).real() == doctest::Approx(origin).epsilon(1e-6));

    // Frequency marginal at each time node recovers |phi(t)|^2.
    for (int m : {64, 70, 90}) {
        cplx marg = 0.0;
        for (int n = 0; n < 128; ++n) marg += W.values(m, n);
        marg /= 2.0 * g.period;
        CHECK(std::abs(marg - std::norm(phi.samples[m])) < 1e-6);
    }

    // W(f, f) is real for random complex f.
    Rng rng(13);
    SampledSignal f = random_signal(g, rng);
    WignerMatrix Wf = cross_wigner(f, f);
    CHECK(Wf.values.imag().cwiseAbs().maxCoeff() < 1e-10);

    // dx/(2L)-weighted integral equals ||f||^2 (Schwartz input).
    SampledSignal fs = random_schwartz_signal(g, rng);
    WignerMatrix Ws = cross_wigner(fs, fs);
    CHECK(wigner_integral(Ws).real() ==
          doctest::Approx(l2_norm(fs) * l2_norm(fs)).epsilon(1e-6));

    CHECK_THROWS_AS(cross_wigner(phi, gaussian_window(make_grid(64, 12.0))),
                    std::invalid_argument);
}

TEST_CASE("rotate_zeta") {
    CHECK(rotate_zeta({1.0, 0.0}) == std::pair<double, double>{0.0, -1.0});
    CHECK(rotate_zeta({0.0, 0.0}) == std::pair<double, double>{0.0, 0.0});
    std::pair<double, double> z{0.3, -1.7};
    auto r = rotate_zeta(rotate_zeta(rotate_zeta(rotate_zeta(z))));
    CHECK(r.first == doctest::Approx(z.first));
    CHECK(r.second == doctest::Approx(z.second));
}

TEST_CASE("resample_to_symbol_grid") {
    GridSpec g = make_grid(128, 12.0);
    SampledSignal phi = gaussian_window(g);
    WignerMatrix W = cross_wigner(phi, phi);
    SymbolField S = resample_to_symbol_grid(W);

    // Kept nodes agree with the half-grid values; outer band is zero.
    for (int q = 32; q < 96; ++q) CHECK(S.values(70, q) == W.values(70, 2 * q - 64));
    CHECK(S.values.col(0).cwiseAbs().maxCoeff() == 0.0);
    CHECK(S.values.col(127).cwiseAbs().maxCoeff() == 0.0);

    // A strongly modulated pair pushes content past the half-band edge.
    SampledSignal mod = tf_shift(phi, 0, 40);  // frequency 40/12 = 3.33 > N/(4L)
    CHECK_THROWS_AS(resample_to_symbol_grid(cross_wigner(mod, mod)), std::runtime_error);
}

TEST_CASE("stft2d_at against brute force") {
    GridSpec g = make_grid(16, 4.0);
    Rng rng(17);
    SymbolField F = random_bandlimited_symbol(g, rng);
    SymbolField G = gaussian_symbol_window(g);

    for (auto [mz, nz, f1, f2] : {std::array<int, 4>{0, 0, 0, 0}, {3, 5, 2, -7}, {15, 1, 8, 3}}) {
        cplx brute = 0.0;
        for (int m = 0; m < 16; ++m) {
            for (int n = 0; n < 16; ++n) {
                const double ph = -2.0 * kPi * (double(f1) * (m - 8) + double(f2) * (n - 8)) / 16;
                brute += F.values(m, n) * std::conj(G.values(wrapi(m - mz, 16), wrapi(n - nz, 16))) *
                         std::polar(1.0, ph);
            }
        }
        brute *= g.spacing * g.freq_spacing();
        CHECK(std::abs(stft2d_at(F, G, {mz, nz}, {f1, f2}) - brute) < 1e-10);
    }

    CHECK(std::abs(stft2d_at(zero_symbol(g), G, {1, 2}, {3, 4})) == 0.0);
    // Gaussian window against itself at the origin: positive real.
    const cplx v = stft2d_at(G, G, {0, 0}, {0, 0});
    CHECK(v.real() > 0.0);
    CHECK(std::abs(v.imag()) < 1e-14);
    CHECK_THROWS_AS(stft2d_at(F, zero_symbol(g), {0, 0}, {0, 0}), std::invalid_argument);
}

TEST_CASE("symbol_convolve") {
    GridSpec g = make_grid(64, 8.0);
    Rng rng(19);
    SymbolField a = random_bandlimited_symbol(g, rng);

    // Unit impulse at the origin node is the identity.
    SymbolField d = zero_symbol(g);
    d.values(32, 32) = 1.0 / (g.spacing * g.freq_spacing());
    SymbolField c = symbol_convolve(a, d);
    CHECK((c.values - a.values).cwiseAbs().maxCoeff() < 1e-10);

    // Commutativity on random fields.
    SymbolField b = random_bandlimited_symbol(g, rng);
    SymbolField ab = symbol_convolve(a, b), ba = symbol_convolve(b, a);
    CHECK((ab.values - ba.values).cwiseAbs().maxCoeff() < 1e-10);

    // Gaussian * Gaussian: closed form (u+v)^{-1} e^{-pi r^2 uv/(u+v)} for
    // inputs e^{-pi u r^2}, e^{-pi v r^2} (radial on phase space).
    const double u = 2.0, v = 3.0;
    SymbolField ga = zero_symbol(g), gb = zero_symbol(g);
    for (int m = 0; m < 64; ++m) {
        for (int n = 0; n < 64; ++n) {
            const double r2 = std::pow(g.time_node(m), 2) + std::pow(g.freq_node(n), 2);
            ga.values(m, n) = std::exp(-kPi * u * r2);
            gb.values(m, n) = std::exp(-kPi * v * r2);
        }
    }
    SymbolField gc = symbol_convolve(ga, gb);
    double maxerr = 0.0;
    for (int m = 0; m < 64; ++m) {
        for (int n = 0; n < 64; ++n) {
            const double r2 = std::pow(g.time_node(m), 2) + std::pow(g.freq_node(n), 2);
            const double ref = std::exp(-kPi * r2 * u * v / (u + v)) / (u + v);
            maxerr = std::max(maxerr, std::abs(gc.values(m, n).real() - ref));
        }
    }
    CHECK(maxerr < 1e-8);
}

TEST_CASE("phase-space shift and modulation helpers") {
    GridSpec g = make_grid(32, 6.0);
    Rng rng(23);
    SymbolField F = random_bandlimited_symbol(g, rng);

    SymbolField T = ps_translate(F, 5, -3);
    CHECK(T.values(10, 7) == F.values(5, 10));

    SymbolField M = ps_modulate(F, 2, 4);
    const double ph = 2.0 * kPi * (2.0 * (10 - 16) + 4.0 * (7 - 16)) / 32;
    CHECK(std::abs(M.values(10, 7) - std::polar(1.0, ph) * F.values(10, 7)) < 1e-14);
}
