#include <doctest.h>

#include <cmath>
#include <limits>

#include "tfa/operators.hpp"
#include "tfa/phase_space.hpp"
#include "tfa/random.hpp"
#include "tfa/schatten.hpp"
#include "tfa/stft.hpp"
#include "tfa/wigner.hpp"

using namespace tfa;

namespace {
const double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("localization operator") {
    GridSpec g = make_grid(128, 12.0);
    SampledSignal phi = gaussian_window(g);

    SUBCASE("constant symbol gives the inversion-formula identity") {
        OperatorMatrix A = localization_matrix(constant_symbol(g, 1.0), phi, phi);
        Rng rng(3);
        SampledSignal f = random_schwartz_signal(g, rng);
        SampledSignal Af = apply(A, f);
        CHECK((Af.samples - f.samples).norm() / f.samples.norm() < 1e-3);
    }

    SUBCASE("zero symbol gives the zero matrix") {
        OperatorMatrix A = localization_matrix(zero_symbol(g), phi, phi);
        CHECK(A.m.cwiseAbs().maxCoeff() == 0.0);
    }

    SUBCASE("weak form agrees with the STFT bilinear sum") {
        Rng rng(5);
        SymbolField a = random_bandlimited_symbol(g, rng);
        SampledSignal p1 = random_schwartz_signal(g, rng);
        SampledSignal p2 = random_schwartz_signal(g, rng);
        OperatorMatrix A = localization_matrix(a, p1, p2);
        for (int trial = 0; trial < 3; ++trial) {
            SampledSignal f = random_signal(g, rng), h = random_signal(g, rng);
            const cplx lhs = operator_bilinear(A, f, h);
            StftMatrix V1 = stft(f, p1), V2 = stft(h, p2);
            cplx rhs = 0.0;
            for (int m = 0; m < 128; ++m)
                for (int n = 0; n < 128; ++n)
                    rhs += a.values(m, n) * V1.values(m, n) * std::conj(V2.values(m, n));
            rhs *= g.spacing * g.freq_spacing();
            CHECK(std::abs(lhs - rhs) < 1e-10);
        }
    }

    SUBCASE("rejects zero windows and grid mismatches") {
        CHECK_THROWS_AS(localization_matrix(zero_symbol(g), zero_signal(g), phi),
                        std::invalid_argument);
        GridSpec g2 = make_grid(64, 12.0);
        CHECK_THROWS_AS(localization_matrix(zero_symbol(g), gaussian_window(g2), phi),
                        std::invalid_argument);
    }
}

TEST_CASE("weyl operator") {
    GridSpec g = make_grid(128, 12.0);
    SampledSignal phi = gaussian_window(g);

    SUBCASE("zero symbol") {
        CHECK(weyl_matrix(zero_symbol(g)).m.cwiseAbs().maxCoeff() == 0.0);
    }

    SUBCASE("weak identity holds by construction") {
        Rng rng(7);
        SymbolField sigma = random_bandlimited_symbol(g, rng);
        OperatorMatrix L = weyl_matrix(sigma);
        for (int trial = 0; trial < 20; ++trial) {
            SampledSignal f = random_signal(g, rng), h = random_signal(g, rng);
            const cplx lhs = operator_bilinear(L, f, h);
            const cplx rhs = weyl_weak_pairing(sigma, h, f);
            CHECK(std::abs(lhs - rhs) < 1e-10);
        }
    }

    SUBCASE("real symbols quantize to self-adjoint operators") {
        Rng rng(11);
        SymbolField sigma = random_bandlimited_symbol(g, rng);
        sigma.values = sigma.values.real().cast<cplx>();
        OperatorMatrix L = weyl_matrix(sigma);
        CHECK((L.m - L.m.adjoint()).norm() / L.m.norm() < 1e-10);
    }

    SUBCASE("the Wigner of a window quantizes to its projector") {
        SymbolField sigma = resample_to_symbol_grid(cross_wigner(phi, phi));
        OperatorMatrix L = weyl_matrix(sigma);
        OperatorMatrix P = rank_one(phi);
        CHECK((L.m - P.m).norm() / P.m.norm() < 1e-6);
    }

    SUBCASE("position-axis upsample is exact at even rows") {
        Rng rng(13);
        SymbolField sigma = random_bandlimited_symbol(g, rng);
        Eigen::MatrixXcd up = upsample_position_axis(sigma);
        double maxerr = 0.0;
        for (int m = 0; m < 128; ++m)
            maxerr = std::max(maxerr, (up.row(2 * m) - sigma.values.row(m)).cwiseAbs().maxCoeff());
        CHECK(maxerr < 1e-12);
    }
}

TEST_CASE("rank one operator") {
    GridSpec g = make_grid(64, 8.0);
    SampledSignal phi = gaussian_window(g);

    // dx-normalized spike: single singular value one.
    SampledSignal spike = zero_signal(g);
    spike.samples[20] = 1.0 / std::sqrt(g.spacing);
    SingularSpectrum s = singular_values(rank_one(spike));
    CHECK(s.values[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.values[1] < 1e-12);

    SingularSpectrum sp = singular_values(rank_one(phi));
    CHECK(sp.values[0] == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(sp.numerical_rank() == 1);

    // projector identity T T = ||h||^2 T
    Rng rng(17);
    SampledSignal h = random_signal(g, rng);
    OperatorMatrix T = rank_one(h);
    OperatorMatrix TT = compose(T, T);
    const double nh2 = l2_norm(h) * l2_norm(h);
    CHECK((TT.m - nh2 * T.m).norm() / T.m.norm() < 1e-12);

    CHECK_THROWS_AS(rank_one(zero_signal(g)), std::invalid_argument);
}

TEST_CASE("singular values and schatten norms") {
    GridSpec g = make_grid(64, 8.0);
    const int N = 64;

    SUBCASE("diagonal spectrum is recovered") {
        OperatorMatrix D = zero_operator(g);
        D.m(0, 0) = 4.0 / g.spacing;
        D.m(1, 1) = 3.0 / g.spacing;
        SingularSpectrum s = singular_values(D);
        CHECK(s.values[0] == doctest::Approx(4.0));
        CHECK(s.values[1] == doctest::Approx(3.0));
        CHECK(s.values[2] == doctest::Approx(0.0));

        CHECK(schatten_norm(s, 1.0) == doctest::Approx(7.0));
        CHECK(schatten_norm(s, 2.0) == doctest::Approx(5.0));
        CHECK(schatten_norm(s, kInf) == doctest::Approx(4.0));
        CHECK(schatten_norm(s, 0.5) == doctest::Approx(std::pow(2.0 + std::sqrt(3.0), 2)).epsilon(1e-6));
        CHECK_THROWS_AS(schatten_norm(s, 0.0), std::invalid_argument);
    }

    SUBCASE("unitary invariance and prescribed spectra") {
        Rng rng(19);
        Eigen::VectorXd spec(N);
        for (int i = 0; i < N; ++i) spec[i] = std::exp(-0.2 * i);
        OperatorMatrix T = random_operator_with_spectrum(g, spec, rng);
        SingularSpectrum s = singular_values(T);
        CHECK((s.values - spec).cwiseAbs().maxCoeff() < 1e-10);

        Eigen::MatrixXcd U = random_unitary(N, rng);
        OperatorMatrix UT{g, U * T.m};
        SingularSpectrum s2 = singular_values(UT);
        CHECK((s2.values - spec).cwiseAbs().maxCoeff() < 1e-10);
    }

    SUBCASE("schatten nesting on random operators") {
        Rng rng(23);
        Eigen::VectorXd spec(N);
        for (int i = 0; i < N; ++i) spec[i] = std::abs(rng.normal());
        std::sort(spec.data(), spec.data() + N, std::greater<double>());
        OperatorMatrix T = random_operator_with_spectrum(g, spec, rng);
        const double n_half = schatten_norm(T, 0.5);
        const double n1 = schatten_norm(T, 1.0);
        const double n2 = schatten_norm(T, 2.0);
        const double n4 = schatten_norm(T, 4.0);
        const double ninf = schatten_norm(T, kInf);
        CHECK(ninf <= n4 * (1 + 1e-12));
        CHECK(n4 <= n2 * (1 + 1e-12));
        CHECK(n2 <= n1 * (1 + 1e-12));
        CHECK(n1 <= n_half * (1 + 1e-12));
    }

    SUBCASE("Hilbert-Schmidt consistency with the Frobenius sum") {
        Rng rng(29);
        SymbolField a = random_bandlimited_symbol(g, rng);
        OperatorMatrix A = localization_matrix(a, gaussian_window(g), gaussian_window(g));
        const double s2 = schatten_norm(A, 2.0);
        const double frob = g.spacing * A.m.norm();  // dx^2 sum |M|^2 under the root
        CHECK(s2 * s2 == doctest::Approx(frob * frob).epsilon(1e-8));
    }
}

TEST_CASE("p >= 2 characterization and diagonal bounds over bases") {
    GridSpec g = make_grid(64, 8.0);
    const int N = 64;
    Rng rng(31);
    Eigen::VectorXd spec(N);
    for (int i = 0; i < N; ++i) spec[i] = std::pow(i + 1.0, -1.5);
    OperatorMatrix T = random_operator_with_spectrum(g, spec, rng);

    // p = 2: sum ||T e_n||^2 over any orthonormal basis equals ||T||_{S_2}^2.
    {
        Eigen::MatrixXcd U = random_unitary(N, rng) / std::sqrt(g.spacing);
        double acc = 0.0;
        for (int n = 0; n < N; ++n) {
            SampledSignal e{g, U.col(n)};
            const double v = l2_norm(apply(T, e));
            acc += v * v;
        }
        const double s2 = schatten_norm(T, 2.0);
        CHECK(acc == doctest::Approx(s2 * s2).epsilon(1e-6));
    }

    // p > 2: sum ||T e_n||^p <= ||T||_{S_p}^p over random bases; the singular
    // basis attains the supremum.
    {
        const double p = 4.0;
        const double bound = std::pow(schatten_norm(T, p), p);
        for (int trial = 0; trial < 3; ++trial) {
            Eigen::MatrixXcd U = random_unitary(N, rng) / std::sqrt(g.spacing);
            double acc = 0.0;
            for (int n = 0; n < N; ++n) {
                SampledSignal e{g, U.col(n)};
                acc += std::pow(l2_norm(apply(T, e)), p);
            }
            CHECK(acc <= bound + 1e-8);
        }
        // right singular vectors of dx*M attain equality
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(g.spacing * T.m, Eigen::ComputeThinV);
        Eigen::MatrixXcd V = svd.matrixV() / std::sqrt(g.spacing);
        double acc = 0.0;
        for (int n = 0; n < N; ++n) {
            SampledSignal e{g, V.col(n)};
            acc += std::pow(l2_norm(apply(T, e)), p);
        }
        CHECK(acc == doctest::Approx(bound).epsilon(1e-8));
    }

    // Diagonal bound (sum |<T e_n, e_n>|^p)^{1/p} <= ||T||_{S_p} for p >= 2.
    for (double p : {2.0, 3.0, 6.0}) {
        Eigen::MatrixXcd U = random_unitary(N, rng) / std::sqrt(g.spacing);
        double acc = 0.0;
        for (int n = 0; n < N; ++n) {
            SampledSignal e{g, U.col(n)};
            acc += std::pow(std::abs(l2_inner(apply(T, e), e)), p);
        }
        CHECK(std::pow(acc, 1.0 / p) <= schatten_norm(T, p) + 1e-8);
    }
}

TEST_CASE("weyl assembly against an independent brute-force build") {
    GridSpec g = make_grid(32, 6.0);
    const int N = 32;
    Rng rng(37);
    SymbolField sigma = random_bandlimited_symbol(g, rng);

    // Brute-force midpoint kernel: direct trigonometric interpolation sums.
    Eigen::MatrixXcd K(N, N);
    const double twopi = 2.0 * std::numbers::pi;
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
            int lag = i - j;
            if (lag >= N / 2) lag -= N;
            if (lag < -N / 2) lag += N;
            const double mid = 0.5 * (g.time_node(i) + g.time_node(i - lag));
            cplx acc = 0.0;
            for (int n = 0; n < N; ++n) {
                // column interpolation in x via the centered DFT of the column
                cplx val = 0.0;
                for (int k = 0; k < N; ++k) {
                    cplx hat = 0.0;
                    for (int m = 0; m < N; ++m) {
                        hat += sigma.values(m, n) *
                               std::polar(1.0, -twopi * k * m / N);
                    }
                    int kc = k < N / 2 ? k : k - N;
                    double wgt = (k == N / 2) ? 0.5 : 1.0;  // split Nyquist
                    val += wgt * hat / double(N) *
                           std::polar(1.0, twopi * kc * (mid / g.spacing + N / 2) / N);
                    if (k == N / 2) {  // the +N/2 half of the split bin
                        val += 0.5 * hat / double(N) *
                               std::polar(1.0, twopi * (N / 2) * (mid / g.spacing + N / 2) / N);
                    }
                }
                acc += val * std::polar(1.0, twopi * g.freq_node(n) * lag * g.spacing);
            }
            K(i, j) = acc / g.period;
        }
    }
    OperatorMatrix L = weyl_matrix(sigma);
    CHECK((L.m - K).cwiseAbs().maxCoeff() < 1e-10);
}
