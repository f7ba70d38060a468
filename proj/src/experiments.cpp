#include "tfa/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "tfa/gabor.hpp"
#include "tfa/modulation.hpp"
#include "tfa/operators.hpp"
#include "tfa/phase_space.hpp"
#include "tfa/random.hpp"
#include "tfa/schatten.hpp"
#include "tfa/stft.hpp"
#include "tfa/wigner.hpp"

namespace tfa {

namespace {

constexpr double kPi = std::numbers::pi;

int wrap(int i, int n) {
    int r = i % n;
    return r < 0 ? r + n : r;
}

double parse_extended(const std::string& s) {
    if (s == "inf" || s == "Inf" || s == "INF") return std::numeric_limits<double>::infinity();
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad numeric value '" + s + "'");
    return v;
}

std::string fmt(double v) {
    std::ostringstream os;
    if (std::isinf(v)) {
        os << "inf";
    } else {
        os.precision(10);
        os << v;
    }
    return os.str();
}

double inv(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }

// Conjugate exponent: p' with 1/p + 1/p' = 1 (p >= 1).
double conjugate_exponent(double p) {
    if (std::isinf(p)) return 1.0;
    if (p == 1.0) return std::numeric_limits<double>::infinity();
    return p / (p - 1.0);
}

double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const size_t n = x.size();
    double mx = 0.0, my = 0.0;
    for (size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double num = 0.0, den = 0.0;
    for (size_t i = 0; i < n; ++i) {
        num += (x[i] - mx) * (y[i] - my);
        den += (x[i] - mx) * (x[i] - mx);
    }
    return num / den;
}

SampledSignal signal_from_column(const GridSpec& g, const Eigen::VectorXcd& col) {
    return {g, col};
}

// ---------------------------------------------------------------------------
// check_gaussian_stft
// ---------------------------------------------------------------------------

double stft_closed_form_deviation(const GridSpec& g, bool broken_phase) {
    SampledSignal gamma = dilated_gaussian(g, 1.0);
    StftMatrix V = stft(gamma, gamma);
    const double sign = broken_phase ? 1.0 : -1.0;
    double maxdev = 0.0;
    for (int m = 0; m < g.num_points; ++m) {
        const double x = g.time_node(m);
        for (int n = 0; n < g.num_points; ++n) {
            const double w = g.freq_node(n);
            const cplx ref = std::pow(2.0, -0.5) * std::polar(1.0, sign * kPi * x * w) *
                             std::exp(-0.5 * kPi * (x * x + w * w));
            maxdev = std::max(maxdev, std::abs(V.values(m, n) - ref));
        }
    }
    return maxdev;
}

ExperimentReport run_gaussian_stft(const ExperimentContext& ctx, const ParamMap& params,
                                   const std::vector<ParamSpec>& specs) {
    ExperimentReport rep;
    const int coarse_n = param_int(params, specs[0]);
    const bool negative = param_bool(params, specs[1]);

    const GridSpec g = ctx.grid;
    rep.parameters["n"] = std::to_string(g.num_points);
    rep.parameters["l"] = fmt(g.period);

    const double dev = stft_closed_form_deviation(g, negative);
    rep.add_measure("max_deviation", dev);
    rep.add_target("max_deviation", 0.0, 1e-6, ToleranceKind::abs_err);

    SampledSignal gamma = dilated_gaussian(g, 1.0);
    StftMatrix V = stft(gamma, gamma);
    rep.add_measure("origin_value", V.values(g.num_points / 2, g.num_points / 2).real());
    rep.add_target("origin_value", std::pow(2.0, -0.5), 1e-9, ToleranceKind::abs_err);

    rep.add_measure("coarse_deviation",
                    stft_closed_form_deviation(make_grid(coarse_n, g.period), false));
    rep.add_target("coarse_deviation", 0.0, 0.0, ToleranceKind::report_only);

    const double broken = stft_closed_form_deviation(g, !negative);
    rep.add_measure("negative_control_deviation", broken);
    rep.add_target("negative_control_deviation", 1e-6, 0.0, ToleranceKind::lower);

    rep.notes = "closed-form Gaussian STFT reproduced on the full grid; "
                "negative control flips the phase sign";
    return rep;
}

// ---------------------------------------------------------------------------
// check_covariance
// ---------------------------------------------------------------------------

ExperimentReport run_covariance(const ExperimentContext& ctx, const ParamMap& params,
                                const std::vector<ParamSpec>& specs) {
    ExperimentReport rep;
    const int instances = param_int(params, specs[0]);
    const bool negative = param_bool(params, specs[1]);
    const GridSpec g = ctx.grid;
    const int N = g.num_points;
    rep.parameters["instances"] = std::to_string(instances);

    Rng rng(derive_seed(ctx.seed, "covariance"));
    double err4 = 0.0, err5 = 0.0, errbo = 0.0, err_zero = 0.0, err_broken = 0.0;
    for (int it = 0; it < instances; ++it) {
        SampledSignal f = random_signal(g, rng), h = random_signal(g, rng);
        SampledSignal p1 = random_signal(g, rng), p2 = random_signal(g, rng);
        const int z1 = rng.uniform_int(-N / 2, N / 2 - 1), z2 = rng.uniform_int(-N / 2, N / 2 - 1);
        const int c1 = rng.uniform_int(-N / 2, N / 2 - 1), c2 = rng.uniform_int(-N / 2, N / 2 - 1);
        const int off = negative ? 1 : 0;

        StftMatrix A1 = stft(f, p1), A2 = stft(h, p2);
        SymbolField P{g, A1.values.conjugate().cwiseProduct(A2.values)};

        // (i) T_z(conj(V1 f) V2 h) = conj(V1 Sz f) V2 Sz h with Sz = M_{z2} T_{z1}
        {
            SymbolField lhs = ps_translate(P, z1, z2);
            StftMatrix B1 = stft(tf_shift(f, z1 + off, z2), p1);
            StftMatrix B2 = stft(tf_shift(h, z1 + off, z2), p2);
            double& sink = negative ? err_broken : err4;
            sink = std::max(
                sink, (lhs.values - B1.values.conjugate().cwiseProduct(B2.values)).cwiseAbs().maxCoeff());
        }
        // (ii) M_zeta(conj(V1 f) V2 h) = conj(V1 f) V_{tw p2}(tw h), tw = M_{zeta1} T_{-zeta2}
        {
            SymbolField lhs = ps_modulate(P, c1, c2);
            StftMatrix B2 = stft(tf_shift(h, -c2, c1), tf_shift(p2, -c2, c1));
            err5 = std::max(
                err5, (lhs.values - A1.values.conjugate().cwiseProduct(B2.values)).cwiseAbs().maxCoeff());
        }
        // (iii) composition of (i) then (ii)
        {
            SymbolField lhs = ps_modulate(ps_translate(P, z1, z2), c1, c2);
            SampledSignal sf = tf_shift(f, z1, z2);
            SampledSignal sh = tf_shift(tf_shift(h, z1, z2), -c2, c1);
            StftMatrix B1 = stft(sf, p1);
            StftMatrix B2 = stft(sh, tf_shift(p2, -c2, c1));
            errbo = std::max(
                errbo, (lhs.values - B1.values.conjugate().cwiseProduct(B2.values)).cwiseAbs().maxCoeff());
        }
        // z = zeta = 0 degenerate case
        {
            StftMatrix B1 = stft(tf_shift(f, 0, 0), p1);
            StftMatrix B2 = stft(tf_shift(h, 0, 0), p2);
            err_zero = std::max(
                err_zero, (P.values - B1.values.conjugate().cwiseProduct(B2.values)).cwiseAbs().maxCoeff());
        }
    }

    if (!negative) {
        // dedicated broken instance: off-by-one node in the translation
        Rng rb(derive_seed(ctx.seed, "covariance-negative"));
        SampledSignal f = random_signal(g, rb), h = random_signal(g, rb);
        SampledSignal p1 = random_signal(g, rb), p2 = random_signal(g, rb);
        StftMatrix A1 = stft(f, p1), A2 = stft(h, p2);
        SymbolField P{g, A1.values.conjugate().cwiseProduct(A2.values)};
        SymbolField lhs = ps_translate(P, 5, 9);
        StftMatrix B1 = stft(tf_shift(f, 6, 9), p1);
        StftMatrix B2 = stft(tf_shift(h, 6, 9), p2);
        err_broken =
            (lhs.values - B1.values.conjugate().cwiseProduct(B2.values)).cwiseAbs().maxCoeff();
    }

    rep.add_measure("max_error_translation", negative ? err_broken : err4);
    rep.add_target("max_error_translation", 0.0, 1e-10, ToleranceKind::abs_err);
    rep.add_measure("max_error_modulation", err5);
    rep.add_target("max_error_modulation", 0.0, 1e-10, ToleranceKind::abs_err);
    rep.add_measure("max_error_joint", errbo);
    rep.add_target("max_error_joint", 0.0, 1e-10, ToleranceKind::abs_err);
    rep.add_measure("max_error_zero_shift", err_zero);
    rep.add_target("max_error_zero_shift", 0.0, 1e-10, ToleranceKind::abs_err);
    rep.add_measure("negative_control_error", err_broken);
    rep.add_target("negative_control_error", 1e-6, 0.0, ToleranceKind::lower);
    rep.notes = "shift and modulation covariance of STFT products on grid-aligned points; "
                "joint form composes the translation and modulation identities";
    return rep;
}

// ---------------------------------------------------------------------------
// check_wigner_stft_identity
// ---------------------------------------------------------------------------

struct MagicStats {
    double max_rel = 0.0;
    long tested = 0;
};

MagicStats magic_formula_error(const GridSpec& g, const Lattice& lat, const SampledSignal& f1,
                               const SampledSignal& f2, const SampledSignal& win,
                               bool wrong_rotation, double floor) {
    const int N = g.num_points;
    const int a = lat.a_step, b = lat.b_step;
    SymbolField Wf = resample_to_symbol_grid(cross_wigner(f1, f2));
    SymbolField Phi = resample_to_symbol_grid(cross_wigner(win, win));
    GaborSystem2D sys2 = make_gabor_system_2d(Phi, lat);
    CoefficientArray c = gabor_coefficients_2d(Wf, sys2);
    StftMatrix V1 = stft(f1, win), V2 = stft(f2, win);

    MagicStats st;
    for (int k1 = 0; k1 < N / a; ++k1) {
        for (int k2 = 0; k2 < N / b; ++k2) {
            for (int n1 = 0; n1 < N / b; ++n1) {
                for (int n2 = 0; n2 < N / a; ++n2) {
                    // zeta~ = (zeta_2, -zeta_1). Halving a lattice frequency is
                    // only well-defined for its centered representative (bins
                    // past N/2 alias to negative frequencies). The exact
                    // Nyquist bin carries +-N/(2L) coherently and has no single
                    // representative, so it is not compared; odd centered bins
                    // would leave the grid when halved and are skipped too.
                    const int bin1 = b * n1, bin2 = a * n2;
                    if (bin1 == N / 2 || bin2 == N / 2) continue;
                    const int c1 = bin1 < N / 2 ? bin1 : bin1 - N;
                    const int c2 = bin2 < N / 2 ? bin2 : bin2 - N;
                    if (c1 % 2 != 0 || c2 % 2 != 0) continue;
                    int sx = c2 / 2, sw = c1 / 2;
                    if (wrong_rotation) {
                        sx = -sx;
                        sw = -sw;
                    }
                    const double lhs = std::abs(c.at4(k1, k2, n1, n2));
                    const double r2 = std::abs(
                        V2.values(wrap(N / 2 + a * k1 + sx, N), wrap(N / 2 + b * k2 - sw, N)));
                    const double r1 = std::abs(
                        V1.values(wrap(N / 2 + a * k1 - sx, N), wrap(N / 2 + b * k2 + sw, N)));
                    const double rhs = r1 * r2;
                    if (lhs > floor && rhs > floor) {
                        ++st.tested;
                        st.max_rel = std::max(st.max_rel, std::abs(lhs - rhs) / std::max(lhs, rhs));
                    }
                }
            }
        }
    }
    return st;
}

ExperimentReport run_wigner_stft_identity(const ExperimentContext& ctx, const ParamMap& params,
                                          const std::vector<ParamSpec>& specs) {
    ExperimentReport rep;
    const double floor = param_double(params, specs[0]);
    const bool negative = param_bool(params, specs[1]);
    const GridSpec g = ctx.grid;
    const Lattice lat = ctx.lattice;
    rep.parameters["magnitude_floor"] = fmt(floor);

    SampledSignal gamma = dilated_gaussian(g, 1.0);
    SampledSignal h1 = hermite_function(g, 1), h2 = hermite_function(g, 2);

    double max_rel = 0.0;
    long total = 0;
    const std::vector<std::pair<SampledSignal, SampledSignal>> pairs = {
        {gamma, gamma}, {gamma, h1}, {h1, h2}, {h2, h2}};
    for (const auto& [f1, f2] : pairs) {
        MagicStats st = magic_formula_error(g, lat, f1, f2, gamma, negative, floor);
        max_rel = std::max(max_rel, st.max_rel);
        total += st.tested;
    }
    rep.add_measure("max_relative_error", max_rel);
    rep.add_target("max_relative_error", 1e-4, 0.0, ToleranceKind::upper);
    rep.add_measure("points_tested", double(total));
    rep.add_target("points_tested", 1000.0, 0.0, ToleranceKind::lower);

    // Gaussian pair at the origin: both sides equal 1/2.
    {
        SymbolField Wg = resample_to_symbol_grid(cross_wigner(gamma, gamma));
        GaborSystem2D sys2 = make_gabor_system_2d(Wg, lat);
        CoefficientArray cg = gabor_coefficients_2d(Wg, sys2);
        rep.add_measure("gaussian_origin_value", std::abs(cg.at4(0, 0, 0, 0)));
        rep.add_target("gaussian_origin_value", 0.5, 1e-6, ToleranceKind::abs_err);
    }

    // f2 = 0 degenerate case.
    {
        SymbolField Wz = resample_to_symbol_grid(cross_wigner(gamma, zero_signal(g)));
        rep.add_measure("zero_signal_mass", Wz.values.cwiseAbs().maxCoeff());
        rep.add_target("zero_signal_mass", 0.0, 1e-15, ToleranceKind::abs_err);
    }

    MagicStats bad = magic_formula_error(g, lat, h1, h2, gamma, !negative, floor);
    rep.add_measure("negative_control_error", bad.max_rel);
    rep.add_target("negative_control_error", 1e-2, 0.0, ToleranceKind::lower);

    rep.notes = "2-D STFT of a cross-Wigner function against the product of shifted STFT "
                "magnitudes at lattice points; negative control reverses the coordinate rotation";
    return rep;
}

// ---------------------------------------------------------------------------
// check_weyl_localization_link
// ---------------------------------------------------------------------------

double weyl_link_distance(const GridSpec& g, const SymbolField& a, bool skip_convolution) {
    SampledSignal phi = gaussian_window(g);
    OperatorMatrix A = localization_matrix(a, phi, phi);
    SymbolField sigma =
        skip_convolution ? a : symbol_convolve(a, resample_to_symbol_grid(cross_wigner(phi, phi)));
    OperatorMatrix Lw = weyl_matrix(sigma);
    const double den = schatten_norm(A, 2.0);
    return den > 0.0 ? schatten_norm(A - Lw, 2.0) / den : 0.0;
}

ExperimentReport run_weyl_localization_link(const ExperimentContext& ctx, const ParamMap& params,
                                            const std::vector<ParamSpec>& specs) {
    ExperimentReport rep;
    const int n_symbols = param_int(params, specs[0]);
    const bool negative = param_bool(params, specs[1]);
    rep.parameters["symbols"] = std::to_string(n_symbols);
    rep.parameters["grids"] = "32x5 64x8 128x12";

    const std::vector<std::pair<int, double>> levels = {{32, 5.0}, {64, 8.0}, {128, 12.0}};
    SymbolBand band;
    band.freq_x = 0.8;
    band.freq_w = 0.8;
    band.env_x = 2.2;
    band.env_w = 1.2;

    std::vector<double> max_dist(levels.size(), 0.0);
    std::ostringstream notes;
    for (size_t li = 0; li < levels.size(); ++li) {
        const GridSpec g = make_grid(levels[li].first, levels[li].second);
        for (int sidx = 0; sidx < n_symbols; ++sidx) {
            SymbolField a;
            if (sidx == 0) {
                a = gaussian_symbol_window(g);  // deterministic member of the family
            } else {
                Rng rs(derive_seed(ctx.seed, "weyl-link-symbol-" + std::to_string(sidx)));
                a = random_bandlimited_symbol(g, rs, band);
            }
            max_dist[li] = std::max(max_dist[li], weyl_link_distance(g, a, negative));
        }
        notes << "N=" << levels[li].first << " max_rel_s2=" << max_dist[li] << "; ";
    }

    rep.add_measure("distance_n128", max_dist[2]);
    rep.add_target("distance_n128", 1e-2, 0.0, ToleranceKind::upper);
    rep.add_measure("decrease_32_to_64", max_dist[0] - max_dist[1]);
    rep.add_target("decrease_32_to_64", 1e-15, 0.0, ToleranceKind::lower);
    rep.add_measure("decrease_64_to_128", max_dist[1] - max_dist[2]);
    rep.add_target("decrease_64_to_128", 1e-15, 0.0, ToleranceKind::lower);

    const GridSpec g128 = make_grid(128, 12.0);
    Rng rs(derive_seed(ctx.seed, "weyl-link-symbol-1"));
    const double broken = weyl_link_distance(g128, random_bandlimited_symbol(g128, rs, band), true);
    rep.add_measure("negative_control_distance", broken);
    rep.add_target("negative_control_distance", 0.1, 0.0, ToleranceKind::lower);

    rep.notes =
        notes.str() + "negative control quantizes the raw symbol without the Wigner convolution";
    return rep;
}

// ---------------------------------------------------------------------------
// check_gaussian_scaling
// ---------------------------------------------------------------------------

ExperimentReport run_gaussian_scaling(const ExperimentContext& ctx, const ParamMap& params,
                                      const std::vector<ParamSpec>& specs) {
    ExperimentReport rep;
    const double r = param_double(params, specs[0]);
    const double s = param_double(params, specs[1]);
    (void)ctx;
    if (!(r > 0.0) || !(s > 0.0)) {
        throw std::invalid_argument("r, s must be positive");
    }
    rep.parameters["r"] = fmt(r);
    rep.parameters["s"] = fmt(s);

    const GridSpec g = make_grid(256, 12.0);
    rep.parameters["grid"] = "256x12";
    const Lattice lat = default_lattice(g);
    GaborSystem sys = make_gabor_system(gaussian_window(g), lat);

    const std::vector<double> lambdas = {4.0, 8.0, 16.0, 32.0};
    for (double lam : lambdas) {
        // the time-side decay guard sits in dilated_gaussian; frequency side here
        const double nyq = g.nyquist();
        if (std::exp(-kPi * nyq * nyq / lam) > 1e-4) {
            throw std::invalid_argument("lambda " + fmt(lam) +
                                        " outside the aliasing guard at this grid");
        }
    }

    // log-norm = E log(lambda) - cc log(1 + 1/lambda) + const with
    // cc = (1/2)(1 - 1/s - 1/r); the transient term is divided out before the
    // fit so the least-squares slope estimates the large-lambda exponent E.
    const double cc = 0.5 * (1.0 - inv(s) - inv(r));
    std::vector<double> lx, ly_corr, ly_raw;
    for (double lam : lambdas) {
        SampledSignal fl = dilated_gaussian(g, lam);
        const double nrm = mod_norm_signal(fl, r, s, Weight::flat(), sys);
        lx.push_back(std::log(lam));
        ly_raw.push_back(std::log(nrm));
        ly_corr.push_back(std::log(nrm) + cc * std::log((lam + 1.0) / lam));
    }
    const double slope = ls_slope(lx, ly_corr);
    const double raw_slope = ls_slope(lx, ly_raw);
    const double target = -1.0 / (2.0 * r) - cc;

    rep.add_measure("fitted_slope", slope);
    const double tol = std::abs(target) < 1e-12 ? 0.02 : 0.07 * std::abs(target);
    rep.add_target("fitted_slope", target, tol, ToleranceKind::abs_err);
    rep.add_measure("raw_slope", raw_slope);
    rep.add_target("raw_slope", 0.0, 0.0, ToleranceKind::report_only);
    rep.notes = "slope of log-norm against log-lambda after dividing out the finite-lambda "
                "(lambda+1) transient of the dilated-Gaussian norm model";
    return rep;
}

// ---------------------------------------------------------------------------
// check_schatten_sufficiency
// ---------------------------------------------------------------------------

struct SuffGridData {
    GridSpec grid;
    Lattice lattice{};
    GaborSystem norm_sys;    // 1-D norming system (Gaussian window)
    GaborSystem2D norm_sys2; // 2-D norming system (Gaussian window)
    std::vector<SymbolField> symbols;
    std::vector<CoefficientArray> symbol_coeffs;  // cached 4-D arrays
};

SuffGridData make_suff_grid(int n, double l, std::uint64_t seed, int n_symbols) {
    SuffGridData d;
    d.grid = make_grid(n, l);
    d.lattice = default_lattice(d.grid);
    d.norm_sys = make_gabor_system(gaussian_window(d.grid), d.lattice);
    frame_bounds(d.norm_sys);
    d.norm_sys2 = make_gabor_system_2d(gaussian_symbol_window(d.grid), d.lattice);
    for (int i = 0; i < n_symbols; ++i) {
        Rng rs(derive_seed(seed, "suff-symbol-" + std::to_string(i)));
        d.symbols.push_back(random_bandlimited_symbol(d.grid, rs));
        d.symbol_coeffs.push_back(gabor_coefficients_2d(d.symbols.back(), d.norm_sys2));
    }
    return d;
}

// Case-dependent right-hand side of the sufficiency estimate.
double sufficiency_rhs(const SuffGridData& d, const CoefficientArray& symbol_coeffs, double p,
                       double s, const SampledSignal& w1, const SampledSignal& w2) {
    const double a_norm = mixed_norm(symbol_coeffs, p, std::numeric_limits<double>::infinity(),
                                     Weight::one_otimes_vs(-s));
    double w1_norm, w2_norm;
    if (p < 1.0) {
        w1_norm = mod_norm_signal(w1, p, p, Weight::vs(s), d.norm_sys);
        w2_norm = mod_norm_signal(w2, p, p, Weight::vs(s), d.norm_sys);
    } else if (p <= 2.0) {
        w1_norm = mod_norm_signal(w1, 1.0, 1.0, Weight::vs(s), d.norm_sys);
        w2_norm = mod_norm_signal(w2, p, p, Weight::vs(s), d.norm_sys);
    } else {
        const double pc = conjugate_exponent(p);
        w1_norm = mod_norm_signal(w1, 1.0, 1.0, Weight::vs(s), d.norm_sys);
        w2_norm = mod_norm_signal(w2, pc, pc, Weight::vs(s), d.norm_sys);
    }
    return a_norm * w1_norm * w2_norm;
}

ExperimentReport run_schatten_sufficiency(const ExperimentContext& ctx, const ParamMap& params,
                                          const std::vector<ParamSpec>& specs) {
    ExperimentReport rep;
    const double p = param_double(params, specs[0]);
    const double s = param_double(params, specs[1]);
    const int n_symbols = param_int(params, specs[2]);
    if (!(p > 0.0)) throw std::invalid_argument("p must be positive");
    if (s < 0.0) throw std::invalid_argument("s must be nonnegative");
    rep.parameters["p"] = fmt(p);
    rep.parameters["s"] = fmt(s);
    rep.parameters["grids"] = "64x12 128x12";

    std::vector<double> max_ratio_by_grid;
    RatioStatistic loc_ratios, weyl_ratios;
    for (int n : {64, 128}) {
        SuffGridData d = make_suff_grid(n, 12.0, ctx.seed, n_symbols);
        SampledSignal phi = gaussian_window(d.grid);
        SampledSignal h1 = hermite_function(d.grid, 1);
        SampledSignal modg = tf_shift(phi, 0, 5);  // modulation at frequency 5/L
        const std::vector<std::pair<SampledSignal, SampledSignal>> pairs = {
            {phi, phi}, {h1, phi}, {modg, h1}};

        double grid_max = 0.0;
        for (int i = 0; i < n_symbols; ++i) {
            for (const auto& [w1, w2] : pairs) {
                OperatorMatrix A = localization_matrix(d.symbols[i], w1, w2);
                const double lhs = schatten_norm(A, p);
                const double rhs = sufficiency_rhs(d, d.symbol_coeffs[i], p, s, w1, w2);
                if (rhs > 0.0) {
                    const double ratio = lhs / rhs;
                    if (n == 128) loc_ratios.absorb(ratio);
                    grid_max = std::max(grid_max, ratio);
                }
            }
            // Weyl-side estimate: ||L_sigma||_{S_p} against the M^p (p <= 2)
            // or M^{p,p'} (p >= 2) norm of the symbol.
            if (n == 128) {
                OperatorMatrix Lw = weyl_matrix(d.symbols[i]);
                const double lhs = schatten_norm(Lw, p);
                const double q_out = p <= 2.0 ? p : conjugate_exponent(p);
                const double rhs = mixed_norm(d.symbol_coeffs[i], p, q_out, Weight::flat());
                if (rhs > 0.0) weyl_ratios.absorb(lhs / rhs);
            }
        }
        max_ratio_by_grid.push_back(grid_max);
    }

    rep.add_measure("ratio_spread", loc_ratios.spread());
    rep.add_target("ratio_spread", 50.0, 0.0, ToleranceKind::upper);
    rep.add_measure("max_ratio", loc_ratios.max_ratio);
    rep.add_target("max_ratio", 0.0, 0.0, ToleranceKind::report_only);
    const double drift =
        max_ratio_by_grid[0] > 0.0
            ? std::abs(max_ratio_by_grid[1] - max_ratio_by_grid[0]) / max_ratio_by_grid[0]
            : 0.0;
    rep.add_measure("max_ratio_drift", drift);
    rep.add_target("max_ratio_drift", 0.2, 0.0, ToleranceKind::upper);
    rep.add_measure("weyl_ratio_spread", weyl_ratios.spread());
    rep.add_target("weyl_ratio_spread", 50.0, 0.0, ToleranceKind::upper);

    std::ostringstream notes;
    notes << "localization ratios over " << n_symbols << " symbols x 3 window pairs: ["
          << loc_ratios.min_ratio << ", " << loc_ratios.max_ratio << "]; weyl ratios: ["
          << weyl_ratios.min_ratio << ", " << weyl_ratios.max_ratio << "]";
    rep.notes = notes.str();
    return rep;
}

// ---------------------------------------------------------------------------
// check_counterexample
// ---------------------------------------------------------------------------

ExperimentReport run_counterexample(const ExperimentContext& ctx, const ParamMap& params,
                                    const std::vector<ParamSpec>& specs) {
    ExperimentReport rep;
    const double p = param_double(params, specs[0]);
    const int n_trunc = param_int(params, specs[1]);
    if (!(p > 0.0) || p >= 2.0) {
        throw std::invalid_argument("requires 0 < p < 2");
    }
    rep.parameters["p"] = fmt(p);
    rep.parameters["n_trunc"] = std::to_string(n_trunc);
    const GridSpec g = ctx.grid;
    if (n_trunc > g.num_points / 2 || n_trunc < 8) {
        throw std::invalid_argument("n_trunc out of range [8, N/2]");
    }

    const Eigen::MatrixXcd Q = hermite_onb(g, n_trunc);
    auto coeff = [](int n) { return 1.0 / (std::sqrt(double(n)) * std::log(double(n) + 1.0)); };

    std::vector<int> ms;
    for (int m = 4; m <= n_trunc; m *= 2) ms.push_back(m);

    // h_M and the measured partial sums P_M = sum_{n<=M} ||T phi_n||^p with
    // T = <., h_M> h_M, computed by applying the assembled operator.
    std::vector<double> pm(ms.size()), hm2(ms.size()), pm2(ms.size());
    for (size_t mi = 0; mi < ms.size(); ++mi) {
        const int M = ms[mi];
        Eigen::VectorXcd h = Eigen::VectorXcd::Zero(g.num_points);
        for (int n = 1; n <= M; ++n) h += coeff(n) * Q.col(n - 1);
        SampledSignal hs = signal_from_column(g, h);
        OperatorMatrix T = rank_one(hs);
        double acc = 0.0, acc2 = 0.0;
        for (int n = 1; n <= M; ++n) {
            SampledSignal tphi = apply(T, signal_from_column(g, Q.col(n - 1)));
            const double nn = l2_norm(tphi);
            acc += std::pow(nn, p);
            acc2 += nn * nn;
        }
        pm[mi] = acc;
        pm2[mi] = acc2;
        hm2[mi] = l2_norm(hs) * l2_norm(hs);
    }

    // Summation oracle S_M = sum_{n<=M} c_n^p, independent of the operator path.
    auto oracle_sum = [&](int M, double pw) {
        double acc = 0.0;
        for (int n = 1; n <= M; ++n) acc += std::pow(coeff(n), pw);
        return acc;
    };

    double min_increase = 1e300, max_ratio_err = 0.0;
    for (size_t mi = 1; mi < ms.size(); ++mi) {
        min_increase = std::min(min_increase, pm[mi] - pm[mi - 1]);
        const double measured_ratio = pm[mi] / pm[mi - 1];
        const double oracle_ratio = oracle_sum(ms[mi], p) / oracle_sum(ms[mi - 1], p);
        max_ratio_err = std::max(max_ratio_err, std::abs(measured_ratio / oracle_ratio - 1.0));
    }
    rep.add_measure("min_partial_sum_increase", min_increase);
    rep.add_target("min_partial_sum_increase", 1e-12, 0.0, ToleranceKind::lower);
    rep.add_measure("max_growth_ratio_error", max_ratio_err);
    rep.add_target("max_growth_ratio_error", 0.05, 0.0, ToleranceKind::upper);

    // ||T||_{S_p} = ||h_M||^2 for every p (rank one); the norm sequence
    // converges, with per-term increment ||h_M||^2 - ||h_{M-1}||^2 at the top.
    {
        const int mtop = ms.back();
        Eigen::VectorXcd h = Eigen::VectorXcd::Zero(g.num_points);
        for (int n = 1; n < mtop; ++n) h += coeff(n) * Q.col(n - 1);
        const double prev = std::pow(l2_norm(signal_from_column(g, h)), 2);
        rep.add_measure("norm_increment_at_top", hm2.back() - prev);
        rep.add_target("norm_increment_at_top", 1e-3, 0.0, ToleranceKind::upper);
    }
    {
        Eigen::VectorXcd h = Eigen::VectorXcd::Zero(g.num_points);
        for (int n = 1; n <= ms.back(); ++n) h += coeff(n) * Q.col(n - 1);
        OperatorMatrix T = rank_one(signal_from_column(g, h));
        // Quasi-norm sums keep the SVD noise tail (values ~1e-16 s1), which
        // enters amplified by the power 1/p; tolerate that floor.
        rep.add_measure("schatten_vs_h_norm_error", std::abs(schatten_norm(T, p) - hm2.back()));
        rep.add_target("schatten_vs_h_norm_error", 0.0, p < 1.0 ? 1e-5 : 1e-10,
                       ToleranceKind::abs_err);
    }

    // Equality case at p = 2: P_M = ||h_M||^4 exactly.
    double eq_err = 0.0;
    for (size_t mi = 0; mi < ms.size(); ++mi) {
        eq_err = std::max(eq_err, std::abs(pm2[mi] - hm2[mi] * hm2[mi]));
    }
    rep.add_measure("p2_equality_error", eq_err);
    rep.add_target("p2_equality_error", 0.0, 1e-10, ToleranceKind::abs_err);

    // Frozen small-case identity: P_4 at p = 1 equals ||h_4|| * sum_{n<=4} c_n.
    if (std::abs(p - 1.0) < 1e-12) {
        const double expected = std::sqrt(hm2[0]) * oracle_sum(4, 1.0);
        rep.add_measure("p1_m4_vs_formula", std::abs(pm[0] - expected));
        rep.add_target("p1_m4_vs_formula", 0.0, 1e-10, ToleranceKind::abs_err);
    }

    std::ostringstream notes;
    notes.precision(6);
    notes << "P_M at M={";
    for (size_t mi = 0; mi < ms.size(); ++mi) notes << (mi ? "," : "") << ms[mi];
    notes << "}: ";
    for (size_t mi = 0; mi < ms.size(); ++mi) notes << (mi ? ", " : "") << pm[mi];
    notes << "; ||h_M||^2: ";
    for (size_t mi = 0; mi < ms.size(); ++mi) notes << (mi ? ", " : "") << hm2[mi];
    rep.notes = notes.str();
    return rep;
}

// ---------------------------------------------------------------------------
// check_frame_bessel
// ---------------------------------------------------------------------------

ExperimentReport run_frame_bessel(const ExperimentContext& ctx, const ParamMap& params,
                                  const std::vector<ParamSpec>& specs) {
    ExperimentReport rep;
    const double p = param_double(params, specs[0]);
    const int n_ops = param_int(params, specs[1]);
    const int n_signals = param_int(params, specs[2]);
    if (p < 1.0) {
        throw std::invalid_argument("p must be >= 1 for the asserted bound");
    }
    rep.parameters["p"] = fmt(p);

    const GridSpec g = ctx.grid;
    const int N = g.num_points;
    GaborSystem sys = make_gabor_system(gaussian_window(g), ctx.lattice);
    const FrameBounds fb = frame_bounds(sys);
    rep.add_measure("lower_bound", fb.lower);
    rep.add_target("lower_bound", 1e-12, 0.0, ToleranceKind::lower);
    rep.add_measure("upper_bound", fb.upper);
    rep.add_target("upper_bound", 0.0, 0.0, ToleranceKind::report_only);

    const int a = ctx.lattice.a_step, b = ctx.lattice.b_step;
    std::vector<SampledSignal> atoms;
    for (int k = 0; k < N / a; ++k)
        for (int n = 0; n < N / b; ++n) atoms.push_back(tf_shift(sys.window, a * k, b * n));

    // Uniform member bound ||b_j||^2 <= B.
    double max_member = 0.0;
    for (const auto& at : atoms) max_member = std::max(max_member, l2_norm(at) * l2_norm(at));
    rep.add_measure("member_bound_excess", max_member - fb.upper);
    rep.add_target("member_bound_excess", 0.0, 1e-10, ToleranceKind::upper);

    // Frame sandwich on random signals, relative slack.
    Rng rng(derive_seed(ctx.seed, "frame-bessel"));
    double max_violation = 0.0;
    for (int i = 0; i < n_signals; ++i) {
        SampledSignal f = random_signal(g, rng);
        const double nf2 = l2_norm(f) * l2_norm(f);
        double energy = 0.0;
        for (const auto& at : atoms) energy += std::norm(l2_inner(f, at));
        max_violation = std::max(max_violation, (fb.lower * nf2 - energy) / (fb.lower * nf2));
        max_violation = std::max(max_violation, (energy - fb.upper * nf2) / (fb.upper * nf2));
    }
    rep.add_measure("max_sandwich_violation", max_violation);
    rep.add_target("max_sandwich_violation", 0.0, 1e-8, ToleranceKind::upper);

    // Diagonal and twisted-diagonal bounds over prescribed-spectrum operators.
    double max_lemma = 0.0, max_corollary = 0.0, max_sub1 = 0.0;
    const double p_small = 0.5;
    const int lshift_k = rng.uniform_int(0, N - 1), lshift_n = rng.uniform_int(0, N - 1);
    for (int t = 0; t < n_ops; ++t) {
        Eigen::VectorXd spec(N);
        const double decay = rng.uniform(1.2, 2.5);
        for (int i = 0; i < N; ++i) spec[i] = std::pow(i + 1.0, -decay);
        OperatorMatrix T = random_operator_with_spectrum(g, spec, rng);
        const double tp = schatten_norm({spec}, p);
        const double tp_small = schatten_norm({spec}, p_small);

        double diag = 0.0, twisted = 0.0, diag_small = 0.0;
        for (const auto& at : atoms) {
            SampledSignal Tb = apply(T, at);
            const double d = std::abs(l2_inner(Tb, at));
            diag += std::pow(d, p);
            diag_small += std::pow(d, p_small);
            twisted += std::pow(std::abs(l2_inner(Tb, tf_shift(at, lshift_k, lshift_n))), p);
        }
        max_lemma = std::max(max_lemma, std::pow(diag, 1.0 / p) / (fb.upper * tp));
        max_corollary = std::max(max_corollary, std::pow(twisted, 1.0 / p) / (fb.upper * tp));
        max_sub1 = std::max(max_sub1, std::pow(diag_small, 1.0 / p_small) / (fb.upper * tp_small));
    }
    rep.add_measure("diagonal_bound_ratio", max_lemma);
    rep.add_target("diagonal_bound_ratio", 1.0, 1e-8, ToleranceKind::upper);
    rep.add_measure("twisted_bound_ratio", max_corollary);
    rep.add_target("twisted_bound_ratio", 1.0, 1e-8, ToleranceKind::upper);
    rep.add_measure("subunit_p_ratio", max_sub1);
    rep.add_target("subunit_p_ratio", 0.0, 0.0, ToleranceKind::report_only);

    // T = 0 degenerate case.
    {
        OperatorMatrix Tz = zero_operator(g);
        double diag = 0.0;
        for (const auto& at : atoms) diag += std::pow(std::abs(l2_inner(apply(Tz, at), at)), p);
        rep.add_measure("zero_operator_sum", diag);
        rep.add_target("zero_operator_sum", 0.0, 1e-15, ToleranceKind::abs_err);
    }

    // Negative control: the top frame eigenvector saturates the upper frame
    // bound, so testing against 0.9 B must report a violation.
    {
        Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(N, N);
        for (const auto& at : atoms) S.noalias() += at.samples * at.samples.adjoint();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(g.spacing * S);
        SampledSignal top = signal_from_column(g, eig.eigenvectors().col(N - 1));
        double energy = 0.0;
        for (const auto& at : atoms) energy += std::norm(l2_inner(top, at));
        const double nf2 = l2_norm(top) * l2_norm(top);
        rep.add_measure("negative_control_violation", energy / (0.9 * fb.upper * nf2) - 1.0);
        rep.add_target("negative_control_violation", 0.05, 0.0, ToleranceKind::lower);
    }

    std::ostringstream notes;
    notes << "bounds A=" << fb.lower << " B=" << fb.upper << "; p=0.5 diagonal ratio " << max_sub1
          << (max_sub1 > 1.0 ? " (exceeds 1: the bound fails below p=1, logged only)"
                             : " (no violation found at this size, logged only)");
    rep.notes = notes.str();
    return rep;
}

// ---------------------------------------------------------------------------
// check_inclusions_and_embedding
// ---------------------------------------------------------------------------

ExperimentReport run_inclusions(const ExperimentContext& ctx, const ParamMap& params,
                                const std::vector<ParamSpec>& specs) {
    ExperimentReport rep;
    const int n_arrays = param_int(params, specs[0]);
    rep.parameters["arrays"] = std::to_string(n_arrays);

    const double pinf = std::numeric_limits<double>::infinity();
    const std::vector<std::array<double, 4>> index_pairs = {
        {1.0, 1.0, 2.0, 2.0},
        {0.5, 0.5, 1.0, 1.0},
        {0.5, 1.0, 0.75, 2.0},
        {2.0, 2.0, pinf, pinf},
        {1.0, 0.5, 3.0, 0.5},
    };
    const std::vector<Weight> weights = {Weight::flat(), Weight::vs(1.0)};

    Rng rng(derive_seed(ctx.seed, "inclusions"));
    double max_excess = 0.0, equal_err = 0.0, reversed_max = 0.0;
    for (int i = 0; i < n_arrays; ++i) {
        CoefficientArray c = CoefficientArray::make2(16, 8, 0.375, 2.0 / 3.0);
        for (auto& v : c.data) v = rng.complex_normal();
        for (const Weight& w : weights) {
            for (const auto& ip : index_pairs) {
                const double lo = mixed_norm(c, ip[0], ip[1], w);
                const double hi = mixed_norm(c, ip[2], ip[3], w);
                max_excess = std::max(max_excess, hi / lo - 1.0);
            }
            equal_err = std::max(equal_err, std::abs(mixed_norm(c, 1.5, 2.5, w) /
                                                         mixed_norm(c, 1.5, 2.5, w) -
                                                     1.0));
            reversed_max =
                std::max(reversed_max, mixed_norm(c, 1.0, 1.0, w) / mixed_norm(c, 2.0, 2.0, w));
        }
    }
    rep.add_measure("max_inclusion_excess", max_excess);
    rep.add_target("max_inclusion_excess", 0.0, 1e-12, ToleranceKind::upper);
    rep.add_measure("equal_index_error", equal_err);
    rep.add_target("equal_index_error", 0.0, 1e-15, ToleranceKind::abs_err);
    rep.add_measure("negative_control_reversed_ratio", reversed_max);
    rep.add_target("negative_control_reversed_ratio", 1.01, 0.0, ToleranceKind::lower);

    // Embedding probe on decaying symbols: ratios of the (p, inf) norm to the
    // position-weighted sup norm for p above the 2/s threshold.
    const GridSpec g = ctx.grid;
    const double s = 2.0;
    GaborSystem2D sys2 = make_gabor_system_2d(gaussian_symbol_window(g), ctx.lattice);
    std::ostringstream table;
    table.precision(4);
    double max_embed_ratio = 0.0;
    for (int i = 0; i < 4; ++i) {
        Rng rs(derive_seed(ctx.seed, "embed-symbol-" + std::to_string(i)));
        SymbolField a = i == 0 ? gaussian_symbol_window(g) : random_bandlimited_symbol(g, rs);
        CoefficientArray c = gabor_coefficients_2d(a, sys2);
        const double denom = mixed_norm(c, pinf, pinf, Weight::vs_otimes_one(s));
        table << "symbol" << i << ":";
        for (double pp : {1.5, 2.0, 4.0}) {
            const double rr = mixed_norm(c, pp, pinf, Weight::flat()) / denom;
            table << " p=" << pp << " ratio=" << rr << ";";
            max_embed_ratio = std::max(max_embed_ratio, rr);
        }
        table << " ";
    }
    rep.add_measure("max_embedding_ratio", max_embed_ratio);
    rep.add_target("max_embedding_ratio", 0.0, 0.0, ToleranceKind::report_only);
    rep.notes = "embedding probe (s=2, threshold p>1): " + table.str();
    return rep;
}

// ---------------------------------------------------------------------------
// check_convolution_relation
// ---------------------------------------------------------------------------

ExperimentReport run_convolution_relation(const ExperimentContext& ctx, const ParamMap& params,
                                          const std::vector<ParamSpec>& specs) {
    ExperimentReport rep;
    const double p = param_double(params, specs[0]);
    const int n_pairs = param_int(params, specs[1]);
    if (!(p > 0.0) || std::isinf(p)) {
        throw std::invalid_argument("p must be finite positive");
    }
    rep.parameters["p"] = fmt(p);
    rep.parameters["pairs"] = std::to_string(n_pairs);

    const GridSpec g = ctx.grid;
    GaborSystem2D sys2 = make_gabor_system_2d(gaussian_symbol_window(g), ctx.lattice);
    const double pinf = std::numeric_limits<double>::infinity();

    RatioStatistic ratios;
    for (int i = 0; i < n_pairs; ++i) {
        Rng ra(derive_seed(ctx.seed, "conv-a-" + std::to_string(i)));
        Rng rb(derive_seed(ctx.seed, "conv-b-" + std::to_string(i)));
        SymbolField a = random_bandlimited_symbol(g, ra);
        SymbolField b = random_bandlimited_symbol(g, rb);
        SymbolField ab = symbol_convolve(a, b);
        const double lhs = mod_norm_symbol(ab, p, p, Weight::flat(), sys2);
        const double rhs = mod_norm_symbol(a, p, pinf, Weight::flat(), sys2) *
                           mod_norm_symbol(b, p, p, Weight::flat(), sys2);
        if (rhs > 0.0) ratios.absorb(lhs / rhs);
    }
    rep.add_measure("ratio_spread", ratios.spread());
    rep.add_target("ratio_spread", 50.0, 0.0, ToleranceKind::upper);
    rep.add_measure("max_ratio", ratios.max_ratio);
    rep.add_target("max_ratio", 0.0, 0.0, ToleranceKind::report_only);

    // Near-delta second factor: the ratio approaches a lattice-dependent
    // constant; recorded, not asserted.
    {
        Rng ra(derive_seed(ctx.seed, "conv-a-0"));
        SymbolField a = random_bandlimited_symbol(g, ra);
        SymbolField nd = zero_symbol(g);
        const int N = g.num_points;
        for (int m = 0; m < N; ++m) {
            const double x = g.time_node(m);
            for (int n = 0; n < N; ++n) {
                const double w = g.freq_node(n);
                nd.values(m, n) = std::exp(-kPi * 9.0 * (x * x + w * w));
            }
        }
        SymbolField ab = symbol_convolve(a, nd);
        const double lhs = mod_norm_symbol(ab, p, p, Weight::flat(), sys2);
        const double rhs = mod_norm_symbol(a, p, pinf, Weight::flat(), sys2) *
                           mod_norm_symbol(nd, p, p, Weight::flat(), sys2);
        rep.add_measure("near_delta_ratio", rhs > 0.0 ? lhs / rhs : 0.0);
        rep.add_target("near_delta_ratio", 0.0, 0.0, ToleranceKind::report_only);
    }

    // a = 0 degenerate case.
    {
        SymbolField z = zero_symbol(g);
        Rng rb(derive_seed(ctx.seed, "conv-b-0"));
        SymbolField b = random_bandlimited_symbol(g, rb);
        rep.add_measure("zero_symbol_norm",
                        mod_norm_symbol(symbol_convolve(z, b), p, p, Weight::flat(), sys2));
        rep.add_target("zero_symbol_norm", 0.0, 1e-12, ToleranceKind::abs_err);
    }
    rep.notes = "instance (p,inf) * (p,p) -> (p,p) of the phase-space convolution estimate";
    return rep;
}

// ---------------------------------------------------------------------------
// check_wigner_bound
// ---------------------------------------------------------------------------

void check_wigner_indices(double p, double q, double p1, double q1, double p2, double q2) {
    for (auto [label, v] : std::initializer_list<std::pair<const char*, double>>{
             {"p1", p1}, {"q1", q1}, {"p2", p2}, {"q2", q2}}) {
        if (inv(v) < inv(q)) {
            throw std::invalid_argument(std::string("index ") + label +
                                        " exceeds q (needs p_i, q_i <= q)");
        }
    }
    if (inv(p1) + inv(p2) < inv(p) + inv(q) - 1e-12) {
        throw std::invalid_argument("1/p1 + 1/p2 >= 1/p + 1/q violated");
    }
    if (inv(q1) + inv(q2) < inv(p) + inv(q) - 1e-12) {
        throw std::invalid_argument("1/q1 + 1/q2 >= 1/p + 1/q violated");
    }
}

ExperimentReport run_wigner_bound(const ExperimentContext& ctx, const ParamMap& params,
                                  const std::vector<ParamSpec>& specs) {
    ExperimentReport rep;
    const double p = param_double(params, specs[0]);
    const double q = param_double(params, specs[1]);
    const double p1 = param_double(params, specs[2]);
    const double q1 = param_double(params, specs[3]);
    const double p2 = param_double(params, specs[4]);
    const double q2 = param_double(params, specs[5]);
    const double s = param_double(params, specs[6]);
    check_wigner_indices(p, q, p1, q1, p2, q2);
    rep.parameters["indices"] = fmt(p) + "," + fmt(q) + "," + fmt(p1) + "," + fmt(q1) + "," +
                                fmt(p2) + "," + fmt(q2);
    rep.parameters["s"] = fmt(s);
    (void)ctx;

    // Per-member grids: compressed Gaussians need a wide frequency band, flat
    // ones a long time window.
    auto member_ratio = [&](const GridSpec& g, const SampledSignal& f1, const SampledSignal& f2) {
        const Lattice lat = default_lattice(g);
        GaborSystem sys = make_gabor_system(gaussian_window(g), lat);
        GaborSystem2D sys2 = make_gabor_system_2d(gaussian_symbol_window(g), lat);
        SymbolField W = resample_to_symbol_grid(cross_wigner(f1, f2));
        const double lhs = mod_norm_symbol(W, p, q, Weight::one_otimes_vs(s), sys2);
        const double rhs = mod_norm_signal(f1, p1, q1, Weight::vs(std::abs(s)), sys) *
                           mod_norm_signal(f2, p2, q2, Weight::vs(s), sys);
        return rhs > 0.0 ? lhs / rhs : 0.0;
    };

    RatioStatistic ratios;
    std::ostringstream notes;
    notes.precision(4);
    const GridSpec g_slow = make_grid(256, 12.0);  // lambda <= 1 and Hermites
    const GridSpec g_fast = make_grid(256, 8.0);   // compressed Gaussians
    for (double lam : {0.25, 1.0, 4.0, 16.0}) {
        const GridSpec& g = lam >= 4.0 ? g_fast : g_slow;
        SampledSignal fl = dilated_gaussian(g, lam);
        const double r = member_ratio(g, fl, fl);
        ratios.absorb(r);
        notes << "lambda=" << lam << " ratio=" << r << "; ";
    }
    for (auto [i, j] : std::initializer_list<std::pair<int, int>>{
             {0, 0}, {0, 1}, {1, 0}, {1, 1}, {0, 2}, {2, 0}, {1, 2}, {2, 2}}) {
        const double r =
            member_ratio(g_slow, hermite_function(g_slow, i), hermite_function(g_slow, j));
        ratios.absorb(r);
        notes << "h" << i << "h" << j << " ratio=" << r << "; ";
    }

    rep.add_measure("ratio_spread", ratios.spread());
    rep.add_target("ratio_spread", 50.0, 0.0, ToleranceKind::upper);
    rep.add_measure("max_ratio", ratios.max_ratio);
    rep.add_target("max_ratio", 0.0, 0.0, ToleranceKind::report_only);
    rep.notes = notes.str();
    return rep;
}

}  // namespace

// ---------------------------------------------------------------------------
// registry / dispatch
// ---------------------------------------------------------------------------

double param_double(const ParamMap& p, const ParamSpec& spec) {
    const auto it = p.find(spec.name);
    const std::string& raw = it != p.end() ? it->second : spec.default_value;
    try {
        return parse_extended(raw);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid value '" + raw + "' for parameter '" + spec.name +
                                    "'");
    }
}

int param_int(const ParamMap& p, const ParamSpec& spec) {
    const auto it = p.find(spec.name);
    const std::string& raw = it != p.end() ? it->second : spec.default_value;
    try {
        size_t pos = 0;
        int v = std::stoi(raw, &pos);
        if (pos != raw.size()) throw std::invalid_argument(raw);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid value '" + raw + "' for parameter '" + spec.name +
                                    "'");
    }
}

bool param_bool(const ParamMap& p, const ParamSpec& spec) {
    const auto it = p.find(spec.name);
    const std::string& raw = it != p.end() ? it->second : spec.default_value;
    if (raw == "true" || raw == "1") return true;
    if (raw == "false" || raw == "0") return false;
    throw std::invalid_argument("invalid value '" + raw + "' for parameter '" + spec.name + "'");
}

void validate_param_names(const ExperimentDef& def, const ParamMap& params) {
    for (const auto& [k, v] : params) {
        bool known = false;
        for (const auto& spec : def.params) {
            if (spec.name == k) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw std::invalid_argument("unknown parameter '" + k + "' for experiment " + def.id);
        }
    }
}

const std::vector<ExperimentDef>& experiment_registry() {
    static const std::vector<ExperimentDef> defs = [] {
        std::vector<ExperimentDef> v;

        v.push_back(
            {"check_gaussian_stft",
             "V_g g(x,w) = 2^(-1/2) e^(-pi i x w) e^(-(pi/2)(x^2+w^2)) for g = e^(-pi x^2)",
             {{"coarse_n", "16", "grid size for the logged convergence point"},
              {"negative_control", "false", "run the broken phase variant as the main check"}},
             [](const ExperimentContext& c, const ParamMap& p) {
                 return run_gaussian_stft(c, p, find_experiment("check_gaussian_stft")->params);
             }});

        v.push_back(
            {"check_covariance",
             "translation/modulation covariance of conj(V_g1 f) V_g2 h under T_z and M_zeta",
             {{"instances", "10", "number of random signal/window draws"},
              {"negative_control", "false", "use an off-by-one shift as the main check"}},
             [](const ExperimentContext& c, const ParamMap& p) {
                 return run_covariance(c, p, find_experiment("check_covariance")->params);
             }});

        v.push_back(
            {"check_wigner_stft_identity",
             "|V_Phi(W(f1,f2))(z,zeta)| = |V_g f2(z+zeta~/2)| |V_g f1(z-zeta~/2)| with Phi = W(g,g)",
             {{"magnitude_floor", "1e-8", "both sides must exceed this to be compared"},
              {"negative_control", "false", "reverse the coordinate rotation"}},
             [](const ExperimentContext& c, const ParamMap& p) {
                 return run_wigner_stft_identity(
                     c, p, find_experiment("check_wigner_stft_identity")->params);
             }});

        v.push_back(
            {"check_weyl_localization_link",
             "the localization operator equals the Weyl operator with symbol a * W(g2,g1)",
             {{"symbols", "5", "number of symbols per grid"},
              {"negative_control", "false", "skip the Wigner convolution"}},
             [](const ExperimentContext& c, const ParamMap& p) {
                 return run_weyl_localization_link(
                     c, p, find_experiment("check_weyl_localization_link")->params);
             }});

        v.push_back({"check_gaussian_scaling",
                     "norm of e^(-pi lambda x^2) scales like lambda^(-1/(2r)) "
                     "(lambda+1)^(-(1/2)(1-1/s-1/r))",
                     {{"r", "2", "inner exponent"}, {"s", "2", "outer exponent"}},
                     [](const ExperimentContext& c, const ParamMap& p) {
                         return run_gaussian_scaling(
                             c, p, find_experiment("check_gaussian_scaling")->params);
                     }});

        v.push_back({"check_schatten_sufficiency",
                     "||A_a||_{S_p} bounded by the (p,inf) symbol norm times window norms",
                     {{"p", "2", "Schatten exponent (0, inf]"},
                      {"s", "0", "weight exponent"},
                      {"symbols", "10", "number of band-limited symbols"}},
                     [](const ExperimentContext& c, const ParamMap& p) {
                         return run_schatten_sufficiency(
                             c, p, find_experiment("check_schatten_sufficiency")->params);
                     }});

        v.push_back({"check_counterexample",
                     "for h = sum phi_n/(sqrt(n) log(n+1)), sum_n ||T phi_n||^p diverges when p < 2",
                     {{"p", "1", "exponent in (0, 2)"},
                      {"n_trunc", "64", "orthonormal family size"}},
                     [](const ExperimentContext& c, const ParamMap& p) {
                         return run_counterexample(c, p,
                                                   find_experiment("check_counterexample")->params);
                     }});

        v.push_back({"check_frame_bessel",
                     "(sum |<T b_n, b_n>|^p)^(1/p) <= B ||T||_{S_p}; twisted variant with a unitary",
                     {{"p", "2", "Schatten exponent >= 1"},
                      {"operators", "20", "number of prescribed-spectrum operators"},
                      {"signals", "100", "number of sandwich test signals"}},
                     [](const ExperimentContext& c, const ParamMap& p) {
                         return run_frame_bessel(c, p, find_experiment("check_frame_bessel")->params);
                     }});

        v.push_back(
            {"check_inclusions_and_embedding",
             "mixed-norm monotonicity: p1<=p2 and q1<=q2 imply ||c||_{p2,q2} <= ||c||_{p1,q1}",
             {{"arrays", "20", "number of random coefficient arrays"}},
             [](const ExperimentContext& c, const ParamMap& p) {
                 return run_inclusions(c, p,
                                       find_experiment("check_inclusions_and_embedding")->params);
             }});

        v.push_back({"check_convolution_relation",
                     "||a*b||_{M^p} bounded by ||a||_{M^{p,inf}} ||b||_{M^p} on phase space",
                     {{"p", "1", "exponent (0, inf)"},
                      {"pairs", "10", "number of random symbol pairs"}},
                     [](const ExperimentContext& c, const ParamMap& p) {
                         return run_convolution_relation(
                             c, p, find_experiment("check_convolution_relation")->params);
                     }});

        v.push_back({"check_wigner_bound",
                     "||W(f1,f2)||_{M^{p,q}_{1xv_s}} bounded by ||f1||_{M^{p1,q1}_{v_|s|}} "
                     "||f2||_{M^{p2,q2}_{v_s}}",
                     {{"p", "2", "outcome inner exponent"},
                      {"q", "2", "outcome outer exponent"},
                      {"p1", "2", "first factor inner exponent"},
                      {"q1", "2", "first factor outer exponent"},
                      {"p2", "2", "second factor inner exponent"},
                      {"q2", "2", "second factor outer exponent"},
                      {"s", "0", "weight exponent"}},
                     [](const ExperimentContext& c, const ParamMap& p) {
                         return run_wigner_bound(c, p, find_experiment("check_wigner_bound")->params);
                     }});

        return v;
    }();
    return defs;
}

const ExperimentDef* find_experiment(const std::string& id) {
    for (const auto& def : experiment_registry()) {
        if (def.id == id) return &def;
    }
    return nullptr;
}

ExperimentReport run_experiment(const ExperimentDef& def, const ExperimentContext& ctx,
                                const ParamMap& params) {
    validate_param_names(def, params);
    const auto start = std::chrono::steady_clock::now();
    ExperimentReport rep = def.body(ctx, params);
    rep.experiment_id = def.id;
    rep.seed = ctx.seed;
    for (const auto& spec : def.params) {
        if (!rep.parameters.count(spec.name)) {
            const auto it = params.find(spec.name);
            rep.parameters[spec.name] = it != params.end() ? it->second : spec.default_value;
        }
    }
    rep.evaluate();
    rep.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return rep;
}

}  // namespace tfa
