#pragma once

namespace tfa {

/// Uniform centered periodic grid with N points over [-L/2, L/2).
/// Time nodes t_j = (j - N/2) * dx; frequency nodes w_n = (n - N/2) / L.
struct GridSpec {
    int num_points = 0;
    double period = 0.0;
    double spacing = 0.0;

    double time_node(int j) const { return (j - num_points / 2) * spacing; }
    double freq_node(int n) const { return (n - num_points / 2) / period; }
    /// Half-step frequency nodes hosting Wigner outputs, step 1/(2L).
    double halffreq_node(int n) const { return (n - num_points / 2) / (2.0 * period); }
    /// Frequency-axis node spacing 1/L.
    double freq_spacing() const { return 1.0 / period; }
    double nyquist() const { return num_points / (2.0 * period); }

    bool operator==(const GridSpec& o) const {
        return num_points == o.num_points && period == o.period;
    }
};

/// Builds a grid; N must be a power of two >= 16 and L > 0.
GridSpec make_grid(int num_points, double period);

/// Throws when the two grids differ.
void require_same_grid(const GridSpec& a, const GridSpec& b, const char* where);

}  // namespace tfa
