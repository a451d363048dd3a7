#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "bht/poly.hpp"
#include "bht/roots.hpp"
#include "bht/specs.hpp"

namespace bht {

/// Yields every member of the order-n ternary family (subdiagonal +1) exactly
/// once, in odometer order; 3^(n-1) members with the diagonal pinned to zero.
void enumerate_family(int n, bool zero_diag, const std::function<void(const ToeplitzSpec&)>& sink);

/// 2-D accumulation grid over a complex-plane window. Row 0 is the top edge
/// (imag = ymax); counts are eigenvalue hits.
struct DensityGrid {
    int width = 0;
    int height = 0;
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    std::vector<std::uint64_t> counts;

    std::uint64_t at(int ix, int iy) const { return counts[static_cast<std::size_t>(iy) * width + ix]; }
    std::uint64_t total() const;

    /// Accumulates one hit; returns false when the point falls outside the
    /// window. With a symmetric imaginary window the row is derived from
    /// |imag| and mirrored, so conjugate points always land on mirror rows.
    bool add(double re, double im);

    void merge(const DensityGrid& other);
    bool conjugate_symmetric() const;
};

struct GridConfig {
    int width = 1025;
    int height = 1025;
    // window bounds; left at zero they default to +/-(1 + B) where B is the
    // infinity-norm eigenvalue bound of the family (B = n, or n-1 zero-diag)
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    double tol = 1e-8;
    int workers = 0;  // 0 = hardware concurrency
};

struct DensityResult {
    DensityGrid grid;
    std::uint64_t roots_total = 0;
    std::uint64_t roots_in_window = 0;
    double max_residual = 0.0;
};

/// Window half-width that provably contains every eigenvalue of the family.
double family_window_halfwidth(int n, bool zero_diag);

/// Eigenvalue density of the whole family: characteristic polynomial roots of
/// every member accumulated onto one grid. Deterministic for a fixed config
/// regardless of worker count. Root-finder failures carry the failing member.
DensityResult accumulate_density(int n, bool zero_diag, const GridConfig& config);

enum class Colormap { gray, invgray };
Colormap colormap_from_name(const std::string& name);

/// P5 portable graymap bytes; intensity log(1 + count) normalized to the
/// grid maximum. "gray" maps high density to dark pixels.
std::vector<std::uint8_t> render_pgm(const DensityGrid& grid, Colormap map);

bool png_supported();
/// 8-bit grayscale portable network graphics bytes (same shading as the PGM).
std::vector<std::uint8_t> render_png(const DensityGrid& grid, Colormap map);

/// Raw counts as CSV, one grid row per line, for bit-exact regression diffs.
void write_grid_csv(std::ostream& out, const DensityGrid& grid);

/// Exact polynomial-level check that the full family is the zero-diagonal
/// family shifted by d in {-1, 0, +1}: multiset equality of { P(z) } with
/// { Q(z - d) }. Capped at n <= 8.
bool shift_decomposition_check(int n);

}  // namespace bht
