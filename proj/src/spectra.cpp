#include "bht/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "bht/charpoly.hpp"

#ifdef BHT_HAVE_PNG
#include <png.h>
#endif

namespace bht {

void enumerate_family(int n, bool zero_diag, const std::function<void(const ToeplitzSpec&)>& sink) {
    const std::uint64_t size = family_size(n, zero_diag);
    ToeplitzSpec spec = family_spec_at(n, zero_diag, 0);
    const int first = zero_diag ? 1 : 0;
    for (std::uint64_t index = 0;;) {
        sink(spec);
        if (++index == size) break;
        int pos = n - 1;
        while (spec.t[static_cast<std::size_t>(pos)] == 1 && pos > first) {
            spec.t[static_cast<std::size_t>(pos)] = -1;
            --pos;
        }
        ++spec.t[static_cast<std::size_t>(pos)];
    }
}

std::uint64_t DensityGrid::total() const {
    std::uint64_t sum = 0;
    for (std::uint64_t c : counts) sum += c;
    return sum;
}

bool DensityGrid::add(double re, double im) {
    const double dx = (xmax - xmin) / width;
    const double dy = (ymax - ymin) / height;
    int ix = static_cast<int>(std::floor((re - xmin) / dx));
    if (ix < 0 || ix >= width) return false;
    int iy;
    if (ymin == -ymax) {
        double mag = std::abs(im);
        if (mag > ymax) return false;
        int row = static_cast<int>(std::floor((ymax - mag) / dy));
        row = std::min(row, (height - 1) / 2);
        iy = (im >= 0.0) ? row : height - 1 - row;
    } else {
        iy = static_cast<int>(std::floor((ymax - im) / dy));
        if (iy < 0 || iy >= height) return false;
    }
    ++counts[static_cast<std::size_t>(iy) * width + ix];
    return true;
}

void DensityGrid::merge(const DensityGrid& other) {
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
}

bool DensityGrid::conjugate_symmetric() const {
    for (int iy = 0; iy < height; ++iy)
        for (int ix = 0; ix < width; ++ix)
            if (at(ix, iy) != at(ix, height - 1 - iy)) return false;
    return true;
}

double family_window_halfwidth(int n, bool zero_diag) {
    // spectral radius <= infinity norm <= n (or n-1 with a zero diagonal)
    return static_cast<double>(zero_diag ? n : n + 1);
}

DensityResult accumulate_density(int n, bool zero_diag, const GridConfig& config) {
    if (n < 1) throw std::invalid_argument("accumulate_density: order must be positive");
    if (config.width < 1 || config.height < 1)
        throw std::invalid_argument("accumulate_density: grid must have positive dimensions");

    DensityGrid proto;
    proto.width = config.width;
    proto.height = config.height;
    if (config.xmin == 0 && config.xmax == 0 && config.ymin == 0 && config.ymax == 0) {
        double half = 1.0 + family_window_halfwidth(n, zero_diag);
        proto.xmin = -half;
        proto.xmax = half;
        proto.ymin = -half;
        proto.ymax = half;
    } else {
        proto.xmin = config.xmin;
        proto.xmax = config.xmax;
        proto.ymin = config.ymin;
        proto.ymax = config.ymax;
    }
    if (!(proto.xmin < proto.xmax) || !(proto.ymin < proto.ymax))
        throw std::invalid_argument("accumulate_density: empty window");
    proto.counts.assign(static_cast<std::size_t>(config.width) * config.height, 0);

    int workers = config.workers > 0 ? config.workers
                                     : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    const std::uint64_t total = family_size(n, zero_diag);
    workers = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), total));

    struct WorkerState {
        DensityGrid grid;
        std::uint64_t roots_total = 0;
        std::uint64_t roots_in_window = 0;
        double max_residual = 0.0;
        std::uint64_t failed_index = 0;
        std::string failure;
        bool failed = false;
    };
    std::vector<WorkerState> states(static_cast<std::size_t>(workers));
    for (auto& s : states) s.grid = proto;

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        std::uint64_t begin = total * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(workers);
        std::uint64_t end = total * (static_cast<std::uint64_t>(w) + 1) / static_cast<std::uint64_t>(workers);
        pool.emplace_back([n, zero_diag, begin, end, tol = config.tol,
                           &state = states[static_cast<std::size_t>(w)]] {
            FamilyCharpolyScanner scanner(n, zero_diag);
            try {
                scanner.scan(begin, end, [&](std::uint64_t index, const std::vector<long>& t,
                                             const std::vector<mpz_class>& coeffs) {
                    IntPolynomial poly{std::vector<mpz_class>(coeffs)};
                    RootSet roots;
                    try {
                        roots = find_roots(poly, tol);
                    } catch (const RootFindError& err) {
                        std::ostringstream msg;
                        msg << err.what() << " (family member " << index << ", t =";
                        for (long v : t) msg << " " << v;
                        msg << ")";
                        state.failed = true;
                        state.failed_index = index;
                        state.failure = msg.str();
                        throw RootFindError(state.failure, err.poly());
                    }
                    state.max_residual = std::max(state.max_residual, roots.residual);
                    for (const auto& root : roots.roots) {
                        ++state.roots_total;
                        if (state.grid.add(root.real(), root.imag())) ++state.roots_in_window;
                    }
                });
            } catch (const RootFindError&) {
                // recorded above; stop this shard
            }
        });
    }
    for (auto& th : pool) th.join();

    const WorkerState* first_failure = nullptr;
    for (const auto& s : states)
        if (s.failed && (!first_failure || s.failed_index < first_failure->failed_index))
            first_failure = &s;
    if (first_failure) throw std::runtime_error(first_failure->failure);

    DensityResult result;
    result.grid = std::move(states[0].grid);
    result.roots_total = states[0].roots_total;
    result.roots_in_window = states[0].roots_in_window;
    result.max_residual = states[0].max_residual;
    for (std::size_t i = 1; i < states.size(); ++i) {
        result.grid.merge(states[i].grid);
        result.roots_total += states[i].roots_total;
        result.roots_in_window += states[i].roots_in_window;
        result.max_residual = std::max(result.max_residual, states[i].max_residual);
    }
    return result;
}

Colormap colormap_from_name(const std::string& name) {
    if (name == "gray") return Colormap::gray;
    if (name == "invgray") return Colormap::invgray;
    throw std::invalid_argument("unknown colormap: " + name);
}

namespace {

std::vector<std::uint8_t> shade_grid(const DensityGrid& grid, Colormap map) {
    if (grid.width < 1 || grid.height < 1) throw std::domain_error("render: empty grid");
    std::uint64_t peak = 0;
    for (std::uint64_t c : grid.counts) peak = std::max(peak, c);
    const double scale = peak > 0 ? 1.0 / std::log1p(static_cast<double>(peak)) : 0.0;
    std::vector<std::uint8_t> bytes(grid.counts.size());
    for (std::size_t i = 0; i < grid.counts.size(); ++i) {
        double v = std::log1p(static_cast<double>(grid.counts[i])) * scale;
        int level = static_cast<int>(std::lround(255.0 * v));
        if (map == Colormap::gray) level = 255 - level;
        bytes[i] = static_cast<std::uint8_t>(level);
    }
    return bytes;
}

}  // namespace

std::vector<std::uint8_t> render_pgm(const DensityGrid& grid, Colormap map) {
    std::vector<std::uint8_t> pixels = shade_grid(grid, map);
    std::ostringstream header;
    header << "P5\n" << grid.width << " " << grid.height << "\n255\n";
    std::string h = header.str();
    std::vector<std::uint8_t> out(h.begin(), h.end());
    out.insert(out.end(), pixels.begin(), pixels.end());
    return out;
}

bool png_supported() {
#ifdef BHT_HAVE_PNG
    return true;
#else
    return false;
#endif
}

#ifdef BHT_HAVE_PNG
std::vector<std::uint8_t> render_png(const DensityGrid& grid, Colormap map) {
    std::vector<std::uint8_t> pixels = shade_grid(grid, map);
    std::vector<std::uint8_t> out;

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw std::runtime_error("render_png: png_create_write_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw std::runtime_error("render_png: png_create_info_struct failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw std::runtime_error("render_png: encoding failed");
    }
    png_set_write_fn(
        png, &out,
        [](png_structp ctx, png_bytep data, png_size_t length) {
            auto* sink = static_cast<std::vector<std::uint8_t>*>(png_get_io_ptr(ctx));
            sink->insert(sink->end(), data, data + length);
        },
        nullptr);
    png_set_IHDR(png, info, static_cast<png_uint_32>(grid.width), static_cast<png_uint_32>(grid.height),
                 8, PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    for (int iy = 0; iy < grid.height; ++iy)
        png_write_row(png, pixels.data() + static_cast<std::size_t>(iy) * grid.width);
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
    return out;
}
#else
std::vector<std::uint8_t> render_png(const DensityGrid&, Colormap) {
    throw std::runtime_error("render_png: built without portable network graphics support");
}
#endif

void write_grid_csv(std::ostream& out, const DensityGrid& grid) {
    for (int iy = 0; iy < grid.height; ++iy) {
        for (int ix = 0; ix < grid.width; ++ix) {
            if (ix) out << ',';
            out << grid.at(ix, iy);
        }
        out << '\n';
    }
}

bool shift_decomposition_check(int n) {
    if (n < 1) throw std::invalid_argument("shift_decomposition_check: order must be positive");
    if (n > 8) throw std::length_error("shift_decomposition_check: capped at n <= 8");

    std::vector<IntPolynomial> full;
    full.reserve(family_size(n, false));
    {
        FamilyCharpolyScanner scanner(n, false);
        scanner.scan(0, family_size(n, false),
                     [&](std::uint64_t, const std::vector<long>&, const std::vector<mpz_class>& coeffs) {
                         full.emplace_back(std::vector<mpz_class>(coeffs));
                     });
    }
    std::vector<IntPolynomial> shifted;
    shifted.reserve(full.size());
    {
        FamilyCharpolyScanner scanner(n, true);
        scanner.scan(0, family_size(n, true),
                     [&](std::uint64_t, const std::vector<long>&, const std::vector<mpz_class>& coeffs) {
                         IntPolynomial q{std::vector<mpz_class>(coeffs)};
                         for (long d = -1; d <= 1; ++d)
                             shifted.push_back(poly_compose_shift(q, mpz_class(-d)));
                     });
    }
    std::sort(full.begin(), full.end());
    std::sort(shifted.begin(), shifted.end());
    return full == shifted;
}

}  // namespace bht
