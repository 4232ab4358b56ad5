#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "polybranch/newton.hpp"
#include "polybranch/poly.hpp"

namespace polybranch {

// Rectangle of the S-plane. Throws std::invalid_argument from validate() when
// the area is zero, negative or not finite.
struct FractalWindow {
  double re_min = -2.0;
  double re_max = 2.0;
  double im_min = -2.0;
  double im_max = 2.0;

  void validate() const;
};

struct Resolution {
  int width = 512;
  int height = 512;
};

struct FractalCell {
  int iterations = 0;
  bool converged = false;

  friend bool operator==(const FractalCell&, const FractalCell&) = default;
};

struct FractalGrid {
  int width = 0;
  int height = 0;
  FractalWindow window;
  int d = 2;
  Complex seed{1.0, 0.0};
  double threshold_r = 0.1;
  int max_iters_N = 100;
  std::vector<FractalCell> cells;  // row-major, row 0 at im_max

  const FractalCell& at(int x, int y) const {
    return cells[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
                 static_cast<std::size_t>(x)];
  }
  // Cell-center sample point.
  Complex sample(int x, int y) const;
};

// Number of Newton steps from `seed` until the iterate lies within
// threshold_r of the nearest exact d-th root of S. The roots are known in
// closed form here, so this measures distance to the true answer rather than
// the solver's step/residual proxy. S = 0 counts as converged at 0 steps.
FractalCell escape_time(int d, Complex S, Complex seed, const NewtonConfig& cfg);

// Worker count from POLYBRANCH_THREADS when set to a positive integer, else
// the hardware concurrency (at least 1).
unsigned default_workers();

// Fills every cell. Rows are handed out round-robin to `workers` threads
// (0 means default_workers()); each cell depends only on its own sample
// point, so the result does not depend on the worker count.
FractalGrid render(int d, Complex seed, const NewtonConfig& cfg, const FractalWindow& window,
                   const Resolution& resolution, unsigned workers = 0);

struct SectorSummary {
  int sector = 0;
  std::size_t cells = 0;
  double converged_fraction = 0.0;
  // Share of cells converging within `uniform_budget` steps.
  double rapid_fraction = 0.0;
  // Mean steps over converged cells; 0 when none converged.
  double mean_iterations = 0.0;
};

struct SectorStatistics {
  int home_sector = 0;   // sector whose seed equals the grid's seed
  int uniform_budget = 0;
  std::vector<SectorSummary> sectors;
};

struct AnnulusFilter {
  double min_modulus = 0.1;
  double max_modulus = std::numeric_limits<double>::infinity();
};

// Groups cells by sector_index(d, S) inside the annulus. The home sector is
// the one containing seed^d. uniform_budget is the largest step count among
// converged home-sector cells: the smallest cap under which the seed is
// uniformly fast on its own sector. rapid_fraction measures every sector
// against that cap.
SectorStatistics sector_statistics(const FractalGrid& grid, const AnnulusFilter& filter = {});

nlohmann::json to_json(const SectorStatistics& s);

using Rgb = std::array<std::uint8_t, 3>;

inline constexpr Rgb kDivergenceColor{173, 216, 230};

// 256-entry dark purple to yellow ramp, strictly increasing in luminance.
const std::array<Rgb, 256>& palette();

Rgb cell_color(const FractalCell& cell, int max_iters_N);

// Binary P6 image, 8-bit RGB, maxval 255.
std::string encode_ppm(const FractalGrid& grid);

// Plain P2 image of raw step counts with maxval = max_iters_N; cells that
// never converged are written as max_iters_N.
std::string encode_pgm(const FractalGrid& grid);

// Throw std::runtime_error naming the path and the OS error on failure.
void write_ppm(const FractalGrid& grid, const std::filesystem::path& path);
void write_pgm(const FractalGrid& grid, const std::filesystem::path& path);

}  // namespace polybranch
