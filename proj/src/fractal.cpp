#include "polybranch/fractal.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace polybranch {

void FractalWindow::validate() const {
  const bool finite = std::isfinite(re_min) && std::isfinite(re_max) && std::isfinite(im_min) &&
                      std::isfinite(im_max);
  if (!finite || !(re_min < re_max) || !(im_min < im_max)) {
    throw std::invalid_argument("fractal window must have positive area");
  }
}

Complex FractalGrid::sample(int x, int y) const {
  const double re = window.re_min + (x + 0.5) * (window.re_max - window.re_min) / width;
  const double im = window.im_max - (y + 0.5) * (window.im_max - window.im_min) / height;
  return {re, im};
}

namespace {

double distance_to_nearest_root(int d, Complex S, Complex x) {
  const double modulus = std::pow(std::abs(S), 1.0 / d);
  const double base = std::arg(S) / d;
  double best = std::numeric_limits<double>::infinity();
  for (int j = 0; j < d; ++j) {
    const Complex root = std::polar(modulus, base + 2.0 * std::numbers::pi * j / d);
    best = std::min(best, std::abs(x - root));
  }
  return best;
}

}  // namespace

FractalCell escape_time(int d, Complex S, Complex seed, const NewtonConfig& cfg) {
  if (S == Complex{}) {
    return {0, true};
  }
  Complex x = seed;
  for (int n = 0;; ++n) {
    if (distance_to_nearest_root(d, S, x) < cfg.threshold_r) {
      return {n, true};
    }
    if (n == cfg.max_iters_N || x == Complex{}) {
      return {n, false};
    }
    x = newton_step(d, S, x);
    if (!all_finite(x) || std::abs(x) > divergence_limit(S, cfg)) {
      return {n + 1, false};
    }
  }
}

unsigned default_workers() {
  if (const char* env = std::getenv("POLYBRANCH_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) {
      return static_cast<unsigned>(v);
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

FractalGrid render(int d, Complex seed, const NewtonConfig& cfg, const FractalWindow& window,
                   const Resolution& resolution, unsigned workers) {
  if (d < 2) {
    throw std::invalid_argument("degree must be >= 2");
  }
  if (seed == Complex{}) {
    throw std::invalid_argument("seed must be nonzero");
  }
  if (resolution.width < 1 || resolution.height < 1) {
    throw std::invalid_argument("resolution must be positive");
  }
  cfg.validate();
  window.validate();

  FractalGrid grid;
  grid.width = resolution.width;
  grid.height = resolution.height;
  grid.window = window;
  grid.d = d;
  grid.seed = seed;
  grid.threshold_r = cfg.threshold_r;
  grid.max_iters_N = cfg.max_iters_N;
  grid.cells.resize(static_cast<std::size_t>(grid.width) * static_cast<std::size_t>(grid.height));

  if (workers == 0) {
    workers = default_workers();
  }
  workers = std::min<unsigned>(workers, static_cast<unsigned>(grid.height));

  auto rows = [&](unsigned first) {
    for (int y = static_cast<int>(first); y < grid.height; y += static_cast<int>(workers)) {
      for (int x = 0; x < grid.width; ++x) {
        grid.cells[static_cast<std::size_t>(y) * grid.width + x] =
            escape_time(d, grid.sample(x, y), seed, cfg);
      }
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 1; w < workers; ++w) {
    pool.emplace_back(rows, w);
  }
  rows(0);
  return grid;
}

SectorStatistics sector_statistics(const FractalGrid& grid, const AnnulusFilter& filter) {
  SectorStatistics stats;
  stats.home_sector = sector_index(grid.d, ipow(grid.seed, grid.d));

  std::vector<std::vector<const FractalCell*>> members(static_cast<std::size_t>(grid.d));
  for (int y = 0; y < grid.height; ++y) {
    for (int x = 0; x < grid.width; ++x) {
      const Complex S = grid.sample(x, y);
      const double m = std::abs(S);
      if (m < filter.min_modulus || m > filter.max_modulus) {
        continue;
      }
      members[static_cast<std::size_t>(sector_index(grid.d, S))].push_back(&grid.at(x, y));
    }
  }

  for (const FractalCell* c : members[static_cast<std::size_t>(stats.home_sector)]) {
    if (c->converged) {
      stats.uniform_budget = std::max(stats.uniform_budget, c->iterations);
    }
  }

  for (int k = 0; k < grid.d; ++k) {
    const auto& cells = members[static_cast<std::size_t>(k)];
    SectorSummary s;
    s.sector = k;
    s.cells = cells.size();
    std::size_t converged = 0;
    std::size_t rapid = 0;
    double total = 0.0;
    for (const FractalCell* c : cells) {
      if (c->converged) {
        ++converged;
        total += c->iterations;
        rapid += c->iterations <= stats.uniform_budget ? 1 : 0;
      }
    }
    if (!cells.empty()) {
      s.converged_fraction = static_cast<double>(converged) / cells.size();
      s.rapid_fraction = static_cast<double>(rapid) / cells.size();
    }
    s.mean_iterations = converged > 0 ? total / converged : 0.0;
    stats.sectors.push_back(s);
  }
  return stats;
}

nlohmann::json to_json(const SectorStatistics& s) {
  nlohmann::json sectors = nlohmann::json::array();
  for (const auto& e : s.sectors) {
    sectors.push_back({{"sector", e.sector},
                       {"cells", e.cells},
                       {"converged_fraction", e.converged_fraction},
                       {"rapid_fraction", e.rapid_fraction},
                       {"mean_iterations", e.mean_iterations}});
  }
  return {{"home_sector", s.home_sector}, {"uniform_budget", s.uniform_budget},
          {"sectors", sectors}};
}

Rgb cell_color(const FractalCell& cell, int max_iters_N) {
  if (!cell.converged) {
    return kDivergenceColor;
  }
  const long idx = static_cast<long>(cell.iterations) * 255 / std::max(1, max_iters_N);
  return palette()[static_cast<std::size_t>(std::clamp(idx, 0L, 255L))];
}

std::string encode_ppm(const FractalGrid& grid) {
  std::string out = "P6\n" + std::to_string(grid.width) + " " + std::to_string(grid.height) +
                    "\n255\n";
  out.reserve(out.size() + grid.cells.size() * 3);
  for (const auto& cell : grid.cells) {
    const Rgb c = cell_color(cell, grid.max_iters_N);
    out.append(reinterpret_cast<const char*>(c.data()), c.size());
  }
  return out;
}

std::string encode_pgm(const FractalGrid& grid) {
  std::string out = "P2\n" + std::to_string(grid.width) + " " + std::to_string(grid.height) +
                    "\n" + std::to_string(grid.max_iters_N) + "\n";
  for (int y = 0; y < grid.height; ++y) {
    for (int x = 0; x < grid.width; ++x) {
      const FractalCell& c = grid.at(x, y);
      out += std::to_string(c.converged ? c.iterations : grid.max_iters_N);
      out += x + 1 < grid.width ? ' ' : '\n';
    }
  }
  return out;
}

namespace {

void write_bytes(const std::string& bytes, const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) {
    throw std::runtime_error("cannot open " + path.string() + ": " + std::strerror(errno));
  }
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  f.close();
  if (!f) {
    throw std::runtime_error("cannot write " + path.string() + ": " + std::strerror(errno));
  }
}

}  // namespace

void write_ppm(const FractalGrid& grid, const std::filesystem::path& path) {
  write_bytes(encode_ppm(grid), path);
}

void write_pgm(const FractalGrid& grid, const std::filesystem::path& path) {
  write_bytes(encode_pgm(grid), path);
}

}  // namespace polybranch
