#include "mroots/basins.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>
#include <thread>

namespace mroots {

namespace {

std::optional<std::size_t> captured_by(ComplexScalar z, const BasinConfig& cfg) {
  for (std::size_t k = 0; k < cfg.roots.size(); ++k) {
    if (std::abs(z - cfg.roots[k]) <= cfg.attract_tolerance) return k;
  }
  return std::nullopt;
}

std::uint8_t shade(std::uint8_t channel, int iterations, int max_iterations) {
  if (max_iterations <= 0) return channel;
  const double fraction = std::clamp(static_cast<double>(iterations) / max_iterations, 0.0, 1.0);
  return static_cast<std::uint8_t>(std::lround(channel * (1.0 - 0.75 * fraction)));
}

}  // namespace

BasinConfig BasinConfig::for_problem(const Problem& problem) {
  BasinConfig cfg;
  cfg.roots = problem.known_roots_complex;
  return cfg;
}

void BasinConfig::validate() const {
  if (!(re_min < re_max) || !(im_min < im_max)) throw std::invalid_argument("empty basin window");
  if (width < 1 || height < 1) throw std::invalid_argument("grid size must be positive");
  if (max_iterations < 1) throw std::invalid_argument("max_iterations must be at least 1");
  if (!(attract_tolerance > 0.0)) throw std::invalid_argument("attract tolerance must be positive");
  if (roots.empty()) throw std::invalid_argument("basin config has no roots");
  for (std::size_t a = 0; a < roots.size(); ++a) {
    for (std::size_t b = a + 1; b < roots.size(); ++b) {
      if (std::abs(roots[a] - roots[b]) <= 2.0 * attract_tolerance) {
        throw std::invalid_argument("roots " + std::to_string(a) + " and " + std::to_string(b) +
                                    " are within twice the attraction tolerance");
      }
    }
  }
}

ComplexScalar BasinConfig::pixel_center(int i, int j) const {
  const double re = re_min + (i + 0.5) * (re_max - re_min) / width;
  const double im = im_max - (j + 0.5) * (im_max - im_min) / height;
  return {re, im};
}

BasinCell classify_point(ComplexScalar z0, const Problem& problem, const MethodSpec& spec, const BasinConfig& cfg) {
  if (!problem.complex) throw std::invalid_argument("problem '" + problem.name + "' has no complex form");
  const FunctionBundle<ComplexScalar>& fn = *problem.complex;
  const BasinCell black{std::nullopt, cfg.max_iterations};

  if (auto k = captured_by(z0, cfg)) return {k, 0};
  ComplexScalar z = z0;
  for (int n = 1; n <= cfg.max_iterations; ++n) {
    const StepOutcome<ComplexScalar> outcome = step(spec, fn, problem.multiplicity, z);
    if (!outcome.ok()) return black;
    z = outcome.next;
    if (!Field<ComplexScalar>::finite(z) || std::abs(z) > kEscapeModulus) return black;
    if (auto k = captured_by(z, cfg)) return {k, n};
  }
  return black;
}

BasinGrid render(const Problem& problem, const MethodSpec& spec, const BasinConfig& cfg) {
  cfg.validate();
  if (!problem.complex) throw std::invalid_argument("problem '" + problem.name + "' has no complex form");
  check_prerequisites(spec, *problem.complex, problem.multiplicity);

  BasinGrid grid;
  grid.width = cfg.width;
  grid.height = cfg.height;
  grid.max_iterations = cfg.max_iterations;
  grid.cells.resize(static_cast<std::size_t>(cfg.width) * cfg.height);

  auto band = [&](int first_row, int last_row) {
    for (int j = first_row; j < last_row; ++j) {
      for (int i = 0; i < cfg.width; ++i) grid.at(i, j) = classify_point(cfg.pixel_center(i, j), problem, spec, cfg);
    }
  };

  const unsigned hardware = std::max(1U, std::thread::hardware_concurrency());
  const int workers = static_cast<int>(std::min<unsigned>(cfg.workers == 0 ? hardware : cfg.workers,
                                                          static_cast<unsigned>(cfg.height)));
  if (workers <= 1) {
    band(0, cfg.height);
    return grid;
  }
  std::vector<std::jthread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back(band, w * cfg.height / workers, (w + 1) * cfg.height / workers);
  }
  pool.clear();  // joins
  return grid;
}

std::size_t BasinStats::total() const {
  std::size_t sum = black_count;
  for (const std::size_t c : root_counts) sum += c;
  return sum;
}

BasinStats stats(const BasinGrid& grid, std::size_t root_count) {
  BasinStats s;
  s.root_counts.assign(root_count, 0);
  double iterations = 0.0;
  std::size_t converged = 0;
  for (const BasinCell& cell : grid.cells) {
    if (!cell.root) {
      ++s.black_count;
      continue;
    }
    if (*cell.root >= root_count) s.root_counts.resize(*cell.root + 1, 0);
    ++s.root_counts[*cell.root];
    iterations += cell.iterations;
    ++converged;
  }
  s.mean_iterations = converged == 0 ? 0.0 : iterations / static_cast<double>(converged);
  return s;
}

void write_stats(const BasinStats& s, std::ostream& out) {
  for (std::size_t k = 0; k < s.root_counts.size(); ++k) out << "root_" << k << "_count=" << s.root_counts[k] << '\n';
  out << "black_count=" << s.black_count << '\n';
  out << "mean_iterations=" << s.mean_iterations << '\n';
}

const std::vector<Rgb>& default_palette() {
  static const std::vector<Rgb> palette{
      {255, 0, 0},   {0, 255, 0},   {0, 0, 255},   {255, 255, 0},
      {255, 0, 255}, {0, 255, 255}, {255, 128, 0}, {128, 0, 255},
  };
  return palette;
}

std::vector<std::uint8_t> encode_ppm(const BasinGrid& grid, const std::vector<Rgb>& palette,
                                     const ImageOptions& options) {
  for (const BasinCell& cell : grid.cells) {
    if (cell.root && *cell.root >= palette.size()) {
      throw std::invalid_argument("palette has " + std::to_string(palette.size()) + " colors but root index " +
                                  std::to_string(*cell.root) + " occurs");
    }
  }
  const std::string header =
      "P6\n" + std::to_string(grid.width) + " " + std::to_string(grid.height) + "\n255\n";
  std::vector<std::uint8_t> bytes(header.begin(), header.end());
  bytes.reserve(header.size() + grid.cells.size() * 3);
  for (const BasinCell& cell : grid.cells) {
    Rgb color{0, 0, 0};
    if (cell.root) {
      color = palette[*cell.root];
      if (options.shade_by_iterations) {
        for (auto& channel : color) channel = shade(channel, cell.iterations, grid.max_iterations);
      }
    }
    bytes.insert(bytes.end(), color.begin(), color.end());
  }
  return bytes;
}

void write_image(const BasinGrid& grid, const std::vector<Rgb>& palette, const std::filesystem::path& path,
                 const ImageOptions& options) {
  const std::vector<std::uint8_t> bytes = encode_ppm(grid, palette, options);
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  file.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!file) throw std::runtime_error("write to '" + path.string() + "' failed");
}

}  // namespace mroots
