#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <vector>

#include "mroots/methods.hpp"
#include "mroots/numerics.hpp"
#include "mroots/problems.hpp"

namespace mroots {

struct BasinConfig {
  double re_min = -3.0;
  double re_max = 3.0;
  double im_min = -3.0;
  double im_max = 3.0;
  int width = 512;
  int height = 512;
  int max_iterations = 100;
  double attract_tolerance = 1e-3;
  std::vector<ComplexScalar> roots;
  /// Worker threads for render(); 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;

  /// Default window with the problem's roots.
  static BasinConfig for_problem(const Problem& problem);

  /// Throws std::invalid_argument on an empty window, a nonpositive size or
  /// tolerance, or roots closer together than 2 * attract_tolerance.
  void validate() const;

  /// Center of pixel (i, j); row j = 0 is the top edge (im_max).
  ComplexScalar pixel_center(int i, int j) const;
};

/// Orbits are abandoned once |z| exceeds this modulus.
inline constexpr double kEscapeModulus = 1e12;

struct BasinCell {
  std::optional<std::size_t> root;  // empty when the orbit did not converge
  int iterations = 0;

  friend bool operator==(const BasinCell&, const BasinCell&) = default;
};

struct BasinGrid {
  int width = 0;
  int height = 0;
  int max_iterations = 0;
  std::vector<BasinCell> cells;  // row-major, top row first

  const BasinCell& at(int i, int j) const { return cells[static_cast<std::size_t>(j) * width + i]; }
  BasinCell& at(int i, int j) { return cells[static_cast<std::size_t>(j) * width + i]; }

  friend bool operator==(const BasinGrid&, const BasinGrid&) = default;
};

struct BasinStats {
  std::vector<std::size_t> root_counts;
  std::size_t black_count = 0;
  double mean_iterations = 0.0;  // over converged pixels; 0 when none converged

  std::size_t total() const;
};

/// Iterates the method from z0 and reports the first root within
/// attract_tolerance, checked before the first step and after every full step.
/// Step failures, escapes past kEscapeModulus and exhausted iterations all
/// classify as no root with iterations = max_iterations.
BasinCell classify_point(ComplexScalar z0, const Problem& problem, const MethodSpec& spec, const BasinConfig& cfg);

/// Classifies every pixel center. Rows are split into contiguous bands, one
/// per worker; the result does not depend on the number of workers.
BasinGrid render(const Problem& problem, const MethodSpec& spec, const BasinConfig& cfg);

BasinStats stats(const BasinGrid& grid, std::size_t root_count);

/// root_k_count=..., black_count=..., mean_iterations=... one per line.
void write_stats(const BasinStats& s, std::ostream& out);

using Rgb = std::array<std::uint8_t, 3>;

/// Red, green, blue, yellow, magenta, cyan, orange, purple, in root order.
const std::vector<Rgb>& default_palette();

struct ImageOptions {
  /// Darken converged pixels in proportion to iterations used.
  bool shade_by_iterations = false;
};

/// Binary PPM (P6, maxval 255). Non-converged pixels are black. Throws
/// std::invalid_argument when the palette is too short for the grid and
/// std::runtime_error on I/O failure.
void write_image(const BasinGrid& grid, const std::vector<Rgb>& palette, const std::filesystem::path& path,
                 const ImageOptions& options = {});

/// The same bytes write_image() stores.
std::vector<std::uint8_t> encode_ppm(const BasinGrid& grid, const std::vector<Rgb>& palette,
                                     const ImageOptions& options = {});

}  // namespace mroots
