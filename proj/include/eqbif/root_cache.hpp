#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "eqbif/spectral.hpp"

namespace eqbif {

/// On-disk cache of radial Neumann roots keyed by (dim, angular index).
///
/// File layout (JSON):
///   {"format": "eqbif-root-cache", "root_tolerance": r, "grid_step": h,
///    "coverage": [{"dim": N, "l": l, "x_max": x}, ...],
///    "records": [{"dim": N, "l": l, "root_index": k, "x": root}, ...]}
///
/// A file whose tolerance metadata differs from the requested tolerances is
/// treated as stale and ignored; the next save() overwrites it.
class RootCache {
 public:
  explicit RootCache(std::filesystem::path path, const Tolerances& tol);

  /// True when an existing file was ignored because its metadata did not match.
  bool was_stale() const { return stale_; }
  bool dirty() const { return dirty_; }

  /// Roots <= x_max if the cache covers that range.
  std::optional<std::vector<double>> lookup(int dim, int l, double x_max) const;
  /// Record every root <= x_max for (dim, l).
  void store(int dim, int l, double x_max, std::vector<double> roots);

  /// Single-writer flush; no-op when nothing changed.
  void save() const;

 private:
  struct Series {
    double x_max = 0.0;
    std::vector<double> roots;
  };

  std::filesystem::path path_;
  Tolerances tol_;
  std::map<std::pair<int, int>, Series> series_;
  bool stale_ = false;
  bool dirty_ = false;
};

}  // namespace eqbif
