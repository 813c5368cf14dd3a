#include "eqbif/root_cache.hpp"

#include <fstream>

#include "eqbif/errors.hpp"
#include "json.hpp"

namespace eqbif {

namespace {
constexpr const char* kFormat = "eqbif-root-cache";
}

RootCache::RootCache(std::filesystem::path path, const Tolerances& tol)
    : path_(std::move(path)), tol_(tol) {
  std::ifstream in(path_);
  if (!in) return;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception&) {
    stale_ = true;
    return;
  }
  try {
    if (doc.value("format", "") != kFormat || doc.at("root_tolerance").get<double>() != tol.root ||
        doc.at("grid_step").get<double>() != kRootGridStep) {
      stale_ = true;
      return;
    }
    for (const auto& c : doc.at("coverage")) {
      series_[{c.at("dim").get<int>(), c.at("l").get<int>()}].x_max = c.at("x_max").get<double>();
    }
    for (const auto& r : doc.at("records")) {
      auto it = series_.find({r.at("dim").get<int>(), r.at("l").get<int>()});
      if (it == series_.end()) continue;
      auto& roots = it->second.roots;
      const auto k = r.at("root_index").get<std::size_t>();
      if (k == 0) continue;
      if (roots.size() < k) roots.resize(k, 0.0);
      roots[k - 1] = r.at("x").get<double>();
    }
  } catch (const nlohmann::json::exception&) {
    series_.clear();
    stale_ = true;
  }
}

std::optional<std::vector<double>> RootCache::lookup(int dim, int l, double x_max) const {
  auto it = series_.find({dim, l});
  if (it == series_.end() || it->second.x_max < x_max) return std::nullopt;
  std::vector<double> out;
  for (double x : it->second.roots) {
    if (x > x_max) break;
    out.push_back(x);
  }
  return out;
}

void RootCache::store(int dim, int l, double x_max, std::vector<double> roots) {
  auto& s = series_[{dim, l}];
  if (s.x_max >= x_max) return;
  s.x_max = x_max;
  s.roots = std::move(roots);
  dirty_ = true;
}

void RootCache::save() const {
  if (!dirty_ && !stale_) return;
  nlohmann::json doc;
  doc["format"] = kFormat;
  doc["root_tolerance"] = tol_.root;
  doc["grid_step"] = kRootGridStep;
  auto coverage = nlohmann::json::array();
  auto records = nlohmann::json::array();
  for (const auto& [key, s] : series_) {
    coverage.push_back({{"dim", key.first}, {"l", key.second}, {"x_max", s.x_max}});
    for (std::size_t i = 0; i < s.roots.size(); ++i) {
      records.push_back(
          {{"dim", key.first}, {"l", key.second}, {"root_index", i + 1}, {"x", s.roots[i]}});
    }
  }
  doc["coverage"] = std::move(coverage);
  doc["records"] = std::move(records);
  std::ofstream out(path_);
  if (!out) throw ValidationError("cannot write root cache " + path_.string());
  out << doc.dump(1) << '\n';
}

}  // namespace eqbif
