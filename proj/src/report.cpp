#include "eqbif/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "eqbif/errors.hpp"
#include "eqbif/root_cache.hpp"

namespace eqbif {

namespace {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& ex) {
    throw SchemaError(path + " is not valid JSON: " + ex.what());
  }
}

Tolerances tolerances_from(const json& doc) {
  Tolerances t;
  if (doc.is_object() && doc.contains("tolerances")) {
    with_schema_errors("malformed tolerances", [&] {
      const auto& j = doc.at("tolerances");
      if (!j.is_object()) throw SchemaError("\"tolerances\" must be an object");
      t.root = j.value("root", t.root);
      t.merge = j.value("merge", t.merge);
    });
  }
  return t;
}

// Windows typed by the user must be proper intervals.
void validate_user_window(const Interval& w) {
  w.validate();
  if (!(w.lo < w.hi)) throw ValidationError("window needs lo < hi");
}

std::string rep_label(const RepDescriptor& r) { return r.is_zero() ? "0" : r.to_string(); }

}  // namespace

AnalysisConfig parse_config(const json& doc, const std::optional<Tolerances>& tol_override) {
  if (!doc.is_object()) throw SchemaError("configuration must be a JSON object");
  AnalysisConfig c;
  c.tolerances = tol_override ? *tol_override : tolerances_from(doc);
  c.tolerances.validate();
  with_schema_errors("malformed configuration", [&] {
    if (doc.contains("window")) {
      const auto& w = doc.at("window");
      if (!w.is_array() || w.size() != 2) throw SchemaError("\"window\" must be [lo, hi]");
      c.window = Interval{w.at(0).get<double>(), w.at(1).get<double>()};
    }
    if (doc.contains("output_format")) {
      const auto f = doc.at("output_format").get<std::string>();
      if (f == "table") {
        c.output_format = OutputFormat::Table;
      } else if (f == "structured") {
        c.output_format = OutputFormat::Structured;
      } else {
        throw SchemaError("output_format must be \"table\" or \"structured\"");
      }
    }
    if (doc.contains("spectrum_bound")) c.spectrum_bound = doc.at("spectrum_bound").get<double>();
    if (doc.contains("lambda")) c.lambda = doc.at("lambda").get<double>();
    if (doc.contains("cache")) c.cache = doc.at("cache").get<std::string>();
  });
  if (doc.contains("system")) c.system = parse_system_spec(doc.at("system"), c.tolerances);
  if (doc.contains("indices")) c.indices = parse_euler_list(doc.at("indices"));
  if (doc.contains("orbits")) c.orbits = parse_orbit_data(doc.at("orbits"));
  if (doc.contains("class_table")) c.class_table = parse_class_table(doc.at("class_table"));
  if (c.window) validate_user_window(*c.window);
  return c;
}

json structured_report(const std::string& command, json result) {
  return {{"schema_version", 1}, {"command", command}, {"result", std::move(result)}};
}

json verdicts_to_json(const std::vector<BifurcationVerdict>& verdicts) {
  json out = json::array();
  for (const auto& v : verdicts) out.push_back(v);
  return out;
}

std::vector<BifurcationVerdict> verdicts_from_json(const json& j) {
  return with_schema_errors("malformed verdict report", [&] {
    if (!j.is_array()) throw SchemaError("verdict report must be an array");
    return j.get<std::vector<BifurcationVerdict>>();
  });
}

std::string spectrum_table(const Spectrum& spectrum) {
  std::ostringstream os;
  os << "# " << to_string(spectrum.kind) << " (N = " << spectrum.dim
     << "), complete up to " << fmt(spectrum.complete_up_to) << "\n";
  os << pad("k", 6) << pad("eigenvalue", 20) << pad("l", 5) << pad("root", 6) << "representation\n";
  for (std::size_t i = 0; i < spectrum.entries.size(); ++i) {
    const auto& e = spectrum.entries[i];
    os << pad(std::to_string(i + 1), 6) << pad(fmt(e.eigenvalue), 20)
       << pad(e.angular_index ? std::to_string(*e.angular_index) : "-", 5)
       << pad(e.root_index ? std::to_string(*e.root_index) : "-", 6) << rep_label(e.rep) << "\n";
  }
  return os.str();
}

std::string lambda_table(const Interval& window, const std::vector<double>& members) {
  std::ostringstream os;
  os << "# Lambda in [" << fmt(window.lo) << ", " << fmt(window.hi) << "]: " << members.size()
     << (members.size() == 1 ? " member\n" : " members\n");
  for (double m : members) os << fmt(m) << "\n";
  return os.str();
}

std::string verdict_table(const std::vector<BifurcationVerdict>& verdicts) {
  std::ostringstream os;
  os << pad("lambda0", 16) << pad("V1", 14) << pad("V2", 14) << pad("glob", 14)
     << pad("justification", 26) << pad("unbounded", 11) << "BIF\n";
  for (const auto& v : verdicts) {
    os << pad(fmt(v.lambda0) + (v.in_lambda ? "" : "*"), 16) << pad(rep_label(v.kernel.v1), 14)
       << pad(rep_label(v.kernel.v2), 14) << pad(to_string(v.glob), 14)
       << pad(to_string(v.justification), 26) << pad(to_string(v.unbounded), 11)
       << (v.bif_element ? v.bif_element->to_string() : "-") << "\n";
  }
  if (verdicts.empty()) os << "(no parameters in the window)\n";
  return os.str();
}

namespace {

struct Options {
  std::string config;
  std::optional<double> lambda;
  std::vector<double> window;
  std::string format;
  std::optional<double> max_eigenvalue;
  std::optional<double> tol;
  std::optional<double> merge_tol;
  std::string cache;
  std::string input;
  std::string table;
};

class Driver {
 public:
  Driver(const Options& opt, std::ostream& out, std::ostream& err)
      : opt_(opt), out_(out), err_(err) {}

  void load() {
    json doc = json::object();
    if (!opt_.config.empty()) doc = read_json_file(opt_.config);
    if (!doc.is_object()) throw SchemaError("configuration must be a JSON object");
    Tolerances tol = tolerances_from(doc);
    if (opt_.tol) tol.root = *opt_.tol;
    if (opt_.merge_tol) tol.merge = *opt_.merge_tol;
    cfg_ = parse_config(doc, tol);
    if (opt_.lambda) cfg_.lambda = opt_.lambda;
    if (!opt_.window.empty()) {
      cfg_.window = Interval{opt_.window[0], opt_.window[1]};
      validate_user_window(*cfg_.window);
    }
    if (opt_.format == "structured") cfg_.output_format = OutputFormat::Structured;
    if (opt_.format == "table") cfg_.output_format = OutputFormat::Table;
    if (opt_.max_eigenvalue) cfg_.spectrum_bound = opt_.max_eigenvalue;
    if (!opt_.cache.empty()) cfg_.cache = opt_.cache;
    if (cfg_.spectrum_bound && !(*cfg_.spectrum_bound > 0.0 && std::isfinite(*cfg_.spectrum_bound))) {
      throw ValidationError("the spectrum bound must be positive and finite");
    }
    if (cfg_.cache) {
      cache_.emplace(*cfg_.cache, cfg_.tolerances);
      if (cache_->was_stale()) {
        err_ << "note: root cache " << *cfg_.cache
             << " was built with different tolerances or is unreadable; regenerating\n";
      }
    }
  }

  void finish() {
    if (cache_) cache_->save();
  }

  void spectrum() {
    Spectrum s;
    const SystemSpec* spec = cfg_.system ? &*cfg_.system : nullptr;
    if (spec && spec->domain.supplied) {
      s = *spec->domain.supplied;
    } else {
      double bound = 0.0;
      if (cfg_.spectrum_bound) {
        bound = *cfg_.spectrum_bound;
      } else if (spec && cfg_.window) {
        bound = required_eigenvalue_bound(*spec, *cfg_.window);
      } else {
        throw ValidationError("spectrum needs --max-eigenvalue (or a system and a window)");
      }
      s = make_disk_spectrum(bound, cfg_.tolerances, cache_ ? &*cache_ : nullptr);
    }
    emit("spectrum", spectrum_to_json(s), [&] { return spectrum_table(s); });
  }

  void lambda_set_cmd() {
    const auto& spec = system();
    const auto& window = require_window();
    const auto s = spectrum_for(required_eigenvalue_bound(spec, window));
    const auto members = lambda_set(spec, s, window, cfg_.tolerances);
    json result = {{"window", {window.lo, window.hi}}, {"members", members}};
    emit("lambda-set", result, [&] { return lambda_table(window, members); });
  }

  void analyze_cmd() {
    const auto& spec = system();
    const auto& window = require_window();
    const auto s = spectrum_for(required_eigenvalue_bound(spec, window));
    const auto verdicts = analyze(spec, s, window, cfg_.tolerances);
    json result = {{"window", {window.lo, window.hi}}, {"verdicts", verdicts_to_json(verdicts)}};
    emit("analyze", result, [&] { return verdict_table(verdicts); });
  }

  void bif_cmd() {
    const auto& spec = system();
    if (!cfg_.lambda) throw ValidationError("bif needs --lambda");
    double lambda0 = *cfg_.lambda;
    if (!std::isfinite(lambda0)) throw ValidationError("lambda must be finite");
    // Accept a parameter typed to a few digits by snapping to the nearest member.
    const double delta = 1e-4 * std::max(1.0, std::abs(lambda0));
    const Interval near{lambda0 - delta, lambda0 + delta};
    const auto s = spectrum_for(required_eigenvalue_bound(spec, near));
    const auto members = lambda_set(spec, s, near, cfg_.tolerances);
    bool in_lambda = false;
    if (!members.empty()) {
      double best = members.front();
      for (double m : members) {
        if (std::abs(m - lambda0) < std::abs(best - lambda0)) best = m;
      }
      if (best != lambda0) {
        err_ << "note: lambda " << fmt(lambda0) << " taken as the parameter " << fmt(best) << "\n";
      }
      lambda0 = best;
      in_lambda = true;
    }
    EulerSO2 element;
    std::string method;
    if (spec.a9 && s.kind == DomainKind::Disk) {
      element = bif_a9(spec, s, lambda0, cfg_.tolerances);
      method = "a9";
    } else {
      if (lambda0 == 0.0) {
        throw PreconditionError("without a9 no closed form is available at lambda0 = 0");
      }
      element = bif_difference(spec, s, lambda0, cfg_.tolerances);
      method = "difference";
    }
    json result = {{"lambda0", lambda0}, {"in_lambda", in_lambda}, {"method", method},
                   {"bif", element}};
    emit("bif", result, [&] {
      return "BIF(" + fmt(lambda0) + ") = " + element.to_string() + "  [" + method + "]\n";
    });
  }

  void rabinowitz_cmd() {
    std::vector<EulerSO2> indices;
    json lambdas = nullptr;
    if (!opt_.input.empty()) {
      indices = parse_euler_list(read_json_file(opt_.input));
    } else if (cfg_.indices) {
      indices = *cfg_.indices;
    } else if (cfg_.system && cfg_.window) {
      const auto& spec = *cfg_.system;
      const auto s = spectrum_for(required_eigenvalue_bound(spec, *cfg_.window));
      lambdas = json::array();
      for (const auto& v : analyze(spec, s, *cfg_.window, cfg_.tolerances)) {
        if (!v.in_lambda || !v.bif_element) continue;
        indices.push_back(*v.bif_element);
        lambdas.push_back(v.lambda0);
      }
      if (lambdas.empty()) {
        throw ValidationError("rabinowitz needs indices; the system yields none in the window "
                              "(closed forms exist only under a9 on the disk)");
      }
    } else {
      throw ValidationError("rabinowitz needs --input, \"indices\", or an a9 system with a window");
    }
    EulerSO2 sum;
    for (const auto& x : indices) sum += x;
    const bool excludes = rabinowitz_excludes_bounded(indices);
    json subsets = nullptr;
    if (indices.size() <= 20) subsets = zero_sum_subsets(indices);
    json result = {{"indices", indices}, {"lambdas", lambdas}, {"sum", sum},
                   {"excludes_bounded", excludes}, {"zero_sum_subsets", subsets}};
    emit("rabinowitz", result, [&] {
      std::ostringstream os;
      for (std::size_t i = 0; i < indices.size(); ++i) {
        os << pad("[" + std::to_string(i) + "]", 6);
        if (lambdas.is_array()) os << pad(fmt(lambdas[i].get<double>()), 16);
        os << indices[i].to_string() << "\n";
      }
      os << "sum = " << sum.to_string() << "\n";
      os << (excludes ? "bounded continuum excluded: the indices do not sum to zero\n"
                      : "bounded continuum not excluded: the indices sum to zero\n");
      if (subsets.is_array()) os << "zero-sum subsets: " << subsets.size() << "\n";
      return os.str();
    });
  }

  void morse_cmd() {
    std::vector<OrbitDatum> orbits;
    if (!opt_.input.empty()) {
      orbits = parse_orbit_data(read_json_file(opt_.input));
    } else if (cfg_.orbits) {
      orbits = *cfg_.orbits;
    } else {
      throw ValidationError("morse-degree needs --input or \"orbits\"");
    }
    std::optional<ClassTable> table = cfg_.class_table;
    if (!opt_.table.empty()) table = parse_class_table(read_json_file(opt_.table));
    const auto deg = degree_from_orbits(orbits);
    std::optional<ClassDegree> lifted;
    if (table) lifted = lift_degree(deg, *table);
    std::optional<EulerSO2> so2;
    try {
      so2 = to_euler_so2(deg);
    } catch (const ValidationError&) {
      so2.reset();
    }
    json result = {{"degree", class_degree_to_json(deg)},
                   {"lifted", lifted ? class_degree_to_json(*lifted) : json(nullptr)},
                   {"euler_so2", so2 ? json(*so2) : json(nullptr)}};
    emit("morse-degree", result, [&] {
      std::ostringstream os;
      auto dump = [&](const ClassDegree& d) {
        if (d.empty()) os << "  (zero)\n";
        for (const auto& [k, v] : d) os << "  " << pad(k, 16) << v << "\n";
      };
      os << "degree:\n";
      dump(deg);
      if (lifted) {
        os << "lifted:\n";
        dump(*lifted);
      }
      if (so2) os << "in U(SO(2)): " << so2->to_string() << "\n";
      return os.str();
    });
  }

 private:
  const SystemSpec& system() const {
    if (!cfg_.system) throw ValidationError("this command needs a \"system\" in the configuration");
    return *cfg_.system;
  }

  const Interval& require_window() const {
    if (!cfg_.window) throw ValidationError("this command needs --window LO HI");
    return *cfg_.window;
  }

  Spectrum spectrum_for(double needed) {
    const auto& spec = system();
    if (spec.domain.kind == DomainKind::Disk && cfg_.spectrum_bound) {
      auto s = make_disk_spectrum(*cfg_.spectrum_bound, cfg_.tolerances,
                                  cache_ ? &*cache_ : nullptr);
      s.require_coverage(needed);
      return s;
    }
    return resolve_spectrum(spec, needed, cfg_.tolerances, cache_ ? &*cache_ : nullptr);
  }

  template <class TableFn>
  void emit(const std::string& command, json result, TableFn&& table) {
    if (cfg_.output_format == OutputFormat::Structured) {
      out_ << structured_report(command, std::move(result)).dump(2) << "\n";
    } else {
      out_ << table();
    }
  }

  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;
  AnalysisConfig cfg_;
  std::optional<RootCache> cache_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Global bifurcation analysis for Neumann elliptic systems with SO(N) symmetry",
               "eqbif"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--config", opt.config, "JSON configuration document");
  app.add_option("--lambda", opt.lambda, "parameter value for bif");
  app.add_option("--window", opt.window, "parameter window LO HI")->expected(2);
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"table", "structured"}));
  app.add_option("--max-eigenvalue", opt.max_eigenvalue, "compute the disk spectrum up to this bound");
  app.add_option("--tol", opt.tol, "bisection tolerance for radial roots");
  app.add_option("--merge-tol", opt.merge_tol, "relative tolerance for identifying eigenvalues");
  app.add_option("--cache", opt.cache, "root cache file");
  app.add_option("--input", opt.input, "index list (rabinowitz) or orbit data (morse-degree)");
  app.add_option("--table", opt.table, "class table for morse-degree");

  auto* spectrum = app.add_subcommand("spectrum", "Neumann eigenvalues with their representations");
  auto* lambda_set = app.add_subcommand("lambda-set", "parameters in the window where the kernel is nonzero");
  auto* analyze = app.add_subcommand("analyze", "bifurcation verdicts for every parameter in the window");
  auto* bif = app.add_subcommand("bif", "bifurcation index at --lambda");
  auto* rabinowitz = app.add_subcommand("rabinowitz", "test whether indices sum to zero");
  auto* morse = app.add_subcommand("morse-degree", "degree from critical-orbit data");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    Driver d(opt, out, err);
    d.load();
    if (*spectrum) d.spectrum();
    if (*lambda_set) d.lambda_set_cmd();
    if (*analyze) d.analyze_cmd();
    if (*bif) d.bif_cmd();
    if (*rabinowitz) d.rabinowitz_cmd();
    if (*morse) d.morse_cmd();
    d.finish();
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << "\n";
    return e.category() == ErrorCategory::Validation ? 1 : 2;
  } catch (const json::exception& e) {
    err << "error: SchemaError: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace eqbif
