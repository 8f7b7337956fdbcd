#include "capillary/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "capillary/bifurcation.hpp"
#include "capillary/cases.hpp"
#include "capillary/contact.hpp"
#include "capillary/error.hpp"
#include "capillary/oracle.hpp"
#include "capillary/report.hpp"
#include "capillary/stability.hpp"

namespace capillary::cli {

namespace {

constexpr double kDeg = M_PI / 180.0;

double to_number(const std::string& text, const std::string& what) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last || !std::isfinite(v)) {
    throw Error(ErrorKind::InvalidInput, "cannot read " + what + " from '" + text + "'");
  }
  return v;
}

std::map<std::string, std::string> parse_params(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::InvalidInput, "expected key=value in '" + item + "'");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

class Params {
 public:
  explicit Params(std::map<std::string, std::string> kv) : kv_(std::move(kv)) {}

  double get(const std::string& key, double fallback) {
    const auto it = kv_.find(key);
    if (it == kv_.end()) return fallback;
    const double v = to_number(it->second, key);
    kv_.erase(it);
    return v;
  }
  bool has(const std::string& key) const { return kv_.count(key) != 0; }
  const std::map<std::string, std::string>& rest() const { return kv_; }
  void done(const std::string& kind) const {
    if (!kv_.empty()) throw Error(ErrorKind::InvalidInput, "unknown parameter '" + kv_.begin()->first + "' for " + kind);
  }

 private:
  std::map<std::string, std::string> kv_;
};

SupportCurve oriented_support(const RunConfig& cfg) {
  if (cfg.branch != "concave" && cfg.branch != "convex") {
    throw Error(ErrorKind::InvalidInput, "--branch must be concave or convex");
  }
  const auto curve = parse_support(cfg.support);
  return curve.with_orientation(cfg.branch == "convex" ? Orientation::FluidAbove : Orientation::FluidBelow);
}

int delta_of(const RunConfig& cfg) {
  if (cfg.delta) {
    if (*cfg.delta != 1 && *cfg.delta != -1) throw Error(ErrorKind::InvalidInput, "--delta must be +1 or -1");
    return *cfg.delta;
  }
  return cfg.branch == "convex" ? 1 : -1;
}

double gamma_rad(const RunConfig& cfg) {
  const std::string text = cfg.gamma == "auto" ? "90" : cfg.gamma;
  const double deg = to_number(text, "--gamma");
  if (!(deg > 0.0 && deg < 180.0)) throw Error(ErrorKind::InvalidInput, "--gamma must lie in (0, 180) degrees");
  return deg * kDeg;
}

int exit_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NoIntersection:
    case ErrorKind::Tangential:
    case ErrorKind::MultipleIntersections:
    case ErrorKind::ParallelAxis:
    case ErrorKind::NegativeRadius:
    case ErrorKind::EmptyRange: return kNoContact;
    case ErrorKind::DegenerateMu: return kDegenerate;
    default: return kInvalidInput;
  }
}

struct Emitter {
  std::ostream& out;
  OutputFormat format;

  void table(const json& j, const std::string& indent = "") {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object()) {
        out << indent << key << ":\n";
        table(value, indent + "  ");
      } else if (value.is_array() && !value.empty() && value.front().is_object()) {
        out << indent << key << ": " << value.size() << " item(s)\n";
        for (std::size_t i = 0; i < value.size(); ++i) {
          out << indent << "  [" << i << "]\n";
          table(value[i], indent + "    ");
        }
      } else {
        out << indent << key << ": " << (value.is_number_float() ? format_number(value.get<double>()) : value.dump()) << "\n";
      }
    }
  }

  void csv_rows(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    CsvWriter w(out, header);
    for (const auto& r : rows) w.row(r);
  }
};

std::string fmt(double v) { return format_number(v); }
std::string fmt(const std::optional<double>& v) { return v ? format_number(*v) : ""; }

void write_plot(const std::string& path, const std::function<Spectrum(double)>& spectrum, double scale) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::InvalidInput, "cannot write plot file " + path);
  CsvWriter w(f, {"h", "lambda_min", "index"});
  constexpr int kRows = 200;
  for (int i = 0; i < kRows; ++i) {
    const double h = scale * (0.05 + 2.95 * i / (kRows - 1));
    const auto s = spectrum(h);
    w.row({fmt(h), fmt(s.min_lambda()), std::to_string(s.negative_count())});
  }
}

int cmd_plane(const RunConfig& cfg, Emitter& em) {
  if (!cfg.height) throw Error(ErrorKind::InvalidInput, "plane needs --height");
  if (cfg.tau0) throw Error(ErrorKind::InvalidInput, "plane takes --height, not --tau0");
  const auto curve = oriented_support(cfg);
  const auto contact = plane_contact(curve, *cfg.height);
  if (cfg.gamma != "auto") {
    const double given = to_number(cfg.gamma, "--gamma");
    if (std::abs(given - contact.gamma / kDeg) > 1e-6 * std::max(1.0, given)) {
      throw Error(ErrorKind::InvalidInput, "--gamma " + cfg.gamma + " disagrees with the contact angle " +
                                               fmt(contact.gamma / kDeg) + " fixed by the geometry");
    }
  }
  const auto verdict = analyze_plane(contact);
  json j{{"command", "plane"}, {"support", cfg.support}, {"contact", contact}, {"verdict", verdict}};
  j["h0"] = verdict.h0 ? json(*verdict.h0) : json(nullptr);
  std::optional<Spectrum> spec;
  if (cfg.h) {
    spec = cfg.n > 0 ? spectrum_plane(contact, *cfg.h, cfg.n, 8) : full_spectrum(contact, *cfg.h);
    j["h"] = *cfg.h;
    j["morse_index"] = morse_index(contact, *cfg.h);
    j["spectrum"] = *spec;
  }
  if (!cfg.emit_plot.empty()) {
    write_plot(cfg.emit_plot, [&](double h) { return full_spectrum(contact, h); }, verdict.h0.value_or(cfg.h.value_or(10.0)));
  }

  switch (em.format) {
    case OutputFormat::Json: em.out << j.dump(2) << "\n"; break;
    case OutputFormat::Table: em.table(j); break;
    case OutputFormat::Csv:
      if (spec) {
        write_spectrum_csv(em.out, *spec);
      } else {
        em.csv_rows({"classification", "h0", "kappa0", "s0", "gamma", "q"},
                    {{std::string(to_string(verdict.classification)), fmt(verdict.h0), fmt(contact.kappa0),
                      fmt(contact.s0), fmt(contact.gamma), fmt(contact.q)}});
      }
      break;
  }
  return verdict.classification == Classification::DegenerateCase ? kDegenerate : kOk;
}

int cmd_cylinder(const RunConfig& cfg, Emitter& em) {
  if (!cfg.tau0) throw Error(ErrorKind::InvalidInput, "cylinder needs --tau0");
  if (cfg.height) throw Error(ErrorKind::InvalidInput, "cylinder takes --tau0, not --height");
  const auto curve = oriented_support(cfg);
  const auto contact = cylinder_contact(curve, *cfg.tau0, gamma_rad(cfg), delta_of(cfg), cfg.alternate);
  const auto verdict = analyze_cylinder(contact);
  json j{{"command", "cylinder"}, {"support", cfg.support}, {"contact", contact}, {"verdict", verdict}};
  j["h0"] = verdict.h0 ? json(*verdict.h0) : json(nullptr);
  std::optional<Spectrum> spec;
  if (cfg.h) {
    spec = cfg.n > 0 ? spectrum_cylinder(contact, *cfg.h, cfg.n, 8) : full_spectrum(contact, *cfg.h);
    j["h"] = *cfg.h;
    j["morse_index"] = morse_index(contact, *cfg.h);
    j["spectrum"] = *spec;
  }
  if (!cfg.emit_plot.empty()) {
    write_plot(cfg.emit_plot, [&](double h) { return full_spectrum(contact, h); },
               verdict.h0.value_or(cfg.h.value_or(2.0 * M_PI * contact.r)));
  }

  switch (em.format) {
    case OutputFormat::Json: em.out << j.dump(2) << "\n"; break;
    case OutputFormat::Table: em.table(j); break;
    case OutputFormat::Csv:
      if (spec) {
        write_spectrum_csv(em.out, *spec);
      } else {
        em.csv_rows({"classification", "h0", "mu", "r", "s0", "center_z", "q"},
                    {{std::string(to_string(verdict.classification)), fmt(verdict.h0), fmt(contact.mu), fmt(contact.r),
                      fmt(contact.s0), fmt(contact.center_z), fmt(contact.q)}});
      }
      break;
  }
  return verdict.classification == Classification::DegenerateCase ? kDegenerate : kOk;
}

int cmd_bifurcate(const RunConfig& cfg, Emitter& em) {
  const auto curve = oriented_support(cfg);
  const Interval range = cfg.tau.empty() ? default_tau_range(curve) : parse_range(cfg.tau);
  const double gamma = gamma_rad(cfg);
  const int delta = delta_of(cfg);
  const auto rep = detect_bifurcation(curve, gamma, delta, range);

  json j{{"command", "bifurcate"}, {"support", cfg.support}, {"tau_range", range}, {"report", rep}};
  j["status"] = rep.certified ? "Certified" : (rep.candidates.empty() ? "NoBifurcation" : "NotCertified");
  j["certified"] = rep.certified;
  j["result"] = rep.certified ? json(rep.candidates.front()) : json(nullptr);

  if (!cfg.emit_plot.empty()) {
    std::ofstream f(cfg.emit_plot, std::ios::binary);
    if (!f) throw Error(ErrorKind::InvalidInput, "cannot write plot file " + cfg.emit_plot);
    CsvWriter w(f, {"tau", "residual_v1", "residual_v3"});
    for (const auto& row : residual_curves(curve, gamma, delta, range, 500)) {
      w.row({fmt(row.tau), fmt(row.residual_v1), fmt(row.residual_v3)});
    }
  }

  switch (em.format) {
    case OutputFormat::Json: em.out << j.dump(2) << "\n"; break;
    case OutputFormat::Table: em.table(j); break;
    case OutputFormat::Csv: {
      std::vector<std::vector<std::string>> rows;
      for (const auto& b : rep.candidates) {
        rows.push_back({std::string(to_string(b.kind)), fmt(b.tau0), fmt(b.s0), fmt(b.r), fmt(b.beta), fmt(b.center_z),
                        b.transversal ? "true" : "false", std::to_string(b.multiplicity), rep.certified ? "true" : "false"});
      }
      em.csv_rows({"case", "tau0", "s0", "r", "beta", "center_z", "transversal", "multiplicity", "certified"}, rows);
      break;
    }
  }
  return kOk;
}

int cmd_spectrum(const RunConfig& cfg, Emitter& em) {
  if (!cfg.h) throw Error(ErrorKind::InvalidInput, "spectrum needs --h");
  if (cfg.height.has_value() == cfg.tau0.has_value()) {
    throw Error(ErrorKind::InvalidInput, "spectrum needs exactly one of --height (strip) or --tau0 (cylinder)");
  }
  const auto curve = oriented_support(cfg);
  Spectrum spec;
  int index = 0;
  if (cfg.height) {
    const auto c = plane_contact(curve, *cfg.height);
    spec = cfg.n > 0 ? spectrum_plane(c, *cfg.h, cfg.n, 8) : full_spectrum(c, *cfg.h);
    index = morse_index(c, *cfg.h);
  } else {
    const auto c = cylinder_contact(curve, *cfg.tau0, gamma_rad(cfg), delta_of(cfg), cfg.alternate);
    spec = cfg.n > 0 ? spectrum_cylinder(c, *cfg.h, cfg.n, 8) : full_spectrum(c, *cfg.h);
    index = morse_index(c, *cfg.h);
  }
  json j{{"command", "spectrum"}, {"support", cfg.support}, {"morse_index", index}, {"spectrum", spec}};
  switch (em.format) {
    case OutputFormat::Json: em.out << j.dump(2) << "\n"; break;
    case OutputFormat::Table: em.table(j); break;
    case OutputFormat::Csv: write_spectrum_csv(em.out, spec); break;
  }
  return kOk;
}

int cmd_validate(const RunConfig& cfg, Emitter& em) {
  if (cfg.case_name.empty()) throw Error(ErrorKind::InvalidInput, "validate needs --case");
  for (const int g : cfg.grids) {
    if (g < 50) throw Error(ErrorKind::GridTooCoarse, "grid " + std::to_string(g) + " is below 50");
  }
  const auto& c = find_case(cfg.case_name);
  const auto rep = validate_case(c, cfg.grids);
  json j{{"command", "validate"}, {"case", c.name}, {"description", c.description}, {"report", rep}};
  switch (em.format) {
    case OutputFormat::Json: em.out << j.dump(2) << "\n"; break;
    case OutputFormat::Table: em.table(j); break;
    case OutputFormat::Csv: {
      std::vector<std::vector<std::string>> rows;
      for (std::size_t i = 0; i < rep.analytic.size(); ++i) {
        rows.push_back({std::to_string(i), fmt(rep.analytic[i]), fmt(rep.numeric[i]), std::to_string(rep.N)});
      }
      em.csv_rows({"index", "analytic", "numeric", "N"}, rows);
      break;
    }
  }
  return rep.passed ? kOk : kValidationFailed;
}

int cmd_family(const RunConfig& cfg, Emitter& em) {
  if (cfg.tau.empty()) throw Error(ErrorKind::InvalidInput, "family needs --tau lo:hi");
  const auto curve = oriented_support(cfg);
  const Interval range = parse_range(cfg.tau, /*allow_point=*/true);
  const int n = cfg.n > 0 ? cfg.n : 20;
  const auto fam = capillary_family(curve, gamma_rad(cfg), delta_of(cfg), range, n);
  json j{{"command", "family"}, {"support", cfg.support}, {"continuous", family_is_continuous(fam)}, {"members", fam}};
  switch (em.format) {
    case OutputFormat::Json: em.out << j.dump(2) << "\n"; break;
    case OutputFormat::Table: em.table(j); break;
    case OutputFormat::Csv: {
      std::vector<std::vector<std::string>> rows;
      for (const auto& c : fam) {
        rows.push_back({fmt(c.tau0), fmt(c.s0), fmt(c.r), fmt(c.center_z), fmt(c.mu), fmt(c.q)});
      }
      em.csv_rows({"tau0", "s0", "r", "center_z", "mu", "q"}, rows);
      break;
    }
  }
  return kOk;
}

void add_common(CLI::App* sub, RunConfig& cfg, const std::string& gamma_default) {
  // -h is taken by the channel length option.
  sub->set_help_flag("--help", "print this help and exit");
  sub->add_option("--support", cfg.support, "support curve, e.g. parabola, catenary, circle:r=2,x0=1, csv:file");
  sub->add_option("--branch", cfg.branch, "concave (fluid below) or convex (fluid above)");
  sub->add_option("--gamma", cfg.gamma, std::string(gamma_default == "auto" ? "contact angle in degrees, or auto to take it from the geometry" : "contact angle in degrees"))
      ->default_str(gamma_default);
  sub->add_option("--output", cfg.output, "json, csv or table")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, OutputFormat>{
              {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}, {"table", OutputFormat::Table}},
          CLI::ignore_case));
  sub->add_option("--config", "flat key=value file; command-line flags win");
}

void add_cylinder_opts(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--delta", cfg.delta, "sign of the interface normal curvature, +1 or -1");
  sub->add_flag("--alternate", cfg.alternate, "use the other admissible circle when two exist");
}

// Appends config-file keys the chosen subcommand knows and the command line
// does not already set.
std::vector<std::string> with_config(const CLI::App& app, std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;
  const CLI::App* sub = nullptr;
  for (const auto& a : args) {
    if ((sub = app.get_subcommand_no_throw(a)) != nullptr) break;
  }
  if (!sub) return args;

  auto given = [&](const std::string& flag) {
    return std::any_of(args.begin(), args.end(), [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
  };
  std::vector<std::string> extra;
  for (const auto& [key, value] : read_config(path)) {
    const std::string flag = "--" + key;
    if (key == "config" || given(flag)) continue;
    const CLI::Option* opt = sub->get_option_no_throw(flag);
    if (!opt) throw Error(ErrorKind::InvalidInput, "config key '" + key + "' does not apply to " + sub->get_name());
    if (opt->get_expected_max() == 0) {
      if (value == "true" || value == "1") extra.push_back(flag);
      continue;
    }
    std::istringstream parts(value);
    std::string part;
    while (std::getline(parts, part, ',')) {
      extra.push_back(flag);
      extra.push_back(part);
    }
  }
  args.insert(args.end(), extra.begin(), extra.end());
  return args;
}

}  // namespace

Interval parse_range(const std::string& text, bool allow_point) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw Error(ErrorKind::InvalidInput, "range must look like lo:hi");
  const Interval r{to_number(text.substr(0, colon), "range start"), to_number(text.substr(colon + 1), "range end")};
  if (r.hi < r.lo || (!allow_point && r.hi == r.lo)) throw Error(ErrorKind::EmptyRange, "range " + text + " is empty");
  return r;
}

SupportCurve parse_support(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);

  if (kind == "csv") {
    if (rest.empty()) throw Error(ErrorKind::InvalidInput, "csv support needs a path");
    return SupportCurve::load_csv(rest);
  }
  Params p(parse_params(rest));
  if (kind == "parabola") {
    const double a = p.get("a", 1.0);
    const double dom = p.get("domain", 10.0);
    p.done(kind);
    return SupportCurve::parabola(a, dom);
  }
  if (kind == "catenary") {
    const double a = p.get("a", 1.0);
    const double dom = p.get("domain", 5.0);
    p.done(kind);
    return SupportCurve::catenary(a, dom);
  }
  if (kind == "line") {
    const double c = p.get("c", 0.0);
    const double dom = p.get("domain", 10.0);
    p.done(kind);
    return SupportCurve::line(c, dom);
  }
  if (kind == "circle") {
    const double r = p.get("r", 1.0);
    double zc = 0.0;
    if (p.has("x0")) {
      const double x0 = p.get("x0", 0.0);
      if (!(std::abs(x0) < r)) throw Error(ErrorKind::InvalidInput, "circle needs |x0| < r");
      zc = std::sqrt(r * r - x0 * x0);
    } else if (p.has("zc")) {
      zc = p.get("zc", 0.0);
    } else {
      throw Error(ErrorKind::InvalidInput, "circle needs x0= or zc=");
    }
    p.done(kind);
    return SupportCurve::circle(r, zc);
  }
  if (kind == "graph") {
    const double dom = p.get("domain", 10.0);
    int top = -1;
    for (const auto& [key, value] : p.rest()) {
      if (key.size() < 2 || key[0] != 'c' || key.find_first_not_of("0123456789", 1) != std::string::npos) {
        throw Error(ErrorKind::InvalidInput, "graph coefficients are named c0, c1, ...; got '" + key + "'");
      }
      top = std::max(top, std::stoi(key.substr(1)));
    }
    std::vector<double> coeffs;
    for (int i = 0; i <= top; ++i) coeffs.push_back(p.get("c" + std::to_string(i), 0.0));
    if (coeffs.empty()) coeffs.push_back(0.0);
    return SupportCurve::graph(coeffs, dom);
  }
  throw Error(ErrorKind::InvalidInput, "unknown support kind '" + kind + "'");
}

std::vector<std::pair<std::string, std::string>> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open config file " + path);
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorKind::InvalidInput, path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    out.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Stability and bifurcation of capillary channels on cylindrical supports", "capillary"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print this help and exit");

  auto* plane = app.add_subcommand("plane", "planar strip z = height");
  add_common(plane, cfg, "auto");
  plane->add_option("--height", cfg.height, "height of the strip");
  plane->add_option("--h", cfg.h, "channel length for spectrum and Morse index");
  plane->add_option("--n", cfg.n, "number of longitudinal modes (default: enough for the Morse index)");
  plane->add_option("--emit-plot", cfg.emit_plot, "write h,lambda_min,index CSV");

  auto* cyl = app.add_subcommand("cylinder", "section of a circular cylinder");
  add_common(cyl, cfg, "90");
  add_cylinder_opts(cyl, cfg);
  cyl->add_option("--tau0", cfg.tau0, "contact parameter on the support");
  cyl->add_option("--h", cfg.h, "channel length for spectrum and Morse index");
  cyl->add_option("--n", cfg.n, "number of longitudinal modes");
  cyl->add_option("--emit-plot", cfg.emit_plot, "write h,lambda_min,index CSV");

  auto* bif = app.add_subcommand("bifurcate", "scan the capillary cylinder family for bifurcation points");
  add_common(bif, cfg, "90");
  add_cylinder_opts(bif, cfg);
  bif->add_option("--tau", cfg.tau, "scan range lo:hi");
  bif->add_option("--emit-plot", cfg.emit_plot, "write tau,residual_v1,residual_v3 CSV");

  auto* spec = app.add_subcommand("spectrum", "labelled eigenvalues for a channel of length h");
  add_common(spec, cfg, "90");
  add_cylinder_opts(spec, cfg);
  spec->add_option("--height", cfg.height, "strip height (planar case)");
  spec->add_option("--tau0", cfg.tau0, "contact parameter (cylinder case)");
  spec->add_option("--h", cfg.h, "channel length");
  spec->add_option("--n", cfg.n, "number of longitudinal modes");

  auto* val = app.add_subcommand("validate", "compare analytic eigenvalues with the finite-difference oracle");
  add_common(val, cfg, "90");
  val->add_option("--case", cfg.case_name, "named reference case");
  val->add_option("--grid", cfg.grids, "grid size; repeat for a convergence estimate");

  auto* fam = app.add_subcommand("family", "sample the capillary cylinder family");
  add_common(fam, cfg, "90");
  add_cylinder_opts(fam, cfg);
  fam->add_option("--tau", cfg.tau, "range lo:hi");
  fam->add_option("--n", cfg.n, "number of samples");

  Emitter em{out, OutputFormat::Json};
  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = with_config(app, std::move(args));
    std::reverse(args.begin(), args.end());
    app.parse(args);
    for (auto* s : {plane, cyl, bif, spec, val, fam}) {
      if (s->parsed()) cfg.command = s->get_name();
    }
    em.format = cfg.output;

    if (cfg.command == "plane") return cmd_plane(cfg, em);
    if (cfg.command == "cylinder") return cmd_cylinder(cfg, em);
    if (cfg.command == "bifurcate") return cmd_bifurcate(cfg, em);
    if (cfg.command == "spectrum") return cmd_spectrum(cfg, em);
    if (cfg.command == "validate") return cmd_validate(cfg, em);
    if (cfg.command == "family") return cmd_family(cfg, em);
    return kInvalidInput;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? kOk : kInvalidInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (em.format == OutputFormat::Json) {
      out << json{{"command", cfg.command}, {"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}}.dump(2)
          << "\n";
    }
    return exit_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}

}  // namespace capillary::cli
