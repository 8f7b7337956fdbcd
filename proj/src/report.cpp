#include "capillary/report.hpp"

#include <charconv>
#include <cmath>

#include "capillary/error.hpp"

namespace capillary {

NLOHMANN_JSON_SERIALIZE_ENUM(RootEquation, {
                                               {RootEquation::Exponential, "Exponential"},
                                               {RootEquation::TanMinus, "TanMinus"},
                                               {RootEquation::TanPlus, "TanPlus"},
                                           })

NLOHMANN_JSON_SERIALIZE_ENUM(Classification, {
                                                 {Classification::Unstable, "Unstable"},
                                                 {Classification::StronglyStable, "StronglyStable"},
                                                 {Classification::DegenerateCase, "DegenerateCase"},
                                             })

NLOHMANN_JSON_SERIALIZE_ENUM(BranchKind, {
                                             {BranchKind::ExpBranch, "ExpBranch"},
                                             {BranchKind::ZeroBranch, "ZeroBranch"},
                                             {BranchKind::TanMinusBranch, "TanMinusBranch"},
                                             {BranchKind::TanPlusBranch, "TanPlusBranch"},
                                         })

NLOHMANN_JSON_SERIALIZE_ENUM(BifurcationCase, {
                                                  {BifurcationCase::Subcritical, "Subcritical"},
                                                  {BifurcationCase::Unit, "Unit"},
                                                  {BifurcationCase::Supercritical, "Supercritical"},
                                              })

NLOHMANN_JSON_SERIALIZE_ENUM(EigenForm, {
                                            {EigenForm::Cos, "cos"},
                                            {EigenForm::Sin, "sin"},
                                            {EigenForm::Const, "const"},
                                            {EigenForm::Linear, "linear"},
                                            {EigenForm::Cosh, "cosh"},
                                        })

namespace {

template <class T>
void put_optional(json& j, const char* key, const std::optional<T>& v) {
  j[key] = v ? json(*v) : json(nullptr);
}

template <class T>
void get_optional(const json& j, const char* key, std::optional<T>& v) {
  if (!j.contains(key) || j.at(key).is_null()) {
    v.reset();
  } else {
    v = j.at(key).get<T>();
  }
}

}  // namespace

void to_json(json& j, const Interval& v) { j = json{{"lo", v.lo}, {"hi", v.hi}}; }
void from_json(const json& j, Interval& v) {
  j.at("lo").get_to(v.lo);
  j.at("hi").get_to(v.hi);
}

void to_json(json& j, const PlaneContact& v) {
  j = json{{"height", v.height}, {"tau0", v.tau0}, {"s0", v.s0}, {"gamma", v.gamma}, {"kappa0", v.kappa0}, {"q", v.q}};
}
void from_json(const json& j, PlaneContact& v) {
  j.at("height").get_to(v.height);
  j.at("tau0").get_to(v.tau0);
  j.at("s0").get_to(v.s0);
  j.at("gamma").get_to(v.gamma);
  j.at("kappa0").get_to(v.kappa0);
  j.at("q").get_to(v.q);
}

void to_json(json& j, const CylinderContact& v) {
  j = json{{"tau0", v.tau0}, {"s0", v.s0},         {"gamma", v.gamma},   {"delta", v.delta}, {"r", v.r},
           {"center_z", v.center_z}, {"kappa0", v.kappa0}, {"mu", v.mu}, {"q", v.q},         {"H", v.H}};
}
void from_json(const json& j, CylinderContact& v) {
  j.at("tau0").get_to(v.tau0);
  j.at("s0").get_to(v.s0);
  j.at("gamma").get_to(v.gamma);
  j.at("delta").get_to(v.delta);
  j.at("r").get_to(v.r);
  j.at("center_z").get_to(v.center_z);
  j.at("kappa0").get_to(v.kappa0);
  j.at("mu").get_to(v.mu);
  j.at("q").get_to(v.q);
  j.at("H").get_to(v.H);
}

void to_json(json& j, const RootRecord& v) {
  j = json{{"beta", v.beta},   {"equation", v.equation}, {"branch_k", v.branch_k}, {"ordinal", v.ordinal},
           {"lhs", v.lhs},     {"residual", v.residual}, {"bracket", v.bracket}};
}
void from_json(const json& j, RootRecord& v) {
  j.at("beta").get_to(v.beta);
  j.at("equation").get_to(v.equation);
  j.at("branch_k").get_to(v.branch_k);
  j.at("ordinal").get_to(v.ordinal);
  j.at("lhs").get_to(v.lhs);
  j.at("residual").get_to(v.residual);
  j.at("bracket").get_to(v.bracket);
}

void to_json(json& j, const StabilityVerdict& v) {
  j = json{{"classification", v.classification},
           {"reason", v.reason},
           {"marginal", v.marginal},
           {"governing", v.governing},
           {"roots", v.roots}};
  put_optional(j, "h0", v.h0);
}
void from_json(const json& j, StabilityVerdict& v) {
  j.at("classification").get_to(v.classification);
  get_optional(j, "h0", v.h0);
  j.at("reason").get_to(v.reason);
  j.at("marginal").get_to(v.marginal);
  j.at("governing").get_to(v.governing);
  j.at("roots").get_to(v.roots);
}

void to_json(json& j, const SpectrumEntry& v) {
  j = json{{"lambda", v.lambda}, {"n", v.n}, {"branch", v.branch}, {"k", v.k}, {"beta", v.beta}};
}
void from_json(const json& j, SpectrumEntry& v) {
  j.at("lambda").get_to(v.lambda);
  j.at("n").get_to(v.n);
  j.at("branch").get_to(v.branch);
  j.at("k").get_to(v.k);
  j.at("beta").get_to(v.beta);
}

void to_json(json& j, const Spectrum& v) { j = json{{"h", v.h}, {"entries", v.entries}}; }
void from_json(const json& j, Spectrum& v) {
  j.at("h").get_to(v.h);
  j.at("entries").get_to(v.entries);
}

void to_json(json& j, const BifurcationResult& v) {
  j = json{{"case", v.kind},
           {"tau0", v.tau0},
           {"s0", v.s0},
           {"r", v.r},
           {"beta", v.beta},
           {"center_z", v.center_z},
           {"mu", v.mu},
           {"gamma", v.gamma},
           {"delta", v.delta},
           {"transversal", v.transversal},
           {"multiplicity", v.multiplicity},
           {"eigenfunction", {{"form", v.form}, {"beta", v.beta}}},
           {"period", v.period}};
}
void from_json(const json& j, BifurcationResult& v) {
  j.at("case").get_to(v.kind);
  j.at("tau0").get_to(v.tau0);
  j.at("s0").get_to(v.s0);
  j.at("r").get_to(v.r);
  j.at("beta").get_to(v.beta);
  j.at("center_z").get_to(v.center_z);
  j.at("mu").get_to(v.mu);
  j.at("gamma").get_to(v.gamma);
  j.at("delta").get_to(v.delta);
  j.at("transversal").get_to(v.transversal);
  j.at("multiplicity").get_to(v.multiplicity);
  j.at("eigenfunction").at("form").get_to(v.form);
  j.at("period").get_to(v.period);
}

void to_json(json& j, const UnitCheck& v) {
  j = json{{"tau0", v.tau0}, {"s0", v.s0}, {"r", v.r}, {"mu", v.mu}, {"matched", v.matched}};
  put_optional(j, "sin_over_mu", v.sin_over_mu);
}
void from_json(const json& j, UnitCheck& v) {
  j.at("tau0").get_to(v.tau0);
  j.at("s0").get_to(v.s0);
  j.at("r").get_to(v.r);
  j.at("mu").get_to(v.mu);
  get_optional(j, "sin_over_mu", v.sin_over_mu);
  j.at("matched").get_to(v.matched);
}

void to_json(json& j, const DetectionReport& v) {
  j = json{{"candidates", v.candidates},
           {"unit_checks", v.unit_checks},
           {"certified", v.certified},
           {"explanation", v.explanation}};
}
void from_json(const json& j, DetectionReport& v) {
  j.at("candidates").get_to(v.candidates);
  j.at("unit_checks").get_to(v.unit_checks);
  j.at("certified").get_to(v.certified);
  j.at("explanation").get_to(v.explanation);
}

void to_json(json& j, const OracleReport& v) {
  j = json{{"label", v.label},
           {"analytic", v.analytic},
           {"numeric", v.numeric},
           {"N", v.N},
           {"grids", v.grids},
           {"grid_errors", v.grid_errors},
           {"max_rel_err", v.max_rel_err},
           {"max_abs_err", v.max_abs_err},
           {"tolerance", v.tolerance},
           {"passed", v.passed}};
  put_optional(j, "convergence_order", v.convergence_order);
}
void from_json(const json& j, OracleReport& v) {
  j.at("label").get_to(v.label);
  j.at("analytic").get_to(v.analytic);
  j.at("numeric").get_to(v.numeric);
  j.at("N").get_to(v.N);
  j.at("grids").get_to(v.grids);
  j.at("grid_errors").get_to(v.grid_errors);
  j.at("max_rel_err").get_to(v.max_rel_err);
  j.at("max_abs_err").get_to(v.max_abs_err);
  get_optional(j, "convergence_order", v.convergence_order);
  j.at("tolerance").get_to(v.tolerance);
  j.at("passed").get_to(v.passed);
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

CsvWriter::CsvWriter(std::ostream& out, const std::vector<std::string>& header) : out_(out), width_(header.size()) {
  row(header);
}

void CsvWriter::row(const std::vector<std::string>& fields) {
  if (fields.size() != width_) throw Error(ErrorKind::InvalidInput, "CSV row width does not match the header");
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out_ << ',';
    out_ << csv_field(fields[i]);
  }
  out_ << "\r\n";
}

void write_spectrum_csv(std::ostream& out, const Spectrum& s) {
  CsvWriter w(out, {"branch", "k", "n", "beta", "lambda"});
  for (const auto& e : s.entries) {
    w.row({std::string(to_string(e.branch)), std::to_string(e.k), std::to_string(e.n), format_number(e.beta),
           format_number(e.lambda)});
  }
}

}  // namespace capillary
