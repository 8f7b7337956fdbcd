#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "capillary/bifurcation.hpp"
#include "capillary/contact.hpp"
#include "capillary/oracle.hpp"
#include "capillary/roots.hpp"
#include "capillary/stability.hpp"

namespace capillary {

using nlohmann::json;

void to_json(json& j, const Interval& v);
void from_json(const json& j, Interval& v);
void to_json(json& j, const PlaneContact& v);
void from_json(const json& j, PlaneContact& v);
void to_json(json& j, const CylinderContact& v);
void from_json(const json& j, CylinderContact& v);
void to_json(json& j, const RootRecord& v);
void from_json(const json& j, RootRecord& v);
void to_json(json& j, const StabilityVerdict& v);
void from_json(const json& j, StabilityVerdict& v);
void to_json(json& j, const SpectrumEntry& v);
void from_json(const json& j, SpectrumEntry& v);
void to_json(json& j, const Spectrum& v);
void from_json(const json& j, Spectrum& v);
void to_json(json& j, const BifurcationResult& v);
void from_json(const json& j, BifurcationResult& v);
void to_json(json& j, const UnitCheck& v);
void from_json(const json& j, UnitCheck& v);
void to_json(json& j, const DetectionReport& v);
void from_json(const json& j, DetectionReport& v);
void to_json(json& j, const OracleReport& v);
void from_json(const json& j, OracleReport& v);

/// Shortest decimal text that reads back to the same double.
std::string format_number(double v);

/// RFC 4180 field: quoted when it holds a comma, quote, CR or LF.
std::string csv_field(std::string_view s);

class CsvWriter {
 public:
  CsvWriter(std::ostream& out, const std::vector<std::string>& header);
  void row(const std::vector<std::string>& fields);

 private:
  std::ostream& out_;
  std::size_t width_;
};

/// `branch,k,n,beta,lambda` rows.
void write_spectrum_csv(std::ostream& out, const Spectrum& s);

}  // namespace capillary
