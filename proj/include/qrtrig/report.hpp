#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "qrtrig/conjecture_lab.hpp"
#include "qrtrig/identity_catalog.hpp"

namespace qrtrig::report {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Inconclusive };

/// One row of a report, already projected to strings.
struct Record {
  std::string id;
  std::string kind;
  /// Key order is the emission order.
  Json params = Json::object();
  std::string lhs;
  std::string rhs;
  std::string residual;
  long bits = 0;
  Status status = Status::Fail;
  std::optional<int> sign;
  /// Named exact values (invariants records only).
  Json values;
  std::string notes;

  /// p when present, else n, else 0.
  std::int64_t index() const;
};

Record from_check(const catalog::CheckResult& r);
Record from_conjecture(const lab::ConjectureReport& r);

struct Summary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t inconclusive = 0;
};

struct ReportFile {
  std::string version;
  Json config = Json::object();
  std::string timestamp;
  std::vector<Record> records;

  Summary summary() const;
  /// Stable sort by (id, p or n, params).
  void sort_records();
};

Json to_json(const Record& r);
Json to_json(const ReportFile& f);
/// Two-space indented JSON with a trailing newline.
std::string render_json(const ReportFile& f);
/// Summary-level columns only: id,kind,params,status,sign,residual,bits.
std::string render_csv(const ReportFile& f);

/// Writes through a temporary file in the same directory and renames it
/// over `path`, so readers see either the old file or the whole new one.
void write_atomic(const std::string& path, const std::string& contents);

/// Decimal rendering used for every numeric field.
std::string decimal(const catalog::Value& v);
std::string decimal(const num::BigReal& x);

}  // namespace qrtrig::report
