#include "qrtrig/report.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <system_error>
#include <unistd.h>

#include <fmt/format.h>

namespace qrtrig::report {

namespace {

constexpr int kResidualDigits = 6;

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string conjecture_kind(const lab::ConjectureReport& r) {
  if (r.outcome == lab::Outcome::Explored) return "exploration";
  if (r.sign_condition) return "sign-condition";
  if (r.predicted_form) return "exact-form";
  return "numeric-sum";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string decimal(const num::BigReal& x) { return x.to_string(); }

std::string decimal(const catalog::Value& v) {
  if (const auto* q = std::get_if<Rational>(&v)) return q->get_str();
  return std::get<num::BigComplex>(v).to_string();
}

std::int64_t Record::index() const {
  if (params.contains("p")) return params["p"].get<std::int64_t>();
  if (params.contains("n")) return params["n"].get<std::int64_t>();
  return 0;
}

Record from_check(const catalog::CheckResult& r) {
  Record out;
  out.id = r.id;
  out.kind = catalog::to_string(r.kind);
  if (r.params.n) out.params["n"] = *r.params.n;
  if (r.params.p) out.params["p"] = *r.params.p;
  if (r.params.a) out.params["a"] = *r.params.a;
  if (r.params.x) out.params["x"] = r.params.x->to_string();
  if (r.params.y) out.params["y"] = r.params.y->to_string();
  out.lhs = decimal(r.lhs);
  out.rhs = decimal(r.rhs);
  out.residual = r.residual.to_string(kResidualDigits);
  out.bits = r.bits_used;
  out.status = r.pass ? Status::Pass : Status::Fail;
  out.notes = r.notes;
  if (!r.rhs_exact.empty()) {
    out.notes = out.notes.empty() ? "rhs=" + r.rhs_exact : "rhs=" + r.rhs_exact + "; " + out.notes;
  }
  return out;
}

Record from_conjecture(const lab::ConjectureReport& r) {
  Record out;
  out.id = r.conjecture_id;
  out.kind = conjecture_kind(r);
  out.params["p"] = r.p;
  if (!r.variant.empty()) out.params["variant"] = r.variant;
  out.lhs = r.observed.to_string();
  out.rhs = r.predicted;
  if (r.predicted_value && !r.predicted.empty()) out.rhs += " = " + r.predicted_value->to_string();
  out.residual = r.residual.to_string(kResidualDigits);
  out.bits = r.bits_used;
  switch (r.outcome) {
    case lab::Outcome::Pass: out.status = Status::Pass; break;
    case lab::Outcome::Fail: out.status = Status::Fail; break;
    case lab::Outcome::Inconclusive:
    case lab::Outcome::Explored: out.status = Status::Inconclusive; break;
  }
  if (r.sign_condition) out.sign = r.sign;
  out.notes = r.notes;
  return out;
}

Summary ReportFile::summary() const {
  Summary s;
  for (const auto& r : records) {
    switch (r.status) {
      case Status::Pass: ++s.pass; break;
      case Status::Fail: ++s.fail; break;
      case Status::Inconclusive: ++s.inconclusive; break;
    }
  }
  return s;
}

void ReportFile::sort_records() {
  std::vector<std::size_t> order(records.size());
  std::vector<std::string> params(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    order[i] = i;
    params[i] = records[i].params.dump();
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const auto& a = records[x];
    const auto& b = records[y];
    if (a.id != b.id) return a.id < b.id;
    if (a.index() != b.index()) return a.index() < b.index();
    return params[x] < params[y];
  });
  std::vector<Record> sorted;
  sorted.reserve(records.size());
  for (auto i : order) sorted.push_back(std::move(records[i]));
  records = std::move(sorted);
}

Json to_json(const Record& r) {
  Json j;
  j["id"] = r.id;
  j["kind"] = r.kind;
  j["params"] = r.params;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["residual"] = r.residual;
  j["bits"] = r.bits;
  if (r.status == Status::Inconclusive) {
    j["inconclusive"] = true;
  } else {
    j["pass"] = r.status == Status::Pass;
  }
  if (r.sign) j["sign"] = *r.sign;
  if (!r.values.is_null()) j["values"] = r.values;
  j["notes"] = r.notes;
  return j;
}

Json to_json(const ReportFile& f) {
  Json j;
  j["header"]["version"] = f.version;
  j["header"]["config"] = f.config;
  j["header"]["timestamp"] = f.timestamp;
  j["records"] = Json::array();
  for (const auto& r : f.records) j["records"].push_back(to_json(r));
  const auto s = f.summary();
  j["summary"]["pass"] = s.pass;
  j["summary"]["fail"] = s.fail;
  j["summary"]["inconclusive"] = s.inconclusive;
  return j;
}

std::string render_json(const ReportFile& f) { return to_json(f).dump(2) + "\n"; }

std::string render_csv(const ReportFile& f) {
  std::string out = "id,kind,params,status,sign,residual,bits\n";
  for (const auto& r : f.records) {
    std::vector<std::string> params;
    for (const auto& [k, v] : r.params.items()) {
      params.push_back(k + "=" + (v.is_string() ? v.get<std::string>() : v.dump()));
    }
    out += fmt::format("{},{},{},{},{},{},{}\n", csv_field(r.id), csv_field(r.kind),
                       csv_field(fmt::format("{}", fmt::join(params, " "))), status_name(r.status),
                       r.sign ? std::to_string(*r.sign) : "", r.residual, r.bits);
  }
  return out;
}

void write_atomic(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += fmt::format(".tmp.{}", static_cast<long>(::getpid()));
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    os << contents;
    os.flush();
    if (!os) {
      os.close();
      std::error_code ec;
      fs::remove(tmp, ec);
      throw std::runtime_error("write to " + tmp.string() + " failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot move report into place at " + path);
  }
}

}  // namespace qrtrig::report
