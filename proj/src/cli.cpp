#include "qrtrig/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "CLI11.hpp"
#include "qrtrig/conjecture_lab.hpp"
#include "qrtrig/errors.hpp"
#include "qrtrig/identity_catalog.hpp"
#include "qrtrig/number_theory.hpp"
#include "qrtrig/quadratic_fields.hpp"

namespace qrtrig::cli {

namespace {

using catalog::CheckParams;
using catalog::ParamShape;
using report::Record;

std::int64_t parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw UsageError(fmt::format("{}: '{}' is not an integer", what, s));
  }
  if (used != s.size()) throw UsageError(fmt::format("{}: '{}' is not an integer", what, s));
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

num::PrecisionPolicy policy_of(const RunConfig& c) {
  num::PrecisionPolicy p;
  p.bits = c.bits;
  p.tolerance_bits = c.tolerance_bits;
  return p;
}

bool keep_residue(const RunConfig& c, std::int64_t p) {
  if (!c.residues) return true;
  const auto& [m, rs] = *c.residues;
  return std::find(rs.begin(), rs.end(), nt::mod(p, m)) != rs.end();
}

std::string valid_identity_list() {
  std::vector<std::string> ids;
  for (const auto& d : catalog::list_identities()) ids.push_back(d.id);
  return fmt::format("{}", fmt::join(ids, ", "));
}

bool is_family(const std::string& name) {
  try {
    catalog::family_members(name, 3);
  } catch (const NotFound&) {
    return false;
  } catch (const InvalidArgument&) {
  }
  return true;
}

Record failure_record(const std::string& id, const std::string& kind, report::Json params,
                      const std::string& what, long bits) {
  Record r;
  r.id = id;
  r.kind = kind;
  r.params = std::move(params);
  r.bits = bits;
  r.status = report::Status::Fail;
  r.notes = what;
  return r;
}

int exit_for(const report::ReportFile& f, bool allow_inconclusive) {
  const auto s = f.summary();
  if (s.fail > 0) return kFail;
  if (s.inconclusive > 0 && allow_inconclusive) return kInconclusive;
  return kPass;
}

RunOutcome finish(RunOutcome out, const RunConfig& c, bool allow_inconclusive) {
  out.report.version = kVersion;
  out.report.config = c.to_json();
  out.report.timestamp = c.timestamp;
  out.report.sort_records();
  out.exit_code = exit_for(out.report, allow_inconclusive);
  return out;
}

void verify_catalog_id(const RunConfig& c, const catalog::IdentityDescriptor& d, RunOutcome& out) {
  const auto policy = policy_of(c);
  const auto& s = d.params;
  std::size_t skipped = 0;

  auto run_one = [&](const CheckParams& params) {
    try {
      out.report.records.push_back(report::from_check(catalog::check(d.id, params, policy)));
    } catch (const InvalidArgument&) {
      ++skipped;
    } catch (const std::exception& e) {
      report::Json pj = report::Json::object();
      if (params.n) pj["n"] = *params.n;
      if (params.p) pj["p"] = *params.p;
      if (params.a) pj["a"] = *params.a;
      if (params.x) pj["x"] = params.x->to_string();
      if (params.y) pj["y"] = params.y->to_string();
      out.report.records.push_back(
          failure_record(d.id, catalog::to_string(d.kind), std::move(pj), e.what(), c.bits));
    }
  };

  if (s.shape == ParamShape::Prime) {
    const Range r = c.primes.value_or(Range{s.p_min, s.sample_p_max});
    for (auto p : nt::primes_between(r.first, r.second)) {
      if (p < 3 || !keep_residue(c, p)) continue;
      if (p < s.p_min ||
          std::find(s.residues.begin(), s.residues.end(), nt::mod(p, s.modulus)) == s.residues.end()) {
        ++skipped;
        continue;
      }
      if (!s.uses_a) {
        CheckParams params;
        params.p = p;
        run_one(params);
        continue;
      }
      for (auto a : c.a) {
        if (nt::mod(a, p) == 0) {
          ++skipped;
          continue;
        }
        CheckParams params;
        params.p = p;
        params.a = a;
        run_one(params);
      }
    }
  } else {
    const Range r = c.n.value_or(Range{1, s.sample_n_max});
    for (std::int64_t n = std::max<std::int64_t>(r.first, 1); n <= r.second; ++n) {
      if (s.odd_n && n % 2 == 0) continue;
      if (s.shape == ParamShape::N) {
        CheckParams params;
        params.n = n;
        run_one(params);
        continue;
      }
      if (!c.seed) throw UsageError(fmt::format("{} samples its parameters: --seed is required", d.id));
      for (const auto& params : catalog::sample_params_at(d.id, n, *c.seed, c.samples)) run_one(params);
    }
  }
  if (skipped) {
    out.diagnostics.push_back(
        fmt::format("{}: skipped {} parameter points outside {}", d.id, skipped, s.describe()));
  }
}

void verify_family(const RunConfig& c, const std::string& family, RunOutcome& out) {
  const auto policy = policy_of(c);
  const Range r = c.primes.value_or(Range{3, 499});
  std::size_t skipped = 0;
  for (auto p : nt::primes_between(r.first, r.second)) {
    if (p < 3 || !keep_residue(c, p)) continue;
    try {
      catalog::family_members(family, p);
    } catch (const InvalidArgument&) {
      ++skipped;
      continue;
    }
    for (auto a : c.a) {
      if (nt::mod(a, p) == 0) {
        ++skipped;
        continue;
      }
      try {
        for (const auto& res : catalog::check_theorem_family(family, p, a, policy)) {
          out.report.records.push_back(report::from_check(res));
        }
      } catch (const InvalidArgument&) {
        ++skipped;
      } catch (const std::exception& e) {
        out.report.records.push_back(
            failure_record(family, "family", report::Json{{"p", p}, {"a", a}}, e.what(), c.bits));
      }
    }
  }
  if (skipped) out.diagnostics.push_back(fmt::format("{}: skipped {} (p, a) points", family, skipped));
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string utc_from_epoch(std::int64_t secs) {
  const std::time_t t = static_cast<std::time_t>(secs);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// --timestamp wins, then SOURCE_DATE_EPOCH, then the epoch itself, so that
/// reruns are byte-identical unless a wall-clock stamp is asked for.
std::string resolve_timestamp(const std::string& flag) {
  if (flag == "now") return utc_now();
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("SOURCE_DATE_EPOCH"); env && *env) {
    return utc_from_epoch(parse_int(env, "SOURCE_DATE_EPOCH"));
  }
  return utc_from_epoch(0);
}

}  // namespace

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.first = r.second = parse_int(text, "range");
  } else {
    r.first = parse_int(text.substr(0, dots), "range");
    r.second = parse_int(text.substr(dots + 2), "range");
  }
  if (r.first > r.second) throw UsageError(fmt::format("range '{}' is empty", text));
  return r;
}

std::pair<std::int64_t, std::vector<std::int64_t>> parse_residues(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("--residues expects m:r1,r2,...");
  const auto m = parse_int(text.substr(0, colon), "--residues modulus");
  if (m < 1) throw UsageError("--residues modulus must be positive");
  std::vector<std::int64_t> rs;
  for (const auto& part : split(text.substr(colon + 1), ',')) rs.push_back(nt::mod(parse_int(part, "--residues"), m));
  std::sort(rs.begin(), rs.end());
  rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
  return {m, rs};
}

void RunConfig::validate() const {
  if (command != "verify" && command != "scan" && command != "invariants" && command != "explore") {
    throw UsageError("unknown command '" + command + "'");
  }
  if (bits < 64) throw UsageError("--bits must be at least 64");
  if (tolerance_bits && *tolerance_bits < 1) throw UsageError("--tolerance-bits must be positive");
  if (samples < 1) throw UsageError("--samples must be at least 1");
  if (pell_bound < 1) throw UsageError("--pell-bound must be positive");
  if (format != "json" && format != "csv") throw UsageError("--format must be json or csv");
  if (primes && primes->first > primes->second) throw UsageError("--primes range is empty");
  if (n && n->first > n->second) throw UsageError("--n range is empty");
  if (root.second < 1) throw UsageError("--root denominator must be positive");
  if (command == "verify" && identities.empty()) throw UsageError("verify needs --identities");
  if (command == "scan" && conjecture.empty()) throw UsageError("scan needs --conjecture");
}

report::Json RunConfig::to_json() const {
  report::Json j;
  j["command"] = command;
  if (command == "verify") j["identities"] = identities;
  if (command == "scan") j["conjecture"] = conjecture;
  if (primes) j["primes"] = fmt::format("{}..{}", primes->first, primes->second);
  if (n) j["n"] = fmt::format("{}..{}", n->first, n->second);
  j["bits"] = bits;
  if (tolerance_bits) j["tolerance_bits"] = *tolerance_bits;
  if (command == "verify") {
    j["samples"] = samples;
    j["a"] = a;
  }
  if (seed) j["seed"] = *seed;
  if (command == "scan") j["pell_bound"] = pell_bound;
  if (residues) j["residues"] = fmt::format("{}:{}", residues->first, fmt::join(residues->second, ","));
  if (command == "explore") j["root"] = fmt::format("{}/{}", root.first, root.second);
  j["format"] = format;
  return j;
}

RunOutcome run_verify(const RunConfig& c) {
  c.validate();
  std::vector<std::string> ids;
  for (const auto& id : c.identities) {
    if (id == "all") {
      for (const auto& d : catalog::list_identities()) ids.push_back(d.id);
    } else {
      ids.push_back(id);
    }
  }
  for (const auto& id : ids) {
    bool known = true;
    try {
      catalog::lookup(id);
    } catch (const NotFound&) {
      known = is_family(id);
    }
    if (!known) {
      throw UsageError(fmt::format("unknown identity '{}'; valid ids: {}", id, valid_identity_list()));
    }
  }

  RunOutcome out;
  for (const auto& id : ids) {
    const catalog::IdentityDescriptor* desc = nullptr;
    try {
      desc = &catalog::lookup(id);
    } catch (const NotFound&) {
    }
    if (desc) {
      verify_catalog_id(c, *desc, out);
    } else {
      verify_family(c, id, out);
    }
  }
  return finish(std::move(out), c, false);
}

RunOutcome run_scan(const RunConfig& c) {
  c.validate();
  const auto& ids = lab::conjecture_ids();
  if (std::find(ids.begin(), ids.end(), c.conjecture) == ids.end() && c.conjecture != "h" &&
      c.conjecture != "4.3") {
    throw UsageError(fmt::format("unknown conjecture '{}'; valid ids: {}, h, 4.3", c.conjecture,
                                 fmt::join(ids, ", ")));
  }
  lab::ScanRange range;
  if (c.primes) {
    range.p_min = c.primes->first;
    range.p_max = c.primes->second;
  }
  if (c.residues) {
    range.modulus = c.residues->first;
    range.residues = c.residues->second;
  }
  range.pell_bound = c.pell_bound;

  RunOutcome out;
  std::vector<std::int64_t> skipped;
  std::vector<lab::ConjectureReport> reports;
  try {
    reports = lab::scan_conjecture(c.conjecture, range, policy_of(c), &skipped);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  for (const auto& r : reports) out.report.records.push_back(report::from_conjecture(r));
  if (!skipped.empty()) {
    out.diagnostics.push_back(
        fmt::format("{}: skipped {} primes outside the hypothesis", c.conjecture, skipped.size()));
  }
  return finish(std::move(out), c, true);
}

RunOutcome run_invariants(const RunConfig& c) {
  c.validate();
  const Range r = c.primes.value_or(Range{3, 100});
  RunOutcome out;
  for (auto p : nt::primes_between(r.first, r.second)) {
    if (p < 3 || !keep_residue(c, p)) continue;
    Record rec;
    rec.id = "invariants";
    rec.kind = "exact-integer";
    rec.params["p"] = p;
    rec.residual = "0";
    rec.values = report::Json::object();
    try {
      const auto unit = qf::fundamental_unit(p);
      const std::int64_t h_imag = qf::class_number_imag(qf::imag_field_discriminant(p));
      const qf::QuadElem eps_h(unit.unit.d(), unit.a_p, unit.b_p);
      rec.values["h(-p)"] = h_imag;
      rec.values["h(p)"] = unit.h_real;
      rec.values["eps"] = unit.unit.to_string();
      rec.values["norm"] = unit.norm;
      rec.values["eps^h"] = eps_h.to_string();
      rec.values["a_p"] = unit.a_p.get_str();
      rec.values["b_p"] = unit.b_p.get_str();
      rec.lhs = eps_h.to_string();
      rec.status = report::Status::Pass;
      if (p % 4 == 3) {
        const auto st = qf::st_values(unit);
        rec.values["s"] = st.s.get_str();
        rec.values["t"] = st.t.get_str();
        // eps^h = ((s + t sqrt p)^2) / 2 written out exactly.
        const Rational pq(Int(static_cast<long>(p)));
        const qf::QuadElem sq(unit.unit.d(), (Rational(st.s * st.s) + pq * Rational(st.t * st.t)) / 2,
                              Rational(st.s * st.t));
        rec.rhs = "(s+t*sqrt(p))^2/2 = " + sq.to_string();
        if (!(sq == eps_h)) {
          rec.status = report::Status::Fail;
          rec.notes = "eps^h differs from (s+t*sqrt(p))^2/2";
        }
      }
    } catch (const IntegrityFailure& e) {
      rec.status = report::Status::Fail;
      rec.notes = std::string("integrity-failure: ") + e.what();
    }
    out.report.records.push_back(std::move(rec));
  }
  return finish(std::move(out), c, false);
}

RunOutcome run_explore(const RunConfig& c) {
  c.validate();
  const Range r = c.primes.value_or(Range{5, 100});
  RunOutcome out;
  for (auto p : nt::primes_between(r.first, r.second)) {
    if (p <= 3 || !keep_residue(c, p)) continue;
    out.report.records.push_back(
        report::from_conjecture(lab::explore_s_poly(p, c.root.first, c.root.second, policy_of(c))));
  }
  auto done = finish(std::move(out), c, false);
  done.exit_code = kPass;  // explorations carry no verdict
  return done;
}

RunOutcome run(const RunConfig& c) {
  if (c.command == "verify") return run_verify(c);
  if (c.command == "scan") return run_scan(c);
  if (c.command == "invariants") return run_invariants(c);
  if (c.command == "explore") return run_explore(c);
  c.validate();
  return {};
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Trigonometric sums over quadratic residues: identity checks, invariants and conjecture scans"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  std::string identities, conjecture, primes, n_range, a_list, residues, root, timestamp;
  RunConfig c;
  std::optional<long> tolerance_bits;
  std::optional<std::uint64_t> seed;

  app.set_config("--config", "", "key=value file; flags on the command line win");
  app.add_option("--identities", identities, "comma-separated ids, theorem families, or 'all'");
  app.add_option("--conjecture", conjecture, "5.2, 5.5, 5.3i, 5.3ii, 5.3iii, 5.3iv, remark5.2, h or 4.3");
  app.add_option("--primes", primes, "prime range A..B");
  app.add_option("--n", n_range, "n range A..B");
  app.add_option("--bits", c.bits, "working precision")->capture_default_str();
  app.add_option("--tolerance-bits", tolerance_bits, "pass iff residual <= 2^-N (default bits/2)");
  app.add_option("--samples", c.samples, "samples per n for identities with free parameters")->capture_default_str();
  app.add_option("--seed", seed, "sampling seed");
  app.add_option("--pell-bound", c.pell_bound, "largest y tried in Pell-type searches")->capture_default_str();
  app.add_option("--a", a_list, "comma-separated values of a (default 1)");
  app.add_option("--residues", residues, "keep primes with p mod m in {r...}: m:r1,r2");
  app.add_option("--root", root, "explore: root of unity j/m (default 1/4)");
  app.add_option("--out", c.out, "report path (default stdout)");
  app.add_option("--format", c.format, "json or csv")->capture_default_str();
  app.add_option("--timestamp", timestamp, "header timestamp; 'now' for the wall clock");

  app.add_subcommand("verify", "check catalog identities and theorem families");
  app.add_subcommand("scan", "scan a conjecture over a prime range");
  app.add_subcommand("invariants", "class numbers, units and s, t per prime");
  app.add_subcommand("explore", "evaluate S_p at a root of unity and try to recognize it");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    c.command = app.get_subcommands().front()->get_name();
    if (!identities.empty()) {
      for (auto& id : split(identities, ',')) {
        if (!id.empty()) c.identities.push_back(id);
      }
    }
    c.conjecture = conjecture;
    if (!primes.empty()) c.primes = parse_range(primes);
    if (!n_range.empty()) c.n = parse_range(n_range);
    c.tolerance_bits = tolerance_bits;
    c.seed = seed;
    if (!a_list.empty()) {
      c.a.clear();
      for (const auto& part : split(a_list, ',')) c.a.push_back(parse_int(part, "--a"));
    }
    if (!residues.empty()) c.residues = parse_residues(residues);
    if (!root.empty()) {
      const auto slash = root.find('/');
      if (slash == std::string::npos) throw UsageError("--root expects j/m");
      c.root = {parse_int(root.substr(0, slash), "--root"), parse_int(root.substr(slash + 1), "--root")};
    }
    c.timestamp = resolve_timestamp(timestamp);

    const RunOutcome result = run(c);
    for (const auto& d : result.diagnostics) err << d << "\n";
    const auto s = result.report.summary();
    err << fmt::format("pass {} fail {} inconclusive {}\n", s.pass, s.fail, s.inconclusive);

    const std::string text =
        c.format == "csv" ? report::render_csv(result.report) : report::render_json(result.report);
    if (c.out.empty()) {
      out << text;
    } else {
      report::write_atomic(c.out, text);
    }
    return result.exit_code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const NotFound& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFail;
  }
}

}  // namespace qrtrig::cli
