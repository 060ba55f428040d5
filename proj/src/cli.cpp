#include "psl4cd/cli.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "psl4cd/eliminator.hpp"
#include "psl4cd/lemmas.hpp"
#include "psl4cd/subgroups.hpp"

namespace psl4cd {

namespace {

using Json = nlohmann::ordered_json;

Json check_json(const CheckReport& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) witnesses.push_back({{"label", w.label}, {"values", w.values}});
  return {{"id", r.id}, {"status", status_name(r.status)}, {"witnesses", witnesses}, {"details", r.details}};
}

Json checks_json(const std::vector<CheckReport>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) out.push_back(check_json(c));
  return out;
}

Json summary_json(const Summary& s) {
  return {{"total", s.total}, {"pass", s.pass}, {"fail", s.fail}, {"vacuous", s.vacuous}};
}

std::string range_text(const std::pair<std::uint64_t, std::uint64_t>& range) {
  return std::to_string(range.first) + ".." + std::to_string(range.second);
}

std::string cell(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

const DegreeRow* row_for(const DegreeExpr& x) {
  static const std::map<DegreeExpr, const DegreeRow*> rows = [] {
    std::map<DegreeExpr, const DegreeRow*> out;
    for (const auto& row : psl4_degree_rows()) out.emplace(row.expr, &row);
    return out;
  }();
  auto it = rows.find(x);
  return it == rows.end() ? nullptr : it->second;
}

std::vector<std::string> entry_conditions(const DegreeEntry& entry) {
  std::vector<std::string> out;
  for (const auto& x : entry.exprs) {
    const DegreeRow* row = row_for(x);
    out.push_back(row ? row->condition.describe() : "");
  }
  return out;
}

std::vector<std::string> entry_notes(const DegreeEntry& entry) {
  std::vector<std::string> out;
  for (const auto& x : entry.exprs) {
    const DegreeRow* row = row_for(x);
    out.push_back(row ? row->note : "");
  }
  return out;
}

std::vector<std::string> entry_exprs(const DegreeEntry& entry) {
  std::vector<std::string> out;
  for (const auto& x : entry.exprs) out.push_back(format_expr(x));
  return out;
}

PrimePowerQ command_q(std::uint64_t q) {
  const PrimePowerQ out = PrimePowerQ::from(q);
  if (q < kMinQ) throw DomainError("q = " + std::to_string(q) + " is below the supported minimum " + std::to_string(kMinQ));
  if (q > kMaxQ) throw DomainError("q = " + std::to_string(q) + " exceeds the supported maximum " + std::to_string(kMaxQ));
  return out;
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  const u128 v = parse_u128(text);
  if (v > std::numeric_limits<std::uint64_t>::max()) throw DomainError(what + " is too large: " + text);
  return static_cast<std::uint64_t>(v);
}

unsigned default_jobs() {
  if (const char* env = std::getenv("PSL4CD_JOBS")) {
    try {
      const std::uint64_t v = parse_u64(env, "PSL4CD_JOBS");
      if (v >= 1 && v <= 256) return static_cast<unsigned>(v);
    } catch (const DomainError&) {
    }
  }
  return 1;
}

struct Options {
  std::string format = "json";
  unsigned jobs = 1;
  bool timing = false;
  std::string sporadic_data;
  std::string q;
  std::string q_range;
  std::string mode = "certain";
  std::vector<std::string> checks = {"all"};
  std::vector<std::string> positional;
};

// q values selected by --q or --q-range; exactly one must be given.
std::vector<std::uint64_t> selected_qs(const Options& o, std::optional<std::uint64_t>& single,
                                       std::optional<std::pair<std::uint64_t, std::uint64_t>>& range) {
  if (o.q.empty() == o.q_range.empty()) throw DomainError("give exactly one of --q and --q-range");
  if (!o.q.empty()) {
    single = command_q(parse_u64(o.q, "q")).q();
    return {*single};
  }
  range = parse_q_range(o.q_range);
  if (range->first < kMinQ) throw DomainError("q-range starts below the supported minimum " + std::to_string(kMinQ));
  if (range->second > kMaxQ) throw DomainError("q-range exceeds the supported maximum " + std::to_string(kMaxQ));
  auto qs = prime_powers_in(range->first, range->second);
  if (qs.empty()) throw DomainError("q-range " + o.q_range + " contains no prime power");
  return qs;
}

std::vector<std::string> expand_checks(const std::vector<std::string>& requested) {
  std::vector<std::string> out;
  for (const auto& id : requested) {
    if (id == "all") {
      for (const auto& all : check_ids()) out.push_back(all);
    } else if (std::find(check_ids().begin(), check_ids().end(), id) != check_ids().end()) {
      out.push_back(id);
    } else {
      throw DomainError("unknown check id '" + id + "'");
    }
  }
  std::vector<std::string> unique;
  for (const auto& id : out) {
    if (std::find(unique.begin(), unique.end(), id) == unique.end()) unique.push_back(id);
  }
  return unique;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void emit(std::ostream& out, const std::string& format, const RunReport& report) {
  out << (format == "md" ? to_markdown(report) : to_json(report) + "\n");
}

int exit_for(const RunReport& report) { return tally(report.results).fail == 0 ? kExitPass : kExitFail; }

int cmd_degrees(const Options& o, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  if (o.q.empty()) throw DomainError("degrees needs --q");
  const DegreeSet set = degree_set(command_q(parse_u64(o.q, "q")));
  DegreesReport report = degrees_report(set, o.mode);
  if (o.timing) report.duration_ms = elapsed_ms(start);
  out << (o.format == "md" ? to_markdown(report) : to_json(report) + "\n");
  return kExitPass;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  report.command = "verify";
  const auto qs = selected_qs(o, report.q, report.q_range);
  const auto ids = expand_checks(o.checks);
  report.results = sweep(
      qs,
      [&](std::uint64_t q) {
        const DegreeSet set = degree_set(PrimePowerQ::from(q));
        QResult r{q, {}};
        for (const auto& id : ids) r.checks.push_back(run_check(id, set));
        return r;
      },
      o.jobs);
  if (o.timing) report.duration_ms = elapsed_ms(start);
  emit(out, o.format, report);
  return exit_for(report);
}

int cmd_eliminate(const Options& o, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  report.command = "eliminate";
  const auto qs = selected_qs(o, report.q, report.q_range);
  const auto facts = o.sporadic_data.empty() ? default_sporadic_facts() : load_sporadic_facts(o.sporadic_data);
  report.results = sweep(
      qs,
      [&](std::uint64_t q) {
        const DegreeSet set = degree_set(PrimePowerQ::from(q));
        return QResult{q, {trace_report(run_elimination(set, facts))}};
      },
      o.jobs);
  if (o.timing) report.duration_ms = elapsed_ms(start);
  emit(out, o.format, report);
  return exit_for(report);
}

int cmd_zsigmondy(const Options& o, std::ostream& out) {
  if (o.positional.size() != 2) throw DomainError("zsigmondy needs q and k");
  const u128 q = parse_u128(o.positional[0]);
  const u128 k = parse_u128(o.positional[1]);
  if (k > 1000) throw DomainError("zsigmondy: k is too large");
  const ZsigmondyResult z = zsigmondy(q, static_cast<unsigned>(k));
  if (z.primitives.empty()) {
    out << "none\n";
    return kExitPass;
  }
  std::vector<std::string> primes;
  for (u128 l : z.primitives) primes.push_back(to_string(l));
  out << join(primes, " ") << " (smallest " << to_string(*z.smallest) << ")\n";
  return kExitPass;
}

int cmd_factor(const Options& o, std::ostream& out) {
  if (o.positional.size() != 1) throw DomainError("factor needs n");
  out << factorize(parse_u128(o.positional[0])).to_string() << "\n";
  return kExitPass;
}

int cmd_power(const Options& o, std::ostream& out) {
  if (o.positional.size() != 1) throw DomainError("power needs n");
  const u128 n = parse_u128(o.positional[0]);
  if (auto pp = is_perfect_power(n)) {
    out << to_string(pp->base) << "^" << pp->exponent << "\n";
  } else {
    out << to_string(n) << " is not a perfect power\n";
  }
  return kExitPass;
}

int cmd_tables(const Options& o, std::ostream& out) {
  if (o.format == "md") {
    out << "# Degree rows\n\n| expression | condition |\n|---|---|\n";
    for (const auto& row : psl4_degree_rows()) {
      out << "| " << cell(format_expr(row.expr)) << " | " << cell(row.condition.describe()) << " |\n";
    }
    out << "\n# Maximal subgroup rows\n\n| ambient | id | structure | condition | index |\n|---|---|---|---|---|\n";
    for (Ambient a : {Ambient::PSL4, Ambient::PSL2, Ambient::PSL3, Ambient::PSp4}) {
      for (const auto& row : subgroup_rows(a)) {
        out << "| " << ambient_name(a) << " | " << cell(row.id) << " | " << cell(row.structure) << " | "
            << cell(row.condition) << " | " << cell(row.index_source) << " |\n";
      }
    }
    return kExitPass;
  }
  Json degrees = Json::array();
  for (const auto& row : psl4_degree_rows()) {
    degrees.push_back(
        {{"expr", format_expr(row.expr)}, {"condition", row.condition.describe()}, {"note", row.note}});
  }
  Json subgroups = Json::array();
  for (Ambient a : {Ambient::PSL4, Ambient::PSL2, Ambient::PSL3, Ambient::PSp4}) {
    for (const auto& row : subgroup_rows(a)) {
      subgroups.push_back({{"ambient", ambient_name(a)},
                           {"id", row.id},
                           {"structure", row.structure},
                           {"condition", row.condition},
                           {"index", row.index_source}});
    }
  }
  Json doc = {{"tool", kToolName}, {"version", kToolVersion}, {"degree_rows", degrees}, {"subgroup_rows", subgroups}};
  out << doc.dump(2) << "\n";
  return kExitPass;
}

}  // namespace

Summary tally(const std::vector<QResult>& results) {
  Summary s;
  for (const auto& r : results) {
    for (const auto& c : r.checks) {
      ++s.total;
      switch (c.status) {
        case Status::pass: ++s.pass; break;
        case Status::fail: ++s.fail; break;
        case Status::vacuous: ++s.vacuous; break;
      }
    }
  }
  return s;
}

std::string to_json(const RunReport& report) {
  Json doc = {{"tool", kToolName}, {"version", kToolVersion}, {"command", report.command}};
  if (report.q && report.results.size() == 1) {
    doc["q"] = *report.q;
    doc["checks"] = checks_json(report.results.front().checks);
  } else {
    if (report.q_range) doc["q_range"] = range_text(*report.q_range);
    Json results = Json::array();
    for (const auto& r : report.results) results.push_back({{"q", r.q}, {"checks", checks_json(r.checks)}});
    doc["results"] = results;
  }
  doc["summary"] = summary_json(tally(report.results));
  if (report.duration_ms) doc["duration_ms"] = *report.duration_ms;
  return doc.dump(2);
}

std::string to_markdown(const RunReport& report) {
  std::ostringstream out;
  out << "# " << kToolName << " " << report.command;
  if (report.q) out << " q=" << *report.q;
  if (report.q_range) out << " q-range " << range_text(*report.q_range);
  out << "\n\n";
  for (const auto& r : report.results) {
    out << "## q = " << r.q << "\n\n| check | status | details |\n|---|---|---|\n";
    for (const auto& c : r.checks) {
      out << "| " << cell(c.id) << " | " << status_name(c.status) << " | " << cell(c.details) << " |\n";
    }
    out << "\n";
    for (const auto& c : r.checks) {
      out << "### " << c.id << "\n\n";
      for (const auto& w : c.witnesses) out << "- " << w.label << ": " << join(w.values, ", ") << "\n";
      out << "\n";
    }
  }
  const Summary s = tally(report.results);
  out << "**summary**: total " << s.total << ", pass " << s.pass << ", fail " << s.fail << ", vacuous " << s.vacuous
      << "\n";
  if (report.duration_ms) out << "\nduration: " << *report.duration_ms << " ms\n";
  return out.str();
}

DegreesReport degrees_report(const DegreeSet& set, const std::string& mode) {
  DegreesReport out;
  out.q = set.q.q();
  out.mode = mode;
  if (mode == "certain") {
    out.entries = set.certain;
  } else if (mode == "possible") {
    out.entries = set.possible;
  } else {
    throw DomainError("mode must be 'certain' or 'possible'");
  }
  out.audit = set.audit;
  return out;
}

std::string to_json(const DegreesReport& report) {
  Json degrees = Json::array();
  std::size_t nontrivial = 0;
  for (const auto& e : report.entries) {
    if (e.value != 1) ++nontrivial;
    degrees.push_back({{"value", to_string(e.value)}, {"exprs", entry_exprs(e)}, {"conditions", entry_conditions(e)},
                       {"notes", entry_notes(e)}});
  }
  Json doc = {{"tool", kToolName},
              {"version", kToolVersion},
              {"command", "degrees"},
              {"q", report.q},
              {"mode", report.mode},
              {"degrees", degrees},
              {"audit", report.audit},
              {"summary", {{"degrees", report.entries.size()}, {"nontrivial", nontrivial}}}};
  if (report.duration_ms) doc["duration_ms"] = *report.duration_ms;
  return doc.dump(2);
}

std::string to_markdown(const DegreesReport& report) {
  std::ostringstream out;
  out << "# " << kToolName << " degrees q=" << report.q << " (" << report.mode << ")\n\n";
  out << "| value | expressions | conditions |\n|---|---|---|\n";
  std::size_t nontrivial = 0;
  for (const auto& e : report.entries) {
    if (e.value != 1) ++nontrivial;
    out << "| " << to_string(e.value) << " | " << cell(join(entry_exprs(e), ", ")) << " | "
        << cell(join(entry_conditions(e), ", ")) << " |\n";
  }
  out << "\n**summary**: " << report.entries.size() << " degrees, " << nontrivial << " nontrivial\n";
  if (!report.audit.empty()) {
    out << "\n## audit\n\n";
    for (const auto& line : report.audit) out << "- " << line << "\n";
  }
  if (report.duration_ms) out << "\nduration: " << *report.duration_ms << " ms\n";
  return out.str();
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = {"3.1", "3.2", "3.3", "3.4", "3.5", "s4",
                                               "s6",  "7.1", "7.2", "7.3", "7.4"};
  return ids;
}

CheckReport run_check(const std::string& id, const DegreeSet& set) {
  if (id == "3.1") return check_coprime_degree_is_steinberg(set);
  if (id == "3.2") return check_maximal_degrees(set);
  if (id == "3.3") return check_coprime_and_consecutive_pairs(set);
  if (id == "3.4") return check_power_degrees(set);
  if (id == "3.5") return check_sl4_half_degree_absent(set);
  if (id == "s4") return check_steinberg_arithmetic(set);
  if (id == "s6") return check_automorphism_arithmetic(set);
  if (id == "7.1") return check_psl4_subgroup_filter(set);
  if (id == "7.2") return check_psl2_subgroup_indices(set.q);
  if (id == "7.3") return check_psl3_subgroup_indices(set.q);
  if (id == "7.4") return check_psp4_subgroup_indices(set.q);
  throw DomainError("unknown check id '" + id + "'");
}

std::vector<QResult> sweep(const std::vector<std::uint64_t>& qs, const std::function<QResult(std::uint64_t)>& work,
                           unsigned jobs) {
  std::vector<QResult> results(qs.size());
  const unsigned workers = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(qs.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < qs.size(); ++i) results[i] = work(qs[i]);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  for (unsigned t = 0; t < workers; ++t) {
    threads.emplace_back([&, t] {
      try {
        for (std::size_t i = next++; i < qs.size(); i = next++) results[i] = work(qs[i]);
      } catch (...) {
        errors[t] = std::current_exception();
        next = qs.size();
      }
    });
  }
  for (auto& th : threads) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

std::pair<std::uint64_t, std::uint64_t> parse_q_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw DomainError("q-range must look like A..B, got '" + text + "'");
  const std::uint64_t lo = parse_u64(text.substr(0, dots), "q-range start");
  const std::uint64_t hi = parse_u64(text.substr(dots + 2), "q-range end");
  if (lo > hi) throw DomainError("q-range start exceeds its end: '" + text + "'");
  return {lo, hi};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  o.jobs = default_jobs();

  CLI::App app{"Exact-arithmetic checks of the character-degree characterization of PSL4(q)", kToolName};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "md"}));
  app.add_option("--jobs", o.jobs, "Worker threads for range sweeps (default: PSL4CD_JOBS or 1)")
      ->check(CLI::Range(1U, 256U));
  app.add_flag("--timing", o.timing, "Add the wall-clock duration to the report");

  auto* degrees = app.add_subcommand("degrees", "List the degree set of PSL4(q)");
  degrees->add_option("--q", o.q, "Prime power q >= 13")->required();
  degrees->add_option("--mode", o.mode, "certain or possible")->check(CLI::IsMember({"certain", "possible"}));

  auto* verify = app.add_subcommand("verify", "Run lemma and subgroup checks");
  verify->add_option("--q", o.q, "Prime power q >= 13");
  verify->add_option("--q-range", o.q_range, "Inclusive range A..B");
  verify->add_option("--check", o.checks, "Check ids, comma separated, or all")->delimiter(',');

  auto* eliminate = app.add_subcommand("eliminate", "Run the simple-group case elimination");
  eliminate->add_option("--q", o.q, "Prime power q >= 13");
  eliminate->add_option("--q-range", o.q_range, "Inclusive range A..B");
  eliminate->add_option("--sporadic-data", o.sporadic_data, "Sporadic fact file replacing the built-in table");

  auto* zsig = app.add_subcommand("zsigmondy", "Primitive prime divisors of q^k - 1");
  zsig->add_option("values", o.positional, "q k")->expected(2);
  auto* factor = app.add_subcommand("factor", "Prime factorization of n");
  factor->add_option("n", o.positional, "n")->expected(1);
  auto* power = app.add_subcommand("power", "Perfect-power decomposition of n");
  power->add_option("n", o.positional, "n")->expected(1);
  auto* tables = app.add_subcommand("tables", "Print the embedded degree and subgroup tables");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (degrees->parsed()) return cmd_degrees(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (eliminate->parsed()) return cmd_eliminate(o, out);
    if (zsig->parsed()) return cmd_zsigmondy(o, out);
    if (factor->parsed()) return cmd_factor(o, out);
    if (power->parsed()) return cmd_power(o, out);
    if (tables->parsed()) return cmd_tables(o, out);
  } catch (const NotPrimePower& e) {
    err << "error: NotPrimePower: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OverflowError& e) {
    err << "error: overflow: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitFail;
  }
  err << "error: no command\n";
  return kExitUsage;
}

}  // namespace psl4cd
