// commgraph: family reports, formula sweeps, catalog scans and ad hoc
// graph/group checks. Exit codes: 0 ok, 1 usage, 2 validation, 3 violation.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "commgraph/cayley_io.hpp"
#include "commgraph/errors.hpp"
#include "commgraph/report.hpp"

using namespace commgraph;

namespace {

constexpr int kOk = 0, kUsage = 1, kValidation = 2, kViolation = 3;

struct Range {
  std::int64_t lo, hi;
};

Range parse_range(const std::string& s) {
  auto num = [&](const std::string& t) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (t.empty() || used != t.size()) throw InvalidParameter("bad range '" + s + "' (expected a or a..b)");
    return v;
  };
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const auto v = num(s);
    return {v, v};
  }
  Range r{num(s.substr(0, dots)), num(s.substr(dots + 2))};
  if (r.lo > r.hi) throw InvalidParameter("empty range '" + s + "'");
  return r;
}

bool is_violation(const ScanRow& r) {
  return r.verdict_c == VerdictStatus::Fails || r.verdict_nc == VerdictStatus::Fails;
}

std::string diff_text(const std::vector<FieldDiff>& diffs) {
  std::string out;
  for (const auto& d : diffs) {
    if (!out.empty()) out += "; ";
    out += d.field + " predicted " + d.predicted + " observed " + d.observed;
  }
  return out;
}

std::string params_text(const FormulaEntry& e, const Params& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += e.param_names[i] + "=" + std::to_string(p[i]);
  }
  return out;
}

// Family command --------------------------------------------------------

struct ParamFlags {
  std::map<std::string, std::string> raw;  // flag name -> text
  void add(CLI::App* cmd) {
    for (const char* k : {"m", "n", "p", "q", "k"}) cmd->add_option(std::string("--") + k, raw[k], "family parameter");
  }
  std::map<std::string, std::string> given() const {
    std::map<std::string, std::string> out;
    for (const auto& [k, v] : raw)
      if (!v.empty()) out[k] = v;
    return out;
  }
};

int cmd_family(const std::string& name, const ParamFlags& flags, Format fmt, const BuildOptions& opts) {
  std::map<std::string, std::int64_t> params;
  for (const auto& [k, v] : flags.given()) {
    const Range r = parse_range(v);
    if (r.lo != r.hi) throw InvalidParameter("--" + k + " takes a single value here");
    params[k] = r.lo;
  }
  const FamilySpec spec = make_family(name, params);
  const FiniteGroup g = build_family(spec, opts);
  const GroupReport rep = group_report(g);
  int code = kOk;
  std::size_t diffs = 0;
  std::vector<FormulaMatch> matches = registry_for(spec);
  for (auto& m : registry_for(g)) matches.push_back(std::move(m));
  for (const auto& m : matches) {
    const auto d = crosscheck(*m.entry, m.params, rep);
    if (d.empty()) continue;
    if (m.entry->authoritative) {
      diffs += d.size();
      std::cerr << "diff " << m.entry->describe() << " " << params_text(*m.entry, m.params) << ": " << diff_text(d)
                << "\n";
      code = kValidation;
    } else {
      std::cerr << "warning " << m.entry->describe() << " " << params_text(*m.entry, m.params) << ": "
                << diff_text(d) << " (" << m.entry->note << ")\n";
    }
  }
  const ScanRow row = make_row(g.label(), family_name(spec), family_params_string(spec), rep, diffs);
  if (fmt == Format::Json)
    std::cout << row_json(row).dump(2) << "\n";
  else
    write_rows(std::cout, {row}, fmt);
  if (is_violation(row)) return kViolation;
  return code;
}

// Verify command --------------------------------------------------------

int cmd_verify(const std::string& name, const ParamFlags& flags, const BuildOptions& opts) {
  const auto& names = family_parameter_names(name);
  const auto given = flags.given();
  std::vector<Range> ranges;
  for (const auto& n : names) {
    const auto it = given.find(n);
    if (it == given.end()) throw InvalidParameter("verify " + name + " requires --" + n);
    ranges.push_back(parse_range(it->second));
  }
  for (const auto& [k, v] : given)
    if (std::find(names.begin(), names.end(), k) == names.end())
      throw InvalidParameter(name + " does not take --" + k);

  std::size_t instances = 0, passed = 0, failed = 0, warnings = 0, skipped = 0;
  std::vector<std::int64_t> cur(ranges.size());
  for (std::size_t i = 0; i < ranges.size(); ++i) cur[i] = ranges[i].lo;
  for (bool more = true; more;) {
    std::map<std::string, std::int64_t> params;
    for (std::size_t i = 0; i < names.size(); ++i) params[names[i]] = cur[i];
    std::optional<FamilySpec> spec;
    try {
      spec = make_family(name, params);
    } catch (const InvalidParameter&) {
      ++skipped;
    }
    if (spec) {
      ++instances;
      const std::string where = name + " " + family_params_string(*spec);
      const FiniteGroup g = build_family(*spec, opts);
      const GroupReport rep = group_report(g);
      bool ok = true, any_authoritative = false;
      for (const auto& m : registry_for(*spec)) {
        const auto d = crosscheck(*m.entry, m.params, rep);
        any_authoritative |= m.entry->authoritative;
        if (d.empty()) {
          std::cout << "ok " << where << " " << m.entry->describe() << "\n";
        } else if (m.entry->authoritative) {
          ok = false;
          std::cout << "FAIL " << where << " " << m.entry->describe() << ": " << diff_text(d) << "\n";
        } else {
          ++warnings;
          std::cout << "warning " << where << " " << m.entry->describe() << ": " << diff_text(d) << " ("
                    << m.entry->note << ")\n";
        }
      }
      if (!any_authoritative) {
        ok = false;
        std::cout << "FAIL " << where << ": no applicable formula\n";
      }
      (ok ? passed : failed)++;
    }
    more = false;
    for (std::size_t i = cur.size(); i-- > 0;) {
      if (cur[i] < ranges[i].hi) {
        ++cur[i];
        more = true;
        break;
      }
      cur[i] = ranges[i].lo;
    }
  }
  std::cout << "verify " << name << ": instances=" << instances << " passed=" << passed << " failed=" << failed
            << " warnings=" << warnings << " skipped_invalid=" << skipped << "\n";
  if (instances == 0) {
    std::cerr << "error: no valid parameter combination in range\n";
    return kUsage;
  }
  return failed ? kValidation : kOk;
}

// Scan command ----------------------------------------------------------

int cmd_scan(const ScanOptions& so, Format fmt) {
  const ScanResult res = run_scan(so);
  if (fmt == Format::Json) {
    nlohmann::ordered_json j;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : res.rows) j["rows"].push_back(row_json(r));
    j["errors"] = res.errors;
    j["summary"] = summary_json(res.summary);
    std::cout << j.dump(2) << "\n";
  } else {
    write_rows(std::cout, res.rows, fmt);
  }
  for (const auto& e : res.errors) std::cerr << "error: " << e << "\n";
  bool violation = false;
  for (const auto& r : res.rows)
    if (is_violation(r)) {
      violation = true;
      std::cerr << "CONJECTURE VIOLATION: " << r.label << " verdict_C=" << to_string(r.verdict_c)
                << " gap_C=" << r.gap_c << " verdict_NC=" << to_string(r.verdict_nc) << " gap_NC=" << r.gap_nc
                << "\n";
    }
  std::cerr << summary_line(res.summary) << "\n";
  return violation ? kViolation : kOk;
}

// Graph command ---------------------------------------------------------

std::vector<std::string> graph_fields(const std::string& which, const ZagrebReport& r) {
  const ConjectureVerdict v = conjecture_verdict(r);
  return {which,
          r.vertices.str(),
          r.edges.str(),
          r.m1.str(),
          r.m2.str(),
          to_string(v.status),
          v.gap_numerator.str(),
          v.gap_denominator.str(),
          v.gap_string()};
}

int cmd_graph(const std::string& path, bool with_complement, Format fmt) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  const SimpleGraph g = read_edge_list(in);
  std::vector<std::vector<std::string>> rows{graph_fields("graph", zagreb_direct(g))};
  if (with_complement) rows.push_back(graph_fields("complement", zagreb_direct_complement(g)));
  const std::vector<std::string> header{"graph", "V", "E", "M1", "M2", "verdict", "gap_num", "gap_den", "gap"};
  if (fmt == Format::Json) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json j;
      for (std::size_t i = 0; i < header.size(); ++i) j[header[i]] = r[i];
      arr.push_back(j);
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    std::cout << csv_line(header) << "\n";
    for (const auto& r : rows) std::cout << csv_line(r) << "\n";
  }
  for (const auto& r : rows)
    if (r[5] == "Fails") return kViolation;
  return kOk;
}

// Group command ---------------------------------------------------------

std::string quotient_name(const FiniteGroup& q) {
  if (q.order() == 1) return "1";
  if (auto m = recognize_dihedral(q)) return "D_" + std::to_string(2 * *m);
  if (auto p = recognize_elementary_abelian_p2(q)) return "Z_" + std::to_string(*p) + "xZ_" + std::to_string(*p);
  return "unrecognized(order " + std::to_string(q.order()) + ")";
}

int cmd_group(const std::string& path, Format fmt, const BuildOptions& opts) {
  const FiniteGroup g = ingest_cayley_file(path, opts);
  if (is_abelian(g)) throw AbelianGroupError();
  const GroupReport rep = group_report(g);
  const std::uint32_t cent = count_distinct_centralizers(g);
  const std::string pr = fraction_string(commutativity_degree(g));
  const std::string quotient = quotient_name(central_quotient(g));

  std::vector<std::string> checks;
  std::size_t diffs = 0;
  int code = kOk;
  for (const auto& m : registry_for(g)) {
    const auto d = crosscheck(*m.entry, m.params, rep);
    const std::string head = m.entry->describe() + "(" + params_text(*m.entry, m.params) + ")";
    if (d.empty()) {
      checks.push_back(head + ":match");
    } else if (m.entry->authoritative) {
      diffs += d.size();
      code = kValidation;
      checks.push_back(head + ":diff");
      std::cerr << "diff " << head << ": " << diff_text(d) << "\n";
    } else {
      checks.push_back(head + ":warning");
      std::cerr << "warning " << head << ": " << diff_text(d) << " (" << m.entry->note << ")\n";
    }
  }
  std::vector<std::string> tags;
  for (const auto& t : consequence_tags(g)) {
    std::string p;
    for (std::size_t i = 0; i < t.params.size(); ++i) p += (i ? "," : "") + std::to_string(t.params[i]);
    tags.push_back(t.reason + "=>" + t.quotient + " " + to_string(t.tag) + "(" + p + ")");
  }
  auto join = [](const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) out += (out.empty() ? "" : ";") + s;
    return out;
  };

  const ScanRow row = make_row(g.label(), "cayley", std::filesystem::path(path).filename().string(), rep, diffs);
  if (fmt == Format::Json) {
    auto j = row_json(row);
    j["centralizers"] = cent;
    j["commutativity_degree"] = pr;
    j["quotient"] = quotient;
    j["formula_checks"] = checks;
    j["consequences"] = tags;
    std::cout << j.dump(2) << "\n";
  } else {
    auto header = row_header();
    auto fields = row_fields(row);
    for (const char* h : {"centralizers", "commutativity_degree", "quotient", "formula_checks", "consequences"})
      header.push_back(h);
    for (const auto& f : {std::to_string(cent), pr, quotient, join(checks), join(tags)}) fields.push_back(f);
    std::cout << csv_line(header) << "\n" << csv_line(fields) << "\n";
  }
  if (is_violation(row)) return kViolation;
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Commuting graphs of finite groups: Zagreb indices and the M2/|E| >= M1/|V| comparison"};
  app.require_subcommand(1);

  std::string format = "csv";
  std::uint64_t order_cap = BuildOptions{}.order_cap;
  auto common = [&](CLI::App* cmd, bool with_format) {
    if (with_format) cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--order-cap", order_cap, "refuse to build groups larger than this")->check(CLI::PositiveNumber);
  };

  std::string family_name_arg;
  ParamFlags family_flags;
  auto* family = app.add_subcommand("family", "report one family instance");
  family->add_option("family", family_name_arg, "dihedral, dicyclic, quasidihedral, sd8n, v8n, u6n, m2mn, pq, sz2, "
                                                "hanaki1, hanaki2, gl2, psl2")
      ->required();
  family_flags.add(family);
  common(family, true);

  std::string verify_name;
  ParamFlags verify_flags;
  auto* verify = app.add_subcommand("verify", "cross-check closed forms against brute force over ranges a..b");
  verify->add_option("family", verify_name, "family name")->required();
  verify_flags.add(verify);
  common(verify, false);

  ScanOptions scan_opts;
  std::string extra_dir;
  auto* scan = app.add_subcommand("scan", "scan the built-in catalog (and extra Cayley tables)");
  scan->add_option("--max-order", scan_opts.max_order, "largest group order")->check(CLI::Range(6ull, 1ull << 20));
  scan->add_option("--catalog-extra", extra_dir, "directory of Cayley-table files");
  scan->add_option("--jobs", scan_opts.jobs, "worker threads (default: all cores)");
  common(scan, true);

  std::string edges_path;
  bool complement_flag = false;
  auto* graph = app.add_subcommand("graph", "Zagreb report for an edge-list file");
  graph->add_option("--edges", edges_path, "edge-list file")->required();
  graph->add_flag("--complement", complement_flag, "also report the complement");
  graph->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  std::string cayley_path;
  auto* group = app.add_subcommand("group", "full report for a Cayley-table file");
  group->add_option("--cayley", cayley_path, "Cayley-table file")->required();
  common(group, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    const Format fmt = parse_format(format);
    const BuildOptions opts{order_cap};
    if (*family) return cmd_family(family_name_arg, family_flags, fmt, opts);
    if (*verify) return cmd_verify(verify_name, verify_flags, opts);
    if (*scan) {
      scan_opts.build = opts;
      if (!extra_dir.empty()) scan_opts.extra_dir = extra_dir;
      return cmd_scan(scan_opts, fmt);
    }
    if (*graph) return cmd_graph(edges_path, complement_flag, fmt);
    return cmd_group(cayley_path, fmt, opts);
  } catch (const InvalidParameter& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const AbelianGroupError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const RouteMismatch& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  }
}
