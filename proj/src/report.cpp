#include "commgraph/report.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <ostream>
#include <thread>
#include <variant>

#include "commgraph/cayley_io.hpp"
#include "commgraph/errors.hpp"

namespace commgraph {

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw InvalidParameter("unknown format '" + s + "' (expected csv or json)");
}

ScanRow make_row(std::string label, std::string family, std::string params, const GroupReport& r,
                 std::size_t diff_count) {
  if (zagreb_complement(r.commuting) != r.non_commuting)
    throw RouteMismatch(label + ": row violates the complement identity");
  ScanRow row;
  row.label = std::move(label);
  row.family = std::move(family);
  row.params = std::move(params);
  row.order = r.order;
  row.center_size = r.center_size;
  row.vertices = r.commuting.vertices;
  row.edges_c = r.commuting.edges;
  row.m1_c = r.commuting.m1;
  row.m2_c = r.commuting.m2;
  row.edges_nc = r.non_commuting.edges;
  row.m1_nc = r.non_commuting.m1;
  row.m2_nc = r.non_commuting.m2;
  row.verdict_c = r.commuting_verdict.status;
  row.verdict_nc = r.non_commuting_verdict.status;
  row.gap_c = r.commuting_verdict.gap_string();
  row.gap_nc = r.non_commuting_verdict.gap_string();
  row.formula_diff_count = diff_count;
  return row;
}

std::size_t formula_diff_count(const std::optional<FamilySpec>& spec, const FiniteGroup& g, const GroupReport& r) {
  std::vector<FormulaMatch> matches;
  if (spec) matches = registry_for(*spec);
  for (auto& m : registry_for(g)) matches.push_back(std::move(m));
  std::size_t n = 0;
  for (const auto& m : matches)
    if (m.entry->authoritative) n += crosscheck(*m.entry, m.params, r).size();
  return n;
}

std::vector<std::string> row_header() {
  return {"label", "family", "params", "order", "center", "V",          "E_C",       "M1_C", "M2_C",
          "E_NC",  "M1_NC",  "M2_NC",  "verdict_C", "verdict_NC", "gap_C", "gap_NC", "formula_diffs"};
}

std::vector<std::string> row_fields(const ScanRow& r) {
  return {r.label,
          r.family,
          r.params,
          std::to_string(r.order),
          std::to_string(r.center_size),
          r.vertices.str(),
          r.edges_c.str(),
          r.m1_c.str(),
          r.m2_c.str(),
          r.edges_nc.str(),
          r.m1_nc.str(),
          r.m2_nc.str(),
          to_string(r.verdict_c),
          to_string(r.verdict_nc),
          r.gap_c,
          r.gap_nc,
          std::to_string(r.formula_diff_count)};
}

nlohmann::ordered_json row_json(const ScanRow& r) {
  nlohmann::ordered_json j;
  j["label"] = r.label;
  j["family"] = r.family;
  j["params"] = r.params;
  j["order"] = r.order;
  j["center"] = r.center_size;
  j["V"] = r.vertices.str();
  j["E_C"] = r.edges_c.str();
  j["M1_C"] = r.m1_c.str();
  j["M2_C"] = r.m2_c.str();
  j["E_NC"] = r.edges_nc.str();
  j["M1_NC"] = r.m1_nc.str();
  j["M2_NC"] = r.m2_nc.str();
  j["verdict_C"] = to_string(r.verdict_c);
  j["verdict_NC"] = to_string(r.verdict_nc);
  j["gap_C"] = r.gap_c;
  j["gap_NC"] = r.gap_nc;
  j["formula_diffs"] = r.formula_diff_count;
  return j;
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\n\r") == std::string::npos) {
      out += f;
      continue;
    }
    out += '"';
    for (char c : f) {
      if (c == '"') out += '"';
      out += c;
    }
    out += '"';
  }
  return out;
}

const std::vector<std::string>& family_parameter_names(const std::string& name) {
  static const std::map<std::string, std::vector<std::string>> names = {
      {"dihedral", {"m"}}, {"dicyclic", {"n"}},     {"quasidihedral", {"n"}}, {"sd8n", {"n"}},
      {"v8n", {"n"}},      {"u6n", {"n"}},          {"m2mn", {"m", "n"}},     {"pq", {"p", "q"}},
      {"sz2", {}},         {"hanaki1", {"n"}},      {"hanaki2", {"n", "p"}},  {"gl2", {"q"}},
      {"psl2", {"k"}},
  };
  const auto it = names.find(name);
  if (it == names.end()) throw InvalidParameter("unknown family '" + name + "'");
  return it->second;
}

FamilySpec make_family(const std::string& name, const std::map<std::string, std::int64_t>& params) {
  const auto& wanted = family_parameter_names(name);
  for (const auto& [k, v] : params)
    if (std::find(wanted.begin(), wanted.end(), k) == wanted.end())
      throw InvalidParameter(name + " does not take --" + k);
  auto get = [&](const char* k) {
    const auto it = params.find(k);
    if (it == params.end()) throw InvalidParameter(name + " requires --" + std::string(k));
    return it->second;
  };
  FamilySpec spec;
  if (name == "dihedral") spec = family::Dihedral{get("m")};
  else if (name == "dicyclic") spec = family::Dicyclic{get("n")};
  else if (name == "quasidihedral") spec = family::Quasidihedral{get("n")};
  else if (name == "sd8n") spec = family::SD8n{get("n")};
  else if (name == "v8n") spec = family::V8n{get("n")};
  else if (name == "u6n") spec = family::U6n{get("n")};
  else if (name == "m2mn") spec = family::M2mn{get("m"), get("n")};
  else if (name == "pq") spec = family::PQ{get("p"), get("q")};
  else if (name == "sz2") spec = family::Suzuki2{};
  else if (name == "hanaki1") spec = family::HanakiA1{get("n")};
  else if (name == "hanaki2") spec = family::HanakiA2{get("n"), get("p")};
  else if (name == "gl2") spec = family::GL2{get("q")};
  else spec = family::PSL2{get("k")};
  validate_family(spec);
  return spec;
}

namespace {

struct Skipped {};
using Outcome = std::variant<ScanRow, Skipped, std::string>;

struct Job {
  std::function<Outcome()> run;
};

Outcome analyze(const FiniteGroup& g, const std::optional<FamilySpec>& spec, std::string family, std::string params) {
  if (is_abelian(g)) return Skipped{};
  const GroupReport r = group_report(g);
  return make_row(g.label(), std::move(family), std::move(params), r, formula_diff_count(spec, g, r));
}

void tally(ScanSummary& s, const ScanRow& r) {
  ++s.rows;
  auto bump = [](VerdictStatus v, std::size_t& strict, std::size_t& eq, std::size_t& fails, std::size_t& undef) {
    switch (v) {
      case VerdictStatus::HoldsStrict: ++strict; break;
      case VerdictStatus::HoldsWithEquality: ++eq; break;
      case VerdictStatus::Fails: ++fails; break;
      case VerdictStatus::Undefined: ++undef; break;
    }
  };
  bump(r.verdict_c, s.strict_c, s.equality_c, s.fails_c, s.undefined_c);
  bump(r.verdict_nc, s.strict_nc, s.equality_nc, s.fails_nc, s.undefined_nc);
}

}  // namespace

ScanResult run_scan(const ScanOptions& opts) {
  std::vector<Job> jobs;
  for (const auto& e : catalog(opts.max_order)) {
    jobs.push_back({[e, build = opts.build]() -> Outcome {
      try {
        return analyze(e.build(build), e.spec, e.family(), e.params());
      } catch (const RouteMismatch&) {
        throw;
      } catch (const std::exception& ex) {
        return e.label() + ": " + ex.what();
      }
    }});
  }
  if (opts.extra_dir) {
    std::error_code ec;
    std::vector<std::filesystem::path> files;
    for (const auto& de : std::filesystem::directory_iterator(*opts.extra_dir, ec))
      if (de.is_regular_file()) files.push_back(de.path());
    if (ec) throw InvalidParameter("cannot read directory " + opts.extra_dir->string() + ": " + ec.message());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      jobs.push_back({[f, build = opts.build]() -> Outcome {
        try {
          return analyze(ingest_cayley_file(f, build), std::nullopt, "cayley", f.filename().string());
        } catch (const RouteMismatch&) {
          throw;
        } catch (const std::exception& ex) {
          return f.filename().string() + ": " + ex.what();
        }
      }});
    }
  }

  std::vector<std::optional<Outcome>> results(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
      try {
        results[i] = jobs[i].run();
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  unsigned n_workers = opts.jobs ? opts.jobs : std::max(1u, std::thread::hardware_concurrency());
  n_workers = static_cast<unsigned>(std::min<std::size_t>(n_workers, std::max<std::size_t>(jobs.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < n_workers; ++t) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  ScanResult out;
  for (auto& r : results) {
    if (auto* row = std::get_if<ScanRow>(&*r)) {
      tally(out.summary, *row);
      out.rows.push_back(std::move(*row));
    } else if (std::holds_alternative<Skipped>(*r)) {
      ++out.summary.skipped_abelian;
    } else {
      ++out.summary.errors;
      out.errors.push_back(std::get<std::string>(*r));
    }
  }
  return out;
}

void write_rows(std::ostream& out, const std::vector<ScanRow>& rows, Format f) {
  if (f == Format::Csv) {
    out << csv_line(row_header()) << '\n';
    for (const auto& r : rows) out << csv_line(row_fields(r)) << '\n';
    return;
  }
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) arr.push_back(row_json(r));
  out << arr.dump(2) << '\n';
}

nlohmann::ordered_json summary_json(const ScanSummary& s) {
  nlohmann::ordered_json j;
  j["rows"] = s.rows;
  j["skipped_abelian"] = s.skipped_abelian;
  j["errors"] = s.errors;
  j["strict_C"] = s.strict_c;
  j["equality_C"] = s.equality_c;
  j["fails_C"] = s.fails_c;
  j["undefined_C"] = s.undefined_c;
  j["strict_NC"] = s.strict_nc;
  j["equality_NC"] = s.equality_nc;
  j["fails_NC"] = s.fails_nc;
  j["undefined_NC"] = s.undefined_nc;
  return j;
}

std::string summary_line(const ScanSummary& s) {
  return "summary: rows=" + std::to_string(s.rows) + " skipped_abelian=" + std::to_string(s.skipped_abelian) +
         " errors=" + std::to_string(s.errors) + " strict_C=" + std::to_string(s.strict_c) +
         " equality_C=" + std::to_string(s.equality_c) + " fails_C=" + std::to_string(s.fails_c) +
         " undefined_C=" + std::to_string(s.undefined_c) + " strict_NC=" + std::to_string(s.strict_nc) +
         " equality_NC=" + std::to_string(s.equality_nc) + " fails_NC=" + std::to_string(s.fails_nc) +
         " undefined_NC=" + std::to_string(s.undefined_nc);
}

}  // namespace commgraph
