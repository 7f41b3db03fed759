#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "commgraph/errors.hpp"
#include "commgraph/report.hpp"

using namespace commgraph;
namespace fs = std::filesystem;

namespace {

std::string render(const std::vector<ScanRow>& rows, Format f) {
  std::ostringstream out;
  write_rows(out, rows, f);
  return out.str();
}

}  // namespace

TEST_CASE("csv quoting") {
  CHECK(csv_line({"a", "b,c", "say \"hi\""}) == "a,\"b,c\",\"say \"\"hi\"\"\"");
  CHECK(csv_line({}) == "");
}

TEST_CASE("format and family parsing") {
  CHECK(parse_format("csv") == Format::Csv);
  CHECK(parse_format("json") == Format::Json);
  CHECK_THROWS_AS(parse_format("xml"), InvalidParameter);
  CHECK(family_label(make_family("m2mn", {{"m", 5}, {"n", 3}})) == "M_30(5,3)");
  CHECK(family_label(make_family("sz2", {})) == "Sz(2)");
  CHECK_THROWS_AS(make_family("dihedral", {}), InvalidParameter);
  CHECK_THROWS_AS(make_family("dihedral", {{"m", 4}, {"n", 1}}), InvalidParameter);
  CHECK_THROWS_AS(make_family("dihedral", {{"m", 2}}), InvalidParameter);
  CHECK_THROWS_AS(make_family("cyclic", {{"n", 2}}), InvalidParameter);
}

TEST_CASE("rows re-check the complement identity") {
  const FiniteGroup g = build_family(family::Dihedral{4});
  GroupReport r = group_report(g);
  const ScanRow row = make_row(g.label(), "dihedral", "m=4", r, 0);
  CHECK(row.gap_c == "0/1");
  CHECK(row_fields(row).size() == row_header().size());
  CHECK(row_json(row).dump() ==
        R"({"label":"D_8","family":"dihedral","params":"m=4","order":8,"center":2,"V":"6","E_C":"3","M1_C":"6",)"
        R"("M2_C":"3","E_NC":"12","M1_NC":"96","M2_NC":"192","verdict_C":"HoldsWithEquality",)"
        R"("verdict_NC":"HoldsWithEquality","gap_C":"0/1","gap_NC":"0/1","formula_diffs":0})");
  r.non_commuting.m2 += 1;
  CHECK_THROWS_AS(make_row(g.label(), "dihedral", "m=4", r, 0), RouteMismatch);
}

TEST_CASE("scan up to order 16") {
  ScanOptions o;
  o.max_order = 16;
  const ScanResult res = run_scan(o);
  CHECK(res.errors.empty());
  std::set<std::string> equality;
  for (const auto& r : res.rows) {
    CHECK(r.formula_diff_count == 0);
    CHECK(r.verdict_c == r.verdict_nc);
    if (r.verdict_c == VerdictStatus::HoldsWithEquality) equality.insert(r.label);
  }
  // Every Z_2 x Z_2-quotient group and every always-equality family at this
  // size; SD_16 and QD_16 (both K_6 + 4K_2) are strict.
  CHECK(equality == std::set<std::string>{"Q_8", "D_8", "A(1,2)", "V_8", "A(2,nu)", "D_8*Z_4", "M_16", "SG(16,3)",
                                          "Z_2xD_8", "Z_2xQ_8", "Z_4:Z_4", "V_16"});
  CHECK(res.summary.equality_c == 12);
  CHECK(res.summary.fails_c + res.summary.fails_nc == 0);
  CHECK_THROWS_AS(run_scan(ScanOptions{5, {}, 1, {}}), InvalidParameter);
}

TEST_CASE("scan output does not depend on the worker count") {
  ScanOptions o;
  o.max_order = 120;
  o.jobs = 1;
  const auto a = run_scan(o);
  o.jobs = 4;
  const auto b = run_scan(o);
  CHECK(render(a.rows, Format::Csv) == render(b.rows, Format::Csv));
  CHECK(render(a.rows, Format::Json) == render(b.rows, Format::Json));
  CHECK(summary_line(a.summary) == summary_line(b.summary));
}

TEST_CASE("extra tables: good files scanned, bad files reported") {
  const fs::path dir = fs::temp_directory_path() / "commgraph_scan_extra";
  fs::remove_all(dir);
  fs::create_directories(dir);
  {
    std::ofstream(dir / "a_s3.cayley") << "6\n0 1 2 3 4 5\n1 2 0 4 5 3\n2 0 1 5 3 4\n3 5 4 0 2 1\n4 3 5 1 0 2\n5 4 3 2 1 0\n";
    std::ofstream(dir / "b_z2.cayley") << "2\n0 1\n1 0\n";
    std::ofstream(dir / "c_bad.cayley") << "2\n0 1\n";
  }
  ScanOptions o;
  o.max_order = 6;
  o.extra_dir = dir;
  const ScanResult res = run_scan(o);
  REQUIRE(res.errors.size() == 1);
  CHECK(res.errors[0].rfind("c_bad.cayley", 0) == 0);
  CHECK(res.summary.skipped_abelian == 1);
  const ScanRow& last = res.rows.back();
  CHECK(last.family == "cayley");
  CHECK(last.params == "a_s3.cayley");
  CHECK(last.m1_nc == 66);
  fs::remove_all(dir);

  o.extra_dir = dir / "missing";
  CHECK_THROWS_AS(run_scan(o), InvalidParameter);
}
