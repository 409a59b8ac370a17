#include "lame/report/checks.hpp"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "lame/report/record.hpp"

namespace lame {
namespace {

using ::testing::Contains;
using ::testing::ElementsAre;
using ::testing::HasSubstr;
using ::testing::IsEmpty;
using ::testing::Not;

CheckRecord make_record(const std::string& id, CheckStatus status) {
  CheckRecord r;
  r.id = id;
  r.anchor = "anchor-" + id;
  r.status = status;
  r.summary = "summary of " + id;
  return r;
}

const VerificationReport& full_report() {
  static const VerificationReport report = [] {
    CheckContext ctx = load_catalog_context(LAME_DEFAULT_CATALOG);
    return run_all_checks(ctx);
  }();
  return report;
}

const CheckRecord& record_with_id(const std::string& id) {
  for (const CheckRecord& r : full_report().records())
    if (r.id == id) return r;
  throw std::logic_error("no record with id " + id);
}

// =====================================================================
// Record and report machinery.
// =====================================================================

TEST(RecordTest, StatusStringsAreStable) {
  EXPECT_EQ(status_str(CheckStatus::kPass), "pass");
  EXPECT_EQ(status_str(CheckStatus::kFail), "fail");
  EXPECT_EQ(status_str(CheckStatus::kFlaggedDiscrepancy),
            "flagged-discrepancy");
  EXPECT_EQ(status_str(CheckStatus::kConditional), "conditional");
}

TEST(RecordTest, AddRejectsEmptyIdsEmptyAnchorsAndDuplicates) {
  VerificationReport report;
  CheckRecord nameless = make_record("x", CheckStatus::kPass);
  nameless.id = "";
  EXPECT_THROW(report.add(nameless), std::invalid_argument);

  CheckRecord anchorless = make_record("x", CheckStatus::kPass);
  anchorless.anchor = "";
  EXPECT_THROW(report.add(anchorless), std::invalid_argument);

  report.add(make_record("x", CheckStatus::kPass));
  EXPECT_THROW(report.add(make_record("x", CheckStatus::kFail)),
               std::invalid_argument);
  EXPECT_EQ(report.records().size(), 1u);
}

TEST(RecordTest, CountsExitStatusAndSorting) {
  VerificationReport report;
  report.add(make_record("b", CheckStatus::kPass));
  report.add(make_record("d", CheckStatus::kConditional));
  report.add(make_record("a", CheckStatus::kFlaggedDiscrepancy));
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.exit_status(), 0);
  EXPECT_EQ(report.count_status(CheckStatus::kPass), 1);
  EXPECT_FALSE(report.has_status(CheckStatus::kFail));

  report.add(make_record("c", CheckStatus::kFail));
  EXPECT_FALSE(report.passed());
  EXPECT_EQ(report.exit_status(), 1);

  report.sort_by_id();
  std::vector<std::string> ids;
  for (const CheckRecord& r : report.records()) ids.push_back(r.id);
  EXPECT_THAT(ids, ElementsAre("a", "b", "c", "d"));
}

TEST(RecordTest, JsonKeepsSchemaVersionToolCountsAndCheckRows) {
  VerificationReport report;
  CheckRecord r = make_record("demo", CheckStatus::kPass);
  r.payload["value"] = 7;
  report.add(r);
  Json j = report.to_json();
  EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(j["tool"], "lame-atlas");
  EXPECT_EQ(j["counts"]["pass"], 1);
  EXPECT_EQ(j["counts"]["fail"], 0);
  EXPECT_EQ(j["counts"]["flagged_discrepancy"], 0);
  EXPECT_EQ(j["counts"]["conditional"], 0);
  ASSERT_EQ(j["checks"].size(), 1u);
  EXPECT_EQ(j["checks"][0]["id"], "demo");
  EXPECT_EQ(j["checks"][0]["anchor"], "anchor-demo");
  EXPECT_EQ(j["checks"][0]["status"], "pass");
  EXPECT_EQ(j["checks"][0]["payload"]["value"], 7);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_THAT(keys, ElementsAre("schema_version", "tool", "counts", "checks"));
}

TEST(RecordTest, TextOutputHasOneLinePerRecordAndATotalsLine) {
  VerificationReport report;
  report.add(make_record("first", CheckStatus::kPass));
  report.add(make_record("second", CheckStatus::kFlaggedDiscrepancy));
  std::string text = report.to_text();
  EXPECT_THAT(text, HasSubstr("[pass] first: summary of first\n"));
  EXPECT_THAT(text,
              HasSubstr("[flagged-discrepancy] second: summary of second\n"));
  EXPECT_THAT(text, HasSubstr("2 checks: 1 pass, 0 fail, "
                              "1 flagged-discrepancy, 0 conditional\n"));
}

// =====================================================================
// Catalog context.
// =====================================================================

TEST(CheckContextTest, MissingCatalogYieldsConditionalRecords) {
  CheckContext ctx = load_catalog_context("/nonexistent/groups.txt");
  EXPECT_FALSE(ctx.catalog.has_value());
  EXPECT_THAT(ctx.catalog_error, HasSubstr("cannot open"));

  std::vector<CheckRecord> cat = check_catalog(ctx);
  ASSERT_EQ(cat.size(), 1u);
  EXPECT_EQ(cat[0].status, CheckStatus::kConditional);
  EXPECT_THAT(cat[0].summary, HasSubstr("catalog unavailable"));

  std::vector<CheckRecord> cls = check_classification(ctx);
  ASSERT_EQ(cls.size(), 6u);
  for (const CheckRecord& r : cls)
    EXPECT_EQ(r.status, CheckStatus::kConditional) << r.id;

  std::vector<CheckRecord> apx = check_appendix(ctx);
  ASSERT_EQ(apx.size(), 3u);
  for (const CheckRecord& r : apx)
    EXPECT_EQ(r.status, CheckStatus::kConditional) << r.id;
}

TEST(CheckContextTest, GenusFilterRestrictsTheConditionalRecords) {
  CheckContext ctx = load_catalog_context("/nonexistent/groups.txt");
  std::vector<CheckRecord> cls = check_classification(ctx, 6);
  ASSERT_EQ(cls.size(), 1u);
  EXPECT_EQ(cls[0].id, "classify-genus6");
  EXPECT_EQ(cls[0].status, CheckStatus::kConditional);
}

// =====================================================================
// Normalizer and ramification checks.
// =====================================================================

TEST(NormalizerCheckTest, AllFourRecordsPass) {
  std::vector<CheckRecord> recs = check_normalizers();
  ASSERT_EQ(recs.size(), 4u);
  for (const CheckRecord& r : recs)
    EXPECT_EQ(r.status, CheckStatus::kPass) << r.id;
  EXPECT_EQ(recs[0].id, "normalizers-enumeration");
  EXPECT_EQ(recs[1].id, "normalizers-euler-characteristic");
  EXPECT_EQ(recs[2].id, "normalizers-genus-map");
  EXPECT_EQ(recs[3].id, "normalizers-shape-probe");
  EXPECT_EQ(recs[0].payload["amalgams_by_cap"]["6"],
            Json::array({"D2 *_Z2 D3", "D3 *_Z3 A4", "D4 *_Z4 S4",
                         "D5 *_Z5 A5"}));
  EXPECT_EQ(recs[1].payload["euler_characteristic"]["D5 *_Z5 A5"], "-1/12");
  EXPECT_EQ(recs[2].payload["genus_by_order"]["84"], 8);
}

TEST(RhCheckTest, DefaultListCoversAllCharacteristicsAndTheBoundProbe) {
  std::vector<CheckRecord> recs = check_rh();
  ASSERT_EQ(recs.size(), 27u);
  EXPECT_EQ(recs[0].id, "rh-char-00");
  EXPECT_EQ(recs[1].id, "rh-char-02");
  EXPECT_EQ(recs[2].id, "rh-char-03");
  EXPECT_EQ(recs[25].id, "rh-char-97");
  for (size_t i = 0; i + 1 < recs.size(); ++i)
    EXPECT_EQ(recs[i].status, CheckStatus::kPass) << recs[i].id;
  EXPECT_EQ(recs[0].payload["solutions"].size(), 1u);
  EXPECT_THAT(std::string(recs[0].payload["residue_constraint"]),
              HasSubstr("outside {2, 3}"));
  EXPECT_THAT(recs[1].payload["solutions"], IsEmpty());
  EXPECT_THAT(recs[2].payload["solutions"], IsEmpty());

  const CheckRecord& probe = recs.back();
  EXPECT_EQ(probe.id, "rh-three-point-bound");
  EXPECT_EQ(probe.status, CheckStatus::kFlaggedDiscrepancy);
  EXPECT_EQ(probe.payload["triples_forcing_exactly_48"],
            Json::array({Json::array({2, 4, 12}), Json::array({2, 6, 6}),
                         Json::array({3, 3, 6}), Json::array({3, 4, 4})}));
  EXPECT_EQ(probe.payload["integral_orders_at_or_below_60"].size(), 174u);
}

TEST(RhCheckTest, CustomCharacteristicListIsHonored) {
  std::vector<CheckRecord> recs = check_rh({7});
  ASSERT_EQ(recs.size(), 2u);
  EXPECT_EQ(recs[0].id, "rh-char-07");
  EXPECT_EQ(recs[0].status, CheckStatus::kPass);
  EXPECT_EQ(recs[1].id, "rh-three-point-bound");
}

// =====================================================================
// Catalog-backed checks on the committed catalog.
// =====================================================================

TEST(CatalogCheckTest, CommittedCatalogPassesIntegrity) {
  const CheckRecord& r = record_with_id("catalog-integrity");
  EXPECT_EQ(r.status, CheckStatus::kPass);
  EXPECT_EQ(r.summary, "48:52 60:13 72:50 84:15 — OK");
  EXPECT_EQ(r.payload["counts_by_order"]["48"], 52);
  EXPECT_EQ(r.payload["counts_by_order"]["84"], 15);
  EXPECT_THAT(r.payload["issues"], IsEmpty());
}

TEST(ClassificationCheckTest, GenusTablesMatchTheExpectedQuotients) {
  const CheckRecord& g5 = record_with_id("classify-genus5");
  EXPECT_EQ(g5.status, CheckStatus::kPass);
  ASSERT_EQ(g5.payload["entries"].size(), 2u);
  EXPECT_EQ(g5.payload["entries"][0]["amalgam"], "D2 *_Z2 D3");
  EXPECT_EQ(g5.payload["entries"][0]["iso_type"], "S4 x Z2");
  EXPECT_EQ(g5.payload["entries"][0]["witness_count"], 96);
  EXPECT_EQ(g5.payload["entries"][1]["amalgam"], "D4 *_Z4 S4");
  EXPECT_EQ(g5.payload["entries"][1]["witness_count"], 192);

  const CheckRecord& g6 = record_with_id("classify-genus6");
  EXPECT_EQ(g6.status, CheckStatus::kPass);
  ASSERT_EQ(g6.payload["entries"].size(), 3u);
  EXPECT_EQ(g6.payload["entries"][0]["witness_count"], 120);
  EXPECT_EQ(g6.payload["entries"][1]["witness_count"], 360);
  EXPECT_EQ(g6.payload["entries"][2]["amalgam"], "D5 *_Z5 A5");
  EXPECT_EQ(g6.payload["entries"][2]["iso_type"], "A5");
  EXPECT_EQ(g6.payload["entries"][2]["witness_count"], 600);

  EXPECT_EQ(record_with_id("classify-genus7").status, CheckStatus::kPass);
  EXPECT_THAT(record_with_id("classify-genus7").payload["entries"],
              IsEmpty());
  EXPECT_EQ(record_with_id("classify-genus8").status, CheckStatus::kPass);
  EXPECT_THAT(record_with_id("classify-genus8").payload["entries"],
              IsEmpty());
}

TEST(ClassificationCheckTest, SharedAmalgamDiscrepancyIsFlagged) {
  const CheckRecord& r = record_with_id("classify-two-genera-amalgam");
  EXPECT_EQ(r.status, CheckStatus::kFlaggedDiscrepancy);
  EXPECT_THAT(std::string(r.payload["note"]),
              HasSubstr("admits quotient groups at 2 genera (5, 6)"));
  EXPECT_EQ(r.payload["genera"], Json::array({5, 6}));
}

TEST(ClassificationCheckTest, CharacteristicConstraintNotesAreComplete) {
  const CheckRecord& r = record_with_id("classify-characteristic-constraints");
  EXPECT_EQ(r.status, CheckStatus::kPass);
  ASSERT_EQ(r.payload["notes"].size(), 4u);
  EXPECT_THAT(std::string(r.payload["notes"][3]),
              HasSubstr("D5 *_Z5 A5: valid in characteristic 0 or p outside "
                        "{2, 3, 5}"));
}

TEST(AppendixCheckTest, ConfigurationSylowAndLemmaRecordsPass) {
  const CheckRecord& a1 = record_with_id("appendix-a1-configs");
  EXPECT_EQ(a1.status, CheckStatus::kPass);
  EXPECT_EQ(a1.payload["groups_scanned"], 102);
  ASSERT_EQ(a1.payload["nonzero_entries"].size(), 1u);
  EXPECT_EQ(a1.payload["nonzero_entries"][0]["iso_type"], "S4 x Z2");
  EXPECT_EQ(a1.payload["nonzero_entries"][0]["order"], 48);
  EXPECT_EQ(a1.payload["nonzero_entries"][0]["case_b_count"], 0);

  const CheckRecord& a2 = record_with_id("appendix-a2-sylow-counts");
  EXPECT_EQ(a2.status, CheckStatus::kPass);
  EXPECT_EQ(a2.payload["order60_groups"].size(), 13u);
  int with_many = 0;
  for (const Json& row : a2.payload["order60_groups"])
    if (row["sylow5_count"] > 1) {
      ++with_many;
      EXPECT_EQ(row["sylow5_count"], 6);
      EXPECT_TRUE(bool(row["iso_a5"]));
    }
  EXPECT_EQ(with_many, 1);

  const CheckRecord& lm = record_with_id("appendix-lemmas");
  EXPECT_EQ(lm.status, CheckStatus::kPass);
  ASSERT_EQ(lm.payload["witness_groups"].size(), 1u);
  EXPECT_EQ(lm.payload["witness_groups"][0]["kernel_order"], 2);
}

// =====================================================================
// Curve geometry checks.
// =====================================================================

TEST(QuarticCheckTest, BitangentAndStabilizerRecordsPass) {
  EXPECT_EQ(record_with_id("quartic-bitangents").status, CheckStatus::kPass);
  const CheckRecord& stab = record_with_id("quartic-stabilizers");
  EXPECT_EQ(stab.status, CheckStatus::kPass);
  EXPECT_EQ(stab.payload["full_order"], 24);
  EXPECT_EQ(stab.payload["even_order"], 12);
}

TEST(QuarticCheckTest, OrbitSplitIsAFlaggedDiscrepancy) {
  const CheckRecord& r = record_with_id("quartic-orbit-split");
  EXPECT_EQ(r.status, CheckStatus::kFlaggedDiscrepancy);
  EXPECT_EQ(r.payload["full_orbit_sizes"], Json::array({8}));
  EXPECT_EQ(r.payload["even_orbit_sizes"], Json::array({4, 4}));
  EXPECT_THAT(r.summary, HasSubstr("transitive"));
}

TEST(QuarticCheckTest, DegenerateFibersAndSingularParametersPass) {
  const CheckRecord& degen = record_with_id("quartic-degenerate-fibers");
  EXPECT_EQ(degen.status, CheckStatus::kPass);
  EXPECT_EQ(degen.payload["modulus"], "t(a) = (2 - a)/(2 + a)");
  EXPECT_EQ(degen.payload["infinity_nodes"].size(), 3u);

  const CheckRecord& params = record_with_id("quartic-singular-parameters");
  EXPECT_EQ(params.status, CheckStatus::kPass);
  EXPECT_EQ(params.payload["eliminant_degree"], 124);
  ASSERT_EQ(params.payload["rational_parameters"].size(), 3u);
  EXPECT_EQ(params.payload["rational_parameters"][0]["parameter"], "-2");
  EXPECT_EQ(params.payload["rational_parameters"][0]["multiplicity"], 28);
  EXPECT_EQ(params.payload["rational_parameters"][2]["parameter"], "2");
  EXPECT_EQ(params.payload["rational_parameters"][2]["multiplicity"], 64);
}

TEST(QuarticCheckTest, AlphaMinusOneIsAFlaggedDiscrepancy) {
  const CheckRecord& r = record_with_id("quartic-alpha-minus-one");
  EXPECT_EQ(r.status, CheckStatus::kFlaggedDiscrepancy);
  EXPECT_EQ(r.payload["evaluations_at_(1:1:1)"]["f"], "0");
  EXPECT_EQ(r.payload["evaluations_at_(1:1:1)"]["df_dz"], "0");
  EXPECT_EQ(r.payload["eliminant_multiplicity"], 16);
}

TEST(QuarticCheckTest, PencilTwoTorsionRecordPasses) {
  const CheckRecord& r = record_with_id("quartic-pencil-two-torsion");
  EXPECT_EQ(r.status, CheckStatus::kPass);
  EXPECT_EQ(r.payload["base_points"].size(), 4u);
  EXPECT_THAT(r.payload["notes"],
              Contains(HasSubstr("pencil at lambda = w^2")));
}

TEST(SexticCheckTest, AllThreeRecordsPass) {
  const CheckRecord& corners = record_with_id("sextic-base-nodes");
  EXPECT_EQ(corners.status, CheckStatus::kPass);
  EXPECT_EQ(corners.payload["points"].size(), 4u);

  const CheckRecord& elim = record_with_id("sextic-elimination");
  EXPECT_EQ(elim.status, CheckStatus::kPass);
  EXPECT_EQ(elim.payload["eliminant_degree"], 212);
  ASSERT_EQ(elim.payload["quadratic_parameters"].size(), 2u);
  EXPECT_EQ(elim.payload["quadratic_parameters"][0]["d"], "-3");
  EXPECT_EQ(elim.payload["quadratic_parameters"][1]["d"], "125");

  const CheckRecord& wit = record_with_id("sextic-witnesses");
  EXPECT_EQ(wit.status, CheckStatus::kPass);
  EXPECT_EQ(wit.payload["witnesses"].size(), 4u);
  for (const Json& row : wit.payload["witnesses"])
    EXPECT_TRUE(bool(row["verified_singular"])) << row.dump();
}

TEST(ReductionCheckTest, AllFourSceneRecordsPass) {
  const CheckRecord& fiber = record_with_id("reduction-infinity-fiber");
  EXPECT_EQ(fiber.status, CheckStatus::kPass);
  EXPECT_EQ(fiber.payload["amalgam"], "D4 *_Z4 S4");
  EXPECT_EQ(fiber.payload["betti"], 3);
  EXPECT_EQ(fiber.payload["euler_characteristic"], "-1/12");

  const CheckRecord& cover = record_with_id("reduction-infinity-cover");
  EXPECT_EQ(cover.status, CheckStatus::kPass);
  EXPECT_EQ(cover.payload["betti"], 5);
  EXPECT_EQ(cover.payload["group_order"], 48);

  const CheckRecord& lines = record_with_id("reduction-four-lines");
  EXPECT_EQ(lines.status, CheckStatus::kPass);
  EXPECT_EQ(lines.payload["amalgam"], "D2 *_Z2 D3");

  const CheckRecord& lines_cover = record_with_id("reduction-four-lines-cover");
  EXPECT_EQ(lines_cover.status, CheckStatus::kPass);
  EXPECT_EQ(lines_cover.payload["betti"], 5);
  EXPECT_EQ(lines_cover.payload["amalgam"], "D2 *_Z2 D3");
}

// =====================================================================
// Full run.
// =====================================================================

TEST(RunAllTest, NoFailuresAndExactlyFourFlaggedDiscrepancies) {
  const VerificationReport& report = full_report();
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.exit_status(), 0);
  EXPECT_EQ(report.count_status(CheckStatus::kFail), 0);
  EXPECT_EQ(report.count_status(CheckStatus::kConditional), 0);

  std::set<std::string> flagged;
  for (const CheckRecord& r : report.records())
    if (r.status == CheckStatus::kFlaggedDiscrepancy) flagged.insert(r.id);
  EXPECT_THAT(flagged,
              ElementsAre("classify-two-genera-amalgam",
                          "quartic-alpha-minus-one", "quartic-orbit-split",
                          "rh-three-point-bound"));
}

TEST(RunAllTest, RecordsAreSortedWithUniqueIdsAndNonEmptyAnchors) {
  const VerificationReport& report = full_report();
  std::set<std::string> seen;
  std::string prev;
  for (const CheckRecord& r : report.records()) {
    EXPECT_TRUE(seen.insert(r.id).second) << r.id;
    EXPECT_LT(prev, r.id);
    EXPECT_THAT(r.anchor, Not(IsEmpty())) << r.id;
    prev = r.id;
  }
}

TEST(RunAllTest, JsonSerializationIsByteStableAcrossRuns) {
  CheckContext ctx = load_catalog_context(LAME_DEFAULT_CATALOG);
  VerificationReport again = run_all_checks(ctx);
  EXPECT_EQ(again.to_json().dump(2), full_report().to_json().dump(2));
}

}  // namespace
}  // namespace lame
