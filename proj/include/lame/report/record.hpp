#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace lame {

// ===== Check records =====
//
// Every verification check produces one CheckRecord.  A record carries a
// stable id (unique within a report), an anchor naming the claim it tests
// (documented in docs/claims.md), a status, a one-line summary, and a JSON
// payload with the computed evidence.  Reports never embed timestamps or
// durations, so the same inputs always serialize to the same bytes.

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

enum class CheckStatus {
  kPass,
  kFail,
  kFlaggedDiscrepancy,
  kConditional,
};

inline std::string status_str(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kFlaggedDiscrepancy:
      return "flagged-discrepancy";
    case CheckStatus::kConditional:
      return "conditional";
  }
  throw std::logic_error("status_str: unknown status");
}

struct CheckRecord {
  std::string id;
  std::string anchor;
  CheckStatus status = CheckStatus::kFail;
  std::string summary;
  Json payload = Json::object();
};

// ===== Verification report =====

class VerificationReport {
 public:
  void add(CheckRecord record) {
    if (record.id.empty())
      throw std::invalid_argument("VerificationReport: empty check id");
    if (record.anchor.empty())
      throw std::invalid_argument("VerificationReport: empty anchor for " +
                                  record.id);
    if (!ids_.insert(record.id).second)
      throw std::invalid_argument("VerificationReport: duplicate check id " +
                                  record.id);
    records_.push_back(std::move(record));
  }

  void add(std::vector<CheckRecord> records) {
    for (CheckRecord& r : records) add(std::move(r));
  }

  const std::vector<CheckRecord>& records() const { return records_; }

  bool has_status(CheckStatus s) const {
    for (const CheckRecord& r : records_)
      if (r.status == s) return true;
    return false;
  }

  int count_status(CheckStatus s) const {
    int n = 0;
    for (const CheckRecord& r : records_)
      if (r.status == s) ++n;
    return n;
  }

  bool passed() const { return !has_status(CheckStatus::kFail); }

  int exit_status() const { return passed() ? 0 : 1; }

  void sort_by_id() {
    std::sort(records_.begin(), records_.end(),
              [](const CheckRecord& a, const CheckRecord& b) {
                return a.id < b.id;
              });
  }

  Json to_json() const {
    Json counts = Json::object();
    counts["pass"] = count_status(CheckStatus::kPass);
    counts["fail"] = count_status(CheckStatus::kFail);
    counts["flagged_discrepancy"] =
        count_status(CheckStatus::kFlaggedDiscrepancy);
    counts["conditional"] = count_status(CheckStatus::kConditional);

    Json checks = Json::array();
    for (const CheckRecord& r : records_) {
      Json row = Json::object();
      row["id"] = r.id;
      row["anchor"] = r.anchor;
      row["status"] = status_str(r.status);
      row["summary"] = r.summary;
      row["payload"] = r.payload;
      checks.push_back(std::move(row));
    }

    Json out = Json::object();
    out["schema_version"] = kReportSchemaVersion;
    out["tool"] = "lame-atlas";
    out["counts"] = std::move(counts);
    out["checks"] = std::move(checks);
    return out;
  }

  std::string to_text() const {
    std::string out;
    for (const CheckRecord& r : records_)
      out += "[" + status_str(r.status) + "] " + r.id + ": " + r.summary +
             "\n";
    out += std::to_string(records_.size()) + " checks: " +
           std::to_string(count_status(CheckStatus::kPass)) + " pass, " +
           std::to_string(count_status(CheckStatus::kFail)) + " fail, " +
           std::to_string(count_status(CheckStatus::kFlaggedDiscrepancy)) +
           " flagged-discrepancy, " +
           std::to_string(count_status(CheckStatus::kConditional)) +
           " conditional\n";
    return out;
  }

 private:
  std::vector<CheckRecord> records_;
  std::set<std::string> ids_;
};

}  // namespace lame
