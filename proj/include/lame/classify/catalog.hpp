#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lame/permgrp/hom.hpp"
#include "lame/permgrp/group.hpp"

namespace lame {

// =====================================================================
// Small-groups catalog: parsing, order recomputation, pairwise
// non-isomorphism, and declared per-order counts.
// =====================================================================

struct CatalogRecord {
  long long declared_order;
  std::string name;
  int degree;
  std::vector<Perm> gens;
  PermGroup group;
};

class Catalog {
 public:
  static const std::map<long long, int>& expected_counts() {
    static const std::map<long long, int> counts = {
        {48, 52}, {60, 13}, {72, 50}, {84, 15}};
    return counts;
  }

  // Parse failures throw with the offending line number; semantic
  // integrity failures are collected in issues() so that a report can
  // itemize all of them at once.
  static Catalog load(const std::string& path) {
    std::ifstream in(path);
    if (!in)
      throw std::runtime_error("catalog: cannot open " + path);
    Catalog cat;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      std::string trimmed = trim(line);
      if (trimmed.empty() || trimmed[0] == '#') continue;
      cat.records_.push_back(parse_record(trimmed, line_no));
    }
    cat.check_integrity();
    return cat;
  }

  const std::vector<CatalogRecord>& records() const { return records_; }

  std::vector<const CatalogRecord*> of_order(long long n) const {
    std::vector<const CatalogRecord*> out;
    for (const CatalogRecord& r : records_)
      if (r.declared_order == n) out.push_back(&r);
    return out;
  }

  const std::vector<std::string>& issues() const { return issues_; }
  bool ok() const { return issues_.empty(); }

  std::string integrity_report() const {
    if (ok()) {
      std::ostringstream os;
      bool first = true;
      for (const auto& [order, count] : expected_counts()) {
        if (!first) os << " ";
        os << order << ":" << count;
        first = false;
      }
      os << " — OK";
      return os.str();
    }
    std::ostringstream os;
    os << "catalog integrity failed:";
    for (const std::string& s : issues_) os << "\n  " << s;
    return os.str();
  }

 private:
  static std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
  }

  static std::string field(const std::string& line, const std::string& key,
                           int line_no) {
    std::string pat = key + "=";
    size_t at = line.find(pat);
    if (at == std::string::npos)
      throw std::runtime_error("catalog line " + std::to_string(line_no) +
                               ": missing field " + key);
    size_t start = at + pat.size();
    size_t end = line.find(' ', start);
    if (end == std::string::npos) end = line.size();
    return line.substr(start, end - start);
  }

  static CatalogRecord parse_record(const std::string& line, int line_no) {
    if (line.rfind("group ", 0) != 0)
      throw std::runtime_error("catalog line " + std::to_string(line_no) +
                               ": expected a group record");
    try {
      long long order = std::stoll(field(line, "order", line_no));
      std::string name = field(line, "name", line_no);
      int degree = std::stoi(field(line, "degree", line_no));
      std::vector<Perm> gens;
      std::stringstream ss(field(line, "gens", line_no));
      std::string one;
      while (std::getline(ss, one, ';'))
        gens.push_back(Perm::parse_cycles(one, degree));
      PermGroup group(degree, gens, name);
      return {order, name, degree, std::move(gens), std::move(group)};
    } catch (const std::exception& e) {
      throw std::runtime_error("catalog line " + std::to_string(line_no) +
                               ": " + e.what());
    }
  }

  void check_integrity() {
    std::map<long long, int> counts;
    std::map<std::string, int> names;
    for (const CatalogRecord& r : records_) {
      if (++names[r.name] == 2)
        issues_.push_back("duplicate name: " + r.name);
      if (expected_counts().count(r.declared_order) == 0) {
        issues_.push_back("unexpected order " +
                          std::to_string(r.declared_order) + " for " + r.name);
        continue;
      }
      ++counts[r.declared_order];
      long long actual = r.group.order();
      if (actual != r.declared_order)
        issues_.push_back("order mismatch for " + r.name + ": declared " +
                          std::to_string(r.declared_order) + ", computed " +
                          std::to_string(actual));
    }
    for (const auto& [order, expected] : expected_counts()) {
      int got = counts.count(order) ? counts.at(order) : 0;
      if (got != expected)
        issues_.push_back("count failure \"" + std::to_string(order) + ":" +
                          std::to_string(got) + " != " +
                          std::to_string(expected) + "\"");
    }
    for (size_t i = 0; i < records_.size(); ++i)
      for (size_t j = i + 1; j < records_.size(); ++j) {
        const CatalogRecord& a = records_[i];
        const CatalogRecord& b = records_[j];
        if (a.declared_order != b.declared_order) continue;
        if (a.group.order() != b.group.order()) continue;
        if (is_isomorphic(a.group, b.group))
          issues_.push_back("isomorphic pair of order " +
                            std::to_string(a.declared_order) + ": " + a.name +
                            ", " + b.name);
      }
  }

  std::vector<CatalogRecord> records_;
  std::vector<std::string> issues_;
};

}  // namespace lame
