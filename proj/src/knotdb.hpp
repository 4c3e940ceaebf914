#pragma once

#include "record.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace slicegate {

inline constexpr int kStoreFormatVersion = 1;

/// Name-keyed collection of knot records. Iteration is in name order.
class KnotStore {
 public:
  /// Throws Inconsistent on a duplicate name.
  void insert(KnotRecord record);
  /// Insert, or combine fields with an existing record of the same name.
  /// Any field present on both sides must agree.
  void merge(KnotRecord record);

  const KnotRecord* find(const std::string& name) const;
  /// Throws NotFound.
  const KnotRecord& lookup(const std::string& name) const;

  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }
  const std::map<std::string, KnotRecord>& records() const { return records_; }
  std::vector<std::string> names() const;

  friend bool operator==(const KnotStore&, const KnotStore&) = default;

 private:
  std::map<std::string, KnotRecord> records_;
};

/// Built-in records: unknot, 3_1, 4_1, 6_1. Validated on construction.
KnotStore seed_table();

/// Field name -> CSV column header. Recognized fields: name, seifert,
/// alexander, signature, arf, tau, epsilon, nu, s, g4, gamma4, g3, gamma3,
/// upsilon.
using ColumnMapping = std::map<std::string, std::string>;

struct RowDiagnostic {
  std::size_t row = 0;  // 1-based data row (header excluded)
  std::string column;
  std::string message;
};

struct IngestResult {
  KnotStore delta;
  std::vector<RowDiagnostic> diagnostics;
};

/// Parse a header-led CSV table. Unparseable cells become absent fields
/// with a diagnostic; rows that contradict their own Seifert matrix throw.
IngestResult ingest_csv_text(const std::string& text, const ColumnMapping& mapping);
IngestResult ingest_csv(const std::filesystem::path& path, const ColumnMapping& mapping);

/// Split one CSV document into rows of cells (RFC 4180 quoting).
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

std::string store_to_json(const KnotStore& store);
KnotStore store_from_json(const std::string& text);

void save(const KnotStore& store, const std::filesystem::path& path);
KnotStore load(const std::filesystem::path& path);

}  // namespace slicegate
