#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gds/dsl.hpp"
#include "gds/report.hpp"

namespace gds {

struct DocumentReport {
  std::string name;
  std::string source;  // canonical DSL text on one line
  std::vector<CheckReport> checks;
  std::string error;   // set when the pipeline aborted

  bool ok() const;
};

struct VerifyReport {
  std::string title;
  std::vector<DocumentReport> documents;

  bool ok() const;
  std::size_t failures() const;
};

/// Every invariant of one document: parse round-trip, presentation
/// identities, conversions both ways, charts, fibers, derivations at
/// m = height .. height + extra_m, and the comb checks.
DocumentReport verify_document(const TreeDocument& doc, int extra_m = 0);

/// Documents are checked independently; `parallel` spreads them over
/// hardware threads without changing the report.
VerifyReport verify_documents(const std::string& title, const std::vector<TreeDocument>& docs,
                              bool parallel = false, int extra_m = 0);

/// `count` seeded random documents, alternating labelled and weighted.
std::vector<TreeDocument> fuzz_documents(std::size_t count, std::uint64_t seed);

}  // namespace gds
