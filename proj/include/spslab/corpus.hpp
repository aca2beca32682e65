#pragma once

#include "spslab/constructions.hpp"
#include "spslab/properties.hpp"

namespace spslab {

struct CorpusItem {
  std::string key; // canonical generative key: grid dims + insertion steps
  RectDiagram diagram;
  InsertionScript script;
};

/// All slim rectangular lattices with at most max_size elements, generated
/// as grids closed under multifork insertion, deduplicated up to lattice
/// isomorphism (mirror images identified).
struct Corpus {
  int max_size = 0;
  std::vector<CorpusItem> items;
};

Corpus enumerate_corpus(int max_size);

extern const std::vector<std::string> kAllChecks;

struct VerificationRow {
  std::string item;
  std::string check;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<VerificationRow> rows;
  int violations() const;
  std::string text() const; // deterministic, timing-free
};

/// Runs the selected check suites over every item; deterministic output
/// regardless of the worker count.
VerificationReport verify_corpus(const Corpus& corpus, const std::vector<std::string>& checks,
                                 int jobs = 1);

/// Per-diagram checks shared by `verify_corpus` and the check CLI.
std::vector<VerificationRow> run_checks(const std::string& item, const RectDiagram& d,
                                        const std::vector<std::string>& checks,
                                        const InsertionScript* script = nullptr);

} // namespace spslab
