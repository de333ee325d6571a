#ifndef SUSYSPEC_REPORT_HPP
#define SUSYSPEC_REPORT_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "susyspec/linalg.hpp"

namespace susyspec {

/// One verification record. Entries whose condition is automatic in finite
/// dimension carry no residual and are marked trivial instead of being
/// silently dropped, so reports keep the shape of the axioms they check.
struct CheckEntry {
  std::string tag;          // axiom label, e.g. "Def2.1(3)" or "Lemma3.8-D"
  std::string name;         // human-readable check name
  std::optional<double> residual;
  double threshold = 0.0;
  bool pass = false;
  bool trivial = false;

  static CheckEntry measured(std::string tag, std::string name, double residual,
                             double threshold);
  static CheckEntry trivially_true(std::string tag, std::string name);
  static CheckEntry boolean(std::string tag, std::string name, bool ok);
};

struct CheckReport {
  std::vector<CheckEntry> entries;
  std::vector<std::string> caveats;

  CheckEntry& add(CheckEntry e);
  CheckEntry& measured(const std::string& tag, const std::string& name,
                       double residual, double threshold);
  CheckEntry& trivially_true(const std::string& tag, const std::string& name);
  CheckEntry& boolean(const std::string& tag, const std::string& name, bool ok);
  void merge(const CheckReport& other);

  bool passed() const;
  double worst_residual() const;
  const CheckEntry* find(const std::string& tag) const;
};

/// Deterministic float formatting used in all report output.
std::string format_double(double v);

/// Machine-parsable report: fixed field order, one record per check.
/// Timing is never written here so identical inputs give identical bytes.
struct ReportDocument {
  std::string command;
  std::string input_descriptor;
  Tolerance tol;
  std::optional<unsigned long long> seed;
  CheckReport checks;
  std::vector<std::pair<std::string, std::string>> extra;  // ordered key/value

  void write(std::ostream& os) const;
  std::string to_string() const;
};

}  // namespace susyspec

#endif
