#include "susyspec/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace susyspec {

CheckEntry CheckEntry::measured(std::string tag, std::string name, double residual,
                                double threshold) {
  CheckEntry e;
  e.tag = std::move(tag);
  e.name = std::move(name);
  e.residual = residual;
  e.threshold = threshold;
  e.pass = residual <= threshold;
  return e;
}

CheckEntry CheckEntry::trivially_true(std::string tag, std::string name) {
  CheckEntry e;
  e.tag = std::move(tag);
  e.name = std::move(name);
  e.pass = true;
  e.trivial = true;
  return e;
}

CheckEntry CheckEntry::boolean(std::string tag, std::string name, bool ok) {
  CheckEntry e;
  e.tag = std::move(tag);
  e.name = std::move(name);
  e.pass = ok;
  return e;
}

CheckEntry& CheckReport::add(CheckEntry e) {
  entries.push_back(std::move(e));
  return entries.back();
}

CheckEntry& CheckReport::measured(const std::string& tag, const std::string& name,
                                  double residual, double threshold) {
  return add(CheckEntry::measured(tag, name, residual, threshold));
}

CheckEntry& CheckReport::trivially_true(const std::string& tag, const std::string& name) {
  return add(CheckEntry::trivially_true(tag, name));
}

CheckEntry& CheckReport::boolean(const std::string& tag, const std::string& name, bool ok) {
  return add(CheckEntry::boolean(tag, name, ok));
}

void CheckReport::merge(const CheckReport& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
  caveats.insert(caveats.end(), other.caveats.begin(), other.caveats.end());
}

bool CheckReport::passed() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const CheckEntry& e) { return e.pass; });
}

double CheckReport::worst_residual() const {
  double worst = 0.0;
  for (const auto& e : entries)
    if (e.residual) worst = std::max(worst, *e.residual);
  return worst;
}

const CheckEntry* CheckReport::find(const std::string& tag) const {
  for (const auto& e : entries)
    if (e.tag == tag) return &e;
  return nullptr;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void ReportDocument::write(std::ostream& os) const {
  os << "report-version 1\n";
  os << "command " << command << "\n";
  os << "input " << input_descriptor << "\n";
  os << "tol-eq " << format_double(tol.eq_tol) << "\n";
  os << "tol-rank " << format_double(tol.rank_tol) << "\n";
  if (seed) os << "seed " << *seed << "\n";
  for (const auto& [k, v] : extra) os << k << " " << v << "\n";
  for (const auto& e : checks.entries) {
    os << "check tag=" << e.tag << " name=" << e.name;
    if (e.trivial)
      os << " residual=trivial threshold=-";
    else if (e.residual)
      os << " residual=" << format_double(*e.residual)
         << " threshold=" << format_double(e.threshold);
    else
      os << " residual=- threshold=-";
    os << " verdict=" << (e.pass ? "pass" : "fail") << "\n";
  }
  for (const auto& c : checks.caveats) os << "caveat " << c << "\n";
  size_t np = 0;
  for (const auto& e : checks.entries) np += e.pass ? 1 : 0;
  os << "summary checks=" << checks.entries.size() << " pass=" << np
     << " fail=" << (checks.entries.size() - np)
     << " verdict=" << (checks.passed() ? "pass" : "fail") << "\n";
}

std::string ReportDocument::to_string() const {
  std::ostringstream os;
  write(os);
  return os.str();
}

}  // namespace susyspec
