#pragma once

// JSON report assembly and the golden corpus reproducing the corollary
// tables.  Field order is fixed (ordered json) so byte comparison is
// meaningful.

#include <string>
#include <vector>

#include <json.hpp>

#include "tanglekit/band_solver.hpp"
#include "tanglekit/mtangle_solver.hpp"

namespace tanglekit::report {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "tanglekit.report/1";
inline constexpr const char* kVersion = "0.1.0";

// One oracle-checked surgery instance, stable field order.
json instance_json(const ExprPtr& u, const std::string& p,
                   const std::string& r, const std::string& substrate,
                   const std::string& product, const std::string& verified);

// Table generators (names are the fixture basenames).
std::vector<std::string> golden_names();
json golden_table(const std::string& name);

struct GoldenResult {
  std::string name;
  bool ok;
  std::string diff;  // first mismatch when not ok
};

// Regenerates every fixture found in dir and byte-compares.  Throws on an
// empty or missing corpus.
std::vector<GoldenResult> run_golden(const std::string& dir);

// Writes all fixtures into dir (bootstrap / regeneration).
void write_golden(const std::string& dir);

std::string dump(const json& j);

}  // namespace tanglekit::report
