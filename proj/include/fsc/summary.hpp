#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fsc {

// Where a summary came from; combine() refuses to mix summaries computed
// from different fields or grids.
struct SummaryProvenance {
  std::string type;  // "scattering" | "bandpower" | "combined" | ""
  int n = 0;
  double box_size = 0.0;
  int J = 0;
  int L = 0;
  int B = 0;
  std::optional<std::uint64_t> field_seed;
};

// Fixed-length compressed representation with a label per entry.
struct SummaryVector {
  std::vector<double> values;
  std::vector<std::string> schema;
  SummaryProvenance provenance;

  std::size_t size() const { return values.size(); }
  bool empty() const { return values.empty(); }
};

// Concatenation with merged schema; throws on provenance mismatch.
SummaryVector combine(const SummaryVector& a, const SummaryVector& b);

}  // namespace fsc
