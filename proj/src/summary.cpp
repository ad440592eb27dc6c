#include "fsc/summary.hpp"

#include "fsc/errors.hpp"

namespace fsc {

SummaryVector combine(const SummaryVector& a, const SummaryVector& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  const auto& pa = a.provenance;
  const auto& pb = b.provenance;
  if (pa.n != pb.n || pa.box_size != pb.box_size)
    throw ConfigError("combine: summaries come from different grids");
  if (pa.field_seed && pb.field_seed && *pa.field_seed != *pb.field_seed)
    throw ConfigError("combine: summaries come from different fields");

  SummaryVector out;
  out.values = a.values;
  out.values.insert(out.values.end(), b.values.begin(), b.values.end());
  out.schema = a.schema;
  out.schema.insert(out.schema.end(), b.schema.begin(), b.schema.end());
  out.provenance = pa;
  out.provenance.type = "combined";
  out.provenance.J = pa.J ? pa.J : pb.J;
  out.provenance.L = pa.L ? pa.L : pb.L;
  out.provenance.B = pa.B ? pa.B : pb.B;
  if (!pa.field_seed) out.provenance.field_seed = pb.field_seed;
  return out;
}

}  // namespace fsc
