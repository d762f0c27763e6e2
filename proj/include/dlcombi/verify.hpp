#pragma once

// Cross-check of the series enumeration against the matrix-group oracle.
// Series of G are counted by semisimple classes of the dual group, so
// GL2 is compared with GL2 and SL2 with PGL2 (and PGL2 with SL2).

#include <string>

#include "oracle.hpp"
#include "series.hpp"

namespace dlcombi {

struct VerifyReport {
  std::string preset;
  int q = 0;
  std::string dual_family;
  long core = 0;
  long oracle = 0;
  bool pass = false;
};

inline std::string dual_family_of(const std::string &preset_name) {
  if (preset_name == "GL2")
    return "GL2";
  if (preset_name == "SL2")
    return "PGL2";
  if (preset_name == "PGL2")
    return "SL2";
  fail(ErrorCode::ValidationError,
       "oracle comparison is available for GL2, SL2 and PGL2, not '" + preset_name + "'");
}

inline VerifyReport verify_series_partition(const std::string &preset_name, int q) {
  require(q >= 2 && q <= 5, ErrorCode::ValidationError,
          "oracle comparison needs q in {2, 3, 4, 5}, got " + std::to_string(q));
  VerifyReport r;
  r.preset = preset_name;
  r.q = q;
  r.dual_family = dual_family_of(preset_name);
  auto ctx = GroupContext::create(preset(preset_name), FrobeniusSpec{q, {}, {}});
  r.core = static_cast<long>(enumerate_series(ctx).rational.size());
  r.oracle = oracle::semisimple_class_count(oracle::parse_family(r.dual_family), q);
  r.pass = r.core == r.oracle;
  return r;
}

} // namespace dlcombi
