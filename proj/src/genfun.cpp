#include "genfun.hpp"

namespace biham {

USeriesQ at_q_one(const USeriesL& f) {
  USeriesQ out(f.truncation());
  for (int d = 1; d <= f.truncation(); ++d) out[d] = f[d].eval_at_one();
  return out;
}

}  // namespace biham
