#include <omp.h>

#include <cstdint>

#include "qfg/cut_scan.hpp"

namespace qfg {

std::vector<CutScan> scan_cuts_omp(const CutScanContext& ctx) {
  std::vector<CutScan> out;
  if (ctx.size() < 2) return out;
  const auto count = static_cast<std::int64_t>((std::uint64_t{1} << (ctx.size() - 1)) - 1);
  out.resize(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t k = 0; k < count; ++k) {
    out[static_cast<std::size_t>(k)] = ctx.evaluate(cut_mask(static_cast<std::uint64_t>(k)));
  }
  return out;
}

}  // namespace qfg
