#pragma once

// Corpus-level kernels. Each entry is independent, so the parallel variants
// spread entries over OpenMP threads; the serial variants are the reference
// the parallel ones are tested against.

#include <span>
#include <vector>

#include "ckinv/ckext.hpp"

namespace ckinv::batch {

std::vector<ExtInvariantReport> reports_serial(std::span<const ZeroOneMatrix> corpus);
std::vector<ExtInvariantReport> reports_parallel(std::span<const ZeroOneMatrix> corpus);

std::vector<VerificationSummary> verify_serial(std::span<const ZeroOneMatrix> corpus);
std::vector<VerificationSummary> verify_parallel(std::span<const ZeroOneMatrix> corpus);

/// Worker threads the parallel kernels will use.
int thread_count();

}  // namespace ckinv::batch
