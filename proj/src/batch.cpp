#include "ckinv/batch.hpp"

#include <exception>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ckinv::batch {

namespace {

template <class F>
auto map_serial(std::span<const ZeroOneMatrix> corpus, F&& f) {
  std::vector<decltype(f(corpus[0]))> out;
  out.reserve(corpus.size());
  for (const auto& a : corpus) out.push_back(f(a));
  return out;
}

// Results land in per-index slots; the first exception (by index) is
// rethrown after the parallel region.
template <class F>
auto map_parallel(std::span<const ZeroOneMatrix> corpus, F&& f) {
  using Result = decltype(f(corpus[0]));
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(corpus.size());
  std::vector<std::optional<Result>> slots(corpus.size());
  std::vector<std::exception_ptr> errors(corpus.size());

#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      slots[i].emplace(f(corpus[i]));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }

  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<Result> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace

std::vector<ExtInvariantReport> reports_serial(std::span<const ZeroOneMatrix> corpus) {
  return map_serial(corpus, invariants_report);
}

std::vector<ExtInvariantReport> reports_parallel(std::span<const ZeroOneMatrix> corpus) {
  return map_parallel(corpus, invariants_report);
}

std::vector<VerificationSummary> verify_serial(std::span<const ZeroOneMatrix> corpus) {
  return map_serial(corpus, verify_all);
}

std::vector<VerificationSummary> verify_parallel(std::span<const ZeroOneMatrix> corpus) {
  return map_parallel(corpus, verify_all);
}

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace ckinv::batch
