#pragma once

// Structured (JSON) and text renderings of invariant reports. Key order is
// fixed and no volatile data is emitted, so identical input gives
// byte-identical output. Integers are JSON numbers when they fit in 64 bits
// and decimal strings otherwise.

#include <json.hpp>

#include <optional>
#include <string>

#include "ckinv/ckext.hpp"
#include "ckinv/markediso.hpp"

namespace ckinv {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& x);
Json to_json(const IntMatrix& m);
Json to_json(const GroupElement& x);
/// {"free_rank", "torsion", "markers": [...]}
Json to_json(const MarkedGroup& m);
Json to_json(const ExactSequenceReport& r);
Json to_json(const VerificationSummary& v);

struct ReportContext {
  bool transposed = false;
  std::vector<ErrorCode> warnings;
};

Json report_document(const ExtInvariantReport& r, const ReportContext& ctx,
                     const std::optional<VerificationSummary>& verification = std::nullopt);
std::string report_text(const ExtInvariantReport& r, const ReportContext& ctx,
                        const std::optional<VerificationSummary>& verification = std::nullopt);

Json verification_document(const ZeroOneMatrix& a, const VerificationSummary& v);
std::string verification_text(const ZeroOneMatrix& a, const VerificationSummary& v);

}  // namespace ckinv
