#include "ckinv/report.hpp"

#include <sstream>

namespace ckinv {

Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(static_cast<long long>(x.get_si()));
  return Json(x.get_str());
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

static Json to_json(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const GroupElement& x) {
  Json j;
  j["free"] = to_json(x.free_coords());
  j["torsion"] = to_json(x.torsion_coords());
  return j;
}

static Json group_json(const FgAbelianGroup& g) {
  Json j;
  j["free_rank"] = g.free_rank();
  j["torsion"] = to_json(g.torsion());
  return j;
}

Json to_json(const MarkedGroup& m) {
  Json j = group_json(m.group);
  Json markers = Json::array();
  for (const auto& x : m.markers) markers.push_back(to_json(x));
  j["markers"] = std::move(markers);
  return j;
}

Json to_json(const ExactSequenceReport& r) {
  Json j;
  j["i1_into_kernel_injective"] = r.i1_into_kernel_injective;
  j["kernel_j_equals_image_i1"] = r.kernel_j_equals_image_i1;
  j["image_j_equals_kernel_s"] = r.image_j_equals_kernel_s;
  j["image_s_equals_kernel_iota"] = r.image_s_equals_kernel_iota;
  j["kernel_q_equals_image_iota"] = r.kernel_q_equals_image_iota;
  j["q_surjective"] = r.q_surjective;
  return j;
}

Json to_json(const VerificationSummary& v) {
  Json j;
  j["im0_identity"] = v.im0_identity;
  j["exact_sequence"] = to_json(v.exact_sequence);
  j["toeplitz_consistency"] = v.toeplitz_consistency;
  j["commutation"] = v.commutation;
  j["all_passed"] = v.all();
  return j;
}

static Json warnings_json(const std::vector<ErrorCode>& w) {
  Json a = Json::array();
  for (auto c : w) a.push_back(std::string(to_string(c)));
  return a;
}

Json report_document(const ExtInvariantReport& r, const ReportContext& ctx,
                     const std::optional<VerificationSummary>& verification) {
  Json doc;
  doc["n"] = r.matrix.n();
  doc["matrix"] = to_json(r.matrix.matrix());
  doc["transposed"] = ctx.transposed;
  doc["warnings"] = warnings_json(ctx.warnings);

  Json w = group_json(r.extw_group);
  w["toeplitz_weak"] = to_json(r.toeplitz_weak);
  doc["extw"] = std::move(w);

  Json s = group_json(r.exts_group);
  s["toeplitz_strong"] = to_json(r.toeplitz_strong);
  s["iota_one"] = to_json(r.iota_one);
  doc["exts"] = std::move(s);

  doc["det_i_minus_a"] = to_json(r.det_i_minus_a);
  doc["iota_kernel_generator"] = to_json(r.iota_kernel_generator);
  doc["iota_injective"] = r.iota_kernel_generator == 0;

  // Coordinates depend on the presentation; compare marked groups, never
  // raw coordinates from different runs.
  Json marked;
  marked["weak"] = to_json(MarkedGroup(r.extw_group, {r.toeplitz_weak}));
  marked["strong"] = to_json(MarkedGroup(r.exts_group, {r.toeplitz_strong, r.iota_one}));
  doc["marked_groups"] = std::move(marked);

  if (verification) doc["verification"] = to_json(*verification);
  return doc;
}

static void write_element(std::ostream& os, const GroupElement& x) {
  os << x.to_string();
}

std::string report_text(const ExtInvariantReport& r, const ReportContext& ctx,
                        const std::optional<VerificationSummary>& verification) {
  std::ostringstream os;
  os << "N = " << r.matrix.n() << (ctx.transposed ? " (transposed input)" : "") << '\n';
  for (auto w : ctx.warnings) os << "warning: " << to_string(w) << " (forced)\n";
  os << "Ext_w  = " << r.extw_group.describe() << '\n';
  os << "  [T]_w   = ";
  write_element(os, r.toeplitz_weak);
  os << '\n';
  os << "Ext_s  = " << r.exts_group.describe() << '\n';
  os << "  [T]_s   = ";
  write_element(os, r.toeplitz_strong);
  os << '\n';
  os << "  iota(1) = ";
  write_element(os, r.iota_one);
  os << '\n';
  os << "det(I - A) = " << r.det_i_minus_a << '\n';
  os << "iota kernel generator = " << r.iota_kernel_generator
     << (r.iota_kernel_generator == 0 ? " (injective)" : "") << '\n';
  if (verification) {
    os << "verification: " << (verification->all() ? "all passed" : "FAILED") << '\n';
  }
  return os.str();
}

Json verification_document(const ZeroOneMatrix& a, const VerificationSummary& v) {
  Json doc;
  doc["n"] = a.n();
  doc["matrix"] = to_json(a.matrix());
  doc["det_i_minus_a"] = to_json(determinant(a.i_minus_a()));
  const Integer g = iota_kernel_generator(a);
  doc["iota_kernel_generator"] = to_json(g);
  doc["checks"] = to_json(v);
  return doc;
}

std::string verification_text(const ZeroOneMatrix& a, const VerificationSummary& v) {
  std::ostringstream os;
  auto line = [&](const char* name, bool ok) {
    os << (ok ? "PASS " : "FAIL ") << name << '\n';
  };
  line("im0 identity (all n)", v.im0_identity);
  const auto& e = v.exact_sequence;
  line("exact at Z -> Ker(I-Ahat)", e.i1_into_kernel_injective);
  line("exact at Ker(I-Ahat)", e.kernel_j_equals_image_i1);
  line("exact at Ker(I-A)", e.image_j_equals_kernel_s);
  line("exact at Z (iota)", e.image_s_equals_kernel_iota);
  line("exact at Ext_s", e.kernel_q_equals_image_iota);
  line("exact at Ext_w", e.q_surjective);
  line("Toeplitz class independent of m", v.toeplitz_consistency);
  line("q commutes with Toeplitz/iota", v.commutation);
  const Integer det = determinant(a.i_minus_a());
  const Integer g = iota_kernel_generator(a);
  os << "det(I - A) = " << det << ", iota kernel generator = " << g << '\n';
  if (det == 0 && g == 0) os << "note: det(I - A) = 0 yet iota is injective\n";
  return os.str();
}

}  // namespace ckinv
