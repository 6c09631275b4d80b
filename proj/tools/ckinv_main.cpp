// ckinv: extension-group invariants of Cuntz-Krieger algebras.
//
//   ckinv compute  FILE [--transpose] [--force] [--verify] [--format F]
//   ckinv compare  FILE_A FILE_B [--force] [--torsion-bound N] [--format F]
//   ckinv verify   FILE [--force] [--format F]
//   ckinv examples [--torsion-bound N] [--format F]
//
// Exit codes: 0 success, 2 parse/validation error, 3 not isomorphic,
// 4 verification failure, 1 any other error.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "ckinv/batch.hpp"
#include "ckinv/catalog.hpp"
#include "ckinv/ckext.hpp"
#include "ckinv/error.hpp"
#include "ckinv/markediso.hpp"
#include "ckinv/matrix_file.hpp"
#include "ckinv/report.hpp"

namespace {

using namespace ckinv;

constexpr int kExitOk = 0;
constexpr int kExitOther = 1;
constexpr int kExitInput = 2;
constexpr int kExitNotIsomorphic = 3;
constexpr int kExitVerification = 4;

struct CommonOptions {
  std::string format = "structured";
  bool force = false;
  long torsion_bound = 512;

  bool structured() const { return format == "structured"; }
  MarkedIsoOptions iso() const {
    MarkedIsoOptions o;
    o.torsion_bound = torsion_bound;
    return o;
  }
};

void add_format(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"structured", "text"}));
}

ZeroOneMatrix load(const std::string& path, const CommonOptions& opts) {
  const IntMatrix raw = read_matrix_file(path);
  if (!opts.force) return validate(raw);
  ZeroOneMatrix a = validate_relaxed(raw);
  for (auto v : a.violations()) {
    std::cerr << "warning: " << path << ": " << to_string(v)
              << "; computing lattice formulas anyway (--force)\n";
  }
  return a;
}

void emit(const Json& doc) { std::cout << doc.dump(2) << '\n'; }

int cmd_compute(const std::string& path, bool transpose, bool with_verify,
                const CommonOptions& opts) {
  ZeroOneMatrix a = load(path, opts);
  if (transpose) a = a.transpose();
  const ExtInvariantReport r = invariants_report(a);
  std::optional<VerificationSummary> v;
  if (with_verify) v = verify_all(a);
  const ReportContext ctx{transpose, a.violations()};
  if (opts.structured()) {
    emit(report_document(r, ctx, v));
  } else {
    std::cout << report_text(r, ctx, v);
  }
  if (v && !v->all()) return kExitVerification;
  return kExitOk;
}

int cmd_compare(const std::string& path_a, const std::string& path_b,
                const CommonOptions& opts) {
  const ZeroOneMatrix a = load(path_a, opts);
  const ZeroOneMatrix b = load(path_b, opts);
  const MarkedGroup wa = weak_marked_pair(a.transpose());
  const MarkedGroup wb = weak_marked_pair(b.transpose());
  const bool iso = marked_isomorphic(wa, wb, opts.iso());
  if (opts.structured()) {
    Json doc;
    doc["a"] = {{"matrix", to_json(a.matrix())}, {"weak_pair_of_transpose", to_json(wa)}};
    doc["b"] = {{"matrix", to_json(b.matrix())}, {"weak_pair_of_transpose", to_json(wb)}};
    doc["isomorphic"] = iso;
    emit(doc);
  } else {
    std::cout << "A^t: (" << wa.group.describe() << ", " << wa.markers[0].to_string() << ")\n"
              << "B^t: (" << wb.group.describe() << ", " << wb.markers[0].to_string() << ")\n"
              << (iso ? "isomorphic" : "not isomorphic") << '\n';
  }
  return iso ? kExitOk : kExitNotIsomorphic;
}

int cmd_verify(const std::string& path, const CommonOptions& opts) {
  const ZeroOneMatrix a = load(path, opts);
  const VerificationSummary v = verify_all(a);
  if (opts.structured()) {
    emit(verification_document(a, v));
  } else {
    std::cout << verification_text(a, v);
  }
  return v.all() ? kExitOk : kExitVerification;
}

int cmd_examples(const CommonOptions& opts) {
  const auto& catalog = example_catalog();
  std::vector<ZeroOneMatrix> corpus;
  for (const auto& e : catalog) corpus.push_back(validate(e.matrix));
  const auto reports = batch::reports_parallel(corpus);

  // DIFF: the computed value differs from a stated value already known to
  // be unreachable. A flagged value that suddenly matches is a FAIL.
  struct Line {
    std::string name;
    std::string check;
    bool pass;
    bool known_diff = false;

    std::string status() const {
      if (known_diff) return pass ? "FAIL" : "DIFF";
      return pass ? "PASS" : "FAIL";
    }
  };
  std::vector<Line> lines;
  const MarkedIsoOptions iso = opts.iso();
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const auto& r = reports[i];
    const MarkedGroup weak(r.extw_group, {r.toeplitz_weak});
    const MarkedGroup strong(r.exts_group, {r.toeplitz_strong, r.iota_one});
    lines.push_back({catalog[i].name, "weak pair (Ext_w, [T]_w)",
                     marked_isomorphic(weak, catalog[i].weak.build(), iso),
                     catalog[i].weak_differs});
    lines.push_back({catalog[i].name, "strong triple (Ext_s, [T]_s, iota(1))",
                     marked_isomorphic(strong, catalog[i].strong.build(), iso),
                     catalog[i].strong_differs});
  }
  auto index_of = [&](const std::string& name) {
    for (std::size_t i = 0; i < catalog.size(); ++i)
      if (catalog[i].name == name) return i;
    throw Error(ErrorCode::InternalError, "catalog lacks " + name);
  };
  const auto& f = corpus[index_of("F")];
  const auto& o2 = corpus[index_of("O_2")];
  const auto& a5 = corpus[index_of("A_5")];
  const auto& a6 = corpus[index_of("A_6")];
  lines.push_back({"F vs O_2", "O_F isomorphic to O_2", ck_isomorphic(f, o2, iso)});
  lines.push_back({"A_5 vs A_6", "O_A5 not isomorphic to O_A6", !ck_isomorphic(a5, a6, iso)});
  lines.push_back({"A_5 vs A_6", "Ext_s groups not isomorphic",
                   !same_invariants(reports[index_of("A_5")].exts_group,
                                    reports[index_of("A_6")].exts_group)});

  bool all = true;
  for (const auto& l : lines) all = all && l.status() != "FAIL";
  if (opts.structured()) {
    Json doc;
    Json results = Json::array();
    for (const auto& l : lines)
      results.push_back({{"name", l.name}, {"check", l.check}, {"status", l.status()}});
    doc["results"] = std::move(results);
    doc["all_passed"] = all;
    emit(doc);
  } else {
    for (const auto& l : lines)
      std::cout << l.status() << ' ' << l.name << ": " << l.check << '\n';
  }
  return all ? kExitOk : kExitVerification;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ParseError:
    case ErrorCode::NotSquare:
    case ErrorCode::NotZeroOne:
    case ErrorCode::NotIrreducible:
    case ErrorCode::IsPermutation:
    case ErrorCode::TooSmall:
      return kExitInput;
    case ErrorCode::InternalError:
      return kExitVerification;
    default:
      return kExitOther;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extension-group invariants of Cuntz-Krieger algebras"};
  app.require_subcommand(1);

  CommonOptions opts;
  std::string path_a, path_b;
  bool transpose = false, with_verify = false;

  auto* compute = app.add_subcommand("compute", "Invariant report for one matrix");
  compute->add_option("file", path_a, "Matrix file")->required();
  compute->add_flag("--transpose", transpose, "Compute on the transposed matrix");
  compute->add_flag("--force", opts.force, "Accept reducible or permutation matrices");
  compute->add_flag("--verify", with_verify, "Include verification checks");
  add_format(compute, opts);

  auto* compare = app.add_subcommand("compare", "Decide O_A ~ O_B");
  compare->add_option("file_a", path_a, "First matrix file")->required();
  compare->add_option("file_b", path_b, "Second matrix file")->required();
  compare->add_flag("--force", opts.force, "Accept reducible or permutation matrices");
  compare->add_option("--torsion-bound", opts.torsion_bound, "Largest torsion order searched")
      ->check(CLI::PositiveNumber);
  add_format(compare, opts);

  auto* verify = app.add_subcommand("verify", "Run the identity and exactness checks");
  verify->add_option("file", path_a, "Matrix file")->required();
  verify->add_flag("--force", opts.force, "Accept reducible or permutation matrices");
  add_format(verify, opts);

  auto* examples = app.add_subcommand("examples", "Regression run over the worked examples");
  examples->add_option("--torsion-bound", opts.torsion_bound, "Largest torsion order searched")
      ->check(CLI::PositiveNumber);
  add_format(examples, opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*compute) return cmd_compute(path_a, transpose, with_verify, opts);
    if (*compare) return cmd_compare(path_a, path_b, opts);
    if (*verify) return cmd_verify(path_a, opts);
    if (*examples) return cmd_examples(opts);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitOther;
  }
  return kExitOther;
}
