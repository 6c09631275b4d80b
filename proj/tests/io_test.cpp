#include <gtest/gtest.h>

#include <sstream>

#include "ckinv/batch.hpp"
#include "ckinv/catalog.hpp"
#include "ckinv/error.hpp"
#include "ckinv/matrix_file.hpp"
#include "ckinv/report.hpp"
#include "support.hpp"

using namespace ckinv;
using testsupport::Rng;

namespace {

ErrorCode parse_error(const std::string& text) {
  try {
    parse_matrix_string(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalError;
}

std::vector<ZeroOneMatrix> corpus(std::uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<ZeroOneMatrix> out;
  for (int i = 0; i < count; ++i)
    out.push_back(testsupport::random_valid_matrix(rng, testsupport::uniform(rng, 2, 6)));
  return out;
}

}  // namespace

TEST(MatrixFile, ParsesCommentsAndBlankLines) {
  const IntMatrix m = parse_matrix_string("# fibonacci\n1 1\r\n\n1\t0\n");
  EXPECT_EQ(m, (IntMatrix{{1, 1}, {1, 0}}));
}

TEST(MatrixFile, Rejections) {
  EXPECT_EQ(parse_error(""), ErrorCode::ParseError);
  EXPECT_EQ(parse_error("# only a comment\n"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error("1 1\n1\n"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error("1 2\n1 1\n"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error("1 1 1\n1 1 1\n"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error("1 x\n1 1\n"), ErrorCode::ParseError);
  EXPECT_THROW(read_matrix_file("/nonexistent/matrix.txt"), Error);
}

TEST(MatrixFile, RoundTrip) {
  for (const auto& a : corpus(61, 50)) {
    const std::string text = format_matrix(a.matrix());
    ASSERT_EQ(parse_matrix_string(text), a.matrix());
  }
}

TEST(Report, DeterministicAndComplete) {
  for (const auto& a : corpus(62, 20)) {
    const auto r = invariants_report(a);
    const Json d1 = report_document(r, {}, verify_all(a));
    const Json d2 = report_document(invariants_report(a), {}, verify_all(a));
    ASSERT_EQ(d1.dump(), d2.dump());
    ASSERT_EQ(report_text(r, {}), report_text(invariants_report(a), {}));
    ASSERT_EQ(d1["n"], a.n());
    ASSERT_EQ(d1["extw"]["free_rank"], r.extw_group.free_rank());
    ASSERT_EQ(d1["iota_injective"], r.iota_kernel_generator == 0);
    ASSERT_TRUE(d1["verification"]["all_passed"].get<bool>());
  }
}

TEST(Report, KeyOrder) {
  const auto a = validate(IntMatrix{{1, 1}, {1, 0}});
  const Json d = report_document(invariants_report(a), {});
  std::vector<std::string> keys;
  for (auto it = d.begin(); it != d.end(); ++it) keys.push_back(it.key());
  const std::vector<std::string> expected{"n", "matrix", "transposed", "warnings", "extw", "exts",
                                          "det_i_minus_a", "iota_kernel_generator",
                                          "iota_injective", "marked_groups"};
  EXPECT_EQ(keys, expected);
}

TEST(Report, BigIntegersBecomeStrings) {
  EXPECT_TRUE(to_json(Integer(42)).is_number_integer());
  EXPECT_TRUE(to_json(Integer(-42)).is_number_integer());
  const Json big = to_json(Integer("123456789012345678901234567890"));
  ASSERT_TRUE(big.is_string());
  EXPECT_EQ(big.get<std::string>(), "123456789012345678901234567890");
}

TEST(Batch, ParallelMatchesSerial) {
  const auto c = corpus(63, 120);
  const auto rs = batch::reports_serial(c);
  const auto rp = batch::reports_parallel(c);
  ASSERT_EQ(rs.size(), rp.size());
  for (std::size_t i = 0; i < rs.size(); ++i) {
    ASSERT_EQ(report_document(rs[i], {}).dump(), report_document(rp[i], {}).dump());
  }
  const auto vs = batch::verify_serial(c);
  const auto vp = batch::verify_parallel(c);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    ASSERT_EQ(to_json(vs[i]).dump(), to_json(vp[i]).dump());
    ASSERT_TRUE(vp[i].all());
  }
  EXPECT_GE(batch::thread_count(), 1);
}

TEST(Batch, EmptyCorpus) {
  EXPECT_TRUE(batch::reports_parallel({}).empty());
  EXPECT_TRUE(batch::verify_parallel({}).empty());
}

TEST(Catalog, EntriesValidate) {
  for (const auto& e : example_catalog()) {
    EXPECT_NO_THROW(validate(e.matrix)) << e.name;
    EXPECT_EQ(e.weak.build().markers.size(), 1u);
    EXPECT_EQ(e.strong.build().markers.size(), 2u);
  }
  EXPECT_EQ(catalog_entry("A_5").matrix, (IntMatrix{{1, 1, 1}, {1, 1, 1}, {1, 0, 0}}));
  EXPECT_THROW(catalog_entry("nope"), std::out_of_range);
}
