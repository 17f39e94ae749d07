#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "telepathy/checker.hpp"
#include "telepathy/pipeline.hpp"
#include "telepathy/reduction.hpp"

using namespace telepathy;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  auto p = fs::temp_directory_path() / ("telepathy_test_" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST(ChiLower, Ceiling) {
  EXPECT_EQ(chi_lower(65536, 3912), 17U);
  EXPECT_EQ(chi_lower(65536, 4096), 16U);
  EXPECT_EQ(chi_lower(65536, 4095), 17U);
  for (std::uint64_t k = 1; k <= 16; ++k) EXPECT_EQ(chi_lower(16 * k, 16), k);
  EXPECT_THROW(chi_lower(10, 0), usage_error);
}

TEST(Reduction, ExactAuditAtN4) {
  auto r = validate_reduction(4);
  EXPECT_TRUE(r.parity_edge_free);
  EXPECT_EQ(r.alpha_full, 4U);
  EXPECT_EQ(r.alpha_even, 2U);
  EXPECT_EQ(r.alpha_odd, 2U);
  EXPECT_EQ(r.alpha_lower, 1U);
  EXPECT_EQ(r.alpha_middle, 2U);
  EXPECT_TRUE(r.components_identity());
  EXPECT_TRUE(r.lower_identity());
  EXPECT_THROW(validate_reduction(16), usage_error);
}

TEST(Pipeline, SmallNDoesNotEstablishImpossibility) {
  auto dir = scratch("n3");
  try {
    run_pipeline({3, {}}, dir);
    FAIL() << "expected pipeline_error";
  } catch (const pipeline_error& e) {
    EXPECT_EQ(e.section, "total");
  }
  auto rep = check_certificate(dir);
  ASSERT_FALSE(rep.pass());
  std::size_t failures = 0;
  for (const auto& item : rep.items) failures += !item.pass;
  EXPECT_EQ(failures, 1U);
  EXPECT_EQ(rep.first_failure()->section, "final implication");
  EXPECT_EQ(rep.total, 32U);
  EXPECT_EQ(rep.chi_lower, 8U);
  fs::remove_all(dir);
}

TEST(Pipeline, RejectsUnsupportedSizes) {
  EXPECT_THROW(run_pipeline({1, {}}, scratch("n1")), usage_error);
  EXPECT_THROW(run_pipeline({5, {}}, scratch("n5")), usage_error);
}

TEST(Checker, MalformedCertificate) {
  auto dir = scratch("bad");
  fs::create_directories(dir);
  {
    std::ofstream f(dir / "certificate.txt");
    f << "NOT-A-CERT\n";
  }
  auto rep = check_certificate(dir);
  ASSERT_FALSE(rep.pass());
  EXPECT_EQ(rep.first_failure()->section, "parse");

  fs::remove(dir / "certificate.txt");
  rep = check_certificate(dir);
  ASSERT_FALSE(rep.pass());
  EXPECT_EQ(rep.first_failure()->section, "parse");

  {
    std::ofstream f(dir / "certificate.txt");
    f << "TELEPATHY-CERT v1\ngraph N=8\nlevel 0 bound x method trivial\n";
  }
  rep = check_certificate(dir);
  ASSERT_FALSE(rep.pass());
  EXPECT_EQ(rep.first_failure()->section, "parse");
  fs::remove_all(dir);
}

TEST(Certificate, FileNames) {
  EXPECT_EQ(cover_file_name("d12", parse_profile("(0,0,3,3)")), "covers/d12_0-0-3-3.cover");
  EXPECT_EQ(case_name(10), "d10");
}
