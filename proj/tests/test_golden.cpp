#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "lmi/cli.hpp"
#include "support.hpp"

// Byte-exact CLI output checks. Set LMI_UPDATE_GOLDEN=1 to rewrite the files.

namespace fs = std::filesystem;

namespace {

struct GoldenCase {
  std::string name;
  std::vector<std::string> args;  // "@stem" expands to a fixture path, "%leaf" to a golden input
  int exit_code = 0;
  std::vector<std::string> files;  // written into the scratch directory and compared too
};

void PrintTo(const GoldenCase& c, std::ostream* os) { *os << c.name; }

std::vector<GoldenCase> cases() {
  return {
      {"analyze_intro", {"analyze", "@intro", "--json"}},
      {"analyze_intro_text", {"analyze", "@intro"}},
      {"analyze_sector_verify", {"analyze", "@sector", "--verify", "--json"}},
      {"analyze_parabola", {"analyze", "@parabola", "--json"}},
      {"analyze_empty", {"analyze", "@s_region_empty", "--json"}},
      {"contains_intro_outside", {"contains", "@intro", "--z", "2+0i", "--json"}},
      {"contains_intro_text", {"contains", "@intro", "--z", "0.25-0.25i"}},
      {"interval_disk", {"interval", "@disk", "--json"}},
      {"interval_hstrip_text", {"interval", "@hstrip"}},
      {"slice_intro", {"slice", "@intro", "--x0", "0", "--json"}},
      {"slice_vstrip_text", {"slice", "@vstrip", "--x0", "-1.5"}},
      {"inscribe_intro_text", {"inscribe", "@intro", "--x0", "0"}},
      {"inscribe_parabola", {"inscribe", "@parabola", "--x0", "-2", "--json"}},
      {"inscribe_s_region_default", {"inscribe", "@s_region", "--json"}},
      {"omega_sector", {"omega", "@sector", "--json"}},
      {"omega_intro_contains_origin", {"omega", "@intro", "--json"}, 1},
      {"classify_intro", {"classify", "@intro", "--json"}},
      {"classify_hstrip", {"classify", "@hstrip", "--json"}},
      {"classify_sliced_sector", {"classify", "@sliced_sector", "--json"}},
      {"classify_s_region_text", {"classify", "@s_region"}},
      {"plot_intro", {"plot", "@intro", "--px", "48,48", "--svg", "intro.svg", "--json"}, 0, {"intro.svg"}},
      {"plot_disk_csv", {"plot", "@unit_disk", "--viewport", "-2,2,-2,2", "--px", "16,16", "--csv", "disk.csv"}, 0,
       {"disk.csv"}},
      {"plot_s_region_pieces",
       {"plot", "@s_region", "--px", "40,32", "--overlay", "disk,pieces", "--svg", "s.svg", "--json"}, 0, {"s.svg"}},
      {"intersect_disk_sector", {"intersect", "@unit_disk", "@sector", "--name", "disk-sector"}},
      {"shift_unit_disk", {"shift", "@unit_disk", "--alpha", "1.5"}},
      {"scale_sector", {"scale", "@sector", "--alpha", "-2"}},
      {"builder_disk", {"builder", "disk", "--params", "1,0.5"}},
      {"builder_s_region", {"builder", "s_region", "--params", "-1,2,0.7853981633974483"}},
      {"dstable_spectrum", {"dstable", "@left_halfplane", "--spectrum", "-1,-2+i,-2-i", "--json"}},
      {"dstable_matrix", {"dstable", "@unit_disk", "--matrix", "%system.json", "--json"}},
      {"usage_missing_subcommand", {}, 2},
      {"usage_bad_complex", {"contains", "@intro", "--z", "1+"}, 2},
  };
}

std::string golden_dir() { return lmi::testing::source_dir() + "/tests/golden"; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

bool updating() {
  const char* v = std::getenv("LMI_UPDATE_GOLDEN");
  return v && std::string(v) == "1";
}

class Golden : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(Golden, MatchesFile) {
  const GoldenCase& c = GetParam();
  fs::path work = fs::temp_directory_path() / ("lmi_golden_" + c.name);
  fs::remove_all(work);
  fs::create_directories(work);

  std::vector<std::string> args{"lmi"};
  for (const auto& a : c.args) {
    if (!a.empty() && a[0] == '@')
      args.push_back(lmi::testing::fixture_dir() + "/" + a.substr(1) + ".json");
    else if (!a.empty() && a[0] == '%')
      args.push_back(golden_dir() + "/inputs/" + a.substr(1));
    else
      args.push_back(a);
  }
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());

  fs::path old = fs::current_path();
  fs::current_path(work);
  std::ostringstream out, err;
  int code = lmi::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  fs::current_path(old);

  EXPECT_EQ(code, c.exit_code) << err.str();
  std::vector<std::pair<fs::path, std::string>> produced{{c.name + ".out", out.str()}};
  for (const auto& f : c.files) produced.push_back({c.name + "." + f, slurp(work / f)});
  for (const auto& [leaf, text] : produced) {
    fs::path golden = fs::path(golden_dir()) / leaf;
    if (updating()) {
      spit(golden, text);
      continue;
    }
    ASSERT_TRUE(fs::exists(golden)) << golden << " missing; run with LMI_UPDATE_GOLDEN=1";
    EXPECT_EQ(text, slurp(golden)) << leaf;
  }
  fs::remove_all(work);
}

INSTANTIATE_TEST_SUITE_P(Cli, Golden, ::testing::ValuesIn(cases()),
                         [](const ::testing::TestParamInfo<GoldenCase>& info) { return info.param.name; });

}  // namespace
