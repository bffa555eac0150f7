#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "addcomb/errors.hpp"
#include "addcomb/io.hpp"
#include "addcomb/parallel.hpp"
#include "addcomb/report.hpp"
#include "helpers.hpp"

using namespace addcomb;
using testing::ints;

TEST_SUITE("cli") {

TEST_CASE("set files: comments, blanks, duplicates") {
  std::istringstream in("# header\n\n1/2\n  3  # trailing\n2/4\n-7\n");
  CHECK(read_set(in) == testing::rats({"-7", "1/2", "3"}));
}

TEST_CASE("set files: parse errors carry the line") {
  std::istringstream in("1\n2\n\nx/3\n");
  try {
    read_set(in);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
}

TEST_CASE("set files round-trip") {
  const auto path = (std::filesystem::temp_directory_path() / "addcomb_roundtrip.set").string();
  Rng rng(2);
  const auto a = testing::random_rational_set(rng, 50, -100, 100);
  write_set_file(path, a, "two\nlines");
  CHECK(read_set_file(path) == a);
  const std::string text = read_text_file(path);
  CHECK(text.rfind("# two\n# lines\n", 0) == 0);
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_set_file(path), InvalidInput);
}

TEST_CASE("CSV writers") {
  std::ostringstream os;
  write_rep_csv(os, rep_function(ints({0, 1}), ints({0, 1}), SetOp::sum));
  CHECK(os.str() == "value,count\n0,1\n1,2\n2,1\n");
  std::ostringstream ct;
  const SparseFunction f[] = {indicator(ints({0, 1}))};
  write_conv_csv(ct, conv_table(f, 2));
  CHECK(ct.str() == "shift1,count\n-1,1\n0,2\n1,1\n");
}

TEST_CASE("file digest is FNV-1a 64") {
  const auto path = (std::filesystem::temp_directory_path() / "addcomb_digest.txt").string();
  write_text_file(path, "");
  CHECK(file_digest(path) == "cbf29ce484222325");
  write_text_file(path, "a");
  CHECK(file_digest(path) == "af63dc4c8601ec8c");
  std::remove(path.c_str());
}

TEST_CASE("reports use p/q strings and omit wall-clock by default") {
  RunManifest m;
  m.command = "energy";
  const Json j = to_json(m);
  CHECK_FALSE(j.contains("wall_clock_seconds"));
  CHECK(j["version"] == kToolVersion);
  m.wall_clock_seconds = 1.5;
  CHECK(to_json(m).contains("wall_clock_seconds"));
  CHECK(to_json(testing::rats({"1/3", "2"})).dump() == R"(["1/3","2"])");
}

TEST_CASE("parallel_for rethrows the lowest failing index") {
  set_thread_count(4);
  std::vector<int> out(100, 0);
  parallel_for(out.size(), [&](std::size_t i) { out[i] = static_cast<int>(i * i); });
  for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == static_cast<int>(i * i));
  try {
    parallel_for(50, [](std::size_t i) {
      if (i == 17 || i == 40) throw InvalidInput(std::to_string(i));
    });
    FAIL("expected a rethrow");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()) == "17");
  }
  set_thread_count(1);
}

}  // TEST_SUITE
