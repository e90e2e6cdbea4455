// Runs the swm executable and checks exit codes, reports and output files.
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "swm/io.hpp"

#ifndef SWM_CLI_PATH
#error "SWM_CLI_PATH must point at the swm executable"
#endif

namespace {

struct Run {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Run swm_run(const test::TempDir& dir, const std::string& args) {
  const auto out = dir / "stdout.txt";
  const auto err = dir / "stderr.txt";
  const std::string command = std::string("\"") + SWM_CLI_PATH + "\" " + args + " >\"" +
                              out.string() + "\" 2>\"" + err.string() + "\"";
  const int status = std::system(command.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

std::size_t count_lines(const std::string& text) {
  std::size_t n = 0;
  for (char c : text) n += c == '\n';
  return n;
}

void check_failure(const Run& r, int code) {
  CHECK(r.exit_code == code);
  CHECK(r.err.rfind("error: ", 0) == 0);
  CHECK(count_lines(r.err) == 1);
}

}  // namespace

TEST_CASE("synth writes the fixture signal") {
  test::TempDir dir;
  const auto csv = (dir / "v.csv").string();
  auto r = swm_run(dir, "synth --n 18 --dt 4 --origin -2 --out " + csv);
  REQUIRE(r.exit_code == 0);
  const auto signal = swm::io::read_signal_csv(csv, 4.0, std::nullopt);
  CHECK(std::abs(signal.values[0] + 34.5484836) <= 1e-6);

  r = swm_run(dir, "synth --n 1 --dt 4 --origin 0");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "28\n");

  check_failure(swm_run(dir, "synth --n 0"), 2);
  check_failure(swm_run(dir, "synth --n 4 --dt -1"), 2);
}

TEST_CASE("frequencies command") {
  test::TempDir dir;
  auto r = swm_run(dir, "frequencies --n 32 --unit tile --i 17");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1.0000000\n");
  r = swm_run(dir, "frequencies --n 18 --dt 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("1 0.1250000\n2 0.1323529\n", 0) == 0);
  CHECK(r.out.find("18 2.2500000\n") != std::string::npos);
  CHECK(count_lines(r.out) == 18);
  r = swm_run(dir, "frequencies --fs 250 --dt 5 --i 2");
  CHECK(r.out == "0.1000801\n");
  check_failure(swm_run(dir, "frequencies --n 32 --unit tile --i 33"), 2);
  check_failure(swm_run(dir, "frequencies --n 32 --unit metre"), 2);
  check_failure(swm_run(dir, "frequencies --fs 250 --dt 5.001"), 2);
}

TEST_CASE("analyze-signal writes transform and plot") {
  test::TempDir dir;
  const auto csv = (dir / "v.csv").string();
  REQUIRE(swm_run(dir, "synth --n 18 --dt 4 --origin -2 --out " + csv).exit_code == 0);
  const auto swt = (dir / "s.csv").string();
  const auto svg = (dir / "p.svg").string();
  auto r = swm_run(dir, "analyze-signal --input " + csv + " --dt 4 --out-swt " + swt +
                            " --out-plot " + svg);
  REQUIRE(r.exit_code == 0);
  CHECK(slurp(swt).find("\n1,0.1250000,117.1298") != std::string::npos);
  CHECK(slurp(svg).rfind("<?xml", 0) == 0);

  // Same run again: identical bytes.
  const auto first_swt = slurp(swt);
  const auto first_svg = slurp(svg);
  REQUIRE(swm_run(dir, "analyze-signal --input " + csv + " --dt 4 --out-swt " + swt +
                           " --out-plot " + svg).exit_code == 0);
  CHECK(slurp(swt) == first_swt);
  CHECK(slurp(svg) == first_svg);

  r = swm_run(dir, "analyze-signal --input " + csv + " --fs 4.5 --fmax 0.2 --out-swt " +
                       (dir / "low.json").string());
  CHECK(r.exit_code == 0);
  CHECK(swm::io::read_swt(dir / "low.json").spectrum_1d().size() == 7);

  check_failure(swm_run(dir, "analyze-signal --input " + csv + " --dt 4 --fs 5"), 2);
  check_failure(swm_run(dir, "analyze-signal --input " + csv), 2);
  check_failure(swm_run(dir, "analyze-signal --input " + (dir / "none.csv").string() + " --dt 1"), 4);
  check_failure(swm_run(dir, "analyze-signal --input " + csv + " --dt 4 --format xml --out-swt x"), 2);
}

TEST_CASE("constant input has one nonzero dyad") {
  test::TempDir dir;
  std::ofstream(dir / "c.csv") << "5\n5\n5\n5\n5\n5\n";
  const auto out = (dir / "c.json").string();
  REQUIRE(swm_run(dir, "analyze-signal --input " + (dir / "c.csv").string() +
                           " --dt 3 --out-swt " + out).exit_code == 0);
  const auto s = swm::io::read_swt(out).spectrum_1d();
  std::size_t nonzero = 0;
  for (const auto& d : s.dyads) nonzero += std::abs(d.coefficient) > 1e-12;
  CHECK(nonzero == 1);
}

TEST_CASE("analyze-image, approximate, pattern and triads") {
  test::TempDir dir;
  const auto big = (dir / "big.pgm").string();
  const auto img = test::random_image(512, 512, 31);
  swm::io::write_gray_image(img, big);
  const auto archive = (dir / "c.json").string();
  auto r = swm_run(dir, "analyze-image --input " + big + " --tile 32 --threads 3 --out " + archive);
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("256 tiles") != std::string::npos);
  const auto bytes = slurp(archive);
  REQUIRE(swm_run(dir, "analyze-image --input " + big + " --tile 32 --threads 1 --out " + archive)
              .exit_code == 0);
  CHECK(slurp(archive) == bytes);

  const auto restored = (dir / "r.pgm").string();
  REQUIRE(swm_run(dir, "approximate --coeffs " + archive + " --keep 32 --out " + restored)
              .exit_code == 0);
  CHECK(swm::io::read_gray_image(restored) == img);
  check_failure(swm_run(dir, "approximate --coeffs " + archive + " --keep 33 --out " + restored), 2);

  const auto png = (dir / "p.png").string();
  CHECK(swm_run(dir, "pattern --coeffs " + archive + " --tile-col 9 --tile-row 8 --i 2 --j 3 --out " + png)
            .exit_code == 0);
  CHECK(std::filesystem::file_size(png) > 0);
  CHECK(swm_run(dir, "pattern --n 32 --i 17 --j 1 --scale 4 --out " + png).exit_code == 0);
  check_failure(swm_run(dir, "pattern --n 32 --i 33 --j 1 --out " + png), 2);
  check_failure(swm_run(dir, "pattern --coeffs " + archive + " --tile-col 17 --i 1 --j 1 --out " + png), 2);

  const auto triads = (dir / "t.csv").string();
  REQUIRE(swm_run(dir, "triads --coeffs " + archive + " --tile-col 9 --tile-row 8 --keep 8 --out " + triads)
              .exit_code == 0);
  const auto doc = swm::io::read_swt(triads).spectrum_2d();
  CHECK(doc.triads.size() == 64);
  CHECK(slurp(triads).find("\n1,1,0.5000000,0.5000000,") != std::string::npos);
}

TEST_CASE("image errors") {
  test::TempDir dir;
  const auto odd = (dir / "odd.pgm").string();
  swm::io::write_gray_image(test::random_image(33, 32, 1), odd);
  check_failure(swm_run(dir, "analyze-image --input " + odd + " --tile 32 --out x.json"), 2);
  CHECK(swm_run(dir, "analyze-image --input " + odd + " --tile 32 --pad --out " +
                         (dir / "x.json").string()).exit_code == 0);
  CHECK(swm_run(dir, "analyze-image --input " + odd + " --full --out " +
                         (dir / "y.json").string()).exit_code == 0);
  check_failure(swm_run(dir, "analyze-image --input " + odd + " --tile 4 --full --out x.json"), 2);
  std::ofstream(dir / "junk.pgm") << "P5\n4 4\n255\nab";
  check_failure(swm_run(dir, "analyze-image --input " + (dir / "junk.pgm").string() +
                                 " --tile 4 --out x.json"), 2);
}

TEST_CASE("pseudo-image archive holds the fixture coefficients") {
  test::TempDir dir;
  std::ofstream(dir / "pi.pgma") << "P2\n4 4\n255\n55 4 69 81\n195 6 249 255\n98 3 77 12\n100 38 25 214\n";
  const auto archive = (dir / "c.json").string();
  REQUIRE(swm_run(dir, "analyze-image --input " + (dir / "pi.pgma").string() + " --tile 4 --out " +
                           archive).exit_code == 0);
  const auto tiles = swm::io::read_coefficients(archive);
  CHECK(tiles.tile(0, 0)(0, 0) == 112.5);
  CHECK(tiles.tile(0, 0)(1, 0) == -78.5);
  CHECK(tiles.tile(0, 0)(0, 1) == 27.5);
}

TEST_CASE("verify, help and usage errors") {
  test::TempDir dir;
  auto r = swm_run(dir, "verify");
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.out) == 8);
  CHECK(r.out.find("FAIL") == std::string::npos);
  r = swm_run(dir, "--help");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("analyze-signal") != std::string::npos);
  check_failure(swm_run(dir, ""), 2);
  check_failure(swm_run(dir, "synth --bogus 1"), 2);
}
