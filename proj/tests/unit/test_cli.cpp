#include <doctest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {
struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(MIC_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("mic_cli_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}
}  // namespace

TEST_CASE("certify a table witness") {
  const auto poly = write_temp("t.poly", "poly 1 -3 1\n");
  const auto r = run("certify --poly " + poly + " --interval 1/3 2/5 --conjecture");
  CHECK(r.code == 0);
  CHECK(r.out.find("status=certified") != std::string::npos);
  const auto bad = run("certify --poly " + poly + " --interval 1/3 2/5 --bound 1/10");
  CHECK(bad.code == 1);
  CHECK(bad.out.find("refutation_point=1/3") != std::string::npos);
}

TEST_CASE("constants") {
  const auto r = run("constant --interval 0 1/2");
  CHECK(r.code == 0);
  CHECK(r.out.find("value=1/2") != std::string::npos);
  CHECK(r.out.find("provenance=") != std::string::npos);
  CHECK(run("constant --interval 1/3 2/5").code == 1);
  CHECK(run("constant --interval \"-1/sqrt(3)\" \"1/sqrt(3)\"").out.find("value=(1/3)^(1/2)") != std::string::npos);
  CHECK(run("constant --point 3/7").out.find("value=1/7") != std::string::npos);
  CHECK(run("constant --set 1/2,2/3").out.find("value=1/2") != std::string::npos);
}

TEST_CASE("farey listing") {
  const auto r = run("farey --order 3");
  CHECK(r.code == 0);
  CHECK(r.out == "0\n1/3\n1/2\n2/3\n1\n");
  CHECK(run("farey --order 3 --pairs").out == "0 1/3\n1/3 1/2\n1/2 2/3\n2/3 1\n");
}

TEST_CASE("construct and search") {
  const auto p = run("construct pair 1/3 2/5 --degree 4");
  CHECK(p.code == 0);
  CHECK(p.out.find("poly 3 -27 81 -81 1") != std::string::npos);
  CHECK(run("construct pair 1/3 2/5 --degree 4 --targets 2,1").code == 3);
  const auto m = run("construct multi 1/2,1/3 --max-degree 64");
  CHECK(m.code == 0);
  CHECK(m.out.find("degree=2") != std::string::npos);
  CHECK(run("construct multi 1/3,2/5,3/7 --max-degree 3").code == 2);
  const auto s = run("search --interval 1/3 2/5 --degree 4");
  CHECK(s.code == 0);
  CHECK(s.out.find("degree=4") != std::string::npos);
  CHECK(run("search --interval 1/16 1/15 --degree 4 --radius 0").code == 1);
}

TEST_CASE("table verification") {
  const auto r = run(std::string("verify-table ") + MIC_TABLE_PATH);
  CHECK(r.code == 0);
  CHECK(r.out.find("entries=73 certified=73 failed=0") != std::string::npos);
  const auto bad = write_temp("bad.txt", "interval 1/3 2/5\npoly 1 -3 1\n\ninterval 1/3 2/5\npoly 0 0 1\n");
  const auto b = run("verify-table " + bad);
  CHECK(b.code == 1);
  CHECK(b.out.find("failed=1") != std::string::npos);
  CHECK(run("verify-table /nonexistent/file").code == 3);
}

TEST_CASE("usage errors and the depth override") {
  CHECK(run("").code == 3);
  CHECK(run("frobnicate").code == 3);
  CHECK(run("farey --order x").code == 3);
  CHECK(run("--help").code == 0);
  const auto poly = write_temp("q.poly", "poly 0 0 -8 0 1\n");
  const auto r = run("certify --poly " + poly + " --interval -3 3 --bound 16");
  CHECK(r.code == 0);
  // Without the prefilter the Sturm path decides.
  setenv("MIC_MAX_DEPTH", "0", 1);
  const auto d = run("certify --poly " + poly + " --interval -3 3 --bound 16");
  unsetenv("MIC_MAX_DEPTH");
  CHECK(d.code == 0);
  CHECK(d.out.find("method=sturm") != std::string::npos);
}
