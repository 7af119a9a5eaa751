// Runs the gegenball executable and checks output formats and exit codes.
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef GEGENBALL_CLI
#error "GEGENBALL_CLI must name the CLI executable"
#endif

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(GEGENBALL_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("gegenball_cli_test_" + name);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("help and usage errors") {
  CHECK(run("--help").code == 0);
  CHECK(run("").code == 1);
  CHECK(run("frobnicate").code == 1);
  CHECK(run("basis --nosuchflag 1").code == 1);
  CHECK(run("basis --mu -3").code == 1);
  CHECK(run("basis --kappa 0.1,0.2,0.3 --d 2").code == 1);
  CHECK(run("basis --format xml").code == 1);
  CHECK(run("basis --domain cube").code == 1);
  CHECK(run("kernel --x 0.9,0.9").code == 1);
}

TEST_CASE("basis") {
  const Run zero = run("basis --n 0");
  CHECK(zero.code == 0);
  CHECK(first_line(zero.out) == "domain,n,j,l,alpha,norm,quadrature_norm,max_offdiag");
  CHECK(count_lines(zero.out) == 2);
  const Run three = run("basis --n 3 --kappa 0.5,0");
  CHECK(three.code == 0);
  CHECK(count_lines(three.out) == 1 + 10);
  CHECK(three.out.find('\r') == std::string::npos);
  CHECK(three.out.find(',') != std::string::npos);
  const Run js = run("basis --domain simplex --d 3 --n 2 --format json");
  CHECK(js.code == 0);
  CHECK(js.out.find("\"gram_offdiag_max\"") != std::string::npos);
}

TEST_CASE("kernel") {
  const Run r = run("kernel --n 4 --kappa 0.3,0.7 --mu 1 --nu 0.5 --method both");
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "domain,n,method,value,discrepancy");
  CHECK(count_lines(r.out) == 3);
  const Run s = run("kernel --domain simplex --n 3 --x 0.2,0.3 --y 0.5,0.1 --method all --format json");
  CHECK(s.code == 0);
  CHECK(s.out.find("\"oracle\"") != std::string::npos);
}

TEST_CASE("expand, cesaro, poisson") {
  CHECK(first_line(run("expand --n 2 --function cos_pi_x1").out) == "domain,n,j,l,coefficient,norm");
  const Run c = run("cesaro --n 2,4 --delta 0,2.5 --res 12");
  CHECK(c.code == 0);
  CHECK(first_line(c.out) == "domain,n,delta,lebesgue_est,min_kernel");
  CHECK(count_lines(c.out) == 5);
  const Run p = run("poisson --r 0.9,0.99");
  CHECK(p.code == 0);
  CHECK(first_line(p.out) == "domain,r,sup_error");
  CHECK(run("poisson --domain simplex").code == 1);
}

TEST_CASE("verify exit codes") {
  const Run ok = run("verify --kappa 0.5,0 --mu 1 --nu 0.5 --checks norms,contiguous_relations");
  CHECK(ok.code == 0);
  CHECK(first_line(ok.out) == "name,passed,residual,tolerance,seconds");
  const Run bad = run("verify --kappa 0.5,0 --mu 1 --nu 0.5 --checks norms --corrupt-norm --format json");
  CHECK(bad.code == 2);
  CHECK(bad.out.find("\"passed\": false") != std::string::npos);
  CHECK(run("verify --checks nope").code == 1);
}

TEST_CASE("config file, flags win, --out") {
  const auto cfg = temp_file("config.json");
  {
    std::ofstream f(cfg);
    f << R"({"domain": "simplex", "kappa": [0.3, 0.7], "mu": 1.0, "nu": 0.5, "n": 2, "format": "json"})";
  }
  const Run a = run("basis --config " + cfg.string());
  CHECK(a.code == 0);
  CHECK(a.out.find("\"domain\": \"simplex\"") != std::string::npos);
  const Run b = run("basis --config " + cfg.string() + " --format csv --domain ball");
  CHECK(b.code == 0);
  CHECK(first_line(b.out).rfind("domain,n,", 0) == 0);
  CHECK(b.out.find("\nball,2,") != std::string::npos);
  CHECK(b.out.find("simplex") == std::string::npos);
  {
    std::ofstream f(cfg);
    f << R"({"domian": "ball"})";
  }
  CHECK(run("basis --config " + cfg.string()).code == 1);
  {
    std::ofstream f(cfg);
    f << "{not json";
  }
  CHECK(run("basis --config " + cfg.string()).code == 1);
  CHECK(run("basis --config /nonexistent/file.json").code == 1);
  std::filesystem::remove(cfg);

  const auto out = temp_file("out.csv");
  const Run w = run("basis --n 1 --out " + out.string());
  CHECK(w.code == 0);
  CHECK(w.out.empty());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(count_lines(ss.str()) == 4);
  std::filesystem::remove(out);
}

TEST_CASE("deterministic output") {
  CHECK(run("cesaro --n 3 --delta 1 --res 10").out == run("cesaro --n 3 --delta 1 --res 10").out);
}

}
