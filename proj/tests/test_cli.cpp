#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

// Runs a full shell command and captures stdout byte for byte.
RunResult run_raw(const std::string& command) {
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buffer;
  size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    r.out.append(buffer.data(), got);
  int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

// Runs the CLI with stderr discarded.
RunResult run(const std::string& args) {
  return run_raw(std::string(HILB_CLI_PATH) + " " + args + " 2>/dev/null");
}

} // namespace

TEST_CASE("pinned outputs are byte exact") {
  RunResult colength = run("ideal colength --N 3 --gens 'u^2,u*v,v^2'");
  CHECK(colength.status == 0);
  CHECK(colength.out == "{\"colength\":3}\n");

  RunResult deg1 = run("cone deg1 --n 4");
  CHECK(deg1.status == 0);
  CHECK(deg1.out == "{\"classes\":[{\"a\":0,\"b\":1},{\"a\":1,\"b\":-3}]}\n");

  RunResult kva = run("kva --a 7 --k 7");
  CHECK(kva.status == 0);
  CHECK(kva.out == "{\"result\":\"pass\"}\n");
}

TEST_CASE("exit codes separate usage, domain, and success") {
  CHECK(run("nope").status == 2);
  CHECK(run("cone deg1").status == 2);          // missing --n
  CHECK(run("cone deg1 --n x").status == 2);    // malformed value
  CHECK(run("cone deg1 --n 1").status == 1);    // out of range
  CHECK(run("kva --a 1 --k 3").status == 1);    // test not applicable
  CHECK(run("kva --a 1 --k 2").status == 0);    // violation is still an answer
  CHECK(run("ideal colength --N 3 --gens 'u^'").status == 2);
  CHECK(run("--help").status == 0);
  CHECK(run("verify --list").status == 0);
}

TEST_CASE("violations carry the sufficiency caveat") {
  RunResult r = run("kva --a 1 --k 2");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"result\":\"violation\"") != std::string::npos);
  CHECK(r.out.find("\"d\":1") != std::string::npos);
  CHECK(r.out.find("sufficient only") != std::string::npos);
}

TEST_CASE("verify list names every suite") {
  RunResult r = run("verify --list");
  for (const char* suite :
       {"pairing", "deg1", "kva", "lemma-4-7", "pencils", "decompose",
        "binform-class", "lemma-5-3", "phi1-fibers", "dimensions",
        "partitions"})
    CHECK(r.out.find(suite) != std::string::npos);
}

TEST_CASE("verify output is deterministic for a fixed seed") {
  std::string args = "verify partitions --seed 7";
  RunResult first = run(args);
  RunResult second = run(args);
  CHECK(first.status == 0);
  CHECK(first.out == second.out);
  CHECK(first.out.find("millis") == std::string::npos);

  RunResult dims1 = run("verify dimensions --n 3 --seed 11");
  RunResult dims2 = run("verify dimensions --n 3 --seed 11");
  CHECK(dims1.status == 0);
  CHECK(dims1.out == dims2.out);
}

TEST_CASE("the seed falls back to the environment") {
  std::string cli(HILB_CLI_PATH);
  RunResult env = run_raw("HILB_SEED=11 " + cli +
                          " verify dimensions --n 3 2>/dev/null");
  RunResult flag = run("verify dimensions --n 3 --seed 11");
  CHECK(env.status == 0);
  CHECK(env.out == flag.out);
  CHECK(run_raw("HILB_SEED=junk " + cli + " verify dimensions --n 3 2>/dev/null")
            .status == 2);
}

TEST_CASE("json goes to stdout, timing to stderr") {
  RunResult quiet = run("verify kva");
  CHECK(quiet.status == 0);
  CHECK(quiet.out.rfind("{\"suite\":\"kva\"", 0) == 0);
  CHECK(quiet.out.find("millis") == std::string::npos);
}
