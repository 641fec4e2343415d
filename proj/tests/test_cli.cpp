#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "popmatch/cli.hpp"
#include "popmatch/instances.hpp"
#include "popmatch/textio.hpp"

using namespace popmatch;

namespace {

struct RunResult {
  int status;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int status = run_command(args, out, err);
  return {status, out.str(), err.str()};
}

// Scratch files under the system temp directory, removed on destruction.
class TempFile {
 public:
  explicit TempFile(const std::string& content) {
    static int counter = 0;
    path_ = (std::filesystem::temp_directory_path() /
             ("popmatch_test_" + std::to_string(::getpid()) + "_" +
              std::to_string(counter++) + ".txt"))
                .string();
    std::ofstream f(path_);
    f << content;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace

TEST_CASE("demo writes a parseable gadget") {
  RunResult r = run({"demo", "roommates_lower"});
  CHECK(r.status == 0);
  CHECK(parse_instance(r.out) == gadget("roommates_lower"));
}

TEST_CASE("demo rejects unknown gadgets") {
  RunResult r = run({"demo", "unknown_gadget"});
  CHECK(r.status == 2);
  CHECK(r.err.find("unknown gadget") != std::string::npos);
}

TEST_CASE("solve prints the committee and verifies it") {
  RunResult demo = run({"demo", "house_lower"});
  TempFile file(demo.out);
  RunResult r = run({"solve", file.path(), "--verify"});
  CHECK(r.status == 0);
  CHECK(r.out ==
        "match a x\n"
        "match c y\n"
        "---\n"
        "match b x\n"
        "VERIFIED\n");
}

TEST_CASE("solve handles every instance kind") {
  for (const char* name :
       {"house_lower", "roommates_lower", "roommates_lower_doubled"}) {
    RunResult demo = run({"demo", name});
    TempFile file(demo.out);
    RunResult r = run({"solve", file.path(), "--verify"});
    CHECK(r.status == 0);
    CHECK(r.out.find("VERIFIED") != std::string::npos);
  }
}

TEST_CASE("solve --trace prefixes the dump as comments") {
  RunResult demo = run({"demo", "house_lower"});
  TempFile file(demo.out);
  RunResult r = run({"solve", file.path(), "--trace"});
  CHECK(r.status == 0);
  CHECK(r.out.find("# step 1") != std::string::npos);
  // the non-comment payload is still a valid winning set
  Instance inst = gadget("house_lower");
  WinningSet ws = parse_winning_set(inst, r.out);
  CHECK(ws.matchings.size() == 2);
}

TEST_CASE("verify splits verified and defeated by exit code") {
  RunResult demo = run({"demo", "house_lower"});
  TempFile instance_file(demo.out);
  TempFile good(
      "match a x\n"
      "match c y\n"
      "---\n"
      "match b x\n");
  RunResult ok = run({"verify", instance_file.path(), good.path()});
  CHECK(ok.status == 0);
  CHECK(ok.out == "VERIFIED\n");

  TempFile bad(
      "match a x\n"
      "match b y\n");
  RunResult defeated = run({"verify", instance_file.path(), bad.path()});
  CHECK(defeated.status == 1);
  CHECK(defeated.out.find("DEFEATED") == 0);
  CHECK(defeated.out.find("match b x") != std::string::npos);
}

TEST_CASE("dimension prints the exact value") {
  RunResult demo = run({"demo", "house_lower"});
  TempFile file(demo.out);
  RunResult r = run({"dimension", file.path(), "--max-k", "2"});
  CHECK(r.status == 0);
  CHECK(r.out == "2\n");
  RunResult low = run({"dimension", file.path(), "--max-k", "1"});
  CHECK(low.status == 0);
  CHECK(low.out == "exceeds 1\n");
  RunResult cert =
      run({"dimension", file.path(), "--max-k", "2", "--certificate"});
  CHECK(cert.status == 0);
  CHECK(cert.out.find("2\n") == 0);
  CHECK(cert.out.find("match") != std::string::npos);
}

TEST_CASE("gen is deterministic and emits a valid instance") {
  std::vector<std::string> args{"gen",       "--kind",  "marriage",
                                "--agents",  "4",       "--agents-right",
                                "3",         "--ties",  "--density",
                                "0.7",       "--seed",  "11",
                                "--weight-min", "0",    "--weight-max", "4"};
  RunResult first = run(args);
  RunResult second = run(args);
  CHECK(first.status == 0);
  CHECK(first.out == second.out);
  Instance inst = parse_instance(first.out);
  CHECK(inst.kind() == Kind::Marriage);
  CHECK(inst.agent_count() == 7);
}

TEST_CASE("gen writes to a file with -o") {
  std::string path =
      (std::filesystem::temp_directory_path() / "popmatch_gen_out.txt")
          .string();
  RunResult r = run({"gen", "--kind", "house", "--agents", "3", "--items",
                     "2", "--seed", "5", "-o", path});
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream buf;
  buf << f.rdbuf();
  CHECK(parse_instance(buf.str()).kind() == Kind::House);
  std::remove(path.c_str());
}

TEST_CASE("input problems exit with status 2") {
  RunResult missing = run({"solve", "/nonexistent/path.txt"});
  CHECK(missing.status == 2);
  CHECK(missing.err.find("cannot open") != std::string::npos);

  TempFile malformed("problem: house\nagent a\npref a: zz\n");
  RunResult bad = run({"solve", malformed.path()});
  CHECK(bad.status == 2);
  CHECK(bad.err.find("line 3") != std::string::npos);

  RunResult unknown_flag = run({"solve"});
  CHECK(unknown_flag.status == 2);
}

TEST_CASE("the oracle guard surfaces as an input error with advice") {
  RunResult gen = run({"gen", "--kind", "roommates", "--agents", "7",
                       "--density", "1", "--seed", "3"});
  TempFile file(gen.out);
  RunResult guarded = run({"solve", file.path(), "--verify"});
  CHECK(guarded.status == 2);
  CHECK(guarded.err.find("--max-edges") != std::string::npos);
  RunResult raised =
      run({"solve", file.path(), "--verify", "--max-edges", "21"});
  CHECK(raised.status == 0);
}

TEST_CASE("identical invocations produce identical bytes") {
  RunResult demo = run({"demo", "roommates_lower_doubled"});
  TempFile file(demo.out);
  RunResult a = run({"solve", file.path(), "--verify", "--trace"});
  RunResult b = run({"solve", file.path(), "--verify", "--trace"});
  CHECK(a.status == b.status);
  CHECK(a.out == b.out);
}
