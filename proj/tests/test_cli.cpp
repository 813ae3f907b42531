#include <doctest.h>

#include <array>
#include <cstdio>
#include <memory>
#include <string>
#include <sys/wait.h>

namespace {

  struct Run {
    int         code = -1;
    std::string out;
  };

  Run run(std::string const& args) {
    auto cmd = std::string(RINGLAB_CLI) + " " + args + " 2>&1";
    Run  r;
    auto pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    while (auto n = std::fread(buf.data(), 1, buf.size(), pipe)) {
      r.out.append(buf.data(), n);
    }
    auto status = pclose(pipe);
    r.code      = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
  }

}  // namespace

TEST_CASE("ring info") {
  auto r = run("ring info 'M(2,GF(2))'");
  CHECK(r.code == 0);
  CHECK(r.out.find("cardinality    16") != std::string::npos);
  CHECK(r.out.find("|Id|           8") != std::string::npos);
  CHECK(r.out.find("exceptional    yes") != std::string::npos);
  CHECK(run("ring info 'M(2,FF(2))'").out.find("infinite") != std::string::npos);
}

TEST_CASE("set") {
  CHECK(run("set 'M(2,GF(2))' --expr 'lie{e(1,2)}' --size").out == "4\n");
  CHECK(run("set 'M(2,GF(3))' --expr '[R,R]' --size").out == "27\n");
  auto list = run("set 'Z(6)' --expr 'add{2}' --list");
  CHECK(list.out == "size 3\n0\n2\n4\n");
}

TEST_CASE("check exit codes and witnesses") {
  auto fail = run("check xprime 'Z(6)' --x R --witness");
  CHECK(fail.code == 1);
  CHECK(fail.out == "fails  witness: 2; 3\n");
  auto l    = std::string("--x 'add{I,[[0,1],[1,0]]}' --witness");
  auto semi = run("check xsemiprime 'M(2,GF(2))' " + l);
  CHECK(semi.code == 1);
  CHECK(semi.out == "fails  witness: [[1,1],[1,1]]\n");
  auto pass = run("check xsemiprime 'M(2,GF(2))' --x Id");
  CHECK(pass.code == 0);
  CHECK(pass.out == "holds\n");
}

TEST_CASE("derivation") {
  auto r = run("derivation 'M(2,GF(2))' --b '[[0,1],[1,1]]'");
  CHECK(r.code == 0);
  CHECK(r.out.find("criterion true") != std::string::npos);
  CHECK(r.out.find("determinant criterion true") != std::string::npos);
  CHECK(r.out.find("oracle holds") != std::string::npos);
  CHECK(run("derivation 'M(2,GF(2))' --b 'e(1,2)' --oracle").code == 1);
  auto ff = run("derivation 'M(2,FF(2))' --b '[[1,1],[t,1]]' --criterion");
  CHECK(ff.code == 0);
  CHECK(ff.out.find("yes") != std::string::npos);
  CHECK(run("derivation 'M(2,FF(2))' --b '[[1,1],[t,1]]' --oracle").code == 2);
}

TEST_CASE("lattice") {
  CHECK(run("lattice 'M(2,GF(2))' --filter all").out.rfind("67 additive subgroups\n", 0) == 0);
  auto lie = run("lattice 'M(2,GF(2))' --filter lie --classify-x L");
  CHECK(lie.code == 0);
  CHECK(lie.out.find("semiprime=no prime=no") != std::string::npos);
}

TEST_CASE("verify") {
  auto r = run("verify lem17");
  CHECK(r.code == 0);
  CHECK(r.out.find("0 fail") != std::string::npos);
  CHECK(run("verify nosuch").code == 2);
}

TEST_CASE("usage and parse errors exit with 2") {
  CHECK(run("").code == 2);
  CHECK(run("ring info 'GF(6)'").code == 2);
  CHECK(run("ring info 'M(2,GF(2)'").code == 2);
  CHECK(run("set 'M(2,GF(2))' --expr '[E,'").code == 2);
  CHECK(run("check xsemiprime 'M(2,FF(2))' --x R").code == 2);
  CHECK(run("check bogus 'Z(4)' --x R").code == 2);
  CHECK(run("--help").code == 0);
}
