#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "lmonoid/variety.hpp"

namespace {
  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result run(std::vector<std::string> args, std::string const& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int const          code = lmonoid::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
  }
}  // namespace

TEST_CASE("cli compose and decompose") {
  auto const r = run({"compose", "G3+C2"});
  CHECK(r.code == 0);
  CHECK(r.out == "4 2\n0 0 0 0\n0 1 1 3\n0 1 2 3\n3 3 3 3\n");
  auto const d = run({"decompose", "-"}, r.out);
  CHECK(d.code == 0);
  CHECK(d.out == "G3+C2\n");
  for (std::size_t n = 1; n <= 6; ++n) {
    for (auto const& w : lmonoid::enumerate_words(n)) {
      std::string const word = lmonoid::format_word(w);
      CHECK(run({"decompose", "-"}, run({"compose", word}).out).out == word + "\n");
    }
  }
  auto const j = nlohmann::json::parse(run({"--json", "compose", "C2"}).out);
  CHECK(j["unit"] == 1);
  CHECK(j["table"] == nlohmann::json::parse("[[0,0],[0,1]]"));
}

TEST_CASE("cli counts and enumerate") {
  auto const r = run({"counts", "--up-to", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("n\tI\tS\tcomm\n") == 0);
  CHECK(r.out.substr(r.out.rfind('\n', r.out.size() - 2) + 1) == "5\t44\t22\t16\n");
  CHECK(run({"enumerate", "3", "--filter", "commutative"}).out == "C2+C2\nC2+C2d\nC2d+C2\nC2d+C2d\n");
  CHECK(run({"enumerate", "30"}).code == 3);
  CHECK(run({"enumerate", "3", "--filter", "bogus"}).code == 2);
}

TEST_CASE("cli check") {
  std::string const c2d = run({"compose", "C2d"}).out;
  auto const        r   = run({"check", "-", "x1 <= e"}, c2d);
  CHECK(r.code == 1);
  CHECK(r.out == "fails x1=1\n");
  CHECK(run({"check", "-", "x1*x1 = x1"}, c2d).out == "holds\n");
  CHECK(run({"check", "-", "x1 <="}, c2d).code == 2);
  CHECK(run({"check", "-", "x1 = x1"}, "2 1\n1 0\n0 1\n").code == 2);
  auto const j = nlohmann::json::parse(run({"--json", "check", "-", "x1 <= e"}, c2d).out);
  CHECK(j["holds"] == false);
  CHECK(j["witness"] == nlohmann::json::parse("[1]"));
  std::string const c7 = run({"compose", "C2+C2d+C2+C2d+C2+C2d"}).out;
  CHECK(run({"--cap", "1000", "check", "-", "x1*x2*x3*x4 = x4*x3*x2*x1"}, c7).code == 3);
}

TEST_CASE("cli axioms") {
  CHECK(run({"axiom", "sigma", "4"}).out == "x1 ^ x2*x3 <= e v x1*x2\n");
  CHECK(run({"axiom", "vc", "3"}).out == run({"axiom", "sigma-dual", "3"}).out);
  CHECK(run({"axiom", "vjoin", "2"}).out == run({"axiom", "gamma", "3"}).out);
  CHECK(run({"axiom", "cid"}).code == 1);
  CHECK(run({"axiom", "nope", "2"}).code == 2);
}

TEST_CASE("cli congruences, sdi and cep") {
  std::string const c3 = run({"compose", "C2+C2d"}).out;
  CHECK(run({"congruences", "-"}, c3).out == "0-0;1-1;2-2\n0-0;1-2\n0-2\n");
  auto const s = run({"sdi", "-"}, c3);
  CHECK(s.code == 0);
  CHECK(s.out == "yes\nmonolith 0-0;1-2\n");
  CHECK(run({"sdi", "-"}, run({"compose", "C2+C2"}).out).code == 1);
  CHECK(run({"cep", "-"}, c3).code == 0);
  CHECK(run({"cep", "-"}, run({"compose", "C2+C2d+C2"}).out).code == 1);
}

TEST_CASE("cli embeddings and membership") {
  CHECK(run({"embed", "C2+C2d", "G3+C2+D3"}).out == "0,2\n");
  CHECK(run({"embed", "G3", "D3"}).code == 1);
  CHECK(run({"member", "C2", "G3"}).code == 0);
  CHECK(run({"member", "G3", "D3"}).code == 1);
  CHECK(run({"embed", "-", "G3"}, run({"compose", "C2"}).out).out == "0\n");
}

TEST_CASE("cli amalgams") {
  auto const a = run({"amalgamate", "--base", "C2", "--left", "G3", "--f", "0", "--right", "G3",
                      "--g", "0"});
  CHECK(a.code == 0);
  CHECK(a.out == "result G3\nj1 0\nj2 0\ncommutes yes\nembeddings yes\nstrong no\n");
  auto const bad = run({"amalgamate", "--base", "C2", "--left", "G3", "--f", "0", "--right",
                        "D3", "--g", "0"});
  CHECK(bad.code == 1);
  CHECK(bad.out == "incompatible at base position 0\n");
  auto const none = run({"search-amalgam", "--base", "C2", "--left", "G3", "--f", "0",
                         "--right", "D3", "--g", "0", "--max-size", "5"});
  CHECK(none.code == 1);
  CHECK(run({"amalgamate", "--base", "C2", "--left", "C2d", "--f", "0", "--right", "G3", "--g",
             "0"})
            .code
        == 2);
  auto const one = run({"one-sided", "--base", "C2", "--left", "G3", "--f", "0", "--right",
                        "C2+C2d", "--g", "0", "--targets", "0", "C2", "C2d", "G3", "C2+C2d"});
  CHECK(one.code == 1);
}

TEST_CASE("cli variety status and usage errors") {
  CHECK(run({"variety-status", "C2+C2d"}).out == "yes\n");
  CHECK(run({"variety-status", "G3", "D3"}).code == 1);
  CHECK(run({"variety-status", "--named", "CId"}).out == "open\n");
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"compose", "X9"}).code == 2);
  CHECK(run({"decompose", "/nonexistent/file"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
