#include <doctest.h>

#include "tanaka/config.hpp"
#include "tanaka/errors.hpp"

using namespace tanaka;

TEST_CASE("parse basic config") {
  RunConfig c = parse_config("command=verify n=1 mu=4");
  CHECK(c.command == "verify");
  CHECK(c.n == 1);
  CHECK(c.mu == 4);
  CHECK(c.ideal.empty());
  CHECK(c.max_level == 4);
  CHECK(c.basis_cap == 20000);
}

TEST_CASE("parse ideal list") {
  RunConfig c = parse_config(
      "command=symbol\nn=1\nmu=4\n"
      "ideal=[\"[E1,[E1,[E1,F1]]] + [F1,[F1,[E1,F1]]]\"]\n");
  REQUIRE(c.ideal.size() == 1);
  CHECK(c.ideal[0] == "[E1,[E1,[E1,F1]]] + [F1,[F1,[E1,F1]]]");
}

TEST_CASE("config errors") {
  CHECK_THROWS_WITH_AS(parse_config("mu=1"), "mu out of range", ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("n=0"), "n out of range", ConfigError);
  CHECK_THROWS_AS(parse_config("frobnicate=7"), ConfigError);
  CHECK_THROWS_AS(parse_config("command=dance"), ConfigError);
  CHECK_THROWS_AS(parse_config("mu=soon"), ConfigError);
  CHECK_THROWS_AS(parse_config("ideal=[\"unterminated\""), ConfigError);
}

TEST_CASE("comments and whitespace are insignificant") {
  RunConfig c = parse_config("# a comment\n  command=prolong   mu=3\n\nn=2 # trailing\n");
  CHECK(c.command == "prolong");
  CHECK(c.n == 2);
  CHECK(c.mu == 3);

  RunConfig d = parse_config("mu = 4\nideal = [ \"[E1,[E1,[E1,F1]]]\" ]\n");
  CHECK(d.mu == 4);
  REQUIRE(d.ideal.size() == 1);
  CHECK(d.ideal[0] == "[E1,[E1,[E1,F1]]]");
}

TEST_CASE("emit/parse round trip") {
  RunConfig c;
  c.command = "verify";
  c.n = 2;
  c.mu = 4;
  c.ideal = {"[E1,[E1,[E1,F1]]] + [F1,[F1,[E1,F1]]]", "i*[E2,[E1,[E1,F1]]]"};
  c.max_level = 3;
  c.basis_cap = 50000;
  c.emit_bases = true;
  c.output = "report.json";
  c.jobs = 4;
  CHECK(parse_config(emit_config(c)) == c);

  RunConfig d;  // defaults round trip too
  CHECK(parse_config(emit_config(d)) == d);
}
