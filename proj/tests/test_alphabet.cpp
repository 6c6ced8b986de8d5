#include <doctest.h>

#include "fock/alphabet.hpp"

using namespace fock;

TEST_CASE("presets") {
  Alphabet a = Alphabet::preset("[3]");
  REQUIRE(a.size() == 3);
  CHECK(a.id(0) == "1");
  CHECK(a.id(2) == "3");
  for (int r = 0; r < 3; ++r) CHECK(!a.odd(r));

  Alphabet p = Alphabet::preset("Z'>=0", 0, 7);
  REQUIRE(p.size() == 8);
  CHECK(p.id(0) == "0'");
  CHECK(p.id(7) == "7'");
  for (int r = 0; r < 8; ++r) CHECK(p.odd(r));

  Alphabet m = Alphabet::preset("[-4]");
  REQUIRE(m.size() == 4);
  CHECK(m.id(0) == "-4");
  CHECK(m.id(3) == "-1");
  CHECK(!m.odd(0));

  CHECK_THROWS_AS(Alphabet::preset("nope"), ValidationError);
  CHECK_THROWS_AS(Alphabet::preset("Z>0", 5, 2), ValidationError);
}

TEST_CASE("pi dual") {
  Alphabet a = Alphabet::preset("[3]");
  Alphabet d = pi_dual(a);
  CHECK(d.id(0) == "3");
  CHECK(d.id(2) == "1");
  CHECK(pi_dual(d) == a);

  Alphabet neg = Alphabet::preset("Z'<0", -4, -1);
  Alphabet negpi = pi_dual(neg);
  CHECK(negpi.id(0) == "-1'");
  CHECK(negpi.id(3) == "-4'");
}

TEST_CASE("star") {
  Alphabet g = star(Alphabet::preset("[3]"), Alphabet::preset("Z'>=0", 0, 7));
  REQUIRE(g.size() == 11);
  CHECK(g.id(0) == "1");
  CHECK(g.id(2) == "3");
  CHECK(g.id(3) == "0'");
  CHECK(g.id(10) == "7'");
  CHECK(!g.odd(2));
  CHECK(g.odd(3));

  CHECK(star(Alphabet::preset("[3]"), Alphabet()) == Alphabet::preset("[3]"));

  Alphabet lo = Alphabet::preset("[-4]");
  Alphabet hi = Alphabet::preset("[4]");
  Alphabet both = star(lo, hi);
  CHECK(both.id(0) == "-4");
  CHECK(both.id(7) == "4");

  CHECK_THROWS_AS(star(hi, hi), ValidationError);
}

TEST_CASE("star associativity and pi antihomomorphism") {
  Alphabet x = Alphabet::preset("[2]");
  Alphabet y = Alphabet::preset("Z'>=0", 0, 1);
  Alphabet z = Alphabet::preset("[-2]");
  CHECK(star(star(x, y), z) == star(x, star(y, z)));
  CHECK(pi_dual(star(x, y)) == star(pi_dual(y), pi_dual(x)));
}

TEST_CASE("total order on a window") {
  Alphabet a = Alphabet::preset("Z>=0", 0, 5);
  for (int r = 0; r < a.size(); ++r)
    for (int s = 0; s < a.size(); ++s) {
      CHECK(((r < s) + (s < r) + (r == s)) == 1);
      for (int t = 0; t < a.size(); ++t)
        if (r < s && s < t) CHECK(r < t);
    }
}
