#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "fixtures.hpp"
#include "fock/tableau.hpp"

using namespace fock;

namespace {

SuperTableau one_row(const Alphabet& a, const std::vector<int>& ranks) {
  if (ranks.empty()) return empty_tableau(a);
  return from_rows(a, {ranks});
}

// Insertion tableau of a word under row bumping.
SuperTableau insertion_tableau(const Alphabet& a, const std::vector<int>& w) {
  SuperTableau t = empty_tableau(a);
  for (int x : w) t = row_insert(t, x);
  return t;
}

}  // namespace

TEST_CASE("validate super conditions") {
  RunningExample ex;
  // P of Example Ex1: rows 1'2'3'4' / 1'2'4' over Z'_{>0}
  Alphabet zp = Alphabet::preset("Z'>0", 1, 7);
  auto rk = [&](int v) { return zp.rank_of(std::to_string(v) + "'"); };
  SuperTableau p = from_rows(
      zp, {{rk(1), rk(2), rk(3), rk(4)}, {rk(1), rk(2), rk(4)}});
  CHECK(validate(p));

  // even letters repeat in a column: invalid
  Alphabet n3 = Alphabet::preset("[3]");
  SuperTableau col = from_rows(n3, {{0}, {0}});
  CHECK(!validate(col));

  // odd letters repeat in a row: invalid
  SuperTableau row = from_rows(ex.A, {{ex.a(1), ex.a(1)}});
  CHECK(!validate(row));
  // but odd letters may repeat in a column
  SuperTableau ocol = from_rows(ex.A, {{ex.a(1)}, {ex.a(1)}});
  CHECK(validate(ocol));

  CHECK_THROWS_AS(
      validate(SuperTableau{n3, {2}, {0}, {{0}}}),  // row too short
      ValidationError);
}

TEST_CASE("reading words") {
  Alphabet n3 = Alphabet::preset("[3]");
  SuperTableau t = from_rows(n3, {{0, 0, 1}, {1}});
  CHECK(word_col(t) == std::vector<int>{1, 0, 0, 1});
  CHECK(word_row(t) == std::vector<int>{1, 0, 0, 1});
  SuperTableau r = from_rows(n3, {{0, 1, 2}});
  CHECK(word_col(r) == std::vector<int>{2, 1, 0});
  CHECK(word_row(r) == std::vector<int>{0, 1, 2});
}

TEST_CASE("insertion basics") {
  Alphabet n3 = Alphabet::preset("[3]");
  Box box;
  SuperTableau t = col_insert(empty_tableau(n3), 1, &box);
  CHECK(t.rows == std::vector<std::vector<int>>{{1}});
  CHECK(box == Box{0, 0});
}

TEST_CASE("row insertion preserves validity on a mixed window") {
  // alphabet {1 < 2' < 3 < 4'}: mixed parity
  Alphabet mixed = Alphabet::custom({{"1", Parity::Even},
                                     {"2'", Parity::Odd},
                                     {"3", Parity::Even},
                                     {"4'", Parity::Odd}});
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> letter(0, 3);
  for (int rep = 0; rep < 4000; ++rep) {
    SuperTableau t = empty_tableau(mixed);
    for (int steps = 0; steps < 6; ++steps) {
      int a = letter(rng);
      SuperTableau r = row_insert(t, a);
      REQUIRE(validate(r));
      CHECK(r.box_count() == t.box_count() + 1);
      SuperTableau c = col_insert(t, a);
      REQUIRE(validate(c));
      CHECK(c.box_count() == t.box_count() + 1);
      t = rep % 2 ? r : c;
    }
  }
}

TEST_CASE("rho_col reproduces the worked example") {
  RunningExample ex;
  Alphabet bpi = pi_dual(ex.B);
  auto pr = [&](int v) { return bpi.rank_of(std::to_string(v) + "'"); };
  std::vector<SuperTableau> in = {
      one_row(bpi, {pr(-3), pr(-4)}),
      one_row(bpi, {pr(-1), pr(-2), pr(-4)}),
      one_row(bpi, {pr(-1), pr(-2)}),
  };
  RhoResult r = rho_col(in);
  SuperTableau expected_p = from_rows(
      bpi, {{pr(-1), pr(-2), pr(-3), pr(-4)}, {pr(-1), pr(-2), pr(-4)}});
  CHECK(same_tableau(r.s, expected_p));
  SuperTableau expected_q =
      from_rows(Alphabet::preset("[3]"), {{0, 0, 1, 1}, {1, 2, 2}});
  CHECK(same_tableau(r.recording, expected_q));

  auto back = rho_col_inverse(r.s, r.recording);
  REQUIRE(back.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(same_tableau(back[i], in[i]));
}

TEST_CASE("rho_row reproduces the kappa-2 display") {
  Alphabet n3 = Alphabet::preset("[3]");
  std::vector<SuperTableau> in = {one_row(n3, {0, 0}), one_row(n3, {1}),
                                  one_row(n3, {0, 0})};
  RhoResult r = rho_row(in);
  CHECK(same_tableau(r.s, from_rows(n3, {{0, 0, 0, 0}, {1}})));
  CHECK(same_tableau(r.recording, from_rows(n3, {{0, 0, 1, 2}, {2}})));

  auto back = rho_row_inverse(r.s, r.recording);
  REQUIRE(back.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(same_tableau(back[i], in[i]));
}

TEST_CASE("rho single input") {
  Alphabet n2 = Alphabet::preset("[2]");
  SuperTableau t = one_row(n2, {0, 0, 1});
  RhoResult r = rho_col({t});
  CHECK(same_tableau(r.s, t));
  // key tableau of the same shape over [1]
  CHECK(r.recording.rows == std::vector<std::vector<int>>{{0, 0, 0}});
}

TEST_CASE("rho bijection on an exhaustive window") {
  Alphabet mixed = Alphabet::custom(
      {{"1", Parity::Even}, {"2'", Parity::Odd}, {"3", Parity::Even}});
  // all tuples of one-row tableaux with sizes (m1, m2, m3), mi <= 2
  std::vector<std::vector<int>> rows_by_len[3];
  for (int len = 0; len <= 2; ++len) {
    std::vector<std::vector<int>> rows;
    std::function<void(std::vector<int>&)> rec = [&](std::vector<int>& cur) {
      if (static_cast<int>(cur.size()) == len) {
        rows.push_back(cur);
        return;
      }
      for (int a = cur.empty() ? 0 : cur.back(); a < mixed.size(); ++a) {
        if (!cur.empty() && a == cur.back() && mixed.odd(a)) continue;
        cur.push_back(a);
        rec(cur);
        cur.pop_back();
      }
    };
    std::vector<int> cur;
    rec(cur);
    rows_by_len[len] = rows;
  }
  long long checked = 0;
  for (int l1 = 0; l1 <= 2; ++l1)
    for (int l2 = 0; l2 <= 2; ++l2)
      for (int l3 = 0; l3 <= 2; ++l3)
        for (const auto& r1 : rows_by_len[l1])
          for (const auto& r2 : rows_by_len[l2])
            for (const auto& r3 : rows_by_len[l3]) {
              std::vector<SuperTableau> in = {one_row(mixed, r1),
                                              one_row(mixed, r2),
                                              one_row(mixed, r3)};
              for (bool column : {false, true}) {
                RhoResult r = column ? rho_col(in) : rho_row(in);
                REQUIRE(validate(r.s));
                REQUIRE(validate(r.recording));
                // weight preservation into S
                std::vector<int> want(mixed.size(), 0), got(mixed.size(), 0);
                for (const auto& row : {r1, r2, r3})
                  for (int x : row) want[x]++;
                for (const auto& row : r.s.rows)
                  for (int x : row) got[x]++;
                CHECK(want == got);
                auto back = column ? rho_col_inverse(r.s, r.recording)
                                   : rho_row_inverse(r.s, r.recording);
                REQUIRE(back.size() == 3);
                for (int i = 0; i < 3; ++i)
                  CHECK(same_tableau(back[i], in[i]));
              }
              ++checked;
            }
  CHECK(checked > 0);
}

TEST_CASE("rotate_pi") {
  Alphabet zp = Alphabet::preset("Z'>0", 1, 7);
  auto rk = [&](int v) { return zp.rank_of(std::to_string(v) + "'"); };
  SuperTableau p = from_rows(
      zp, {{rk(1), rk(2), rk(3), rk(4)}, {rk(1), rk(2), rk(4)}});
  SuperTableau r = rotate_pi(p);
  Alphabet zpi = pi_dual(zp);
  auto pk = [&](int v) { return zpi.rank_of(std::to_string(v) + "'"); };
  CHECK(r.outer == std::vector<int>{4, 4});
  CHECK(r.inner == std::vector<int>{1, 0});
  CHECK(r.rows == std::vector<std::vector<int>>{
                      {pk(4), pk(2), pk(1)}, {pk(4), pk(3), pk(2), pk(1)}});
  CHECK(validate(r));
  CHECK(same_tableau(rotate_pi(r), p));

  SuperTableau box = from_rows(zp, {{rk(3)}});
  SuperTableau rb = rotate_pi(box);
  CHECK(rb.rows == std::vector<std::vector<int>>{{pk(3)}});
}

TEST_CASE("glue reproduces Ex1 and splits back") {
  RunningExample ex;
  Alphabet n3 = Alphabet::preset("[3]");
  SuperTableau h = from_rows(n3, {{0, 0, 0, 0}, {1}});
  SuperTableau t;
  t.alphabet = ex.A;
  t.outer = {9, 5, 2};
  t.inner = {4, 1, 0};
  t.rows = {ex.arow({2, 4, 5, 6, 7}), ex.arow({0, 3, 4, 5}), ex.arow({0, 1})};
  REQUIRE(validate(t));
  SuperTableau g = glue(h, t);
  Alphabet ga = star(n3, ex.A);
  auto gid = [&](const std::string& s) { return ga.rank_of(s); };
  CHECK(g.outer == std::vector<int>{9, 5, 2});
  CHECK(g.rows[0] == std::vector<int>{gid("1"), gid("1"), gid("1"), gid("1"),
                                      gid("2'"), gid("4'"), gid("5'"),
                                      gid("6'"), gid("7'")});
  CHECK(g.rows[1] == std::vector<int>{gid("2"), gid("0'"), gid("3'"),
                                      gid("4'"), gid("5'")});
  CHECK(g.rows[2] == std::vector<int>{gid("0'"), gid("1'")});

  auto [s2, t2] = split(g, n3, ex.A);
  CHECK(same_tableau(s2, h));
  CHECK(same_tableau(t2, t));

  // glue with an empty skew part is the identity
  SuperTableau se = glue(h, empty_tableau(ex.A));
  auto [s3, t3] = split(se, n3, ex.A);
  CHECK(same_tableau(s3, h));
  CHECK(t3.box_count() == 0);
}

TEST_CASE("glue split round trip on a window") {
  Alphabet n2 = Alphabet::preset("[2]");
  Alphabet ap = Alphabet::preset("Z'>=0", 0, 2);
  for (const auto& souter : std::vector<std::vector<int>>{{}, {1}, {2, 1}}) {
    for (const SuperTableau& s :
         enumerate_sst(n2, souter, std::vector<int>(souter.size(), 0))) {
      std::vector<int> touter = souter;
      for (auto& x : touter) x += 1;
      touter.push_back(1);
      std::vector<int> tinner = souter;
      tinner.push_back(0);
      for (const SuperTableau& t : enumerate_sst(ap, touter, tinner)) {
        SuperTableau g = glue(s, t);
        auto [s2, t2] = split(g, n2, ap);
        CHECK(same_tableau(s2, s));
        CHECK(same_tableau(t2, t));
      }
    }
  }
}

TEST_CASE("key tableau") {
  SuperTableau k = key_tableau({4, 1}, 3);
  CHECK(k.rows == std::vector<std::vector<int>>{{0, 0, 0, 0}, {1}});
  CHECK(key_tableau({}, 2).box_count() == 0);
  CHECK_THROWS_AS(key_tableau({1, 1, 1}, 2), ValidationError);
  std::vector<int> wt(3, 0);
  for (const auto& row : k.rows)
    for (int x : row) wt[x]++;
  CHECK(wt == std::vector<int>{4, 1, 0});
}

TEST_CASE("column and row words give the same insertion tableau (even)") {
  Alphabet n3 = Alphabet::preset("[3]");
  for (const auto& outer : std::vector<std::vector<int>>{{2}, {2, 1}, {3, 2},
                                                         {2, 2, 1}}) {
    for (const SuperTableau& t :
         enumerate_sst(n3, outer, std::vector<int>(outer.size(), 0))) {
      SuperTableau a = insertion_tableau(n3, word_col(t));
      SuperTableau b = insertion_tableau(n3, word_row(t));
      CHECK(same_tableau(a, b));
    }
  }
}
