#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "omega/acceptor.hpp"
#include "omega/witness.hpp"

#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace omega;
using omega::testing::fig1;

namespace {

Acceptor fig1_parity() {
  return Acceptor::make_parity(fig1(), {1, 2, 3, 0});
}

}  // namespace

TEST_CASE("accepts follows the four acceptance definitions") {
  Alphabet ab("ab");

  SECTION("Buchi with F = all states accepts everything") {
    Acceptor a = Acceptor::make_buchi(fig1(), {0, 1, 2, 3});
    for (const UPWord& w : oracle::enum_upwords(ab, 1, 3))
      CHECK(a.accepts(w));
  }
  SECTION("parity with a single even color rejects everything") {
    Acceptor a = Acceptor::make_parity(Automaton(ab, 1, 0, {0, 0}), {2});
    CHECK_FALSE(a.accepts(UPWord("", "ab")));
  }
  SECTION("muller accepts exactly when Inf is in the family") {
    Acceptor a = Acceptor::make_muller(fig1(), {{0, 1, 2}});
    CHECK(a.accepts(UPWord("", "a")));        // Inf = {0,1,2}
    CHECK_FALSE(a.accepts(UPWord("", "b")));  // Inf = {0}
  }
  SECTION("empty muller family denotes the empty language") {
    Acceptor a = Acceptor::make_muller(fig1(), {});
    for (const UPWord& w : oracle::enum_upwords(ab, 1, 3))
      CHECK_FALSE(a.accepts(w));
  }
  SECTION("parity acceptance is exactly `minimum inf color is odd`") {
    std::mt19937 rng(81);
    for (int trial = 0; trial < 100; ++trial) {
      Acceptor p = omega::testing::random_dpa(rng, ab, 1, 4, 3);
      for (const UPWord& w : oracle::enum_upwords(ab, 1, 2))
        CHECK(p.accepts(w) == (p.min_color_inf(w) % 2 == 1));
    }
  }
}

TEST_CASE("min_color_inf on the fig1 coloring") {
  Acceptor p = fig1_parity();
  SECTION("single state") {
    Acceptor single = Acceptor::make_parity(Automaton(Alphabet("a"), 1, 0, {0}), {5});
    CHECK(single.min_color_inf(UPWord("", "a")) == 5);
  }
  CHECK(p.min_color_inf(UPWord("", "a")) == 1);    // Inf {q0,q1,q2}, colors {1,2,3}
  CHECK(p.min_color_inf(UPWord("ab", "b")) == 1);  // Inf {q0}, color 1
  CHECK(p.accepts(UPWord("", "a")));
}

TEST_CASE("complement swaps Buchi and coBuchi over the same structure") {
  std::mt19937 rng(20260201);
  Alphabet ab("ab");
  Acceptor b = omega::testing::random_dba(rng, ab, 1, 4);

  SECTION("it is an involution") {
    CHECK(complement_ba_ca(b).kind() == AcceptanceKind::cobuchi);
    CHECK(complement_ba_ca(complement_ba_ca(b)) == b);
  }
  SECTION("it rejects other kinds") {
    CHECK_THROWS_AS(complement_ba_ca(fig1_parity()), std::invalid_argument);
  }
  SECTION("membership complements on sampled words") {
    for (int trial = 0; trial < 50; ++trial) {
      Acceptor dba = omega::testing::random_dba(rng, ab, 1, 4);
      Acceptor dca = complement_ba_ca(dba);
      for (int i = 0; i < 10; ++i) {
        UPWord w = omega::testing::random_upword(rng, ab, 3, 4);
        CHECK(dba.accepts(w) == !dca.accepts(w));
      }
    }
  }
}

TEST_CASE("to_dpa colors by the two-color recipes") {
  Alphabet ab("ab");
  Automaton two(ab, 2, 0, {1, 1, 0, 0});

  SECTION("Buchi F maps to 1, the rest to 2") {
    Acceptor p = to_dpa(Acceptor::make_buchi(two, {0}));
    CHECK(p.colors() == std::vector{1, 2});
  }
  SECTION("coBuchi F maps to 0, the rest to 1") {
    Acceptor p = to_dpa(Acceptor::make_cobuchi(two, {0}));
    CHECK(p.colors() == std::vector{0, 1});
  }
  SECTION("the language is preserved") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 50; ++trial) {
      Acceptor a = trial % 2 == 0 ? omega::testing::random_dba(rng, ab, 1, 4)
                                  : omega::testing::random_dca(rng, ab, 1, 4);
      Acceptor p = to_dpa(a);
      for (const UPWord& w : oracle::enum_upwords(ab, 2, 3))
        CHECK(a.accepts(w) == p.accepts(w));
    }
  }
}

TEST_CASE("rebase changes only the initial state") {
  Acceptor p = fig1_parity();
  CHECK(rebase(p, p.automaton().initial()) == p);
  CHECK(rebase(rebase(p, 1), 2) == rebase(p, 2));
  CHECK(rebase(p, 3).automaton().initial() == 3);
  CHECK_THROWS_AS(rebase(p, 4), std::invalid_argument);

  SECTION("acceptance can differ between initial states") {
    // from state 1 everything is accepted, from state 2 nothing
    Acceptor a = omega::testing::dba_a_then_anything();
    UPWord w("", "b");
    CHECK(rebase(a, 1).accepts(w));
    CHECK_FALSE(rebase(a, 2).accepts(w));
  }
}

TEST_CASE("prune_muller drops family members that are not SCCs") {
  Automaton m = fig1();
  SECTION("a self-loop-free singleton goes away") {
    Acceptor u = Acceptor::make_muller(m, {{1}, {0, 1, 2}});
    CHECK(prune_muller(u).family() == std::vector<std::vector<int>>{{0, 1, 2}});
  }
  SECTION("a family of valid SCCs is unchanged") {
    Acceptor u = Acceptor::make_muller(m, {{0}, {1, 2}, {0, 1, 2, 3}});
    CHECK(prune_muller(u) == u);
  }
  SECTION("membership is preserved on sampled words") {
    std::mt19937 rng(4096);
    Alphabet ab("ab");
    for (int trial = 0; trial < 50; ++trial) {
      Acceptor u = omega::testing::random_dma(rng, ab, 1, 4, 3);
      Acceptor pruned = prune_muller(u);
      for (int i = 0; i < 10; ++i) {
        UPWord w = omega::testing::random_upword(rng, ab, 3, 4);
        CHECK(u.accepts(w) == pruned.accepts(w));
      }
    }
  }
}

TEST_CASE("split_muller decomposes the language as a union") {
  Automaton m = fig1();
  SECTION("one set splits into itself") {
    Acceptor u = Acceptor::make_muller(m, {{0, 1, 2}});
    auto parts = split_muller(u);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0] == u);
  }
  SECTION("an empty family splits into nothing") {
    CHECK(split_muller(Acceptor::make_muller(m, {})).empty());
  }
  SECTION("union of part memberships equals the whole") {
    std::mt19937 rng(512);
    Alphabet ab("ab");
    for (int trial = 0; trial < 50; ++trial) {
      Acceptor u = omega::testing::random_dma(rng, ab, 1, 4, 3);
      auto parts = split_muller(u);
      for (int i = 0; i < 10; ++i) {
        UPWord w = omega::testing::random_upword(rng, ab, 3, 4);
        bool any = false;
        for (const Acceptor& part : parts)
          any = any || part.accepts(w);
        CHECK(u.accepts(w) == any);
      }
    }
  }
}

TEST_CASE("muller families canonicalize at construction") {
  Automaton m = fig1();
  Acceptor u = Acceptor::make_muller(m, {{2, 1, 0}, {0}, {0, 1, 2}, {3, 0}});
  CHECK(u.family() == std::vector<std::vector<int>>{{0}, {0, 3}, {0, 1, 2}});
  CHECK_THROWS_AS(Acceptor::make_muller(m, {{9}}), std::invalid_argument);
}
