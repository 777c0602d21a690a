#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>

#include "omega/io.hpp"

#include "support/generators.hpp"

using namespace omega;

namespace {

const char* universal_dba =
    "acceptor dba\n"
    "alphabet a\n"
    "states 1\n"
    "initial 0\n"
    "trans 0 a 0\n"
    "buchi 0\n";

std::string fig1_muller_file() {
  return
      "# the running example structure with one Muller set\n"
      "acceptor dma\n"
      "alphabet a b\n"
      "states 4\n"
      "initial 0\n"
      "trans 0 a 2\n"
      "trans 0 b 0\n"
      "trans 1 a 0\n"
      "trans 1 b 2\n"
      "trans 2 a 1\n"
      "trans 2 b 3\n"
      "trans 3 a 1\n"
      "trans 3 b 0\n"
      "muller { 0 1 2 }\n";
}

}  // namespace

TEST_CASE("parse_acceptor reads the line format") {
  SECTION("one-state universal DBA") {
    Acceptor a = parse_acceptor(universal_dba);
    CHECK(a.kind() == AcceptanceKind::buchi);
    CHECK(a.automaton().state_count() == 1);
    CHECK(a.accepts(UPWord("", "a")));
  }
  SECTION("fig1 with a Muller set, comments and all") {
    Acceptor a = parse_acceptor(fig1_muller_file());
    CHECK(a.automaton() == omega::testing::fig1());
    CHECK(a.family() == std::vector<std::vector<int>>{{0, 1, 2}});
    CHECK(a.accepts(UPWord("", "a")));
  }
}

TEST_CASE("parse_acceptor diagnostics carry line numbers") {
  SECTION("a missing transition is reported by state and symbol") {
    std::string text =
        "acceptor dba\n"
        "alphabet a b\n"
        "states 1\n"
        "initial 0\n"
        "trans 0 a 0\n"
        "buchi 0\n";
    try {
      parse_acceptor(text);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 6);
      CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring(
                               "incomplete transition function: state 0 symbol b"));
    }
  }
  SECTION("duplicate transitions are rejected") {
    std::string text =
        "acceptor dba\nalphabet a\nstates 2\ninitial 0\n"
        "trans 0 a 1\ntrans 0 a 0\nbuchi\n";
    CHECK_THROWS_MATCHES(parse_acceptor(text), ParseError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("duplicate transition")));
  }
  SECTION("out-of-range indices are rejected") {
    std::string text =
        "acceptor dba\nalphabet a\nstates 1\ninitial 0\ntrans 0 a 3\nbuchi 0\n";
    CHECK_THROWS_MATCHES(parse_acceptor(text), ParseError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("out of range")));
  }
  SECTION("unknown symbols are rejected") {
    std::string text =
        "acceptor dba\nalphabet a\nstates 1\ninitial 0\ntrans 0 c 0\nbuchi 0\n";
    CHECK_THROWS_MATCHES(parse_acceptor(text), ParseError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("unknown symbol 'c'")));
  }
  SECTION("partial color maps are rejected") {
    std::string text =
        "acceptor dpa\nalphabet a\nstates 2\ninitial 0\n"
        "trans 0 a 1\ntrans 1 a 0\ncolors 0:1\n";
    CHECK_THROWS_MATCHES(parse_acceptor(text), ParseError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("no color for state 1")));
  }
  SECTION("the condition block must match the kind") {
    std::string text =
        "acceptor dpa\nalphabet a\nstates 1\ninitial 0\ntrans 0 a 0\nbuchi 0\n";
    CHECK_THROWS_AS(parse_acceptor(text), ParseError);
  }
  SECTION("trailing content is rejected") {
    std::string text = std::string(universal_dba) + "buchi 0\n";
    CHECK_THROWS_MATCHES(parse_acceptor(text), ParseError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("unexpected content")));
  }
}

TEST_CASE("serialization is canonical") {
  SECTION("serialize then parse then serialize is a fixpoint") {
    std::mt19937 rng(515);
    Alphabet ab("ab");
    for (int trial = 0; trial < 60; ++trial) {
      Acceptor a = [&] {
        switch (trial % 4) {
          case 0: return omega::testing::random_dba(rng, ab, 1, 5);
          case 1: return omega::testing::random_dca(rng, ab, 1, 5);
          case 2: return omega::testing::random_dpa(rng, ab, 1, 5, 4);
          default: return omega::testing::random_dma(rng, ab, 1, 5, 3);
        }
      }();
      std::string once = serialize_acceptor(a);
      Acceptor reparsed = parse_acceptor(once);
      CHECK(reparsed == a);
      CHECK(serialize_acceptor(reparsed) == once);
    }
  }
  SECTION("a Muller family with an empty set round-trips") {
    Acceptor a = parse_acceptor(
        "acceptor dma\nalphabet a\nstates 1\ninitial 0\ntrans 0 a 0\nmuller { }\n");
    CHECK(a.family() == std::vector<std::vector<int>>{{}});
    CHECK(parse_acceptor(serialize_acceptor(a)) == a);
  }
  SECTION("right congruence output uses the automaton header") {
    std::string text = serialize_automaton(omega::testing::fig1());
    CHECK_THAT(text, Catch::Matchers::StartsWith("automaton\n"));
    CHECK_THAT(text, !Catch::Matchers::ContainsSubstring("buchi"));
  }
}

TEST_CASE("word syntax u(v)") {
  SECTION("examples") {
    CHECK(parse_word("(a)") == UPWord("", "a"));
    CHECK(parse_word("ab(ba)") == UPWord("ab", "ba"));
    CHECK(format_word(UPWord("", "a")) == "(a)");
    CHECK(format_word(UPWord("ab", "ba")) == "ab(ba)");
  }
  SECTION("defects are parse errors") {
    CHECK_THROWS_AS(parse_word("()"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("a(b)c"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("a(b(c))"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word(""), std::invalid_argument);
  }
  SECTION("round trip on random words") {
    std::mt19937 rng(9999);
    Alphabet ab("ab");
    for (int trial = 0; trial < 200; ++trial) {
      UPWord w = omega::testing::random_upword(rng, ab, 4, 4);
      CHECK(parse_word(format_word(w)) == w);
    }
  }
}
