#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "omega/acceptor.hpp"
#include "omega/automaton.hpp"

namespace omega {

/// Error in the acceptor text format, carrying the 1-based source line.
class ParseError : public std::runtime_error {
public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const noexcept { return line_; }

private:
  int line_;
};

namespace detail {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

/// Splits the input into token lines, dropping '#' comments and blank lines.
inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    ++number;
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    if (auto hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    std::istringstream stream{std::string(raw)};
    std::vector<std::string> tokens;
    for (std::string token; stream >> token;)
      tokens.push_back(token);
    if (!tokens.empty())
      lines.push_back(Line{number, std::move(tokens)});
    if (end == text.size())
      break;
  }
  return lines;
}

inline int parse_int(const Line& line, const std::string& token,
                     const char* what) {
  try {
    std::size_t used = 0;
    int value = std::stoi(token, &used);
    if (used != token.size() || value < 0)
      throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw ParseError(line.number,
                     std::string("expected a nonnegative ") + what + ", got '" +
                         token + "'");
  }
}

inline int parse_state(const Line& line, const std::string& token, int states) {
  int value = parse_int(line, token, "state index");
  if (value >= states)
    throw ParseError(line.number, "state index " + token + " out of range (" +
                                      std::to_string(states) + " states)");
  return value;
}

}  // namespace detail

/// Parses the line-oriented acceptor format:
///
///   acceptor <dba|dca|dpa|dma>
///   alphabet <sym> <sym> ...
///   states <n>
///   initial <i>
///   trans <from> <sym> <to>        (exactly n * |alphabet| lines)
///   buchi <i> ...                  (condition block matching the kind)
///   cobuchi <i> ...
///   colors <i>:<c> ...             (every state exactly once)
///   muller { <i> ... } { ... } ... (possibly zero sets)
///
/// '#' starts a comment; blank lines are ignored. Every defect is reported
/// as a ParseError with its line number.
inline Acceptor parse_acceptor(std::string_view text) {
  auto lines = detail::tokenize(text);
  std::size_t at = 0;
  auto need = [&](const char* what) -> const detail::Line& {
    if (at >= lines.size())
      throw ParseError(lines.empty() ? 1 : lines.back().number,
                       std::string("unexpected end of input, expected ") + what);
    return lines[at];
  };

  const detail::Line& header = need("'acceptor <kind>'");
  if (header.tokens[0] != "acceptor" || header.tokens.size() != 2)
    throw ParseError(header.number, "expected 'acceptor <dba|dca|dpa|dma>'");
  AcceptanceKind kind;
  if (header.tokens[1] == "dba") kind = AcceptanceKind::buchi;
  else if (header.tokens[1] == "dca") kind = AcceptanceKind::cobuchi;
  else if (header.tokens[1] == "dpa") kind = AcceptanceKind::parity;
  else if (header.tokens[1] == "dma") kind = AcceptanceKind::muller;
  else
    throw ParseError(header.number,
                     "unknown acceptor kind '" + header.tokens[1] + "'");
  ++at;

  const detail::Line& alpha_line = need("'alphabet ...'");
  if (alpha_line.tokens[0] != "alphabet" || alpha_line.tokens.size() < 2)
    throw ParseError(alpha_line.number, "expected 'alphabet <sym> <sym> ...'");
  std::string symbols;
  for (std::size_t i = 1; i < alpha_line.tokens.size(); ++i) {
    const std::string& token = alpha_line.tokens[i];
    if (token.size() != 1)
      throw ParseError(alpha_line.number,
                       "alphabet symbols must be single characters, got '" +
                           token + "'");
    if (symbols.find(token[0]) != std::string::npos)
      throw ParseError(alpha_line.number,
                       "duplicate alphabet symbol '" + token + "'");
    symbols += token;
  }
  Alphabet alphabet(symbols);
  ++at;

  const detail::Line& states_line = need("'states <n>'");
  if (states_line.tokens[0] != "states" || states_line.tokens.size() != 2)
    throw ParseError(states_line.number, "expected 'states <n>'");
  int states = detail::parse_int(states_line, states_line.tokens[1], "state count");
  if (states == 0)
    throw ParseError(states_line.number, "state count must be positive");
  ++at;

  const detail::Line& initial_line = need("'initial <i>'");
  if (initial_line.tokens[0] != "initial" || initial_line.tokens.size() != 2)
    throw ParseError(initial_line.number, "expected 'initial <i>'");
  int initial = detail::parse_state(initial_line, initial_line.tokens[1], states);
  ++at;

  std::vector<int> delta(static_cast<std::size_t>(states) * alphabet.size(), -1);
  int remaining = states * alphabet.size();
  while (remaining > 0) {
    const detail::Line& line = need("a 'trans <from> <sym> <to>' line");
    if (line.tokens[0] != "trans") {
      // Which entry is missing makes the better diagnostic.
      for (int q = 0; q < states; ++q)
        for (int s = 0; s < alphabet.size(); ++s)
          if (delta[static_cast<std::size_t>(q) * alphabet.size() + s] == -1)
            throw ParseError(line.number,
                             std::string("incomplete transition function: state ") +
                                 std::to_string(q) + " symbol " +
                                 alphabet.symbol(s));
    }
    if (line.tokens.size() != 4)
      throw ParseError(line.number, "expected 'trans <from> <sym> <to>'");
    int from = detail::parse_state(line, line.tokens[1], states);
    if (line.tokens[2].size() != 1 || alphabet.index_of(line.tokens[2][0]) < 0)
      throw ParseError(line.number,
                       "unknown symbol '" + line.tokens[2] + "' in transition");
    int sym = alphabet.index_of(line.tokens[2][0]);
    int to = detail::parse_state(line, line.tokens[3], states);
    std::size_t slot = static_cast<std::size_t>(from) * alphabet.size() + sym;
    if (delta[slot] != -1)
      throw ParseError(line.number, "duplicate transition: state " +
                                        std::to_string(from) + " symbol " +
                                        line.tokens[2]);
    delta[slot] = to;
    --remaining;
    ++at;
  }
  Automaton automaton(alphabet, states, initial, std::move(delta));

  const detail::Line& cond = need("a condition block");
  ++at;
  if (at < lines.size())
    throw ParseError(lines[at].number, "unexpected content after the condition block");

  auto expect_keyword = [&](const char* keyword) {
    if (cond.tokens[0] != keyword)
      throw ParseError(cond.number, std::string("acceptor kind needs a '") +
                                        keyword + "' condition block, got '" +
                                        cond.tokens[0] + "'");
  };
  switch (kind) {
    case AcceptanceKind::buchi:
    case AcceptanceKind::cobuchi: {
      expect_keyword(kind == AcceptanceKind::buchi ? "buchi" : "cobuchi");
      std::vector<int> final_set;
      for (std::size_t i = 1; i < cond.tokens.size(); ++i)
        final_set.push_back(detail::parse_state(cond, cond.tokens[i], states));
      return kind == AcceptanceKind::buchi
                 ? Acceptor::make_buchi(std::move(automaton), std::move(final_set))
                 : Acceptor::make_cobuchi(std::move(automaton), std::move(final_set));
    }
    case AcceptanceKind::parity: {
      expect_keyword("colors");
      std::vector<int> colors(states, -1);
      for (std::size_t i = 1; i < cond.tokens.size(); ++i) {
        const std::string& token = cond.tokens[i];
        auto colon = token.find(':');
        if (colon == std::string::npos)
          throw ParseError(cond.number, "expected '<state>:<color>', got '" + token + "'");
        int q = detail::parse_state(cond, token.substr(0, colon), states);
        int c = detail::parse_int(cond, token.substr(colon + 1), "color");
        if (colors[q] != -1)
          throw ParseError(cond.number,
                           "state " + std::to_string(q) + " colored twice");
        colors[q] = c;
      }
      for (int q = 0; q < states; ++q)
        if (colors[q] == -1)
          throw ParseError(cond.number,
                           "no color for state " + std::to_string(q));
      return Acceptor::make_parity(std::move(automaton), std::move(colors));
    }
    case AcceptanceKind::muller: {
      expect_keyword("muller");
      std::vector<std::vector<int>> family;
      std::optional<std::vector<int>> open;
      for (std::size_t i = 1; i < cond.tokens.size(); ++i) {
        const std::string& token = cond.tokens[i];
        if (token == "{") {
          if (open)
            throw ParseError(cond.number, "nested '{' in muller family");
          open.emplace();
        } else if (token == "}") {
          if (!open)
            throw ParseError(cond.number, "unmatched '}' in muller family");
          family.push_back(std::move(*open));
          open.reset();
        } else if (open) {
          open->push_back(detail::parse_state(cond, token, states));
        } else {
          throw ParseError(cond.number,
                           "expected '{' to open a final set, got '" + token + "'");
        }
      }
      if (open)
        throw ParseError(cond.number, "unclosed '{' in muller family");
      return Acceptor::make_muller(std::move(automaton), std::move(family));
    }
  }
  throw ParseError(cond.number, "unhandled acceptor kind");
}

namespace detail {

inline void serialize_structure(std::ostringstream& out, const Automaton& m) {
  out << "alphabet";
  for (int s = 0; s < m.alphabet().size(); ++s)
    out << ' ' << m.alphabet().symbol(s);
  out << '\n';
  out << "states " << m.state_count() << '\n';
  out << "initial " << m.initial() << '\n';
  for (int q = 0; q < m.state_count(); ++q)
    for (int s = 0; s < m.alphabet().size(); ++s)
      out << "trans " << q << ' ' << m.alphabet().symbol(s) << ' ' << m.next(q, s)
          << '\n';
}

}  // namespace detail

/// Canonical text form: transitions state-major in alphabet order, condition
/// sets sorted, Muller family in canonical order. serialize(parse(s)) is a
/// fixpoint of parse/serialize.
inline std::string serialize_acceptor(const Acceptor& a) {
  std::ostringstream out;
  out << "acceptor " << kind_name(a.kind()) << '\n';
  detail::serialize_structure(out, a.automaton());
  switch (a.kind()) {
    case AcceptanceKind::buchi:
    case AcceptanceKind::cobuchi:
      out << (a.kind() == AcceptanceKind::buchi ? "buchi" : "cobuchi");
      for (int q : a.final_set())
        out << ' ' << q;
      break;
    case AcceptanceKind::parity:
      out << "colors";
      for (int q = 0; q < a.automaton().state_count(); ++q)
        out << ' ' << q << ':' << a.colors()[q];
      break;
    case AcceptanceKind::muller:
      out << "muller";
      for (const auto& set : a.family()) {
        out << " {";
        for (int q : set)
          out << ' ' << q;
        out << " }";
      }
      break;
  }
  out << '\n';
  return out.str();
}

/// Bare transition structure, written with an `automaton` header and no
/// condition block (the right congruence output format).
inline std::string serialize_automaton(const Automaton& m) {
  std::ostringstream out;
  out << "automaton\n";
  detail::serialize_structure(out, m);
  return out.str();
}

/// Word syntax u(v): `ab(ba)` is the prefix "ab" with period "ba"; `(a)` has
/// an empty prefix. Symbols are validated against an alphabet at the use
/// site, not here.
inline UPWord parse_word(std::string_view text) {
  auto open = text.find('(');
  if (open == std::string_view::npos)
    throw std::invalid_argument("word must have the form u(v)");
  if (text.empty() || text.back() != ')')
    throw std::invalid_argument("word must end with ')'");
  std::string_view prefix = text.substr(0, open);
  std::string_view period = text.substr(open + 1, text.size() - open - 2);
  if (period.empty())
    throw std::invalid_argument("period in u(v) must be nonempty");
  if (period.find('(') != std::string_view::npos ||
      period.find(')') != std::string_view::npos ||
      prefix.find(')') != std::string_view::npos)
    throw std::invalid_argument("stray parenthesis in word");
  return UPWord(std::string(prefix), std::string(period));
}

inline std::string format_word(const UPWord& w) {
  return w.prefix + "(" + w.period + ")";
}

}  // namespace omega
