// Command line front end: inclusion, equivalence, membership, and right
// congruence construction for deterministic omega acceptors.
//
// Exit codes: 0 affirmative (YES / ACCEPT / rightcon success), 1 negative
// with witness (NO / REJECT), 2 for every usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "omega/omega.hpp"

namespace {

constexpr int exit_yes = 0;
constexpr int exit_no = 1;
constexpr int exit_error = 2;

omega::Acceptor load_acceptor(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return omega::parse_acceptor(buffer.str());
  } catch (const omega::ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

bool is_muller(const omega::Acceptor& a) {
  return a.kind() == omega::AcceptanceKind::muller;
}

omega::Acceptor as_parity(const omega::Acceptor& a) {
  return a.kind() == omega::AcceptanceKind::parity ? a : omega::to_dpa(a);
}

void reject_mixed_muller(const omega::Acceptor& a1, const omega::Acceptor& a2) {
  if (is_muller(a1) != is_muller(a2))
    throw std::runtime_error(
        std::string("cannot compare ") + omega::kind_name(a1.kind()) + " with " +
        omega::kind_name(a2.kind()) +
        ": rewrite the non-Muller operand as an equivalent dma first");
}

int run_include(const std::string& left, const std::string& right) {
  omega::Acceptor a1 = load_acceptor(left);
  omega::Acceptor a2 = load_acceptor(right);
  reject_mixed_muller(a1, a2);
  omega::Verdict verdict = is_muller(a1)
                               ? omega::include_dma(a1, a2)
                               : omega::include_dpa(as_parity(a1), as_parity(a2));
  if (verdict.included) {
    std::cout << "YES\n";
    return exit_yes;
  }
  std::cout << "NO " << omega::format_word(*verdict.witness) << "\n";
  return exit_no;
}

int run_equiv(const std::string& left, const std::string& right) {
  omega::Acceptor a1 = load_acceptor(left);
  omega::Acceptor a2 = load_acceptor(right);
  reject_mixed_muller(a1, a2);
  omega::EquivVerdict verdict =
      is_muller(a1) ? omega::equiv_dma(a1, a2)
                    : omega::equiv_dpa(as_parity(a1), as_parity(a2));
  if (verdict.equivalent) {
    std::cout << "YES\n";
    return exit_yes;
  }
  std::cout << "NO " << (verdict.left_accepts ? "left-only" : "right-only") << ' '
            << omega::format_word(*verdict.witness) << "\n";
  return exit_no;
}

int run_member(const std::string& path, const std::string& word_text) {
  omega::Acceptor a = load_acceptor(path);
  omega::UPWord word = omega::parse_word(word_text);
  bool accepted = a.accepts(word);  // throws on out-of-alphabet symbols
  std::cout << (accepted ? "ACCEPT" : "REJECT") << "\n";
  return accepted ? exit_yes : exit_no;
}

int run_rightcon(const std::string& path, const std::string& out_path,
                 const std::string& witnesses_path) {
  omega::Acceptor a = load_acceptor(path);
  omega::RightConResult result = omega::right_con(a);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out)
      throw std::runtime_error("cannot write '" + out_path + "'");
    out << omega::serialize_automaton(result.automaton);
  }
  if (!witnesses_path.empty()) {
    std::ofstream out(witnesses_path);
    if (!out)
      throw std::runtime_error("cannot write '" + witnesses_path + "'");
    for (const omega::UPWord& w : result.distinguishers)
      out << omega::format_word(w) << '\n';
  }
  std::cout << result.automaton.state_count() << "\n";
  return exit_yes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inclusion, equivalence, membership, and right congruence "
               "construction for deterministic omega acceptors"};
  app.require_subcommand(1);

  std::string left, right, word_text, out_path, witnesses_path;

  CLI::App* include = app.add_subcommand(
      "include", "Decide whether the left acceptor's language is included in "
                 "the right one's; print YES, or NO with a witness");
  include->add_option("left", left, "left acceptor file")->required();
  include->add_option("right", right, "right acceptor file")->required();

  CLI::App* equiv = app.add_subcommand(
      "equiv", "Decide language equivalence; print YES, or NO with the "
               "direction and a witness");
  equiv->add_option("left", left, "left acceptor file")->required();
  equiv->add_option("right", right, "right acceptor file")->required();

  CLI::App* member = app.add_subcommand(
      "member", "Test whether an ultimately periodic word u(v) is accepted");
  member->add_option("acceptor", left, "acceptor file")->required();
  member->add_option("word", word_text, "word in u(v) syntax")->required();

  CLI::App* rightcon = app.add_subcommand(
      "rightcon", "Build the right congruence automaton; print its state count");
  rightcon->add_option("acceptor", left, "acceptor file")->required();
  rightcon->add_option("--out", out_path, "write the automaton to this file");
  rightcon->add_option("--witnesses", witnesses_path,
                       "write the distinguishing words, one per line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return exit_error;
  }

  try {
    if (include->parsed())
      return run_include(left, right);
    if (equiv->parsed())
      return run_equiv(left, right);
    if (member->parsed())
      return run_member(left, word_text);
    return run_rightcon(left, out_path, witnesses_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_error;
  }
}
