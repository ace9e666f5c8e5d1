#include <array>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "regseq.hpp"

namespace {

int run_verb(regseq::exec::Verb verb, const std::string& session_path,
             const regseq::exec::Request& base,
             const std::vector<std::string>& args) {
  regseq::exec::Request req = base;
  req.verb = verb;
  req.args = args;

  std::ifstream in(session_path);
  if (!in) {
    std::cerr << "error: cannot open session file '" << session_path
              << "'\n";
    return 3;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  regseq::session::SessionData S;
  try {
    S = regseq::session::parse_session(buf.str());
  } catch (const regseq::ParseError& e) {
    std::cerr << "error: " << session_path << ": " << e.what() << "\n";
    return 3;
  }
  return regseq::exec::run(S, req, std::cout, std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"regseq: regular sequences on finitely presented modules"};
  app.set_version_flag("--version", std::string("regseq ") + regseq::kVersion);

  std::string session_path;
  regseq::exec::Request base;
  std::string field_spec;
  unsigned degree_cap = 0;

  app.add_option("-s,--session", session_path,
                 "session file declaring the ring and objects")
      ->required();
  app.add_option("--format", base.format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--field", field_spec,
                 "override the session field: q or gf:<p>");
  app.add_option("--degree-cap", degree_cap,
                 "override the total-degree safety cap");
  app.add_flag("--strict", base.strict,
               "require complete prime sets in theorem mode");
  app.add_flag("--forge-inconsistency", base.forge_inconsistent)
      ->group("");  // test hook, hidden from help

  app.require_subcommand(1);

  constexpr std::size_t kVerbCount = 11;
  struct VerbRow {
    const char* name;
    regseq::exec::Verb verb;
    const char* help;
  };
  static const std::array<VerbRow, kVerbCount> verbs{{
      {"check", regseq::exec::Verb::check,
       "check <seq> on <module>: regularity with witnesses"},
      {"strong-check", regseq::exec::Verb::strong_check,
       "strong-check <seq> on <module>: colon-by-colon regularity"},
      {"depth", regseq::exec::Verb::depth,
       "depth <module>: depth at the irrelevant maximal ideal"},
      {"local-depth", regseq::exec::Verb::local_depth,
       "local-depth <module> at <prime>: depth after localizing"},
      {"koszul", regseq::exec::Verb::koszul,
       "koszul <seq> on <module>: homology vanishing table"},
      {"ass", regseq::exec::Verb::ass,
       "ass <module>: associated primes of a monomial module"},
      {"ext", regseq::exec::Verb::ext,
       "ext <i> <module>: Ext^i against the residue field"},
      {"dim", regseq::exec::Verb::dim, "dim <module>: Krull dimension"},
      {"theorem", regseq::exec::Verb::theorem,
       "theorem <seq> on <module> [using <primes...>]: cross-check"},
      {"corollary2", regseq::exec::Verb::corollary2,
       "corollary2 <f> <g> on <module>: support-comparison transfer"},
      {"sop", regseq::exec::Verb::sop,
       "sop <seq> on <module>: system-of-parameters regularity"},
  }};

  std::array<std::vector<std::string>, kVerbCount> sub_args;
  for (std::size_t k = 0; k < kVerbCount; ++k) {
    auto* sub = app.add_subcommand(verbs[k].name, verbs[k].help);
    sub->add_option("args", sub_args[k], "command arguments");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the diagnostic
    return 3;     // all command-line misuse exits 3
  }

  if (!field_spec.empty()) base.field_override = field_spec;
  if (degree_cap > 0) base.degree_cap_override = degree_cap;

  const auto parsed = app.get_subcommands();
  for (std::size_t k = 0; k < kVerbCount; ++k) {
    if (!parsed.empty() && parsed[0]->get_name() == verbs[k].name)
      return run_verb(verbs[k].verb, session_path, base, sub_args[k]);
  }
  std::cerr << "error: no command given\n";
  return 3;
}
