// diagmon: command-line front end for the diagram-monoid toolkit.
//
// Chips are written as W<n>:<pairs>;<circles> (e.g. "W3:1-2,1'-2',3-3';0"),
// words as x1 x2* x1, identities as "LHS = RHS", sandwich matrices as
// "e,e;e,(0|1)" and groups as Z, Z4, Z2xZ, ...

#include <atomic>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "diagmon/brauer.hpp"
#include "diagmon/chip.hpp"
#include "diagmon/chip_literal.hpp"
#include "diagmon/embeddings.hpp"
#include "diagmon/finite_semigroup.hpp"
#include "diagmon/identities.hpp"
#include "diagmon/kauffman.hpp"
#include "diagmon/rees.hpp"
#include "diagmon/render.hpp"
#include "diagmon/verify.hpp"
#include "diagmon/words.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // a mathematically negative outcome
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void expect_keyword(const std::vector<std::string>& args, std::size_t at, const std::string& word) {
  if (at >= args.size() || args[at] != word)
    throw UsageError("expected the keyword '" + word + "' at position " + std::to_string(at + 1));
}

std::string need_arg(const std::vector<std::string>& args, std::size_t at, const std::string& what) {
  if (at >= args.size()) throw UsageError("missing " + what);
  return args[at];
}

int parse_int_arg(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError("expected an integer for " + what + ", got '" + s + "'");
  }
}

// Either a chip monoid K_n or a finite table.
struct EvalContext {
  std::optional<diagmon::ChipMonoid> chips;
  std::optional<diagmon::FiniteSemigroup> table;
};

diagmon::FiniteSemigroup load_table(const std::vector<std::string>& args, std::size_t at, std::size_t* consumed) {
  const std::string head = need_arg(args, at, "a table (b21 | a2 | tsl | table FILE)");
  *consumed = 1;
  if (head == "b21") return diagmon::brandt_b21();
  if (head == "a2") return diagmon::a2();
  if (head == "tsl") return diagmon::tsl();
  if (head == "table") {
    const std::string path = need_arg(args, at + 1, "a table file path");
    *consumed = 2;
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open table file '" + path + "'");
    return diagmon::read_semigroup(in);
  }
  throw UsageError("unknown table '" + head + "' (expected b21 | a2 | tsl | table FILE)");
}

EvalContext load_context(const std::vector<std::string>& args, std::size_t at, std::size_t* consumed,
                         const std::string& involution_flag) {
  const std::string head = need_arg(args, at, "a context (k<N> | b21 | a2 | tsl | table FILE)");
  if (head.size() >= 2 && (head[0] == 'k' || head[0] == 'K') &&
      std::isdigit(static_cast<unsigned char>(head[1]))) {
    const int degree = parse_int_arg(head.substr(1), "the Kauffman monoid degree");
    if (degree < 2 || degree > 64) throw UsageError("Kauffman degree must be in 2..64");
    *consumed = 1;
    diagmon::ChipMonoid ctx;
    ctx.degree = degree;
    if (involution_flag == "star")
      ctx.involution = diagmon::DiagramInvolution::reflection;
    else if (involution_flag == "rotate")
      ctx.involution = diagmon::DiagramInvolution::rotation;
    else if (!involution_flag.empty())
      throw UsageError("--involution must be 'star' or 'rotate'");
    return EvalContext{ctx, std::nullopt};
  }
  if (!involution_flag.empty())
    throw UsageError("--involution applies only to k<N> contexts; tables carry their own involution");
  EvalContext out;
  out.table = load_table(args, at, consumed);
  return out;
}

// ASSIGN := letter "=" value ("," letter "=" value)*. Values in a chip
// context: 1, c, h<i>, or a chip literal; in a table context: an element
// label or 0-based index.
diagmon::Chip parse_chip_value(const std::string& value, int degree) {
  if (value == "1") return diagmon::identity_chip(degree);
  if (value == "c") return diagmon::circle(degree);
  if (value.size() >= 2 && value[0] == 'h' && std::isdigit(static_cast<unsigned char>(value[1])))
    return diagmon::hook(degree, parse_int_arg(value.substr(1), "a hook index"));
  return diagmon::parse_chip(value);
}

template <typename Elem>
std::map<int, Elem> parse_assignment(const std::string& text,
                                     const std::function<Elem(const std::string&)>& value_of) {
  std::map<int, Elem> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("assignment item '" + item + "' needs letter=value");
    std::string letter = item.substr(0, eq);
    letter.erase(0, letter.find_first_not_of(" \t"));
    letter.erase(letter.find_last_not_of(" \t") + 1);
    if (letter.size() < 2 || (letter[0] != 'x' && letter[0] != 'X'))
      throw UsageError("assignment letter '" + letter + "' must look like x<k>");
    const int id = parse_int_arg(letter.substr(1), "a letter index");
    std::string value = item.substr(eq + 1);
    value.erase(0, value.find_first_not_of(" \t"));
    value.erase(value.find_last_not_of(" \t") + 1);
    out.insert_or_assign(id, value_of(value));
  }
  if (out.empty()) throw UsageError("empty assignment");
  return out;
}

int table_element(const diagmon::FiniteSemigroup& sg, const std::string& value) {
  for (int i = 0; i < sg.size(); ++i)
    if (sg.label(i) == value) return i;
  const int idx = parse_int_arg(value, "an element index");
  if (idx < 0 || idx >= sg.size()) throw UsageError("element index out of range");
  return idx;
}

int cmd_enumerate(const std::vector<std::string>& args) {
  const std::string kind = need_arg(args, 0, "a family (jones | brauer)");
  const int n = parse_int_arg(need_arg(args, 1, "a degree"), "the degree");
  std::vector<diagmon::Matching> elems;
  if (kind == "jones")
    elems = diagmon::enumerate_jones(n);
  else if (kind == "brauer")
    elems = diagmon::enumerate_brauer(n);
  else
    throw UsageError("unknown family '" + kind + "'");
  for (const auto& m : elems) std::cout << diagmon::format_matching(m) << '\n';
  std::cerr << "count: " << elems.size() << '\n';
  return kExitOk;
}

int cmd_eval(const std::vector<std::string>& args, const std::string& involution_flag) {
  const std::string word_text = need_arg(args, 0, "a word");
  expect_keyword(args, 1, "with");
  const std::string assign_text = need_arg(args, 2, "an assignment");
  expect_keyword(args, 3, "in");
  std::size_t consumed = 0;
  const EvalContext ctx = load_context(args, 4, &consumed, involution_flag);
  const diagmon::InvWord word = diagmon::parse_word(word_text);

  if (ctx.chips) {
    const auto assignment = parse_assignment<diagmon::Chip>(
        assign_text, [&](const std::string& v) { return parse_chip_value(v, ctx.chips->degree); });
    std::cout << diagmon::format_chip(diagmon::evaluate(word, assignment, *ctx.chips)) << '\n';
  } else {
    const diagmon::TableMonoid table_ctx{&*ctx.table};
    const auto assignment = parse_assignment<int>(
        assign_text, [&](const std::string& v) { return table_element(*ctx.table, v); });
    std::cout << ctx.table->label(diagmon::evaluate(word, assignment, table_ctx)) << '\n';
  }
  return kExitOk;
}

int cmd_check_identity(const std::vector<std::string>& args) {
  const diagmon::Identity id = diagmon::parse_identity(need_arg(args, 0, "an identity"));
  expect_keyword(args, 1, "in");
  std::size_t consumed = 0;
  const diagmon::FiniteSemigroup sg = load_table(args, 2, &consumed);
  if (diagmon::satisfies_identity(sg, id)) {
    std::cout << "holds\n";
    return kExitOk;
  }
  // exhibit the first refuting assignment
  const diagmon::TableMonoid ctx{&sg};
  std::vector<int> everything(static_cast<std::size_t>(sg.size()));
  for (int i = 0; i < sg.size(); ++i) everything[static_cast<std::size_t>(i)] = i;
  const auto witness = diagmon::refute_identity(everything, ctx, id, 1);
  std::cout << "fails";
  if (witness) {
    std::cout << " under";
    for (const auto& [letter, elem] : witness->assignment)
      std::cout << " x" << letter << "=" << sg.label(elem);
  }
  std::cout << '\n';
  return kExitNegative;
}

int cmd_refute(const std::vector<std::string>& args, const std::string& involution_flag) {
  const diagmon::Identity id = diagmon::parse_identity(need_arg(args, 0, "an identity"));
  expect_keyword(args, 1, "in");
  std::size_t consumed = 0;
  const EvalContext ctx = load_context(args, 2, &consumed, involution_flag);
  expect_keyword(args, 2 + consumed, "depth");
  const int depth = parse_int_arg(need_arg(args, 3 + consumed, "a depth"), "the depth");

  if (ctx.chips) {
    const auto witness = diagmon::refute_identity(diagmon::kauffman_generators(ctx.chips->degree),
                                                  *ctx.chips, id, depth);
    if (!witness) {
      std::cout << "no witness up to depth " << depth << '\n';
      return kExitNegative;
    }
    for (const auto& [letter, elem] : witness->assignment)
      std::cout << "x" << letter << " -> " << diagmon::format_chip(elem) << '\n';
    return kExitOk;
  }
  const diagmon::TableMonoid table_ctx{&*ctx.table};
  std::vector<int> everything(static_cast<std::size_t>(ctx.table->size()));
  for (int i = 0; i < ctx.table->size(); ++i) everything[static_cast<std::size_t>(i)] = i;
  const auto witness = diagmon::refute_identity(everything, table_ctx, id, depth);
  if (!witness) {
    std::cout << "no witness up to depth " << depth << '\n';
    return kExitNegative;
  }
  for (const auto& [letter, elem] : witness->assignment)
    std::cout << "x" << letter << " -> " << ctx.table->label(elem) << '\n';
  return kExitOk;
}

int cmd_isoterm(const std::vector<std::string>& args) {
  const diagmon::InvWord word = diagmon::parse_word(need_arg(args, 0, "a word"));
  expect_keyword(args, 1, "in");
  std::size_t consumed = 0;
  const diagmon::FiniteSemigroup sg = load_table(args, 2, &consumed);
  expect_keyword(args, 2 + consumed, "maxlen");
  const int max_len = parse_int_arg(need_arg(args, 3 + consumed, "a length bound"), "the length bound");
  const std::vector<diagmon::InvWord> witnesses = diagmon::isoterm_witnesses(sg, word, max_len);
  for (const auto& w : witnesses) std::cout << diagmon::format_word(w) << '\n';
  if (witnesses.empty()) {
    std::cerr << "isoterm up to length " << max_len
              << " (alphabet: letters of the word plus one fresh letter)\n";
    return kExitOk;
  }
  return kExitNegative;
}

int cmd_table(const std::vector<std::string>& args) {
  const std::string which = need_arg(args, 0, "a table name (b21 | a2 | tsl | jones N)");
  if (which == "jones") {
    const int n = parse_int_arg(need_arg(args, 1, "a degree"), "the degree");
    diagmon::write_semigroup(std::cout, diagmon::jones_monoid(n));
    return kExitOk;
  }
  std::size_t consumed = 0;
  diagmon::write_semigroup(std::cout, load_table(args, 0, &consumed));
  return kExitOk;
}

int cmd_rees(const std::vector<std::string>& args) {
  expect_keyword(args, 0, "classify");
  const std::string matrix_text = need_arg(args, 1, "a sandwich matrix");
  expect_keyword(args, 2, "over");
  const diagmon::AbelianGroup group = diagmon::parse_group(need_arg(args, 3, "a group"));
  const diagmon::SandwichMatrix matrix = diagmon::parse_sandwich_matrix(matrix_text, group);
  const diagmon::SubmatrixCertificate cert = diagmon::nfb_submatrix_classify(matrix, group);
  if (!cert) {
    std::cout << "no certificate\n";
    return kExitNegative;
  }
  std::cout << "certificate: " << diagmon::certificate_form_name(cert.form) << " at rows ("
            << cert.row1 + 1 << "," << cert.row2 + 1 << "), cols (" << cert.col1 + 1 << ","
            << cert.col2 + 1 << ")\n";
  return kExitOk;
}

int cmd_verify(const std::string& which, int jobs, double budget_seconds) {
  using diagmon::ScenarioResult;
  const auto& scenarios = diagmon::all_scenarios();
  std::vector<const diagmon::ScenarioDef*> selected;
  for (const auto& s : scenarios)
    if (which == "all" || s.name == which) selected.push_back(&s);
  if (selected.empty()) {
    std::cerr << "unknown scenario '" << which << "'; available:";
    for (const auto& s : scenarios) std::cerr << ' ' << s.name;
    std::cerr << " all\n";
    return kExitUsage;
  }

  std::vector<ScenarioResult> results(selected.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < selected.size(); ++i) results[i] = selected[i]->run();
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> workers;
    for (int j = 0; j < jobs; ++j)
      workers.push_back(std::async(std::launch::async, [&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= selected.size()) return;
          results[i] = selected[i]->run();
        }
      }));
    for (auto& w : workers) w.get();
  }

  bool all_pass = true;
  for (std::size_t i = 0; i < results.size(); ++i) {
    ScenarioResult& r = results[i];
    if (r.time_ms > budget_seconds * 1000.0) {
      r.pass = false;
      r.notes.push_back("FAILED: exceeded the time budget of " + std::to_string(budget_seconds) + " s");
    }
    for (const auto& line : r.notes) std::cout << "  " << line << '\n';
    std::cout << r.summary_line() << '\n';
    all_pass = all_pass && r.pass;
  }
  if (selected.size() > 1) {
    std::cout << "----\n";
    for (const auto& r : results)
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << " (" << static_cast<long>(r.time_ms + 0.5)
                << " ms, " << r.checks << " checks)\n";
    std::cout << (all_pass ? "all scenarios passed" : "some scenarios FAILED") << '\n';
  }
  return all_pass ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"diagmon: exact arithmetic for diagram monoids, word identities and Rees matrix semigroups"};
  app.require_subcommand(1);

  std::vector<std::string> args;
  std::string involution_flag;
  std::string format = "ascii";
  std::string scenario;
  int jobs = 1;
  double budget = 60.0;

  auto* mul = app.add_subcommand("mul", "Multiply two chips");
  mul->add_option("chips", args, "CHIP CHIP")->expected(2);
  auto* star_cmd = app.add_subcommand("star", "Reflect a chip");
  star_cmd->add_option("chip", args, "CHIP")->expected(1);
  auto* rotate_cmd = app.add_subcommand("rotate", "Rotate a chip by 180 degrees");
  rotate_cmd->add_option("chip", args, "CHIP")->expected(1);
  auto* planar = app.add_subcommand("planar", "Test whether a chip is planar (exit 1 when it is not)");
  planar->add_option("chip", args, "CHIP")->expected(1);
  auto* enumerate = app.add_subcommand("enumerate", "List a diagram family: enumerate {jones|brauer} N");
  enumerate->add_option("args", args, "{jones|brauer} N")->expected(2);
  auto* zimin_cmd = app.add_subcommand("zimin", "Print the n-th Zimin word");
  zimin_cmd->add_option("n", args, "N")->expected(1);
  auto* eval = app.add_subcommand("eval", "Evaluate a word: eval WORD with ASSIGN in {k<N>|b21|a2|tsl|table FILE}");
  eval->add_option("args", args)->expected(-1);
  eval->add_option("--involution", involution_flag, "Involution for starred letters in k<N>: star | rotate");
  auto* check = app.add_subcommand("check-identity", "Exhaustively check: check-identity IDENT in TABLE");
  check->add_option("args", args)->expected(-1);
  auto* refute = app.add_subcommand("refute", "Search a refuting assignment: refute IDENT in k<N> depth L");
  refute->add_option("args", args)->expected(-1);
  refute->add_option("--involution", involution_flag, "Involution for starred letters in k<N>: star | rotate");
  auto* isoterm = app.add_subcommand("isoterm", "Bounded isoterm search: isoterm WORD in TABLE maxlen L "
                                                "(alphabet = letters of WORD plus one fresh letter)");
  isoterm->add_option("args", args)->expected(-1);
  auto* rees = app.add_subcommand("rees", "Sandwich matrix tools: rees classify MATRIX over GROUP");
  rees->add_option("args", args)->expected(-1);
  auto* table = app.add_subcommand("table", "Export a Cayley table: table {b21|a2|tsl|jones N}");
  table->add_option("args", args)->expected(-1);
  auto* verify = app.add_subcommand("verify", "Run a named verification scenario, or 'all'");
  verify->add_option("scenario", scenario, "Scenario name or 'all'")->required();
  verify->add_option("--jobs", jobs, "Run scenarios concurrently");
  verify->add_option("--budget", budget, "Per-scenario time budget in seconds (default 60)");
  auto* render = app.add_subcommand("render", "Draw a chip");
  render->add_option("chip", args, "CHIP")->expected(1);
  render->add_option("--format", format, "ascii | svg")->check(CLI::IsMember({"ascii", "svg"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*mul) {
      const diagmon::Chip a = diagmon::parse_chip(args.at(0));
      const diagmon::Chip b = diagmon::parse_chip(args.at(1));
      std::cout << diagmon::format_chip(diagmon::multiply(a, b)) << '\n';
      return kExitOk;
    }
    if (*star_cmd) {
      std::cout << diagmon::format_chip(diagmon::star(diagmon::parse_chip(args.at(0)))) << '\n';
      return kExitOk;
    }
    if (*rotate_cmd) {
      std::cout << diagmon::format_chip(diagmon::rotate(diagmon::parse_chip(args.at(0)))) << '\n';
      return kExitOk;
    }
    if (*planar) {
      const bool ok = diagmon::is_planar(diagmon::parse_chip(args.at(0)));
      std::cout << (ok ? "true" : "false") << '\n';
      return ok ? kExitOk : kExitNegative;
    }
    if (*enumerate) return cmd_enumerate(args);
    if (*zimin_cmd) {
      std::cout << diagmon::format_word(diagmon::zimin(parse_int_arg(args.at(0), "the Zimin index"))) << '\n';
      return kExitOk;
    }
    if (*eval) return cmd_eval(args, involution_flag);
    if (*check) return cmd_check_identity(args);
    if (*refute) return cmd_refute(args, involution_flag);
    if (*isoterm) return cmd_isoterm(args);
    if (*rees) return cmd_rees(args);
    if (*table) return cmd_table(args);
    if (*verify) return cmd_verify(scenario, jobs, budget);
    if (*render) {
      const diagmon::Chip chip = diagmon::parse_chip(args.at(0));
      std::cout << (format == "svg" ? diagmon::render_svg(chip) : diagmon::render_ascii(chip));
      return kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const diagmon::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
