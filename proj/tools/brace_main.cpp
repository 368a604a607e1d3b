#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "brace/algebra.hpp"
#include "brace/automorphisms.hpp"
#include "brace/onerelator.hpp"
#include "brace/polynomial.hpp"
#include "brace/subalgebras.hpp"
#include "brace/textio.hpp"
#include "brace/words.hpp"

using json = nlohmann::json;

namespace {

// Exit codes: 0 success, 1 mathematical negative (NOT_MEMBER,
// NOT_AUTOMORPHISM, FAIL), 2 usage or parse error, 3 budget exhaustion.
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

struct Options {
  bool json_output = false;
  bool unicode = false;
  std::uint64_t budget = brace::kDefaultTermBudget;
  std::uint64_t seed = 0;
  std::optional<int> letters;  // constrain the alphabet to x1..xM
};

struct Command {
  std::string name;
  json inputs;
  json result;
  std::optional<json> steps;
  int exit_code = kOk;
  std::vector<std::string> lines;  // plain-text output

  void print(const Options& opt, const brace::TermBudget& budget,
             double time_ms) const {
    if (opt.json_output) {
      json out{{"command", name},
               {"inputs", inputs},
               {"result", result},
               {"stats", {{"terms", budget.used()}, {"time_ms", time_ms}}}};
      if (steps) out["steps"] = *steps;
      std::cout << out.dump(2) << "\n";
    } else {
      for (const auto& line : lines) std::cout << line << "\n";
    }
  }
};

brace::Alphabet make_alphabet(const Options& opt,
                              std::vector<std::string> texts) {
  if (opt.letters) return brace::Alphabet::standard(*opt.letters);
  return brace::Alphabet::infer(texts);
}

std::string poly_text(const brace::Polynomial& f, const brace::Alphabet& a,
                      const Options& opt) {
  return brace::to_string(f, a, opt.unicode);
}

// Splits on a separator at bracket depth zero.
std::vector<std::string> split_top_level(const std::string& text, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string current;
  for (char c : text) {
    if (c == '<') ++depth;
    if (c == '>') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

brace::MembershipCertificate parse_certificate(const std::string& text,
                                               const brace::Alphabet& alpha) {
  brace::MembershipCertificate cert;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string trimmed;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c)) || !trimmed.empty())
        trimmed += c;
    while (!trimmed.empty() &&
           std::isspace(static_cast<unsigned char>(trimmed.back())))
      trimmed.pop_back();
    if (trimmed.empty()) continue;
    auto star = trimmed.find('*');
    if (star == std::string::npos)
      throw brace::ParseError("certificate line needs 'coefficient * word'", 0);
    std::string coeff_text = trimmed.substr(0, star);
    std::string word_text = trimmed.substr(star + 1);
    std::istringstream cs(coeff_text);
    std::string token;
    cs >> token;
    mpq_class c(token);  // INT ['/' INT] with optional sign
    c.canonicalize();
    auto w = brace::parse_word(word_text, alpha);
    if (!w->is_normal())
      throw brace::ParseError("certificate words must be normal", 0);
    cert.steps.push_back({c, w->to_normal()});
  }
  return cert;
}

int cmd_normalize(const Options& opt, const std::string& expr, Command& cmd,
                  brace::TermBudget& budget) {
  auto alpha = make_alphabet(opt, {expr});
  brace::Polynomial f = brace::parse_polynomial(expr, alpha, budget);
  std::string text = poly_text(f, alpha, opt);
  cmd.inputs = {{"expr", expr}};
  cmd.result = {{"polynomial", text}, {"terms", f.term_count()}};
  cmd.lines = {text};
  return kOk;
}

int cmd_mul(const Options& opt, const std::string& spec, Command& cmd,
            brace::TermBudget& budget) {
  auto halves = split_top_level(spec, ';');
  if (halves.size() != 2)
    throw brace::ParseError("expected 'A1,...,Am;T'", 0);
  auto alpha = make_alphabet(opt, {spec});
  std::vector<brace::Polynomial> args;
  for (const auto& part : split_top_level(halves[0], ','))
    args.push_back(brace::parse_polynomial(part, alpha, budget));
  brace::Polynomial target = brace::parse_polynomial(halves[1], alpha, budget);
  brace::Polynomial out = brace::product(args, target, budget);
  std::string text = poly_text(out, alpha, opt);
  cmd.inputs = {{"product", spec}};
  cmd.result = {{"polynomial", text}, {"terms", out.term_count()}};
  cmd.lines = {text};
  return kOk;
}

int cmd_compare(const Options& opt, const std::string& w1_text,
                const std::string& w2_text, Command& cmd) {
  auto alpha = make_alphabet(opt, {w1_text, w2_text});
  auto g1 = brace::parse_word(w1_text, alpha);
  auto g2 = brace::parse_word(w2_text, alpha);
  if (!g1->is_normal() || !g2->is_normal())
    throw brace::ParseError("compare expects normal words", 0);
  auto c = brace::compare(g1->to_normal(), g2->to_normal());
  std::string verdict = c < 0 ? "LT" : c > 0 ? "GT" : "EQ";
  cmd.inputs = {{"w1", w1_text}, {"w2", w2_text}};
  cmd.result = verdict;
  cmd.lines = {verdict};
  return kOk;
}

int cmd_lead(const Options& opt, const std::string& expr, Command& cmd,
             brace::TermBudget& budget) {
  auto alpha = make_alphabet(opt, {expr});
  brace::Polynomial f = brace::parse_polynomial(expr, alpha, budget);
  if (f.is_zero()) throw std::invalid_argument("zero polynomial has no leading term");
  auto [word, coeff] = f.leading();
  std::string word_text = brace::to_string(*word, alpha, opt.unicode);
  cmd.inputs = {{"expr", expr}};
  cmd.result = {{"word", word_text}, {"coefficient", coeff.get_str()}};
  cmd.lines = {coeff.get_str() + " * " + word_text};
  return kOk;
}

int cmd_enum(const Options& opt, int letters, int degree, bool mark_y,
             Command& cmd, brace::TermBudget& budget) {
  auto words = mark_y ? brace::enumerate_marked(letters, degree, 1, budget)
                      : brace::enumerate_normal(letters, degree, budget);
  auto alpha = brace::Alphabet::standard(letters);
  json list = json::array();
  for (const auto& w : words) {
    std::string text = brace::to_string(*w, alpha, opt.unicode);
    list.push_back(text);
    cmd.lines.push_back(text);
  }
  cmd.lines.push_back("count: " + std::to_string(words.size()));
  cmd.inputs = {{"letters", letters}, {"degree", degree}, {"mark_y", mark_y}};
  cmd.result = {{"words", list}, {"count", words.size()}};
  return kOk;
}

int cmd_member(const Options& opt, const std::string& relator_text,
               const std::string& elem_text, bool want_certificate,
               Command& cmd, brace::TermBudget& budget) {
  auto alpha = make_alphabet(opt, {relator_text, elem_text});
  brace::Polynomial f = brace::parse_polynomial(relator_text, alpha, budget);
  brace::Polynomial h = brace::parse_polynomial(elem_text, alpha, budget);
  if (brace::mentions(f, alpha.marker()) || brace::mentions(h, alpha.marker()))
    throw std::invalid_argument("the marker letter y is reserved");
  brace::OneRelatorIdeal ideal(alpha.base_letters(), std::move(f));
  auto verdict = brace::decide_membership(ideal, h, budget);
  cmd.inputs = {{"relator", relator_text}, {"elem", elem_text}};
  cmd.result = verdict.member ? "MEMBER" : "NOT_MEMBER";
  cmd.lines = {verdict.member ? "MEMBER" : "NOT_MEMBER"};
  if (verdict.member && want_certificate) {
    json steps = json::array();
    for (const auto& step : verdict.certificate.steps) {
      std::string line = step.coefficient.get_str() + " * " +
                         brace::to_string(*step.marked_word, alpha, opt.unicode);
      steps.push_back({{"coefficient", step.coefficient.get_str()},
                       {"word", brace::to_string(*step.marked_word, alpha)}});
      cmd.lines.push_back(line);
    }
    cmd.steps = steps;
  }
  return verdict.member ? kOk : kNegative;
}

int cmd_verify(const Options& opt, const std::string& relator_text,
               const std::string& elem_text, const std::string& cert_path,
               Command& cmd, brace::TermBudget& budget) {
  std::ifstream in(cert_path);
  if (!in) throw std::invalid_argument("cannot read certificate file: " + cert_path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string cert_text = buffer.str();

  auto alpha = make_alphabet(opt, {relator_text, elem_text});
  brace::Polynomial f = brace::parse_polynomial(relator_text, alpha, budget);
  brace::Polynomial h = brace::parse_polynomial(elem_text, alpha, budget);
  brace::OneRelatorIdeal ideal(alpha.base_letters(), std::move(f));
  auto cert = parse_certificate(cert_text, alpha);
  bool ok = brace::verify_certificate(ideal, h, cert, budget);
  cmd.inputs = {{"relator", relator_text},
                {"elem", elem_text},
                {"certificate", cert_path}};
  cmd.result = ok ? "OK" : "FAIL";
  cmd.lines = {ok ? "OK" : "FAIL"};
  return ok ? kOk : kNegative;
}

int cmd_freiheit(const Options& opt, const std::string& relator_text,
                 const std::string& elem_text, Command& cmd,
                 brace::TermBudget& budget) {
  auto alpha = make_alphabet(opt, {relator_text, elem_text});
  brace::Polynomial f = brace::parse_polynomial(relator_text, alpha, budget);
  brace::Polynomial h = brace::parse_polynomial(elem_text, alpha, budget);
  bool free = brace::freiheitssatz_probe(alpha.base_letters(), f, h, budget);
  cmd.inputs = {{"relator", relator_text}, {"elem", elem_text}};
  cmd.result = free ? "FREE" : "VIOLATION";
  cmd.lines = {free ? "FREE" : "VIOLATION"};
  return free ? kOk : kNegative;
}

int cmd_subalg(const Options& opt, const std::string& f1_text,
               const std::string& f2_text, Command& cmd,
               brace::TermBudget& budget) {
  auto alpha = make_alphabet(opt, {f1_text, f2_text});
  auto q_alpha = brace::Alphabet::standard(0);  // q-words render over "y"
  brace::Polynomial f1 = brace::parse_polynomial(f1_text, alpha, budget);
  brace::Polynomial f2 = brace::parse_polynomial(f2_text, alpha, budget);
  auto report = brace::reduce_pair(std::move(f1), std::move(f2), budget);

  json steps = json::array();
  for (std::size_t i = 0; i < report.steps.size(); ++i) {
    const auto& s = report.steps[i];
    std::string q_text = brace::to_string(*s.q, q_alpha, opt.unicode);
    std::string which = s.which == brace::PairSlot::first ? "f1" : "f2";
    std::string other = s.which == brace::PairSlot::first ? "f2" : "f1";
    cmd.lines.push_back("step " + std::to_string(i + 1) + ": " + which +
                        " -= " + s.coefficient.get_str() + " * q(" + other +
                        "), q = " + q_text);
    steps.push_back({{"which", which},
                     {"coefficient", s.coefficient.get_str()},
                     {"q", q_text}});
  }
  std::string outcome = report.outcome == brace::PairOutcome::free_rank2
                            ? "FREE_RANK2"
                        : report.outcome == brace::PairOutcome::free_rank1
                            ? "FREE_RANK1"
                            : "ZERO_PAIR";
  cmd.lines.push_back("outcome: " + outcome);
  cmd.lines.push_back("g1: " + poly_text(report.g1, alpha, opt));
  cmd.lines.push_back("g2: " + poly_text(report.g2, alpha, opt));
  cmd.inputs = {{"f1", f1_text}, {"f2", f2_text}};
  cmd.result = {{"outcome", outcome},
                {"g1", poly_text(report.g1, alpha, opt)},
                {"g2", poly_text(report.g2, alpha, opt)}};
  cmd.steps = steps;
  return kOk;
}

json elementary_json(const brace::ElementaryAuto& e,
                     const brace::Alphabet& alpha) {
  return {{"index", e.index()},
          {"scalar", e.scalar().get_str()},
          {"shift", brace::to_string(e.shift(), alpha)}};
}

std::string elementary_text(const brace::ElementaryAuto& e,
                            const brace::Alphabet& alpha, const Options& opt) {
  std::string xi = "x" + std::to_string(e.index());
  std::string text = xi + " -> " + e.scalar().get_str() + "*" + xi;
  if (!e.shift().is_zero())
    text += " + " + brace::to_string(e.shift(), alpha, opt.unicode);
  return text;
}

int cmd_auto(const Options& opt, const std::string& f1_text,
             const std::string& f2_text, Command& cmd,
             brace::TermBudget& budget) {
  brace::Alphabet alpha = brace::Alphabet::standard(2);
  brace::Polynomial f1 = brace::parse_polynomial(f1_text, alpha, budget);
  brace::Polynomial f2 = brace::parse_polynomial(f2_text, alpha, budget);
  if (brace::mentions(f1, alpha.marker()) || brace::mentions(f2, alpha.marker()))
    throw std::invalid_argument("auto expects polynomials over x1, x2");
  auto factors = brace::decompose_tame({std::move(f1), std::move(f2)}, budget);
  cmd.inputs = {{"f1", f1_text}, {"f2", f2_text}};
  if (!factors) {
    cmd.result = "NOT_AUTOMORPHISM";
    cmd.lines = {"NOT_AUTOMORPHISM"};
    return kNegative;
  }
  cmd.result = "TAME";
  cmd.lines = {"TAME"};
  json steps = json::array();
  for (std::size_t i = 0; i < factors->size(); ++i) {
    cmd.lines.push_back("factor " + std::to_string(i + 1) + ": " +
                        elementary_text((*factors)[i], alpha, opt));
    steps.push_back(elementary_json((*factors)[i], alpha));
  }
  cmd.lines.push_back(
      "factors compose left to right from (x1,x2) to give the input");
  cmd.steps = steps;
  return kOk;
}

int cmd_random_tame(const Options& opt, int steps_count, int max_deg,
                    Command& cmd, brace::TermBudget& budget) {
  brace::Alphabet alpha = brace::Alphabet::standard(2);
  auto [phi, factors] =
      brace::random_tame(opt.seed, steps_count, max_deg, budget);
  cmd.inputs = {{"seed", opt.seed},
                {"steps", steps_count},
                {"max_deg", max_deg}};
  cmd.lines = {"f1: " + poly_text(phi.f1, alpha, opt),
               "f2: " + poly_text(phi.f2, alpha, opt)};
  json steps = json::array();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    cmd.lines.push_back("factor " + std::to_string(i + 1) + ": " +
                        elementary_text(factors[i], alpha, opt));
    steps.push_back(elementary_json(factors[i], alpha));
  }
  cmd.result = {{"f1", poly_text(phi.f1, alpha, opt)},
                {"f2", poly_text(phi.f2, alpha, opt)}};
  cmd.steps = steps;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computer algebra for free brace algebras"};
  app.require_subcommand(1);
  // global flags may follow the subcommand
  app.fallthrough();

  Options opt;
  app.add_flag("--json", opt.json_output, "machine-readable JSON output");
  app.add_flag("--unicode", opt.unicode, "angle brackets in output");
  app.add_option("--budget", opt.budget, "term budget for expansions");
  app.add_option("--seed", opt.seed, "seed for randomized commands");
  int letters_flag = 0;
  auto* letters_opt = app.add_option(
      "--letters", letters_flag, "constrain the alphabet to x1..xM");

  std::string expr, spec, w1, w2, relator, elem, cert_path, f1_text, f2_text;
  int enum_letters = 1, enum_degree = 1;
  bool mark_y = false, want_cert = false;
  int rt_steps = 0, rt_maxdeg = 3;

  auto* c_norm = app.add_subcommand("normalize", "expand into the normal-word basis");
  c_norm->add_option("expr", expr)->required();
  auto* c_mul = app.add_subcommand("mul", "brace product \"A1,...,Am;T\"");
  c_mul->add_option("product", spec)->required();
  auto* c_cmp = app.add_subcommand("compare", "order two normal words");
  c_cmp->add_option("w1", w1)->required();
  c_cmp->add_option("w2", w2)->required();
  auto* c_lead = app.add_subcommand("lead", "leading term and coefficient");
  c_lead->add_option("expr", expr)->required();
  auto* c_enum = app.add_subcommand("enum", "enumerate normal words by degree");
  c_enum->add_option("--letters", enum_letters)->required();
  c_enum->add_option("--degree", enum_degree)->required();
  c_enum->add_flag("--mark-y", mark_y, "exactly one marker letter y");
  auto* c_member = app.add_subcommand("member", "one-relator ideal membership");
  c_member->add_option("--relator", relator)->required();
  c_member->add_option("--elem", elem)->required();
  c_member->add_flag("--certificate", want_cert, "print certificate steps");
  auto* c_verify = app.add_subcommand("verify", "check a membership certificate");
  c_verify->add_option("--relator", relator)->required();
  c_verify->add_option("--elem", elem)->required();
  c_verify->add_option("--cert", cert_path)->required();
  auto* c_frei = app.add_subcommand("freiheit",
                                    "probe that h avoids the ideal of f");
  c_frei->add_option("--relator", relator)->required();
  c_frei->add_option("--elem", elem)->required();
  auto* c_sub = app.add_subcommand("subalg", "reduce a generating pair");
  c_sub->add_option("f1", f1_text)->required();
  c_sub->add_option("f2", f2_text)->required();
  auto* c_auto = app.add_subcommand("auto", "tame decomposition over x1,x2");
  c_auto->add_option("f1", f1_text)->required();
  c_auto->add_option("f2", f2_text)->required();
  auto* c_rt = app.add_subcommand("random-tame",
                                  "seeded random tame endomorphism");
  c_rt->add_option("--steps", rt_steps)->required();
  c_rt->add_option("--max-deg", rt_maxdeg);

  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }
  if (letters_opt->count() > 0) opt.letters = letters_flag;

  brace::TermBudget budget(opt.budget);
  Command cmd;
  auto started = std::chrono::steady_clock::now();
  int code = kOk;
  try {
    if (c_norm->parsed()) {
      cmd.name = "normalize";
      code = cmd_normalize(opt, expr, cmd, budget);
    } else if (c_mul->parsed()) {
      cmd.name = "mul";
      code = cmd_mul(opt, spec, cmd, budget);
    } else if (c_cmp->parsed()) {
      cmd.name = "compare";
      code = cmd_compare(opt, w1, w2, cmd);
    } else if (c_lead->parsed()) {
      cmd.name = "lead";
      code = cmd_lead(opt, expr, cmd, budget);
    } else if (c_enum->parsed()) {
      cmd.name = "enum";
      code = cmd_enum(opt, enum_letters, enum_degree, mark_y, cmd, budget);
    } else if (c_member->parsed()) {
      cmd.name = "member";
      code = cmd_member(opt, relator, elem, want_cert, cmd, budget);
    } else if (c_verify->parsed()) {
      cmd.name = "verify";
      code = cmd_verify(opt, relator, elem, cert_path, cmd, budget);
    } else if (c_frei->parsed()) {
      cmd.name = "freiheit";
      code = cmd_freiheit(opt, relator, elem, cmd, budget);
    } else if (c_sub->parsed()) {
      cmd.name = "subalg";
      code = cmd_subalg(opt, f1_text, f2_text, cmd, budget);
    } else if (c_auto->parsed()) {
      cmd.name = "auto";
      code = cmd_auto(opt, f1_text, f2_text, cmd, budget);
    } else if (c_rt->parsed()) {
      cmd.name = "random-tame";
      code = cmd_random_tame(opt, rt_steps, rt_maxdeg, cmd, budget);
    }
  } catch (const brace::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const brace::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  double time_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - started)
          .count();
  cmd.print(opt, budget, time_ms);
  return code;
}
