#include "brace/textio.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <tuple>

namespace brace {

const std::string Alphabet::kMarkerName = "y";

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)); }

// (alphabetic prefix, has numeric suffix, suffix value, full name)
std::tuple<std::string, bool, long, std::string> natural_key(
    const std::string& name) {
  std::size_t i = 0;
  while (i < name.size() && !std::isdigit(static_cast<unsigned char>(name[i])))
    ++i;
  std::string prefix = name.substr(0, i);
  bool has_num = i < name.size();
  long num = 0;
  for (; i < name.size() && std::isdigit(static_cast<unsigned char>(name[i]));
       ++i)
    num = num * 10 + (name[i] - '0');
  return {prefix, has_num, num, name};
}

bool natural_less(const std::string& a, const std::string& b) {
  return natural_key(a) < natural_key(b);
}

}  // namespace

Alphabet Alphabet::standard(int letters) {
  if (letters < 0) throw std::invalid_argument("negative alphabet size");
  std::vector<std::string> names;
  names.reserve(letters);
  for (int i = 1; i <= letters; ++i) names.push_back("x" + std::to_string(i));
  return Alphabet(std::move(names));
}

Alphabet Alphabet::infer(std::span<const std::string> texts) {
  std::set<std::string> seen;
  for (const auto& t : texts)
    for (auto& id : scan_identifiers(t))
      if (id != kMarkerName) seen.insert(std::move(id));
  std::vector<std::string> names(seen.begin(), seen.end());
  std::sort(names.begin(), names.end(), natural_less);
  return Alphabet(std::move(names));
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  if (name == kMarkerName) return marker();
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return Letter{static_cast<int>(i)};
  return std::nullopt;
}

const std::string& Alphabet::name(Letter x) const {
  if (x.id == base_letters()) return kMarkerName;
  if (x.id < 0 || x.id > base_letters())
    throw std::invalid_argument("letter outside alphabet");
  return names_[x.id];
}

std::vector<std::string> scan_identifiers(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (ident_start(text[i])) {
      std::size_t j = i + 1;
      while (j < text.size() && ident_char(text[j])) ++j;
      out.emplace_back(text.substr(i, j - i));
      i = j;
    } else {
      ++i;
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Alphabet& alpha)
      : text_(text), alpha_(alpha) {}

  Polynomial polynomial(TermBudget& budget) {
    skip_ws();
    // The canonical zero.
    if (bare_zero()) return Polynomial();
    Polynomial out;
    bool negative = false;
    if (peek() == '-' || peek() == '+') negative = take() == '-';
    for (;;) {
      term(out, negative, budget);
      skip_ws();
      if (peek() == '+' || peek() == '-') {
        negative = take() == '-';
        continue;
      }
      break;
    }
    end();
    return out;
  }

  GeneralPtr single_word() {
    skip_ws();
    GeneralPtr w = word();
    end();
    return w;
  }

 private:
  bool bare_zero() {
    std::size_t save = pos_;
    if (peek() == '-' || peek() == '+') take();
    skip_ws();
    if (peek() != '0') {
      pos_ = save;
      return false;
    }
    Rational r = rational();
    skip_ws();
    if (r == 0 && pos_ == text_.size()) return true;
    pos_ = save;
    return false;
  }

  void term(Polynomial& out, bool negative, TermBudget& budget) {
    skip_ws();
    Rational coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = rational();
      skip_ws();
      if (peek() == '*') {
        take();
      } else if (coeff == 0) {
        // A bare zero term contributes nothing.
        if (negative) coeff = -coeff;
        return;
      } else {
        fail("expected '*' after coefficient");
      }
    }
    if (negative) coeff = -coeff;
    GeneralPtr w = word();
    out.add_scaled(normalize(w, budget), coeff);
  }

  GeneralPtr word() {
    skip_ws();
    char c = peek();
    if (c == '<') {
      if (++depth_ > kMaxNesting) fail("brackets nested too deeply");
      take();
      std::vector<GeneralPtr> parts;
      parts.push_back(word());
      skip_ws();
      while (peek() == ',') {
        take();
        parts.push_back(word());
        skip_ws();
      }
      expect(';');
      GeneralPtr target = word();
      skip_ws();
      expect('>');
      --depth_;
      return GeneralWord::node(std::move(parts), std::move(target));
    }
    if (ident_start(c)) {
      std::size_t start = pos_;
      std::size_t j = pos_ + 1;
      while (j < text_.size() && ident_char(text_[j])) ++j;
      std::string_view name = text_.substr(pos_, j - pos_);
      pos_ = j;
      auto letter = alpha_.find(name);
      if (!letter)
        throw ParseError("unknown identifier '" + std::string(name) + "'",
                         start);
      return GeneralWord::leaf(*letter);
    }
    fail("expected a word");
  }

  Rational rational() {
    mpz_class num = integer();
    skip_ws();
    if (peek() == '/') {
      take();
      skip_ws();
      std::size_t at = pos_;
      mpz_class den = integer();
      if (den == 0) throw ParseError("zero denominator", at);
      Rational r(num, den);
      r.canonicalize();
      return r;
    }
    return Rational(num);
  }

  mpz_class integer() {
    skip_ws();
    std::size_t start = pos_;
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      take();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected an integer");
    mpz_class v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      v = v * 10 + (text_[pos_++] - '0');
    (void)start;
    return neg ? mpz_class(-v) : v;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char take() { return text_[pos_++]; }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    take();
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  void end() {
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, pos_);
  }

  static constexpr int kMaxNesting = 10'000;

  std::string_view text_;
  const Alphabet& alpha_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Alphabet& alpha,
                            TermBudget& budget) {
  return Parser(text, alpha).polynomial(budget);
}

Polynomial parse_polynomial(std::string_view text, const Alphabet& alpha) {
  TermBudget budget;
  return parse_polynomial(text, alpha, budget);
}

GeneralPtr parse_word(std::string_view text, const Alphabet& alpha) {
  return Parser(text, alpha).single_word();
}

namespace {

void word_text(const NormalWord& w, const Alphabet& alpha, bool unicode,
               std::string& out) {
  if (w.is_letter()) {
    out += alpha.name(w.head());
    return;
  }
  out += unicode ? "⟨" : "<";
  bool first = true;
  for (const auto& c : w.children()) {
    if (!first) out += ",";
    first = false;
    word_text(*c, alpha, unicode, out);
  }
  out += ";";
  out += alpha.name(w.head());
  out += unicode ? "⟩" : ">";
}

void general_text(const GeneralWord& w, const Alphabet& alpha, bool unicode,
                  std::string& out) {
  if (w.is_leaf()) {
    out += alpha.name(w.letter());
    return;
  }
  out += unicode ? "⟨" : "<";
  bool first = true;
  for (const auto& a : w.args()) {
    if (!first) out += ",";
    first = false;
    general_text(*a, alpha, unicode, out);
  }
  out += ";";
  general_text(*w.target(), alpha, unicode, out);
  out += unicode ? "⟩" : ">";
}

}  // namespace

std::string to_string(const NormalWord& w, const Alphabet& alpha,
                      bool unicode) {
  std::string out;
  word_text(w, alpha, unicode, out);
  return out;
}

std::string to_string(const GeneralWord& w, const Alphabet& alpha,
                      bool unicode) {
  std::string out;
  general_text(w, alpha, unicode, out);
  return out;
}

std::string to_string(const Polynomial& f, const Alphabet& alpha,
                      bool unicode) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const Rational& c = it->second;
    Rational abs_c = abs(c);
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (abs_c != 1) {
      out += abs_c.get_str();
      out += "*";
    }
    word_text(*it->first, alpha, unicode, out);
  }
  return out;
}

}  // namespace brace
