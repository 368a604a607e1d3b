#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "brace/algebra.hpp"
#include "brace/polynomial.hpp"
#include "brace/words.hpp"

namespace brace {

// Grammar of the wire format:
//   expr     := ['-'] term (('+'|'-') term)*
//   term     := [rational '*']? word
//   word     := IDENT | '<' word (',' word)* ';' word '>'
//   rational := INT ['/' INT]
// Identifiers are [A-Za-z][A-Za-z0-9]*; whitespace is insignificant. The
// literal "0" denotes the zero polynomial. "y" always names the marker
// letter, above every base letter.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " +
                           std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// An ordered symbol table: base letters x1 < x2 < ... < xM plus the marker
// "y" at index M. Base names sort naturally (alphabetic prefix, then numeric
// suffix by value, so x2 < x10).
class Alphabet {
 public:
  // Standard names x1..xM.
  static Alphabet standard(int letters);
  // Base names collected lexically from the given texts, "y" excluded.
  static Alphabet infer(std::span<const std::string> texts);

  int base_letters() const { return static_cast<int>(names_.size()); }
  Letter marker() const { return Letter{base_letters()}; }
  bool is_marker(Letter x) const { return x.id == base_letters(); }

  // Resolves a name; "y" maps to the marker. Nullopt when unknown.
  std::optional<Letter> find(std::string_view name) const;
  const std::string& name(Letter x) const;

 private:
  explicit Alphabet(std::vector<std::string> names)
      : names_(std::move(names)) {}
  std::vector<std::string> names_;
  static const std::string kMarkerName;
};

// Identifier tokens in lexical order of appearance (with duplicates).
std::vector<std::string> scan_identifiers(std::string_view text);

// Whole-string parses. Both reject trailing input.
Polynomial parse_polynomial(std::string_view text, const Alphabet& alpha,
                            TermBudget& budget);
Polynomial parse_polynomial(std::string_view text, const Alphabet& alpha);
GeneralPtr parse_word(std::string_view text, const Alphabet& alpha);

// Canonical serialization: terms strictly decreasing, coefficients in lowest
// terms, "1*" omitted, leading negative term rendered "-c*w". The Unicode
// flag swaps <...> for angle brackets in output only.
std::string to_string(const NormalWord& w, const Alphabet& alpha,
                      bool unicode = false);
std::string to_string(const GeneralWord& w, const Alphabet& alpha,
                      bool unicode = false);
std::string to_string(const Polynomial& f, const Alphabet& alpha,
                      bool unicode = false);

}  // namespace brace
