#pragma once

#include "binlct/ideal.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace binlct {

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, size_t line, size_t col);

  size_t line() const { return line_; }
  size_t col() const { return col_; }

private:
  size_t line_;
  size_t col_;
};

/// Parses the ideal input format:
///   line 1:              vars <id1> ... <idn>
///   each later nonblank, non-'#' line: one generator,
///   generator := term (('+'|'-') term)?
///   term      := coef | [coef '*']? factor ('*' factor)*
///   factor    := id ('^' posint)?
///   coef      := rational like 3, -5/2
/// At most two terms; the second term's sign and coefficient fold into u
/// (x^a - u x^b has second-term coefficient u). Generator order is kept.
GeneralBinomialIdeal parse_ideal(std::string_view text);

/// Canonical rendering in the same grammar; parse_ideal(render_ideal(i)) == i.
std::string render_ideal(const GeneralBinomialIdeal& ideal);

std::string render_generator(const GeneralBinomialIdeal& ideal, size_t index);

}  // namespace binlct
