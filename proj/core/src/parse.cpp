#include "binlct/parse.hpp"

#include <cctype>
#include <map>
#include <vector>

namespace binlct {

ParseError::ParseError(const std::string& msg, size_t line, size_t col)
    : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " +
                         msg),
      line_(line),
      col_(col) {}

namespace {

enum class Tok { ident, number, plus, minus, star, caret, slash, end };

struct Token {
  Tok kind;
  std::string text;
  size_t col;  // 1-based
};

std::vector<Token> tokenize(const std::string& line, size_t lineno) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    unsigned char c = line[i];
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    size_t col = i + 1;
    if (std::isalpha(c) || c == '_') {
      size_t j = i;
      while (j < line.size() && (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_')) ++j;
      out.push_back({Tok::ident, line.substr(i, j - i), col});
      i = j;
    } else if (std::isdigit(c)) {
      size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      out.push_back({Tok::number, line.substr(i, j - i), col});
      i = j;
    } else if (c == '+') {
      out.push_back({Tok::plus, "+", col});
      ++i;
    } else if (c == '-') {
      out.push_back({Tok::minus, "-", col});
      ++i;
    } else if (c == '*') {
      out.push_back({Tok::star, "*", col});
      ++i;
    } else if (c == '^') {
      out.push_back({Tok::caret, "^", col});
      ++i;
    } else if (c == '/') {
      out.push_back({Tok::slash, "/", col});
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", lineno,
                       col);
    }
  }
  out.push_back({Tok::end, "", line.size() + 1});
  return out;
}

struct Term {
  Rat coef = 1;
  IntVector exps;
};

class LineParser {
public:
  LineParser(std::vector<Token> toks, size_t lineno, const std::map<std::string, size_t>& vars,
             size_t nvars)
      : toks_(std::move(toks)), lineno_(lineno), vars_(vars), nvars_(nvars) {}

  Generator parse_generator() {
    Term first = parse_term();
    if (peek().kind == Tok::end) {
      if (first.coef == 0) throw ParseError("zero generator", lineno_, 1);
      return finish({first.exps, first.exps, 0});
    }
    Tok op = peek().kind;
    if (op != Tok::plus && op != Tok::minus)
      throw ParseError("expected '+', '-' or end of generator", lineno_, peek().col);
    advance();
    Term second = parse_term();
    if (peek().kind == Tok::plus || peek().kind == Tok::minus)
      throw ParseError("more than two terms in generator", lineno_, peek().col);
    if (peek().kind != Tok::end)
      throw ParseError("unexpected trailing input", lineno_, peek().col);

    // c1 x^a + w x^b = c1 (x^a - u x^b) with u = -w/c1.
    Rat w = op == Tok::minus ? Rat(-second.coef) : second.coef;
    if (first.coef == 0 && w == 0) throw ParseError("zero generator", lineno_, 1);
    if (first.coef == 0) return finish({second.exps, second.exps, 0});
    if (w == 0) return finish({first.exps, first.exps, 0});
    Rat u = -w / first.coef;
    return finish({first.exps, second.exps, u});
  }

private:
  Generator finish(Generator g) {
    try {
      return normalize_generator(std::move(g));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), lineno_, 1);
    }
  }

  const Token& peek() const { return toks_[pos_]; }
  void advance() { ++pos_; }

  Int parse_posint() {
    if (peek().kind == Tok::minus)
      throw ParseError("expected positive integer exponent", lineno_, peek().col);
    if (peek().kind != Tok::number)
      throw ParseError("expected integer exponent", lineno_, peek().col);
    Int value(peek().text);
    if (value == 0) throw ParseError("exponent must be positive", lineno_, peek().col);
    advance();
    return value;
  }

  Rat parse_rational(bool negative) {
    Int num(peek().text);
    advance();
    Int den = 1;
    if (peek().kind == Tok::slash) {
      advance();
      if (peek().kind != Tok::number)
        throw ParseError("expected denominator digits", lineno_, peek().col);
      den = Int(peek().text);
      if (den == 0) throw ParseError("zero denominator in coefficient", lineno_, peek().col);
      advance();
    }
    Rat r = Rat(num) / Rat(den);
    return negative ? Rat(-r) : r;
  }

  void parse_factor(Term& t) {
    if (peek().kind != Tok::ident)
      throw ParseError("expected variable", lineno_, peek().col);
    auto it = vars_.find(peek().text);
    if (it == vars_.end())
      throw ParseError("unknown variable '" + peek().text + "'", lineno_, peek().col);
    size_t idx = it->second;
    advance();
    Int e = 1;
    if (peek().kind == Tok::caret) {
      advance();
      e = parse_posint();
    }
    t.exps[idx] += e;
  }

  Term parse_term() {
    Term t;
    t.exps.assign(nvars_, Int(0));
    bool has_coef = false;
    if (peek().kind == Tok::number) {
      t.coef = parse_rational(false);
      has_coef = true;
    } else if (peek().kind == Tok::minus && toks_[pos_ + 1].kind == Tok::number) {
      advance();
      t.coef = parse_rational(true);
      has_coef = true;
    }
    if (has_coef) {
      if (peek().kind == Tok::star) {
        advance();
      } else if (peek().kind == Tok::ident) {
        throw ParseError("expected '*' between coefficient and variable", lineno_, peek().col);
      } else {
        return t;  // bare constant term
      }
    }
    parse_factor(t);
    while (peek().kind == Tok::star) {
      advance();
      parse_factor(t);
    }
    return t;
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
  size_t lineno_;
  const std::map<std::string, size_t>& vars_;
  size_t nvars_;
};

bool is_blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

GeneralBinomialIdeal parse_ideal(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::string cur;
    for (char c : text) {
      if (c == '\n') {
        lines.push_back(cur);
        cur.clear();
      } else if (c != '\r') {
        cur += c;
      }
    }
    lines.push_back(cur);
  }

  GeneralBinomialIdeal ideal;
  std::map<std::string, size_t> var_index;
  bool have_vars = false;
  size_t lineno = 0;
  for (const std::string& line : lines) {
    ++lineno;
    if (is_blank_or_comment(line)) continue;
    auto toks = tokenize(line, lineno);
    if (!have_vars) {
      if (toks.empty() || toks[0].kind != Tok::ident || toks[0].text != "vars")
        throw ParseError("expected 'vars <name>...' header", lineno, toks[0].col);
      for (size_t k = 1; k + 1 < toks.size(); ++k) {
        if (toks[k].kind != Tok::ident)
          throw ParseError("expected variable name", lineno, toks[k].col);
        if (var_index.count(toks[k].text))
          throw ParseError("duplicate variable '" + toks[k].text + "'", lineno, toks[k].col);
        var_index[toks[k].text] = ideal.vars.size();
        ideal.vars.push_back(toks[k].text);
      }
      if (ideal.vars.empty()) throw ParseError("no variables declared", lineno, 1);
      have_vars = true;
      continue;
    }
    LineParser parser(std::move(toks), lineno, var_index, ideal.vars.size());
    ideal.generators.push_back(parser.parse_generator());
  }
  if (!have_vars) throw ParseError("expected 'vars <name>...' header", lineno, 1);
  if (ideal.generators.empty()) throw ParseError("ideal has no generators", lineno, 1);
  validate_ideal(ideal);
  return ideal;
}

namespace {

std::string render_term(const GeneralBinomialIdeal& ideal, const IntVector& exps) {
  std::string out;
  for (size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += ideal.vars[i];
    if (exps[i] != 1) out += "^" + exps[i].str();
  }
  return out.empty() ? "1" : out;
}

std::string with_coef(const Rat& c, const std::string& term) {
  if (c == 1) return term;
  if (term == "1") return rat_str(c);
  return rat_str(c) + "*" + term;
}

}  // namespace

std::string render_generator(const GeneralBinomialIdeal& ideal, size_t index) {
  const Generator& g = ideal.generators[index];
  std::string first = render_term(ideal, g.a);
  if (is_monomial_generator(g)) return first;
  if (g.u > 0) return first + " - " + with_coef(g.u, render_term(ideal, g.b));
  return first + " + " + with_coef(Rat(-g.u), render_term(ideal, g.b));
}

std::string render_ideal(const GeneralBinomialIdeal& ideal) {
  std::string out = "vars";
  for (const auto& v : ideal.vars) out += " " + v;
  out += "\n";
  for (size_t i = 0; i < ideal.generators.size(); ++i) out += render_generator(ideal, i) + "\n";
  return out;
}

}  // namespace binlct
