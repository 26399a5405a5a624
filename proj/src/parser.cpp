#include "aode/parser.hpp"

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "aode/error.hpp"

namespace aode::parse {

using arith::Rational;

namespace {

enum class Tok { num, name, imag, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::size_t pos = 0;
  Rational num;
  std::string text;
};

[[noreturn]] void fail_at(Errc code, std::size_t pos, const std::string& msg) {
  throw Error(code, msg, pos);
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '~';
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      mpz_class numerator(std::string(s.substr(start, i - start)));
      mpz_class denominator(1);
      // A '/' glues into a fraction literal except right after '^', where the
      // number is an exponent and the '/' is the division operator.
      if (i + 1 < s.size() && s[i] == '/' &&
          std::isdigit(static_cast<unsigned char>(s[i + 1])) &&
          (out.empty() || out.back().kind != Tok::caret)) {
        std::size_t dstart = ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        denominator = mpz_class(std::string(s.substr(dstart, i - dstart)));
        if (denominator == 0) fail_at(Errc::syntax, dstart, "zero denominator");
      }
      out.push_back({Tok::num, start, Rational(numerator, denominator), {}});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      while (i < s.size() && ident_char(s[i])) ++i;
      while (i < s.size() && s[i] == '\'') ++i;  // derivative quotes
      std::string text(s.substr(start, i - start));
      out.push_back({text == "i" ? Tok::imag : Tok::name, start, Rational(0), text});
      continue;
    }
    Tok k;
    switch (ch) {
      case '+': k = Tok::plus; break;
      case '-': k = Tok::minus; break;
      case '*': k = Tok::star; break;
      case '/': k = Tok::slash; break;
      case '^': k = Tok::caret; break;
      case '(': k = Tok::lparen; break;
      case ')': k = Tok::rparen; break;
      default:
        fail_at(Errc::syntax, i, std::string("unrecognized character '") + ch + "'");
    }
    out.push_back({k, i, Rational(0), {}});
    ++i;
  }
  out.push_back({Tok::end, s.size(), Rational(0), {}});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, TablePtr table, const FieldContext& ctx)
      : toks_(std::move(toks)), table_(std::move(table)), ctx_(ctx) {}

  MultiPoly run() {
    MultiPoly p = expr();
    if (cur().kind != Tok::end)
      fail_at(Errc::syntax, cur().pos, "expected an operator or the end of the input");
    return p;
  }

 private:
  std::vector<Token> toks_;
  std::size_t at_ = 0;
  TablePtr table_;
  const FieldContext& ctx_;

  const Token& cur() const { return toks_[at_]; }
  const Token& peek(std::size_t d) const {
    std::size_t i = at_ + d;
    return toks_[i < toks_.size() ? i : toks_.size() - 1];
  }
  void advance() {
    if (at_ + 1 < toks_.size()) ++at_;
  }

  long expect_uint(long cap, const char* what) {
    if (cur().kind != Tok::num || !cur().num.is_integer())
      fail_at(Errc::syntax, cur().pos, std::string("expected an integer ") + what);
    mpz_class v = cur().num.numerator();
    if (v < 0 || v > cap)
      fail_at(Errc::unsupported, cur().pos, std::string(what) + " out of range");
    advance();
    return v.get_si();
  }

  MultiPoly expr() {
    bool neg = false;
    if (cur().kind == Tok::minus) {
      neg = true;
      advance();
    }
    MultiPoly p = term();
    if (neg) p = p.times_int(-1);
    while (cur().kind == Tok::plus || cur().kind == Tok::minus) {
      bool sub = cur().kind == Tok::minus;
      advance();
      MultiPoly q = term();
      p = sub ? p - q : p + q;
    }
    return p;
  }

  MultiPoly term() {
    MultiPoly p = factor();
    while (cur().kind == Tok::star || cur().kind == Tok::slash) {
      bool div = cur().kind == Tok::slash;
      std::size_t pos = cur().pos;
      advance();
      MultiPoly q = factor();
      if (div) {
        if (!q.is_constant())
          fail_at(Errc::syntax, pos, "division needs a constant divisor");
        arith::FieldElement d = q.constant_coeff();
        if (d.is_zero()) fail_at(Errc::division_by_zero, pos, "division by zero");
        p = p.scaled(d.inv());
      } else {
        p = p * q;
      }
    }
    return p;
  }

  MultiPoly factor() {
    MultiPoly b = base();
    if (cur().kind == Tok::caret) {
      advance();
      long e = expect_uint(1024, "exponent");
      b = b.pow(static_cast<std::uint32_t>(e));
    }
    return b;
  }

  MultiPoly base() {
    switch (cur().kind) {
      case Tok::lparen: {
        advance();
        MultiPoly p = expr();
        if (cur().kind != Tok::rparen)
          fail_at(Errc::syntax, cur().pos, "expected ')'");
        advance();
        return p;
      }
      case Tok::num: {
        MultiPoly p(table_, ctx_.from_rational(cur().num));
        advance();
        return p;
      }
      case Tok::imag: {
        if (ctx_.kind != arith::FieldKind::gaussian)
          fail_at(Errc::usage, cur().pos,
                  "the imaginary unit needs the Gaussian field");
        MultiPoly p(table_, ctx_.imag_unit());
        advance();
        return p;
      }
      case Tok::name:
        return name_base();
      default:
        fail_at(Errc::syntax, cur().pos, "expected a value");
    }
  }

  MultiPoly name_base() {
    Token t = cur();
    advance();
    std::string nm = t.text;
    if (nm == "y" && cur().kind == Tok::caret && peek(1).kind == Tok::lparen) {
      advance();  // ^
      advance();  // (
      long j = expect_uint(512, "derivative order");
      if (cur().kind != Tok::rparen)
        fail_at(Errc::syntax, cur().pos, "expected ')'");
      advance();
      nm = diff::derivative_name(static_cast<int>(j));
    } else if (nm.size() > 1 && nm[0] == 'y' &&
               nm.find_first_not_of('\'', 1) == std::string::npos) {
      nm = diff::derivative_name(static_cast<int>(nm.size() - 1));
    }
    if (auto idx = table_->index_of(nm))
      return poly::mp_variable(table_, *idx, ctx_);
    if (ctx_.kind == arith::FieldKind::parametric) {
      if (auto pidx = ctx_.params->index_of(nm))
        return MultiPoly(table_, ctx_.param(*pidx));
    }
    fail_at(Errc::usage, t.pos, "unknown name '" + nm + "'");
  }
};

// Highest y-derivative mentioned anywhere in the token stream.
int scan_max_derivative(const std::vector<Token>& toks) {
  int maxj = 0;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    const Token& t = toks[i];
    if (t.kind != Tok::name) continue;
    if (t.text == "y" && i + 3 < toks.size() && toks[i + 1].kind == Tok::caret &&
        toks[i + 2].kind == Tok::lparen && toks[i + 3].kind == Tok::num &&
        toks[i + 3].num.is_integer()) {
      mpz_class v = toks[i + 3].num.numerator();
      if (v >= 0 && v <= 512 && v.get_si() > maxj) maxj = static_cast<int>(v.get_si());
      continue;
    }
    std::size_t quotes = 0;
    while (quotes < t.text.size() && t.text[t.text.size() - 1 - quotes] == '\'') ++quotes;
    if (t.text == "y" + std::string(quotes, '\''))
      maxj = std::max(maxj, static_cast<int>(quotes));
  }
  return maxj;
}

}  // namespace

MultiPoly parse_poly(std::string_view text, const TablePtr& table,
                     const FieldContext& ctx) {
  check(!text.empty(), Errc::syntax, "empty expression");
  return Parser(lex(text), table, ctx).run();
}

diff::DiffPoly parse_diffpoly(std::string_view text, const FieldContext& ctx) {
  check(!text.empty(), Errc::syntax, "empty expression");
  std::vector<Token> toks = lex(text);
  TablePtr table = diff::diff_table(scan_max_derivative(toks));
  MultiPoly p = Parser(std::move(toks), table, ctx).run();
  return diff::DiffPoly(std::move(p), ctx);
}

std::string render_diffpoly(const diff::DiffPoly& f) {
  return poly::render_multipoly(f.poly());
}

std::vector<TupleEntry> parse_tuple(std::string_view text, const FieldContext& ctx) {
  std::string_view s = text;
  auto trim = [](std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    return v;
  };
  s = trim(s);
  check(!s.empty(), Errc::syntax, "empty tuple");
  // Strip one pair of parentheses wrapping the whole tuple.
  if (s.front() == '(' && s.back() == ')') {
    int depth = 0;
    bool wraps = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') {
        --depth;
        if (depth == 0 && i + 1 != s.size()) {
          wraps = false;
          break;
        }
      }
    }
    if (wraps) s = trim(s.substr(1, s.size() - 2));
  }
  std::vector<std::string_view> pieces;
  std::size_t begin = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || (s[i] == ',' && depth == 0)) {
      pieces.push_back(trim(s.substr(begin, i - begin)));
      begin = i + 1;
      continue;
    }
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
  }

  auto placeholder_index = [](std::string_view v) -> std::optional<long> {
    if (v.size() < 3 || v[0] != 'c') return std::nullopt;
    if (v[1] != '_' && v[1] != '~') return std::nullopt;
    for (std::size_t i = 2; i < v.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(v[i]))) return std::nullopt;
    return std::stol(std::string(v.substr(2)));
  };

  TablePtr empty = poly::VarTable::make({});
  std::vector<TupleEntry> out;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    std::string_view piece = pieces[k];
    check(!piece.empty(), Errc::syntax, "empty tuple entry");
    bool is_param = ctx.kind == arith::FieldKind::parametric &&
                    ctx.params->index_of(piece).has_value();
    if (!is_param) {
      if (auto idx = placeholder_index(piece)) {
        check(*idx == static_cast<long>(k), Errc::usage,
              "tuple placeholder index must match its position");
        out.push_back(TupleEntry{std::nullopt});
        continue;
      }
    }
    MultiPoly p = Parser(lex(piece), empty, ctx).run();
    out.push_back(TupleEntry{p.is_zero() ? ctx.zero() : p.constant_coeff()});
  }
  return out;
}

}  // namespace aode::parse
