#include "ginv/dsl.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

namespace ginv {

namespace {

enum class Tok {
  ident,    // letters: omega, tag, Q, G, R, kappa, roots, poles, pi, s, i
  integer,  // digit run
  eq,
  semi,
  star,
  caret,
  slash,
  plus,
  minus,
  lparen,
  rparen,
  lbracket,
  rbracket,
  comma,
  colon,
  dotdot,
  end,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::end) return "end of input";
  return "'" + t.text + "'";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      const int line = line_, col = col_;
      if (pos_ >= text_.size()) {
        out.push_back({Tok::end, "", line, col});
        return out;
      }
      const char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c))) {
        std::string word;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
          word.push_back(text_[pos_]);
          advance();
        }
        out.push_back({Tok::ident, std::move(word), line, col});
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          digits.push_back(text_[pos_]);
          advance();
        }
        out.push_back({Tok::integer, std::move(digits), line, col});
        continue;
      }
      if (c == '.' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '.') {
        advance();
        advance();
        out.push_back({Tok::dotdot, "..", line, col});
        continue;
      }
      Tok kind;
      switch (c) {
        case '=': kind = Tok::eq; break;
        case ';': kind = Tok::semi; break;
        case '*': kind = Tok::star; break;
        case '^': kind = Tok::caret; break;
        case '/': kind = Tok::slash; break;
        case '+': kind = Tok::plus; break;
        case '-': kind = Tok::minus; break;
        case '(': kind = Tok::lparen; break;
        case ')': kind = Tok::rparen; break;
        case '[': kind = Tok::lbracket; break;
        case ']': kind = Tok::rbracket; break;
        case ',': kind = Tok::comma; break;
        case ':': kind = Tok::colon; break;
        default:
          throw ParseError(line, col, "a token", std::string("'") + c + "'");
      }
      out.push_back({kind, std::string(1, c), line, col});
      advance();
    }
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      advance();
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(Lexer(text).run()) {}

  DecoratedGamma parse_file() {
    expect_keyword("omega");
    expect(Tok::eq, "'='");
    UnitPhase omega = parse_phase();
    expect(Tok::semi, "';'");
    expect_keyword("Q");
    expect(Tok::eq, "'='");
    PowerProduct q = parse_posreal();
    expect(Tok::semi, "';'");

    DecoratedGamma g;
    g.gamma.omega = std::move(omega);
    g.gamma.q = std::move(q);
    while (at_keyword("G")) {
      parse_factor(g.gamma);
      accept(Tok::semi);
    }
    if (at_keyword("R")) {
      g.rational = parse_decoration();
    }
    expect(Tok::end, "'G(', 'R:' or end of input");
    return g;
  }

  MoveTrace parse_script() {
    MoveTrace trace;
    if (peek().kind == Tok::end) return trace;
    while (true) {
      trace.moves.push_back(parse_move());
      if (!accept(Tok::comma)) break;
    }
    expect(Tok::end, "',' or end of script");
    return trace;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  const Token& take() { return tokens_[pos_++]; }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  const Token& expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) fail(what);
    return take();
  }

  bool at_keyword(const std::string& word) const {
    return peek().kind == Tok::ident && peek().text == word;
  }

  void expect_keyword(const std::string& word) {
    if (!at_keyword(word)) fail("'" + word + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    throw ParseError(t.line, t.column, expected, describe(t));
  }

  [[noreturn]] void fail_at(const Token& t, const std::string& message) const {
    throw ParseError(t.line, t.column, message, describe(t));
  }

  mpz_class parse_unsigned_integer() {
    const Token& t = expect(Tok::integer, "an integer");
    return mpz_class(t.text);
  }

  Rat parse_rat() {
    bool neg = false;
    if (accept(Tok::minus)) {
      neg = true;
    } else {
      accept(Tok::plus);
    }
    const Token& num_tok = peek();
    mpz_class num = parse_unsigned_integer();
    mpz_class den = 1;
    if (accept(Tok::slash)) {
      const Token& den_tok = peek();
      den = parse_unsigned_integer();
      if (den == 0) fail_at(den_tok, "a positive denominator");
    }
    (void)num_tok;
    if (neg) num = -num;
    return Rat(num, den);
  }

  // rat | rat "i" | rat ("+"|"-") rat "i"
  GaussianRat parse_gauss() {
    Rat first = parse_rat();
    if (at_keyword("i")) {
      ++pos_;
      return GaussianRat(Rat(0), first);
    }
    if (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const bool neg = take().kind == Tok::minus;
      Rat second = parse_rat();
      expect_keyword("i");
      return GaussianRat(std::move(first), neg ? -second : second);
    }
    return GaussianRat(std::move(first));
  }

  // posrat ["^" rat] | "pi" ["^" rat]
  PowerProduct parse_posreal_term() {
    if (at_keyword("pi")) {
      ++pos_;
      Rat e = accept(Tok::caret) ? parse_rat() : Rat(1);
      return PowerProduct::pi_power(e);
    }
    const Token& tok = peek();
    if (tok.kind != Tok::integer) fail("a positive number or 'pi'");
    Rat base = parse_rat();
    if (base.sign() <= 0) fail_at(tok, "a positive base");
    Rat e = accept(Tok::caret) ? parse_rat() : Rat(1);
    return PowerProduct::from_rational(base).pow(e);
  }

  PowerProduct parse_posreal() {
    PowerProduct p = parse_posreal_term();
    while (accept(Tok::star)) p *= parse_posreal_term();
    return p;
  }

  UnitPhase parse_phase() {
    expect_keyword("tag");
    PhaseTwist twist;
    while (accept(Tok::star)) {
      twist *= PhaseTwist(parse_posreal_term());
    }
    return UnitPhase("tag", twist);
  }

  void parse_factor(GammaData& g) {
    expect_keyword("G");
    expect(Tok::lparen, "'('");
    const Token& lambda_tok = peek();
    Rat lambda = parse_rat();
    if (lambda.sign() <= 0) fail_at(lambda_tok, "lambda must be positive");
    expect(Tok::star, "'*'");
    expect_keyword("s");
    bool neg;
    if (accept(Tok::plus)) {
      neg = false;
    } else if (accept(Tok::minus)) {
      neg = true;
    } else {
      fail("'+' or '-'");
    }
    const Token& mu_tok = peek();
    GaussianRat mu = parse_gauss();
    if (neg) mu = -mu;
    if (mu.re().sign() < 0) fail_at(mu_tok, "Re(mu) must be nonnegative");
    expect(Tok::rparen, "')'");
    g.lambdas.push_back(std::move(lambda));
    g.mus.push_back(std::move(mu));
  }

  std::vector<GaussianRat> parse_gauss_list() {
    expect(Tok::lbracket, "'['");
    std::vector<GaussianRat> out;
    if (!accept(Tok::rbracket)) {
      while (true) {
        out.push_back(parse_gauss());
        if (!accept(Tok::comma)) break;
      }
      expect(Tok::rbracket, "']'");
    }
    return out;
  }

  RationalFactor parse_decoration() {
    expect_keyword("R");
    expect(Tok::colon, "':'");
    expect_keyword("kappa");
    expect(Tok::eq, "'='");
    const int sign = accept(Tok::minus) ? -1 : 1;
    PowerProduct kappa = parse_posreal();
    expect(Tok::semi, "';'");
    expect_keyword("roots");
    expect(Tok::eq, "'='");
    std::vector<GaussianRat> roots = parse_gauss_list();
    expect(Tok::semi, "';'");
    expect_keyword("poles");
    expect(Tok::eq, "'='");
    std::vector<GaussianRat> poles = parse_gauss_list();
    return RationalFactor(sign, std::move(kappa), std::move(roots), std::move(poles));
  }

  std::size_t parse_index() {
    const Token& t = expect(Tok::integer, "a factor index");
    return static_cast<std::size_t>(mpz_class(t.text).get_ui());
  }

  unsigned parse_order() {
    const Token& t = expect(Tok::integer, "a multiplication order");
    return static_cast<unsigned>(mpz_class(t.text).get_ui());
  }

  Move parse_move() {
    const Token& name = peek();
    if (name.kind != Tok::ident) fail("'expand', 'contract', 'split' or 'merge'");
    ++pos_;
    expect(Tok::lparen, "'('");
    Move move;
    if (name.text == "expand") {
      move = ExpandMove{parse_index()};
    } else if (name.text == "contract") {
      move = ContractMove{parse_index()};
    } else if (name.text == "split") {
      const std::size_t j = parse_index();
      expect(Tok::comma, "','");
      move = SplitMove{j, parse_order()};
    } else if (name.text == "merge") {
      const std::size_t lo = parse_index();
      expect(Tok::dotdot, "'..'");
      const std::size_t hi = parse_index();
      expect(Tok::comma, "','");
      const unsigned m = parse_order();
      if (hi < lo || hi - lo + 1 != m) {
        fail_at(name, "a merge range j..k with k-j+1 = m");
      }
      MergeMove mv;
      mv.order = m;
      for (std::size_t j = lo; j <= hi; ++j) mv.indices.push_back(j);
      move = std::move(mv);
    } else {
      fail_at(name, "'expand', 'contract', 'split' or 'merge'");
    }
    expect(Tok::rparen, "')'");
    return move;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string print_factor(const Rat& lambda, const GaussianRat& mu) {
  // A leading '-' on the canonical gauss form moves out as the factor sign.
  std::string body = mu.str();
  char sign = '+';
  if (!body.empty() && body[0] == '-') {
    sign = '-';
    body = (-mu).str();
  }
  return "G(" + lambda.str() + "*s" + sign + body + ")";
}

std::string print_gauss_list(const std::vector<GaussianRat>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ", ";
    out += values[i].str();
  }
  return out + "]";
}

}  // namespace

ParseError::ParseError(int line, int column, std::string expected, std::string found)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": expected " + expected + ", found " + found),
      line_(line),
      column_(column),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

DecoratedGamma parse_decorated(std::string_view text) {
  Parser parser(text);
  DecoratedGamma g = parser.parse_file();
  g.gamma.validate();
  return g;
}

std::string print_decorated(const DecoratedGamma& g) {
  std::ostringstream os;
  os << "omega=" << g.gamma.omega.str() << "; Q=" << g.gamma.q.str() << ";";
  for (std::size_t j = 0; j < g.gamma.size(); ++j) {
    os << ' ' << print_factor(g.gamma.lambdas[j], g.gamma.mus[j]);
  }
  if (!g.rational.is_one()) {
    os << " R: kappa=" << (g.rational.sign() < 0 ? "-" : "") << g.rational.kappa().str()
       << "; roots=" << print_gauss_list(g.rational.roots())
       << "; poles=" << print_gauss_list(g.rational.poles());
  }
  return os.str();
}

MoveTrace parse_trace(std::string_view script) {
  Parser parser(script);
  return parser.parse_script();
}

std::string print_move(const Move& move) {
  return std::visit(
      [](const auto& m) -> std::string {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, ExpandMove>) {
          return "expand(" + std::to_string(m.index) + ")";
        } else if constexpr (std::is_same_v<T, ContractMove>) {
          return "contract(" + std::to_string(m.index) + ")";
        } else if constexpr (std::is_same_v<T, SplitMove>) {
          return "split(" + std::to_string(m.index) + "," + std::to_string(m.order) + ")";
        } else {
          std::vector<std::size_t> sorted = m.indices;
          std::sort(sorted.begin(), sorted.end());
          for (std::size_t i = 1; i < sorted.size(); ++i) {
            if (sorted[i] != sorted[i - 1] + 1) {
              throw std::invalid_argument(
                  "print_move: merge index set is not a contiguous range");
            }
          }
          return "merge(" + std::to_string(sorted.front()) + ".." +
                 std::to_string(sorted.back()) + "," + std::to_string(m.order) + ")";
        }
      },
      move);
}

std::string print_trace(const MoveTrace& trace) {
  std::string out;
  for (std::size_t i = 0; i < trace.moves.size(); ++i) {
    if (i != 0) out += ", ";
    out += print_move(trace.moves[i]);
  }
  return out;
}

}  // namespace ginv
