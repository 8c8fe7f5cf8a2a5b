#include "ccst/parse.hpp"

#include <cctype>
#include <sstream>

namespace ccst {

namespace {

struct Token {
  enum Kind { Ident, Quote, Dot, Plus, Bar, Backslash, LBrace, RBrace, LBracket, RBracket,
              Arrow, LParen, RParen, Semi, Eq, Comma, At, Zero, End } kind;
  std::string text;
  int line, col;
};

struct Lexer {
  const std::string& src;
  size_t pos = 0;
  int line = 1, col = 1;

  explicit Lexer(const std::string& s) : src(s) {}

  void advance() {
    if (pos < src.size() && src[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  void skip_ws() {
    while (pos < src.size()) {
      char c = src[pos];
      if (c == '#') {
        while (pos < src.size() && src[pos] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  Token next() {
    skip_ws();
    int l = line, c = col;
    if (pos >= src.size()) return {Token::End, "", l, c};
    char ch = src[pos];
    auto one = [&](Token::Kind k) {
      advance();
      return Token{k, std::string(1, ch), l, c};
    };
    switch (ch) {
      case '\'': return one(Token::Quote);
      case '.': return one(Token::Dot);
      case '+': return one(Token::Plus);
      case '|': return one(Token::Bar);
      case '\\': return one(Token::Backslash);
      case '{': return one(Token::LBrace);
      case '}': return one(Token::RBrace);
      case '[': return one(Token::LBracket);
      case ']': return one(Token::RBracket);
      case '(': return one(Token::LParen);
      case ')': return one(Token::RParen);
      case ';': return one(Token::Semi);
      case '=': return one(Token::Eq);
      case ',': return one(Token::Comma);
      case '@': return one(Token::At);
      case '0': advance(); return {Token::Zero, "0", l, c};
      default: break;
    }
    if (ch == '-' && pos + 1 < src.size() && src[pos + 1] == '>') {
      advance();
      advance();
      return {Token::Arrow, "->", l, c};
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::string id;
      while (pos < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_')) {
        id += src[pos];
        advance();
      }
      return {Token::Ident, id, l, c};
    }
    throw ParseError(std::string("unexpected character '") + ch + "'", l, c);
  }
};

struct Parser {
  Lexer lex;
  Token tok;

  explicit Parser(const std::string& src) : lex(src) { tok = lex.next(); }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, tok.line, tok.col); }

  void eat(Token::Kind k, const char* what) {
    if (tok.kind != k) fail(std::string("expected ") + what + ", found '" + tok.text + "'");
    tok = lex.next();
  }

  bool peek_is(Token::Kind k) const { return tok.kind == k; }

  std::string ident(const char* what) {
    if (tok.kind != Token::Ident) fail(std::string("expected ") + what);
    std::string s = tok.text;
    tok = lex.next();
    return s;
  }

  // An action token: tau, t, 'name, or name.  The caller has established
  // that a prefix starts here.
  ActionLabel action() {
    if (tok.kind == Token::Quote) {
      tok = lex.next();
      std::string n = ident("name after '");
      if (n == "tau" || n == "t") fail("'" + n + "' is reserved and cannot be a name");
      return ActionLabel::mk_coname(n);
    }
    std::string n = ident("action");
    if (n == "tau") return ActionLabel::tau();
    if (n == "t") return ActionLabel::timeout();
    return ActionLabel::mk_name(n);
  }

  // Grammar (precedence low to high):
  //   proc     := sum ('|' sum)*                      parallel, left assoc
  //   sum      := prefix ('+' prefix)* | postfix      guarded choice
  //   prefix   := action ['@' tag] ['.' prefcont]     trailing action means .0
  //   prefcont := prefix | postfix
  //   postfix  := atom ('\' '{' names '}' | '[' renames ']')*
  //   atom     := '0' | IDENT | '(' proc ')'
  ProcessPtr proc() {
    ProcessPtr p = sum();
    while (peek_is(Token::Bar)) {
      eat(Token::Bar, "'|'");
      p = Process::parallel(p, sum());
    }
    return p;
  }

  bool starts_prefix() {
    if (tok.kind == Token::Quote) return true;
    if (tok.kind != Token::Ident) return false;
    if (tok.text == "tau" || tok.text == "t") return true;
    // An identifier is an action prefix only when followed by '.' or '@';
    // a bare identifier refers to a definition.
    size_t save_pos = lex.pos;
    int save_line = lex.line, save_col = lex.col;
    Token save_tok = tok;
    Token after = lex.next();
    lex.pos = save_pos;
    lex.line = save_line;
    lex.col = save_col;
    tok = save_tok;
    return after.kind == Token::Dot || after.kind == Token::At;
  }

  ProcessPtr sum() {
    if (!starts_prefix()) return postfix();
    std::vector<Prefix> branches;
    branches.push_back(prefix());
    while (peek_is(Token::Plus)) {
      eat(Token::Plus, "'+'");
      if (!starts_prefix()) fail("choice summand must be an action prefix");
      branches.push_back(prefix());
    }
    return Process::choice(std::move(branches));
  }

  Prefix prefix() {
    Prefix b;
    b.action = action();
    if (peek_is(Token::At)) {
      eat(Token::At, "'@'");
      b.tag = ident("tag");
    }
    if (peek_is(Token::Dot)) {
      eat(Token::Dot, "'.'");
      if (starts_prefix()) {
        b.continuation = Process::choice({prefix()});
      } else {
        b.continuation = postfix();
      }
    } else {
      b.continuation = Process::nil();
    }
    return b;
  }

  ProcessPtr postfix() {
    ProcessPtr p = atom();
    for (;;) {
      if (peek_is(Token::Backslash)) {
        eat(Token::Backslash, "'\\'");
        eat(Token::LBrace, "'{'");
        std::set<std::string> names;
        if (!peek_is(Token::RBrace)) {
          names.insert(ident("name"));
          while (peek_is(Token::Comma)) {
            eat(Token::Comma, "','");
            names.insert(ident("name"));
          }
        }
        eat(Token::RBrace, "'}'");
        p = Process::restrict(p, std::move(names));
      } else if (peek_is(Token::LBracket)) {
        eat(Token::LBracket, "'['");
        std::map<std::string, std::string> f;
        if (!peek_is(Token::RBracket)) {
          for (;;) {
            std::string from = ident("name");
            eat(Token::Arrow, "'->'");
            std::string to = ident("name");
            f[from] = to;
            if (!peek_is(Token::Comma)) break;
            eat(Token::Comma, "','");
          }
        }
        eat(Token::RBracket, "']'");
        p = Process::relabelling(p, std::move(f));
      } else {
        return p;
      }
    }
  }

  ProcessPtr atom() {
    if (peek_is(Token::Zero)) {
      eat(Token::Zero, "'0'");
      return Process::nil();
    }
    if (peek_is(Token::LParen)) {
      eat(Token::LParen, "'('");
      ProcessPtr p = proc();
      eat(Token::RParen, "')'");
      return p;
    }
    if (peek_is(Token::Ident)) {
      std::string name = tok.text;
      if (name == "tau" || name == "t")
        fail("'" + name + "' is reserved; a bare action needs a continuation ('" + name + ".0')");
      tok = lex.next();
      return Process::identifier(name);
    }
    fail("expected a process");
  }

  Model model() {
    Model m;
    while (!peek_is(Token::End)) {
      std::string name = ident("definition name or 'signals'");
      if (name == "signals") {
        m.defs.signals.insert(ident("signal name"));
        while (peek_is(Token::Comma)) {
          eat(Token::Comma, "','");
          m.defs.signals.insert(ident("signal name"));
        }
        eat(Token::Semi, "';'");
        continue;
      }
      eat(Token::Eq, "'='");
      ProcessPtr body = proc();
      eat(Token::Semi, "';'");
      if (name == "main") {
        if (m.root) fail("duplicate 'main'");
        m.root = body;
      } else {
        if (m.defs.defs.count(name)) fail("duplicate definition of '" + name + "'");
        m.defs.defs[name] = body;
      }
    }
    if (!m.root) throw ParseError("model has no 'main = P;' entry", lex.line, lex.col);
    return m;
  }
};

}  // namespace

Model parse_model(const std::string& source) {
  Parser p(source);
  return p.model();
}

ProcessPtr parse_process(const std::string& source) {
  Parser p(source);
  ProcessPtr proc = p.proc();
  if (!p.peek_is(Token::End)) p.fail("trailing input after process");
  return proc;
}

std::string print_model(const Model& m) {
  std::ostringstream os;
  if (!m.defs.signals.empty()) {
    os << "signals ";
    bool first = true;
    for (const auto& s : m.defs.signals) {
      if (!first) os << ", ";
      first = false;
      os << s;
    }
    os << ";\n";
  }
  for (const auto& [name, body] : m.defs.defs) os << name << " = " << pretty_print(body) << ";\n";
  os << "main = " << pretty_print(m.root) << ";\n";
  return os.str();
}

}  // namespace ccst
