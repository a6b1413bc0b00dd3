#include "hornfix/parser.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hornfix {

namespace {

// ---------------------------------------------------------------------------
// Lexer

enum class Tok { Ident, Number, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourceSpan span;
};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$' ||
         c == '*' || c == '~' || c == '\'' || c == '@';
}

struct SyntaxError {
  Diagnostic diagnostic;
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0, line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '%') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Token tok;
    tok.span = {i, i, line, col};
    std::size_t len = 0;
    if (ident_start(c)) {
      tok.kind = Tok::Ident;
      while (i + len < text.size() && ident_char(text[i + len])) ++len;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      tok.kind = Tok::Number;
      while (i + len < text.size() && std::isdigit(static_cast<unsigned char>(text[i + len])))
        ++len;
    } else {
      tok.kind = Tok::Punct;
      std::string_view two = text.substr(i, 2);
      if (two == ":-" || two == "->" || two == "!=") {
        len = 2;
      } else if (std::string_view("()[]{},.:;=!&|/").find(c) != std::string_view::npos) {
        len = 1;
      } else {
        throw SyntaxError{{{i, i + 1, line, col},
                           DiagnosticCode::Syntax,
                           std::string("unexpected character '") + c + "'"}};
      }
    }
    tok.text = std::string(text.substr(i, len));
    tok.span.end = i + len;
    advance(len);
    out.push_back(std::move(tok));
  }
  Token end;
  end.kind = Tok::End;
  end.span = {text.size(), text.size(), line, col};
  out.push_back(end);
  return out;
}

// ---------------------------------------------------------------------------
// Shared cursor

class Cursor {
 public:
  explicit Cursor(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t k = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[k];
  }
  Token next() {
    Token t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool is(std::string_view punct, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == Tok::Punct && t.text == punct;
  }
  bool is_keyword(std::string_view kw, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == Tok::Ident && t.text == kw;
  }
  bool at_end() const { return peek().kind == Tok::End; }

  [[noreturn]] void fail(const std::string& message) const { fail_at(peek(), message); }
  [[noreturn]] static void fail_at(const Token& t, const std::string& message) {
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw SyntaxError{{t.span, DiagnosticCode::Syntax, message + ", found " + found}};
  }

  Token expect(std::string_view punct) {
    if (!is(punct)) fail("expected '" + std::string(punct) + "'");
    return next();
  }
  Token expect_ident(const std::string& what) {
    if (peek().kind != Tok::Ident) fail("expected " + what);
    return next();
  }
  Token expect_number(const std::string& what) {
    if (peek().kind != Tok::Number) fail("expected " + what);
    return next();
  }
  void expect_keyword(std::string_view kw) {
    if (!is_keyword(kw)) fail("expected '" + std::string(kw) + "'");
    next();
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::size_t to_size(const Token& t) {
  try {
    return static_cast<std::size_t>(std::stoull(t.text));
  } catch (const std::out_of_range&) {
    Cursor::fail_at(t, "number out of range");
  }
}

SourceSpan join(const SourceSpan& a, const SourceSpan& b) {
  SourceSpan s = a;
  s.end = b.end;
  return s;
}

// Literals are parsed with raw terms; variable/constant resolution happens
// once the enclosing binders are known.
struct RawTerm {
  std::string name;
  bool number = false;
};

struct RawLiteral {
  LiteralKind kind = LiteralKind::Positive;
  std::string relation;
  std::vector<RawTerm> args;
  std::vector<std::string> universal_vars;
  SourceSpan span;
};

RawTerm parse_term(Cursor& c) {
  const Token& t = c.peek();
  if (t.kind == Tok::Ident) return {c.next().text, false};
  if (t.kind == Tok::Number) return {c.next().text, true};
  c.fail("expected a term");
}

// atom := name ["(" [term ("," term)*] ")"]
RawLiteral parse_atom(Cursor& c) {
  Token name = c.expect_ident("a relation name");
  RawLiteral lit;
  lit.relation = name.text;
  lit.span = name.span;
  if (c.is("(")) {
    c.next();
    if (!c.is(")")) {
      lit.args.push_back(parse_term(c));
      while (c.is(",")) {
        c.next();
        lit.args.push_back(parse_term(c));
      }
    }
    lit.span = join(lit.span, c.expect(")").span);
  }
  return lit;
}

bool is_quantifier_keyword(const Cursor& c) {
  return (c.is_keyword("forall") || c.is_keyword("exists")) &&
         c.peek(1).kind == Tok::Ident;
}

// lit := "!" atom | "forall" var+ ":" atom | term ("="|"!=") term | atom
RawLiteral parse_literal(Cursor& c, bool allow_universal) {
  const Token start = c.peek();
  if (c.is("!")) {
    c.next();
    RawLiteral lit = parse_atom(c);
    lit.kind = LiteralKind::Negative;
    lit.span = join(start.span, lit.span);
    return lit;
  }
  if (allow_universal && c.is_keyword("forall") && !c.is("(", 1)) {
    c.next();
    std::vector<std::string> vars;
    while (c.peek().kind == Tok::Ident) vars.push_back(c.next().text);
    if (vars.empty()) c.fail("expected a quantified variable");
    c.expect(":");
    RawLiteral lit = parse_atom(c);
    lit.kind = LiteralKind::Universal;
    lit.universal_vars = std::move(vars);
    lit.span = join(start.span, lit.span);
    return lit;
  }
  const bool term_first = start.kind == Tok::Number ||
                          (start.kind == Tok::Ident && (c.is("=", 1) || c.is("!=", 1)));
  if (term_first) {
    RawTerm lhs = parse_term(c);
    RawLiteral lit;
    if (c.is("=")) {
      lit.kind = LiteralKind::Equality;
    } else if (c.is("!=")) {
      lit.kind = LiteralKind::Inequality;
    } else {
      c.fail("expected '=' or '!='");
    }
    c.next();
    RawTerm rhs = parse_term(c);
    lit.args = {lhs, rhs};
    lit.span = join(start.span, start.span);
    lit.span.end = start.span.end;
    return lit;
  }
  return parse_atom(c);
}

template <typename IsVar>
Term resolve(const RawTerm& raw, IsVar&& is_var) {
  if (!raw.number && is_var(raw.name)) return Term::var(raw.name);
  return Term::constant(raw.name);
}

template <typename IsVar>
Literal resolve(const RawLiteral& raw, IsVar&& is_var) {
  Literal lit;
  lit.kind = raw.kind;
  lit.relation = raw.relation;
  lit.universal_vars = raw.universal_vars;
  lit.span = raw.span;
  const std::set<std::string> bound(raw.universal_vars.begin(), raw.universal_vars.end());
  for (const auto& a : raw.args)
    lit.args.push_back(resolve(a, [&](const std::string& n) {
      return bound.count(n) != 0 || is_var(n);
    }));
  return lit;
}

template <typename T, typename F>
ParseResult<T> guarded(std::string_view text, F&& body) {
  ParseResult<T> result;
  try {
    Cursor c(lex(text));
    body(c, result);
  } catch (const SyntaxError& e) {
    result.value.reset();
    result.diagnostics = {e.diagnostic};
  }
  return result;
}

}  // namespace

// ---------------------------------------------------------------------------
// Programs

ParseResult<Program> parse_program(std::string_view text) {
  return guarded<Program>(text, [](Cursor& c, ParseResult<Program>& result) {
    struct RawRule {
      RawLiteral head;
      std::vector<RawLiteral> body;
      SourceSpan span;
    };
    std::vector<RawRule> raw_rules;
    std::set<std::string> constants;
    std::vector<std::pair<Token, std::size_t>> declared;

    while (!c.at_end()) {
      if (c.is_keyword("const") && !c.is("(", 1) && !c.is(":-", 1) && !c.is(".", 1)) {
        c.next();
        if (c.is(".")) c.fail("expected a constant name");
        while (!c.is(".")) {
          const Token& t = c.peek();
          if (t.kind != Tok::Ident && t.kind != Tok::Number) c.fail("expected a constant name");
          constants.insert(c.next().text);
        }
        c.next();
        continue;
      }
      if (c.is_keyword("rel") && !c.is("(", 1) && !c.is(":-", 1) && !c.is(".", 1)) {
        c.next();
        if (c.is(".")) c.fail("expected a relation declaration");
        while (!c.is(".")) {
          Token name = c.expect_ident("a relation name");
          c.expect("/");
          declared.emplace_back(name, to_size(c.expect_number("an arity")));
        }
        c.next();
        continue;
      }
      RawRule rule;
      rule.head = parse_atom(c);
      rule.span = rule.head.span;
      if (c.is(":-")) {
        c.next();
        if (!c.is(".")) {
          rule.body.push_back(parse_literal(c, true));
          while (c.is(",")) {
            c.next();
            rule.body.push_back(parse_literal(c, true));
          }
        }
      }
      rule.span = join(rule.span, c.expect(".").span);
      raw_rules.push_back(std::move(rule));
    }

    Program program;
    std::vector<Diagnostic> diags;
    for (const auto& [tok, arity] : declared) {
      auto [it, inserted] = program.vocabulary.relations.emplace(tok.text, arity);
      if (!inserted && it->second != arity)
        diags.push_back({tok.span, DiagnosticCode::ArityMismatch,
                         "relation " + tok.text + " declared with two arities"});
    }
    auto is_var = [&](const std::string& n) { return constants.count(n) == 0; };
    auto note = [&](const RawLiteral& lit) {
      if (!lit.relation.empty())
        program.vocabulary.relations.emplace(lit.relation, lit.args.size());
      for (const auto& a : lit.args)
        if (a.number) constants.insert(a.name);
    };
    for (const auto& r : raw_rules) {
      note(r.head);
      for (const auto& l : r.body) note(l);
    }
    program.vocabulary.constants = constants;
    for (const auto& r : raw_rules) {
      Rule rule;
      rule.head = r.head.relation;
      rule.span = r.span;
      for (const auto& a : r.head.args) rule.head_args.push_back(resolve(a, is_var));
      for (const auto& l : r.body) rule.body.push_back(resolve(l, is_var));
      program.rules.push_back(std::move(rule));
    }
    auto more = validate(program);
    diags.insert(diags.end(), more.begin(), more.end());
    result.diagnostics = std::move(diags);
    if (result.diagnostics.empty()) result.value = std::move(program);
  });
}

// ---------------------------------------------------------------------------
// Horn sentences

ParseResult<HornSentence> parse_horn(std::string_view text) {
  return guarded<HornSentence>(text, [](Cursor& c, ParseResult<HornSentence>& result) {
    HornSentence sentence;
    std::vector<SourceSpan> so_spans;
    while (true) {
      if (c.is_keyword("exists") && c.peek(1).kind == Tok::Ident && c.is("/", 2)) {
        c.next();
        Token name = c.next();
        c.next();
        sentence.so_vars.push_back({name.text, to_size(c.expect_number("an arity"))});
        continue;
      }
      if (c.is_keyword("forall") && c.peek(1).kind == Tok::Ident && c.is("/", 2)) {
        Token kw = c.next();
        Token name = c.next();
        result.diagnostics.push_back(
            {join(kw.span, name.span), DiagnosticCode::NonExistentialPrefix,
             "universal second-order quantifier over " + name.text +
                 "; only existential prefixes are supported"});
        return;
      }
      break;
    }
    if (c.is_keyword("forall")) {
      c.next();
      while (c.peek().kind == Tok::Ident) sentence.fo_vars.push_back(c.next().text);
    }
    c.expect("(");

    struct RawClause {
      std::vector<RawLiteral> premises;
      std::optional<RawLiteral> head;
      SourceSpan span;
    };
    std::vector<RawClause> raw;
    if (!c.is(")")) {
      while (true) {
        RawClause clause;
        clause.span = c.peek().span;
        if (!c.is("->")) {
          clause.premises.push_back(parse_literal(c, true));
          while (c.is("&")) {
            c.next();
            clause.premises.push_back(parse_literal(c, true));
          }
        }
        c.expect("->");
        if (c.is_keyword("false") && !c.is("(", 1)) {
          clause.span = join(clause.span, c.next().span);
        } else {
          clause.head = parse_atom(c);
          clause.span = join(clause.span, clause.head->span);
        }
        raw.push_back(std::move(clause));
        if (!c.is(";")) break;
        c.next();
      }
    }
    c.expect(")");
    if (!c.at_end()) c.fail("expected end of input");

    const std::set<std::string> fo(sentence.fo_vars.begin(), sentence.fo_vars.end());
    auto is_var = [&](const std::string& n) { return fo.count(n) != 0; };
    for (const auto& rc : raw) {
      HornClause clause;
      clause.span = rc.span;
      for (const auto& p : rc.premises) {
        Literal lit = resolve(p, is_var);
        const bool so = sentence.find_so_var(lit.relation) != nullptr;
        if (so && (lit.kind == LiteralKind::Positive || lit.kind == LiteralKind::Universal))
          clause.alphas.push_back(std::move(lit));
        else
          clause.betas.push_back(std::move(lit));
      }
      if (rc.head) clause.head = resolve(*rc.head, is_var);
      sentence.clauses.push_back(std::move(clause));
    }
    result.diagnostics = validate(sentence);
    if (result.diagnostics.empty()) result.value = std::move(sentence);
  });
}

// ---------------------------------------------------------------------------
// Least fixed-point formulas

ParseResult<LfpFormula> parse_lfp(std::string_view text) {
  return guarded<LfpFormula>(text, [](Cursor& c, ParseResult<LfpFormula>& result) {
    LfpFormula f;
    c.expect_keyword("exists");
    f.exist_var = c.expect_ident("the existential variable").text;
    c.expect("[");
    c.expect_keyword("lfp");
    std::vector<std::string> names;
    while (c.peek().kind == Tok::Ident) names.push_back(c.next().text);
    if (c.is(":")) {
      if (names.size() != 1) c.fail("expected ',' before the fixpoint relation");
      f.lfp_relation = names.front();
    } else {
      c.expect(",");
      f.lfp_vars = std::move(names);
      f.lfp_relation = c.expect_ident("the fixpoint relation").text;
    }
    c.expect(":");
    while (is_quantifier_keyword(c)) {
      Quantifier q = c.next().text == "exists" ? Quantifier::Exists : Quantifier::Forall;
      f.prefix.push_back({q, c.next().text});
    }
    c.expect("(");
    std::vector<std::vector<RawLiteral>> raw;
    auto dnf_literal = [&]() {
      if (is_quantifier_keyword(c) || c.is("(")) {
        const Token& t = c.peek();
        throw SyntaxError{{t.span, DiagnosticCode::NotDNF,
                           "matrix must be a quantifier prefix followed by a DNF"}};
      }
      return parse_literal(c, false);
    };
    if (!c.is(")")) {
      while (true) {
        std::vector<RawLiteral> conj{dnf_literal()};
        while (c.is("&")) {
          c.next();
          conj.push_back(dnf_literal());
        }
        raw.push_back(std::move(conj));
        if (!c.is("|")) break;
        c.next();
      }
    }
    if (!c.is(")")) {
      if (is_quantifier_keyword(c) || c.is("("))
        throw SyntaxError{{c.peek().span, DiagnosticCode::NotDNF,
                           "matrix must be a quantifier prefix followed by a DNF"}};
      c.fail("expected ')'");
    }
    c.next();
    c.expect("]");
    c.expect("(");
    std::vector<RawTerm> tuple;
    if (!c.is(")")) {
      tuple.push_back(parse_term(c));
      while (c.is(",")) {
        c.next();
        tuple.push_back(parse_term(c));
      }
    }
    c.expect(")");
    if (!c.at_end()) c.fail("expected end of input");

    std::set<std::string> vars(f.lfp_vars.begin(), f.lfp_vars.end());
    for (const auto& q : f.prefix) vars.insert(q.var);
    vars.insert(f.exist_var);
    auto is_var = [&](const std::string& n) { return vars.count(n) != 0; };
    for (const auto& conj : raw) {
      std::vector<Literal> clause;
      for (const auto& l : conj) clause.push_back(resolve(l, is_var));
      f.clauses.push_back(std::move(clause));
    }
    for (const auto& t : tuple)
      f.fixpoint_tuple.push_back(
          resolve(t, [&](const std::string& n) { return n == f.exist_var; }));
    result.diagnostics = validate(f);
    if (result.diagnostics.empty()) result.value = std::move(f);
  });
}

// ---------------------------------------------------------------------------
// Structures

ParseResult<Structure> parse_structure(std::string_view text) {
  return guarded<Structure>(text, [](Cursor& c, ParseResult<Structure>& result) {
    Structure s;
    std::vector<Diagnostic> diags;
    c.expect_keyword("structure");
    c.expect("{");
    c.expect_keyword("size");
    Token size_tok = c.expect_number("the domain size");
    s.size = to_size(size_tok);
    if (s.size == 0)
      diags.push_back({size_tok.span, DiagnosticCode::EmptyDomain,
                       "structures must have at least one element"});
    while (!c.is("}")) {
      if (c.is_keyword("const")) {
        c.next();
        const Token& nt = c.peek();
        if (nt.kind != Tok::Ident && nt.kind != Tok::Number) c.fail("expected a constant name");
        Token name = c.next();
        c.expect("=");
        Token value = c.expect_number("an element");
        std::size_t e = to_size(value);
        if (e >= s.size)
          diags.push_back({value.span, DiagnosticCode::ElementOutOfRange,
                           "constant " + name.text + " outside the domain"});
        auto it = s.constants.find(name.text);
        if (it != s.constants.end() && it->second != e)
          diags.push_back({name.span, DiagnosticCode::DuplicateDeclaration,
                           "constant " + name.text + " bound twice"});
        s.set_constant(name.text, static_cast<Element>(e));
        continue;
      }
      if (c.is_keyword("rel")) {
        c.next();
        Token name = c.expect_ident("a relation name");
        c.expect("/");
        std::size_t arity = to_size(c.expect_number("an arity"));
        auto existing = s.relations.find(name.text);
        if (existing != s.relations.end() && existing->second.arity() != arity) {
          diags.push_back({name.span, DiagnosticCode::ArityMismatch,
                           "relation " + name.text + " declared with two arities"});
        }
        Relation rel = existing != s.relations.end() && existing->second.arity() == arity
                           ? existing->second
                           : Relation(arity);
        c.expect("{");
        while (c.is("(")) {
          Token open = c.next();
          Tuple t;
          bool bad = false;
          if (!c.is(")")) {
            while (true) {
              Token num = c.expect_number("an element");
              std::size_t e = to_size(num);
              if (e >= s.size) {
                diags.push_back({num.span, DiagnosticCode::ElementOutOfRange,
                                 "element " + num.text + " outside the domain"});
                bad = true;
              }
              t.push_back(static_cast<Element>(e));
              if (!c.is(",")) break;
              c.next();
            }
          }
          Token close = c.expect(")");
          if (t.size() != arity) {
            diags.push_back({join(open.span, close.span), DiagnosticCode::ArityMismatch,
                             "tuple length differs from arity of " + name.text});
            bad = true;
          }
          if (!bad) rel.insert(std::move(t));
        }
        c.expect("}");
        s.set_relation(name.text, std::move(rel));
        continue;
      }
      c.fail("expected 'const', 'rel' or '}'");
    }
    c.next();
    if (!c.at_end()) c.fail("expected end of input");
    for (const auto& name : s.vocabulary.constants)
      if (s.vocabulary.has_relation(name))
        diags.push_back({size_tok.span, DiagnosticCode::NameClash,
                         "symbol " + name + " is both a relation and a constant"});
    result.diagnostics = std::move(diags);
    if (result.diagnostics.empty()) result.value = std::move(s);
  });
}

// ---------------------------------------------------------------------------
// Printing

namespace {

void print_args(std::ostream& os, const std::vector<Term>& args) {
  os << "(";
  for (std::size_t i = 0; i < args.size(); ++i) os << (i ? "," : "") << args[i].name;
  os << ")";
}

void print_literal(std::ostream& os, const Literal& lit) {
  switch (lit.kind) {
    case LiteralKind::Positive:
      os << lit.relation;
      print_args(os, lit.args);
      break;
    case LiteralKind::Negative:
      os << "!" << lit.relation;
      print_args(os, lit.args);
      break;
    case LiteralKind::Equality:
      os << lit.args.at(0).name << " = " << lit.args.at(1).name;
      break;
    case LiteralKind::Inequality:
      os << lit.args.at(0).name << " != " << lit.args.at(1).name;
      break;
    case LiteralKind::Universal:
      os << "forall";
      for (const auto& v : lit.universal_vars) os << " " << v;
      os << ": " << lit.relation;
      print_args(os, lit.args);
      break;
  }
}

void print_rule(std::ostream& os, const Rule& rule) {
  os << rule.head;
  print_args(os, rule.head_args);
  if (!rule.body.empty()) {
    os << " :- ";
    for (std::size_t i = 0; i < rule.body.size(); ++i) {
      if (i) os << ", ";
      print_literal(os, rule.body[i]);
    }
  }
  os << ".";
}

void print_conjunction(std::ostream& os, const std::vector<Literal>& lits,
                       const char* sep) {
  for (std::size_t i = 0; i < lits.size(); ++i) {
    if (i) os << sep;
    print_literal(os, lits[i]);
  }
}

}  // namespace

std::string print(const Literal& literal) {
  std::ostringstream os;
  print_literal(os, literal);
  return os.str();
}

std::string print(const Rule& rule) {
  std::ostringstream os;
  print_rule(os, rule);
  return os.str();
}

std::string print(const Program& program) {
  std::ostringstream os;
  if (!program.vocabulary.constants.empty()) {
    os << "const";
    for (const auto& c : program.vocabulary.constants) os << " " << c;
    os << ".\n";
  }
  auto ext = program.extensional();
  if (!ext.empty()) {
    os << "rel";
    for (const auto& r : ext) os << " " << r << "/" << program.vocabulary.relations.at(r);
    os << ".\n";
  }
  for (const auto& rule : program.rules) {
    print_rule(os, rule);
    os << "\n";
  }
  return os.str();
}

std::string print(const HornSentence& sentence) {
  std::ostringstream os;
  for (const auto& v : sentence.so_vars) os << "exists " << v.name << "/" << v.arity << " ";
  if (!sentence.fo_vars.empty()) {
    os << "forall";
    for (const auto& v : sentence.fo_vars) os << " " << v;
    os << " ";
  }
  os << "(";
  for (std::size_t i = 0; i < sentence.clauses.size(); ++i) {
    const auto& clause = sentence.clauses[i];
    if (i) os << " ; ";
    std::vector<Literal> premises = clause.alphas;
    premises.insert(premises.end(), clause.betas.begin(), clause.betas.end());
    print_conjunction(os, premises, " & ");
    os << (premises.empty() ? "-> " : " -> ");
    if (clause.head)
      print_literal(os, *clause.head);
    else
      os << "false";
  }
  os << ")";
  return os.str();
}

std::string print(const LfpFormula& f) {
  std::ostringstream os;
  os << "exists " << f.exist_var << " [lfp ";
  for (const auto& z : f.lfp_vars) os << z << " ";
  if (!f.lfp_vars.empty()) os.seekp(-1, std::ios_base::cur), os << ", ";
  os << f.lfp_relation << ": ";
  for (const auto& q : f.prefix)
    os << (q.quantifier == Quantifier::Exists ? "exists " : "forall ") << q.var << " ";
  os << "(";
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    if (i) os << " | ";
    print_conjunction(os, f.clauses[i], " & ");
  }
  os << ")] ";
  print_args(os, f.fixpoint_tuple);
  return os.str();
}

std::string print(const SimLfpSystem& system) {
  std::ostringstream os;
  for (const auto& d : system.definitions) {
    os << d.relation << "(";
    for (std::size_t i = 0; i < d.args.size(); ++i) os << (i ? "," : "") << d.args[i];
    os << ") := ";
    if (d.disjuncts.empty()) os << "false";
    for (std::size_t i = 0; i < d.disjuncts.size(); ++i) {
      const auto& dj = d.disjuncts[i];
      if (i) os << " | ";
      if (!dj.exists_vars.empty()) {
        os << "exists";
        for (const auto& v : dj.exists_vars) os << " " << v;
        os << " ";
      }
      os << "(";
      if (dj.literals.empty()) os << "true";
      print_conjunction(os, dj.literals, " & ");
      os << ")";
    }
    os << ";\n";
  }
  os << "goal " << system.goal_relation;
  print_args(os, system.goal_args);
  os << "\n";
  return os.str();
}

std::string print(const Relation& relation) {
  std::ostringstream os;
  os << "{";
  for (const auto& t : relation) {
    os << " (";
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
    os << ")";
  }
  os << " }";
  return os.str();
}

std::string print(const Structure& s) {
  std::ostringstream os;
  os << "structure {\n  size " << s.size << "\n";
  for (const auto& [name, e] : s.constants) os << "  const " << name << " = " << e << "\n";
  for (const auto& [name, rel] : s.relations)
    os << "  rel " << name << "/" << rel.arity() << " " << print(rel) << "\n";
  os << "}\n";
  return os.str();
}

}  // namespace hornfix
