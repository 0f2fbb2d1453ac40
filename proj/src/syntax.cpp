/*
 * Copyright (c) 2026, The choreo authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "choreo/syntax.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace choreo::syntax {

std::string to_string(const Diagnostic& d) {
  std::ostringstream os;
  os << d.begin.line << ':' << d.begin.column << ": "
     << (d.severity == Diagnostic::Severity::kError ? "error" : "warning")
     << ": " << d.message;
  return os.str();
}

namespace {

enum class Tok { kName, kNat, kSym, kEof };

struct Token {
  Tok kind = Tok::kEof;
  std::string text;
  Location begin;
  Location end;
};

struct ParseError {
  Location begin;
  Location end;
  std::string message;
};

const std::set<std::string, std::less<>> kKeywords = {
    "def",  "main", "if",    "then", "else",  "call",
    "end",  "succ", "true",  "false", "left", "right"};

bool name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' ||
         c == '\'';
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_blank();
      Token t;
      t.begin = here();
      if (pos_ >= text_.size()) {
        t.kind = Tok::kEof;
        t.end = t.begin;
        out.push_back(t);
        return out;
      }
      char c = text_[pos_];
      if (name_start(c)) {
        t.kind = Tok::kName;
        while (pos_ < text_.size() && name_char(text_[pos_])) t.text += take();
      } else if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
        t.kind = Tok::kNat;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) {
          t.text += take();
        }
      } else {
        t.kind = Tok::kSym;
        static const char* kTwo[] = {"->", "==", "<="};
        bool matched = false;
        for (const char* two : kTwo) {
          if (text_.substr(pos_, 2) == two) {
            t.text = two;
            take();
            take();
            matched = true;
            break;
          }
        }
        if (!matched) {
          if (std::string_view(".;[](){},=").find(c) == std::string_view::npos) {
            Location b = here();
            take();
            throw ParseError{b, here(),
                             std::string("unexpected character '") + c + "'"};
          }
          t.text = std::string(1, take());
        }
      }
      t.end = here();
      out.push_back(std::move(t));
    }
  }

 private:
  Location here() const { return {line_, column_}; }

  char take() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) != 0) {
        take();
      } else if (c == '#' || text_.substr(pos_, 2) == "//") {
        while (pos_ < text_.size() && text_[pos_] != '\n') take();
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  SourceUnit program(std::vector<Diagnostic>& diagnostics) {
    SourceUnit unit;
    std::set<RecVar> names;
    while (is_keyword("def")) {
      Token at = next();
      Definition def;
      Token name = expect_name("procedure name");
      def.name = RecVar(name.text);
      expect_sym("(");
      def.pids.push_back(Pid(expect_name("process name").text));
      while (accept_sym(",")) {
        def.pids.push_back(Pid(expect_name("process name").text));
      }
      expect_sym(")");
      expect_sym("=");
      def.body = chor();
      if (!names.insert(def.name).second) {
        diagnostics.push_back({Diagnostic::Severity::kError, name.begin,
                               name.end,
                               "duplicate definition of " + name.text});
      }
      unit.definitions.push_back(std::move(def));
      (void)at;
    }
    expect_keyword("main");
    expect_sym("=");
    unit.main = chor();
    if (peek().kind != Tok::kEof) fail(peek(), "expected end of input");
    return unit;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& peek2() const {
    return tokens_[std::min(pos_ + 1, tokens_.size() - 1)];
  }
  Token next() {
    Token t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }

  [[noreturn]] void fail(const Token& t, std::string message) const {
    if (t.kind == Tok::kEof) {
      message += " (found end of input)";
    } else {
      message += " (found '" + t.text + "')";
    }
    throw ParseError{t.begin, t.end, std::move(message)};
  }

  bool is_sym(std::string_view s) const {
    return peek().kind == Tok::kSym && peek().text == s;
  }
  bool is_keyword(std::string_view s) const {
    return peek().kind == Tok::kName && peek().text == s;
  }
  bool accept_sym(std::string_view s) {
    if (!is_sym(s)) return false;
    next();
    return true;
  }
  void expect_sym(std::string_view s) {
    if (!accept_sym(s)) fail(peek(), "expected '" + std::string(s) + "'");
  }
  void expect_keyword(std::string_view s) {
    if (!is_keyword(s)) fail(peek(), "expected '" + std::string(s) + "'");
    next();
  }
  Token expect_name(const char* what) {
    if (peek().kind != Tok::kName || kKeywords.contains(peek().text)) {
      fail(peek(), std::string("expected ") + what);
    }
    return next();
  }

  cc::Choreography chor() {
    if (is_keyword("end")) {
      next();
      return cc::end();
    }
    if (is_keyword("call")) {
      next();
      return cc::call(RecVar(expect_name("procedure name").text));
    }
    if (is_keyword("if")) {
      next();
      Pid p(expect_name("process name").text);
      expect_sym(".");
      BExpr guard = bexpr();
      expect_keyword("then");
      expect_sym("{");
      auto then_branch = chor();
      expect_sym("}");
      expect_keyword("else");
      expect_sym("{");
      auto else_branch = chor();
      expect_sym("}");
      return cc::cond(p, std::move(guard), std::move(then_branch),
                      std::move(else_branch));
    }
    cc::Eta e = eta();
    expect_sym(";");
    return cc::prefix(std::move(e), chor());
  }

  cc::Eta eta() {
    Pid p(expect_name("process name, 'if', 'call' or 'end'").text);
    if (accept_sym("->")) {
      Pid q(expect_name("process name").text);
      expect_sym("[");
      const Token& l = peek();
      Label label;
      if (l.kind == Tok::kName && l.text == "left") {
        label = Label::kLeft;
      } else if (l.kind == Tok::kName && l.text == "right") {
        label = Label::kRight;
      } else {
        fail(l, "unknown label, expected 'left' or 'right'");
      }
      next();
      expect_sym("]");
      return cc::Sel{p, q, label};
    }
    expect_sym(".");
    Expr e = expr();
    expect_sym("->");
    Pid q(expect_name("process name").text);
    expect_sym(".");
    Var x(expect_name("variable name").text);
    return cc::Com{p, std::move(e), q, x};
  }

  Expr expr() {
    const Token& t = peek();
    if (t.kind == Tok::kNat) {
      Value v = 0;
      auto [ptr, ec] =
          std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
      if (ec != std::errc()) fail(t, "number out of range");
      next();
      return lit(v);
    }
    if (is_keyword("succ")) {
      next();
      expect_sym("(");
      Expr inner = expr();
      expect_sym(")");
      return succ(std::move(inner));
    }
    return var(Var(expect_name("expression").text));
  }

  BExpr bexpr() {
    if (is_keyword("true")) {
      next();
      return btrue();
    }
    if (is_keyword("false")) {
      next();
      return bfalse();
    }
    Expr lhs = expr();
    if (accept_sym("==")) return eq(std::move(lhs), expr());
    if (accept_sym("<=")) return le(std::move(lhs), expr());
    fail(peek(), "expected '==' or '<='");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

cc::Program SourceUnit::to_program() const {
  cc::Program p;
  for (const auto& def : definitions) {
    p.procedures.insert_or_assign(def.name, cc::Procedure{def.pids, def.body});
  }
  p.main = main;
  return p;
}

SourceUnit from_program(const cc::Program& p) {
  SourceUnit unit;
  for (const auto& [name, proc] : p.procedures) {
    unit.definitions.push_back({name, proc.pids, proc.body});
  }
  unit.main = p.main;
  return unit;
}

ParseResult parse_source(std::string_view text) {
  ParseResult result;
  try {
    Parser parser(Lexer(text).run());
    auto unit = parser.program(result.diagnostics);
    if (result.diagnostics.empty()) result.unit = std::move(unit);
  } catch (const ParseError& e) {
    result.diagnostics.push_back(
        {Diagnostic::Severity::kError, e.begin, e.end, e.message});
  }
  return result;
}

std::string render(const Expr& e) {
  return std::visit(
      Overloaded{
          [](const Literal& l) { return std::to_string(l.value); },
          [](const VarRef& v) { return v.name.str(); },
          [](const Succ& s) { return "succ(" + render(*s.operand) + ")"; },
      },
      e.node);
}

std::string render(const BExpr& b) {
  return std::visit(
      Overloaded{
          [](const BoolConst& c) {
            return std::string(c.value ? "true" : "false");
          },
          [](const Compare& c) {
            return render(c.lhs) + (c.op == CmpOp::kEq ? " == " : " <= ") +
                   render(c.rhs);
          },
      },
      b.node);
}

namespace {

std::string render_eta(const cc::Eta& eta) {
  return std::visit(
      Overloaded{
          [](const cc::Com& e) {
            return e.sender.str() + "." + render(e.expr) + " -> " +
                   e.receiver.str() + "." + e.var.str();
          },
          [](const cc::Sel& e) {
            return e.sender.str() + " -> " + e.receiver.str() + "[" +
                   std::string(to_string(e.label)) + "]";
          },
      },
      eta);
}

void render_chor(std::ostream& os, const cc::Choreography& c, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  std::visit(
      Overloaded{
          [&](const cc::Prefix& n) {
            os << pad << render_eta(n.eta) << ";\n";
            render_chor(os, *n.cont, indent);
          },
          [&](const cc::Cond& n) {
            os << pad << "if " << n.evaluator << "." << render(n.guard)
               << " then {\n";
            render_chor(os, *n.then_branch, indent + 2);
            os << pad << "} else {\n";
            render_chor(os, *n.else_branch, indent + 2);
            os << pad << "}\n";
          },
          [&](const cc::Call& n) { os << pad << "call " << n.name << "\n"; },
          // Runtime-only term; shown for inspection, not parseable.
          [&](const cc::RTCall& n) {
            os << pad << "<call " << n.name << " waiting for";
            for (const auto& p : n.pending) os << ' ' << p;
            os << "> {\n";
            render_chor(os, *n.body, indent + 2);
            os << pad << "}\n";
          },
          [&](const cc::End&) { os << pad << "end\n"; },
      },
      c.node);
}

std::string trim_newline(std::string s) {
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

}  // namespace

std::string render(const cc::Choreography& c) {
  std::ostringstream os;
  render_chor(os, c, 0);
  return trim_newline(os.str());
}

std::string render(const SourceUnit& unit) {
  std::ostringstream os;
  for (const auto& def : unit.definitions) {
    os << "def " << def.name << "(";
    for (std::size_t i = 0; i < def.pids.size(); ++i) {
      os << (i > 0 ? ", " : "") << def.pids[i];
    }
    os << ") =\n";
    render_chor(os, def.body, 2);
    os << "\n";
  }
  os << "main =\n";
  render_chor(os, unit.main, 2);
  return os.str();
}

std::string render(const cc::Program& p) { return render(from_program(p)); }

std::string render(const sp::Behaviour& b) {
  return std::visit(
      Overloaded{
          [](const sp::Send& n) {
            return n.to.str() + "!" + render(n.expr) + "; " + render(*n.cont);
          },
          [](const sp::Recv& n) {
            return n.from.str() + "?" + n.var.str() + "; " + render(*n.cont);
          },
          [](const sp::Choose& n) {
            return n.to.str() + "+" + std::string(to_string(n.label)) + "; " +
                   render(*n.cont);
          },
          [](const sp::Branch& n) {
            auto offer = [](const std::optional<Box<sp::Behaviour>>& b) {
              return b ? "Some(" + render(**b) + ")" : std::string("None");
            };
            return n.from.str() + " & " + offer(n.left) + " // " +
                   offer(n.right);
          },
          [](const sp::Cond& n) {
            return "if " + render(n.guard) + " then { " +
                   render(*n.then_branch) + " } else { " +
                   render(*n.else_branch) + " }";
          },
          [](const sp::Call& n) { return "call " + n.name.str(); },
          [](const sp::End&) { return std::string("end"); },
      },
      b.node);
}

std::string render(const sp::Network& n) {
  if (n.empty()) return "(empty)";
  std::string out;
  for (const auto& [p, b] : n.entries()) {
    if (!out.empty()) out += " |\n";
    out += p.str() + "[ " + render(b) + " ]";
  }
  return out;
}

std::string render(const sp::Program& p) {
  std::string out;
  for (const auto& [name, b] : p.procedures) {
    out += "proc " + name.str() + " = " + render(b) + "\n";
  }
  if (!out.empty()) out += "\n";
  return out + render(p.network) + "\n";
}

std::string render(const State& s) {
  std::string out;
  for (const auto& [key, v] : s.entries()) {
    out += key.first.str() + "." + key.second.str() + " = " +
           std::to_string(v) + "\n";
  }
  return out;
}

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::string_view without_comment(std::string_view line) {
  auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  return strip(line);
}

bool parse_nat(std::string_view s, Value& out) {
  s = strip(s);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool valid_name(std::string_view s) {
  if (s.empty() || !name_start(s.front())) return false;
  for (char c : s) {
    if (!name_char(c)) return false;
  }
  return !kKeywords.contains(s);
}

template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{}
                                        : text.substr(nl + 1);
    auto content = without_comment(line);
    if (!content.empty()) fn(line_no, content);
  }
}

Diagnostic line_error(std::size_t line, std::string message) {
  return {Diagnostic::Severity::kError, {line, 1}, {line, 1},
          std::move(message)};
}

}  // namespace

Parsed<State> parse_state(std::string_view text) {
  Parsed<State> result;
  State s;
  for_each_line(text, [&](std::size_t line, std::string_view content) {
    auto eq_pos = content.find('=');
    auto dot = content.find('.');
    Value v = 0;
    if (eq_pos == std::string_view::npos || dot == std::string_view::npos ||
        dot > eq_pos) {
      result.diagnostics.push_back(line_error(line, "expected 'p.x = n'"));
      return;
    }
    auto p = strip(content.substr(0, dot));
    auto x = strip(content.substr(dot + 1, eq_pos - dot - 1));
    if (!valid_name(p) || !valid_name(x)) {
      result.diagnostics.push_back(
          line_error(line, "invalid process or variable name"));
      return;
    }
    if (!parse_nat(content.substr(eq_pos + 1), v)) {
      result.diagnostics.push_back(line_error(line, "expected a natural"));
      return;
    }
    s.set(Pid(p), Var(x), v);
  });
  if (result.diagnostics.empty()) result.value = std::move(s);
  return result;
}

Parsed<verify::FnTable> parse_table(std::string_view text) {
  Parsed<verify::FnTable> result;
  verify::FnTable table;
  bool first = true;
  for_each_line(text, [&](std::size_t line, std::string_view content) {
    auto arrow = content.find("->");
    if (arrow == std::string_view::npos) {
      result.diagnostics.push_back(
          line_error(line, "expected 'n1,...,nk -> n' or '-> undef'"));
      return;
    }
    std::vector<Value> args;
    std::string_view lhs = strip(content.substr(0, arrow));
    while (!lhs.empty()) {
      auto comma = lhs.find(',');
      Value v = 0;
      if (!parse_nat(lhs.substr(0, comma), v)) {
        result.diagnostics.push_back(line_error(line, "expected a natural"));
        return;
      }
      args.push_back(v);
      if (comma == std::string_view::npos) break;
      lhs = lhs.substr(comma + 1);
    }
    std::optional<Value> out;
    auto rhs = strip(content.substr(arrow + 2));
    if (rhs != "undef") {
      Value v = 0;
      if (!parse_nat(rhs, v)) {
        result.diagnostics.push_back(
            line_error(line, "expected a natural or 'undef'"));
        return;
      }
      out = v;
    }
    if (first) {
      table.arity = args.size();
      first = false;
    } else if (args.size() != table.arity) {
      result.diagnostics.push_back(line_error(line, "inconsistent arity"));
      return;
    }
    if (!table.entries.emplace(std::move(args), out).second) {
      result.diagnostics.push_back(line_error(line, "duplicate entry"));
    }
  });
  if (result.diagnostics.empty()) result.value = std::move(table);
  return result;
}

}  // namespace choreo::syntax
