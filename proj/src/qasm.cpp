#include "qtrit/qasm.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

#include "qtrit/serialize.hpp"

namespace qtrit {

std::string to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::Syntax: return "syntax";
    case ParseErrorKind::UnsupportedStatement: return "unsupported-statement";
    case ParseErrorKind::UndeclaredRegister: return "undeclared-register";
    case ParseErrorKind::IndexOutOfRange: return "index-out-of-range";
    case ParseErrorKind::ArityMismatch: return "arity-mismatch";
  }
  return "syntax";
}

namespace {

enum class Tok { Ident, Number, Real, Str, Symbol, Arrow, End };

struct Token {
  Tok type = Tok::End;
  std::string text;
  SourceSpan span;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    skip_space();
    current_.span = {line_, col_, 1};
    if (pos_ >= src_.size()) {
      current_ = {Tok::End, "", {line_, col_, 1}};
      return;
    }
    char ch = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        take();
      }
      set(Tok::Ident, start);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      bool real = false;
      while (pos_ < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[pos_])) ||
                                    (!real && src_[pos_] == '.'))) {
        if (src_[pos_] == '.') real = true;
        take();
      }
      set(real ? Tok::Real : Tok::Number, start);
      return;
    }
    if (ch == '"') {
      std::size_t start = pos_;
      take();
      while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') take();
      if (pos_ < src_.size() && src_[pos_] == '"') take();
      set(Tok::Str, start);
      return;
    }
    if (ch == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
      std::size_t start = pos_;
      take();
      take();
      set(Tok::Arrow, start);
      return;
    }
    std::size_t start = pos_;
    take();
    set(Tok::Symbol, start);
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      char ch = src_[pos_];
      if (ch == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') take();
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        take();
      } else {
        break;
      }
    }
  }

  void take() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void set(Tok type, std::size_t start) {
    current_.type = type;
    current_.text = std::string(src_.substr(start, pos_ - start));
    current_.span.length = static_cast<int>(pos_ - start);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token current_;
};

struct Register {
  int offset = 0;
  int size = 0;
};

// One wire reference, or a whole register when index < 0.
struct Operand {
  int offset = 0;
  int size = 0;
  int index = -1;
  SourceSpan span;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) {}

  ParseResult parse() {
    while (lex_.peek().type != Tok::End) {
      statement();
    }
    ParseResult result;
    result.errors = std::move(errors_);
    if (result.errors.empty()) {
      Circuit c;
      c.wires.resize(static_cast<std::size_t>(n_wires_));
      for (int i = 0; i < n_wires_; ++i) c.wires[static_cast<std::size_t>(i)] = {i, 2, ""};
      for (int w : ternary_) c.wires[static_cast<std::size_t>(w)].radix = 3;
      c.gates = std::move(gates_);
      result.circuit = std::move(c);
    }
    return result;
  }

 private:
  void error(ParseErrorKind kind, const SourceSpan& span, std::string msg) {
    errors_.push_back({kind, span, std::move(msg)});
  }

  // Skip to just past the next ';' so one bad statement cannot cascade.
  void recover() {
    while (lex_.peek().type != Tok::End) {
      Token t = lex_.next();
      if (t.type == Tok::Symbol && t.text == ";") return;
    }
  }

  bool expect_symbol(const char* sym) {
    const Token& t = lex_.peek();
    if (t.type == Tok::Symbol && t.text == sym) {
      lex_.next();
      return true;
    }
    error(ParseErrorKind::Syntax, t.span, std::string("expected '") + sym + "'");
    recover();
    return false;
  }

  // stoi without the exception on absurd literals.
  bool parse_int(const Token& t, int& out) {
    if (t.type != Tok::Number || t.text.size() > 9) {
      error(ParseErrorKind::Syntax, t.span, "expected a small nonnegative integer");
      recover();
      return false;
    }
    out = std::stoi(t.text);
    return true;
  }

  void statement() {
    Token head = lex_.next();
    if (head.type == Tok::Symbol && head.text == ";") return;  // stray semicolon
    if (head.type != Tok::Ident) {
      error(ParseErrorKind::Syntax, head.span, "expected a statement");
      recover();
      return;
    }
    const std::string& kw = head.text;
    if (kw == "OPENQASM") {
      Token v = lex_.next();
      if (v.type != Tok::Real || v.text != "2.0") {
        error(ParseErrorKind::UnsupportedStatement, v.span, "only OPENQASM 2.0 is supported");
        recover();
        return;
      }
      expect_symbol(";");
      return;
    }
    if (kw == "include") {
      Token f = lex_.next();
      if (f.type != Tok::Str) {
        error(ParseErrorKind::Syntax, f.span, "expected a file string after include");
        recover();
        return;
      }
      expect_symbol(";");
      return;
    }
    if (kw == "qreg" || kw == "creg") {
      declare(kw == "qreg", head.span);
      return;
    }
    if (kw == "measure") {
      measure(head.span);
      return;
    }
    if (kw == "barrier") {
      barrier(head.span);
      return;
    }
    gate(head);
  }

  void declare(bool quantum, const SourceSpan& at) {
    Token name = lex_.next();
    if (name.type != Tok::Ident) {
      error(ParseErrorKind::Syntax, name.span, "expected a register name");
      recover();
      return;
    }
    auto& table = quantum ? qregs_ : cregs_;
    if (table.count(name.text) || (quantum ? cregs_ : qregs_).count(name.text)) {
      error(ParseErrorKind::Syntax, name.span, "register '" + name.text + "' redeclared");
      recover();
      return;
    }
    if (!expect_symbol("[")) return;
    Token sz = lex_.next();
    int size = 0;
    if (!parse_int(sz, size)) return;
    if (!expect_symbol("]")) return;
    if (!expect_symbol(";")) return;
    if (quantum) {
      table[name.text] = {n_wires_, size};
      n_wires_ += size;
      (void)at;
    } else {
      table[name.text] = {n_cbits_, size};
      n_cbits_ += size;
    }
  }

  // reg or reg[k]; returns false after recovering.
  bool operand(bool quantum, Operand& out) {
    Token name = lex_.next();
    if (name.type != Tok::Ident) {
      error(ParseErrorKind::Syntax, name.span, "expected a register operand");
      recover();
      return false;
    }
    const auto& table = quantum ? qregs_ : cregs_;
    auto it = table.find(name.text);
    if (it == table.end()) {
      error(ParseErrorKind::UndeclaredRegister, name.span,
            "register '" + name.text + "' is not declared");
      recover();
      return false;
    }
    out.offset = it->second.offset;
    out.size = it->second.size;
    out.index = -1;
    out.span = name.span;
    if (lex_.peek().type == Tok::Symbol && lex_.peek().text == "[") {
      lex_.next();
      Token idx = lex_.next();
      if (!parse_int(idx, out.index)) return false;
      if (!expect_symbol("]")) return false;
      if (out.index >= out.size) {
        error(ParseErrorKind::IndexOutOfRange, idx.span,
              "index " + idx.text + " exceeds register '" + name.text + "' of size " +
                  std::to_string(out.size));
        recover();
        return false;
      }
    }
    return true;
  }

  void measure(const SourceSpan& at) {
    Operand q, c;
    if (!operand(true, q)) return;
    const Token& arrow = lex_.peek();
    if (arrow.type != Tok::Arrow) {
      error(ParseErrorKind::Syntax, arrow.span, "expected '->' in measure");
      recover();
      return;
    }
    lex_.next();
    if (!operand(false, c)) return;
    if (!expect_symbol(";")) return;
    // Whole-register form needs matching sizes; the classical side is
    // otherwise discarded (the IR has no classical wires).
    if (q.index < 0 && c.index < 0) {
      if (q.size != c.size) {
        error(ParseErrorKind::ArityMismatch, at, "measure register sizes differ");
        return;
      }
      for (int i = 0; i < q.size; ++i) {
        gates_.push_back(make_gate(GateKind::Measure, {q.offset + i}));
      }
      return;
    }
    if (q.index < 0 || c.index < 0) {
      error(ParseErrorKind::ArityMismatch, at, "measure mixes indexed and whole-register operands");
      return;
    }
    gates_.push_back(make_gate(GateKind::Measure, {q.offset + q.index}));
  }

  void barrier(const SourceSpan& at) {
    (void)at;
    std::vector<int> ws;
    while (true) {
      Operand op;
      if (!operand(true, op)) return;
      if (op.index < 0) {
        for (int i = 0; i < op.size; ++i) ws.push_back(op.offset + i);
      } else {
        ws.push_back(op.offset + op.index);
      }
      const Token& t = lex_.peek();
      if (t.type == Tok::Symbol && t.text == ",") {
        lex_.next();
        continue;
      }
      break;
    }
    if (!expect_symbol(";")) return;
    for (int w : ws) gates_.push_back(make_gate(GateKind::Barrier, {w}));
  }

  void gate(const Token& head) {
    static const std::map<std::string, GateKind> plain = {
        {"x", GateKind::X},   {"h", GateKind::H},     {"t", GateKind::T},
        {"tdg", GateKind::Tdg}, {"s", GateKind::S},   {"sdg", GateKind::Sdg},
        {"cx", GateKind::CX}, {"ccx", GateKind::CCX},
    };
    static const std::map<std::string, TernaryAction> ternary = {
        {"tcx_inc", TernaryAction::Increment},
        {"tcx_dec", TernaryAction::Decrement},
        {"tcx_x", TernaryAction::Flip01},
    };

    auto pit = plain.find(head.text);
    auto tit = ternary.find(head.text);
    if (pit == plain.end() && tit == ternary.end()) {
      error(ParseErrorKind::UnsupportedStatement, head.span,
            "statement '" + head.text + "' is not in the supported subset");
      recover();
      return;
    }

    int control_value = 0;
    if (tit != ternary.end()) {
      if (!expect_symbol("(")) return;
      Token v = lex_.next();
      if (v.type != Tok::Number || (v.text != "1" && v.text != "2")) {
        error(ParseErrorKind::Syntax, v.span, "control value must be 1 or 2");
        recover();
        return;
      }
      control_value = std::stoi(v.text);
      if (!expect_symbol(")")) return;
    } else if (lex_.peek().type == Tok::Symbol && lex_.peek().text == "(") {
      error(ParseErrorKind::Syntax, lex_.peek().span,
            "gate '" + head.text + "' takes no parameters");
      recover();
      return;
    }

    std::vector<int> ws;
    while (true) {
      Operand op;
      if (!operand(true, op)) return;
      if (op.index < 0) {
        error(ParseErrorKind::Syntax, op.span, "gate operands must be indexed");
        recover();
        return;
      }
      ws.push_back(op.offset + op.index);
      const Token& t = lex_.peek();
      if (t.type == Tok::Symbol && t.text == ",") {
        lex_.next();
        continue;
      }
      break;
    }
    if (!expect_symbol(";")) return;

    if (tit != ternary.end()) {
      if (ws.size() != 2) {
        error(ParseErrorKind::ArityMismatch, head.span,
              head.text + " expects 2 operands, got " + std::to_string(ws.size()));
        return;
      }
      gates_.push_back(make_ternary_cx(ws[0], ws[1], control_value, tit->second));
      ternary_.insert(ternary_.end(), ws[1]);
      return;
    }
    const int want = arity(pit->second);
    if (static_cast<int>(ws.size()) != want) {
      error(ParseErrorKind::ArityMismatch, head.span,
            head.text + " expects " + std::to_string(want) + " operands, got " +
                std::to_string(ws.size()));
      return;
    }
    gates_.push_back(make_gate(pit->second, std::move(ws)));
  }

  Lexer lex_;
  std::map<std::string, Register> qregs_;
  std::map<std::string, Register> cregs_;
  int n_wires_ = 0;
  int n_cbits_ = 0;
  std::vector<int> ternary_;  // wires promoted by tcx targets
  std::vector<Gate> gates_;
  std::vector<ParseError> errors_;
};

}  // namespace

ParseResult parse_qasm(std::string_view text) { return Parser(text).parse(); }

std::string emit_qasm(const Circuit& c) {
  require_valid(c);
  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  if (!c.wires.empty()) {
    out << "qreg q[" << c.wires.size() << "];\n";
    bool measures = false;
    for (const Gate& g : c.gates) measures = measures || g.kind == GateKind::Measure;
    if (measures) out << "creg c[" << c.wires.size() << "];\n";
  }
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::Measure:
        out << "measure q[" << g.wires[0] << "] -> c[" << g.wires[0] << "];\n";
        continue;
      case GateKind::Barrier:
        out << "barrier q[" << g.wires[0] << "];\n";
        continue;
      case GateKind::TernaryCX: {
        const char* stem = g.action == TernaryAction::Increment   ? "tcx_inc"
                           : g.action == TernaryAction::Decrement ? "tcx_dec"
                                                                  : "tcx_x";
        out << stem << "(" << g.control_value << ") q[" << g.wires[0] << "],q[" << g.wires[1]
            << "];\n";
        continue;
      }
      default:
        break;
    }
    out << kind_name(g.kind);
    for (std::size_t i = 0; i < g.wires.size(); ++i) {
      out << (i == 0 ? " " : ",") << "q[" << g.wires[i] << "]";
    }
    out << ";\n";
  }
  return out.str();
}

}  // namespace qtrit
