#include "maopt/qasm.hpp"

#include <cctype>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>

namespace maopt {

const char* parse_error_code(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::SyntaxError: return "syntax-error";
        case ParseErrorKind::UnsupportedStatement: return "unsupported-statement";
        case ParseErrorKind::UnknownGate: return "unknown-gate";
        case ParseErrorKind::QubitOutOfRange: return "qubit-out-of-range";
        case ParseErrorKind::BadAngleExpression: return "bad-angle-expression";
    }
    return "unknown";
}

ParseError::ParseError(SourceLocation loc, ParseErrorKind kind, const std::string& message)
    : std::runtime_error(std::to_string(loc.line) + ":" + std::to_string(loc.column) + ": " +
                         parse_error_code(kind) + ": " + message),
      loc_(loc),
      kind_(kind) {}

namespace {

enum class TokKind { Identifier, Number, String, Symbol, End };

struct Token {
    TokKind kind;
    std::string text;
    double number = 0.0;
    SourceLocation loc;
};

class Lexer {
  public:
    explicit Lexer(const std::string& src) : src_(src) {}

    Token next() {
        skip_ws_and_comments();
        SourceLocation loc{line_, col_};
        if (pos_ >= src_.size()) return {TokKind::End, "", 0.0, loc};

        const char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                id += advance();
            return {TokKind::Identifier, id, 0.0, loc};
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return lex_number(loc);
        if (c == '"') {
            advance();
            std::string s;
            while (pos_ < src_.size() && src_[pos_] != '"') s += advance();
            if (pos_ >= src_.size())
                throw ParseError(loc, ParseErrorKind::SyntaxError, "unterminated string");
            advance();
            return {TokKind::String, s, 0.0, loc};
        }
        if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
            advance();
            advance();
            return {TokKind::Symbol, "->", 0.0, loc};
        }
        static const std::string symbols = "()[]{};,+-*/";
        if (symbols.find(c) != std::string::npos) {
            advance();
            return {TokKind::Symbol, std::string(1, c), 0.0, loc};
        }
        throw ParseError(loc, ParseErrorKind::SyntaxError,
                         std::string("unexpected character '") + c + "'");
    }

  private:
    char advance() {
        const char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_ws_and_comments() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    Token lex_number(SourceLocation loc) {
        std::string text;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            text += advance();
        if (pos_ < src_.size() && src_[pos_] == '.') {
            text += advance();
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                text += advance();
        }
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t save = pos_;
            std::string exp;
            exp += advance();
            if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) exp += advance();
            if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    exp += advance();
                text += exp;
            } else {
                pos_ = save;  // not an exponent; leave 'e...' for the next token
            }
        }
        if (text.empty() || text == ".")
            throw ParseError(loc, ParseErrorKind::SyntaxError, "malformed number");
        return {TokKind::Number, text, std::strtod(text.c_str(), nullptr), loc};
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class TokenStream {
  public:
    explicit TokenStream(const std::string& src) : lexer_(src) { cur_ = lexer_.next(); }

    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        cur_ = lexer_.next();
        return t;
    }
    Token expect_symbol(const std::string& sym, ParseErrorKind kind = ParseErrorKind::SyntaxError) {
        if (cur_.kind != TokKind::Symbol || cur_.text != sym)
            throw ParseError(cur_.loc, kind, "expected '" + sym + "'");
        return take();
    }

  private:
    Lexer lexer_;
    Token cur_;
};

// expr := term (('+'|'-') term)* ; term := factor (('*'|'/') factor)* ;
// factor := '-' factor | number | 'pi' | '(' expr ')'
class AngleParser {
  public:
    explicit AngleParser(TokenStream& ts) : ts_(ts) {}

    double parse() { return expr(); }

  private:
    double expr() {
        double v = term();
        while (is_sym("+") || is_sym("-")) {
            const bool plus = ts_.take().text == "+";
            const double rhs = term();
            v = plus ? v + rhs : v - rhs;
        }
        return v;
    }

    double term() {
        double v = factor();
        while (is_sym("*") || is_sym("/")) {
            const Token op = ts_.take();
            const double rhs = factor();
            if (op.text == "/") {
                if (rhs == 0.0)
                    throw ParseError(op.loc, ParseErrorKind::BadAngleExpression,
                                     "division by zero");
                v /= rhs;
            } else {
                v *= rhs;
            }
        }
        return v;
    }

    double factor() {
        const Token& t = ts_.peek();
        if (t.kind == TokKind::Symbol && t.text == "-") {
            ts_.take();
            return -factor();
        }
        if (t.kind == TokKind::Number) return ts_.take().number;
        if (t.kind == TokKind::Identifier && t.text == "pi") {
            ts_.take();
            return pi;
        }
        if (t.kind == TokKind::Symbol && t.text == "(") {
            ts_.take();
            const double v = expr();
            if (!is_sym(")"))
                throw ParseError(ts_.peek().loc, ParseErrorKind::BadAngleExpression,
                                 "expected ')'");
            ts_.take();
            return v;
        }
        throw ParseError(t.loc, ParseErrorKind::BadAngleExpression,
                         "expected number, 'pi', '-' or '('");
    }

    bool is_sym(const char* s) const {
        return ts_.peek().kind == TokKind::Symbol && ts_.peek().text == s;
    }

    TokenStream& ts_;
};

const std::map<std::string, FixedGateKind> fixed_gates = {
    {"x", FixedGateKind::X},     {"y", FixedGateKind::Y}, {"z", FixedGateKind::Z},
    {"h", FixedGateKind::H},     {"s", FixedGateKind::S}, {"sdg", FixedGateKind::Sdg},
    {"t", FixedGateKind::T},     {"tdg", FixedGateKind::Tdg}};

const std::map<std::string, Axis> rotation_gates = {
    {"rx", Axis::X}, {"ry", Axis::Y}, {"rz", Axis::Z}};

class Parser {
  public:
    explicit Parser(const std::string& src) : ts_(src) {}

    Circuit parse_program() {
        while (ts_.peek().kind != TokKind::End) statement();
        return circuit_;
    }

  private:
    void statement() {
        const Token t = ts_.peek();
        if (t.kind != TokKind::Identifier)
            throw ParseError(t.loc, ParseErrorKind::SyntaxError, "expected a statement");

        if (t.text == "OPENQASM") return header();
        if (t.text == "include") return include();
        if (t.text == "qreg") return qreg();
        if (t.text == "barrier") return barrier();
        if (t.text == "measure" || t.text == "creg" || t.text == "gate" || t.text == "if" ||
            t.text == "reset" || t.text == "opaque")
            throw ParseError(t.loc, ParseErrorKind::UnsupportedStatement,
                             "'" + t.text + "' is not supported");
        if (rotation_gates.count(t.text)) return rotation();
        if (t.text == "cx") return cnot();
        if (fixed_gates.count(t.text)) return fixed();
        throw ParseError(t.loc, ParseErrorKind::UnknownGate, "unknown gate '" + t.text + "'");
    }

    void header() {
        const Token kw = ts_.take();
        if (seen_header_)
            throw ParseError(kw.loc, ParseErrorKind::SyntaxError, "duplicate OPENQASM header");
        seen_header_ = true;
        const Token ver = ts_.take();
        if (ver.kind != TokKind::Number || ver.text != "2.0")
            throw ParseError(ver.loc, ParseErrorKind::UnsupportedStatement,
                             "only OPENQASM 2.0 is supported");
        ts_.expect_symbol(";");
    }

    void include() {
        const Token kw = ts_.take();
        const Token file = ts_.take();
        if (file.kind != TokKind::String)
            throw ParseError(file.loc, ParseErrorKind::SyntaxError, "expected include file name");
        if (file.text != "qelib1.inc")
            throw ParseError(kw.loc, ParseErrorKind::UnsupportedStatement,
                             "only qelib1.inc may be included");
        ts_.expect_symbol(";");
    }

    void qreg() {
        const Token kw = ts_.take();
        if (!register_name_.empty())
            throw ParseError(kw.loc, ParseErrorKind::UnsupportedStatement,
                             "multiple qreg declarations");
        const Token name = ts_.take();
        if (name.kind != TokKind::Identifier)
            throw ParseError(name.loc, ParseErrorKind::SyntaxError, "expected register name");
        ts_.expect_symbol("[");
        const Token size = ts_.take();
        if (size.kind != TokKind::Number || size.number < 1.0 ||
            size.number != static_cast<double>(static_cast<int>(size.number)))
            throw ParseError(size.loc, ParseErrorKind::SyntaxError,
                             "register size must be a positive integer");
        ts_.expect_symbol("]");
        ts_.expect_symbol(";");
        register_name_ = name.text;
        circuit_.num_qubits = static_cast<int>(size.number);
    }

    void barrier() {
        ts_.take();
        while (ts_.peek().kind != TokKind::End &&
               !(ts_.peek().kind == TokKind::Symbol && ts_.peek().text == ";"))
            ts_.take();
        ts_.expect_symbol(";");
    }

    int qubit_operand() {
        const Token name = ts_.take();
        if (name.kind != TokKind::Identifier)
            throw ParseError(name.loc, ParseErrorKind::SyntaxError, "expected qubit operand");
        if (register_name_.empty() || name.text != register_name_)
            throw ParseError(name.loc, ParseErrorKind::SyntaxError,
                             "unknown register '" + name.text + "'");
        ts_.expect_symbol("[");
        const Token idx = ts_.take();
        if (idx.kind != TokKind::Number ||
            idx.number != static_cast<double>(static_cast<int>(idx.number)))
            throw ParseError(idx.loc, ParseErrorKind::SyntaxError, "expected qubit index");
        const int q = static_cast<int>(idx.number);
        if (q < 0 || q >= circuit_.num_qubits)
            throw ParseError(idx.loc, ParseErrorKind::QubitOutOfRange,
                             "qubit index " + std::to_string(q) + " out of range");
        ts_.expect_symbol("]");
        return q;
    }

    void rotation() {
        const Token name = ts_.take();
        const Axis axis = rotation_gates.at(name.text);
        ts_.expect_symbol("(", ParseErrorKind::SyntaxError);
        AngleParser ap(ts_);
        const double angle = ap.parse();
        if (!(ts_.peek().kind == TokKind::Symbol && ts_.peek().text == ")"))
            throw ParseError(ts_.peek().loc, ParseErrorKind::BadAngleExpression,
                             "malformed angle expression");
        ts_.take();
        const int q = qubit_operand();
        ts_.expect_symbol(";");
        circuit_.gates.push_back(RotationGate{q, axis, angle});
    }

    void cnot() {
        const Token kw = ts_.take();
        const int c = qubit_operand();
        ts_.expect_symbol(",");
        const int t = qubit_operand();
        ts_.expect_symbol(";");
        if (c == t)
            throw ParseError(kw.loc, ParseErrorKind::SyntaxError,
                             "cx control and target must differ");
        circuit_.gates.push_back(CnotGate{c, t});
    }

    void fixed() {
        const Token name = ts_.take();
        const int q = qubit_operand();
        ts_.expect_symbol(";");
        circuit_.gates.push_back(FixedGate{q, fixed_gates.at(name.text)});
    }

    TokenStream ts_;
    Circuit circuit_;
    std::string register_name_;
    bool seen_header_ = false;
};

std::string format_angle(double angle) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", angle);
    return buf;
}

}  // namespace

Circuit parse(const std::string& source) { return Parser(source).parse_program(); }

double parse_angle_expr(const std::string& expr) {
    TokenStream ts(expr);
    AngleParser ap(ts);
    const double v = ap.parse();
    if (ts.peek().kind != TokKind::End)
        throw ParseError(ts.peek().loc, ParseErrorKind::BadAngleExpression,
                         "trailing input after expression");
    return v;
}

std::string emit_qasm(const Circuit& circuit, const std::vector<std::string>* labels) {
    if (labels && labels->size() != circuit.gates.size())
        throw std::invalid_argument("emit_qasm: labels must parallel gates");

    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    if (circuit.num_qubits > 0) out << "qreg q[" << circuit.num_qubits << "];\n";
    for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
        const Gate& g = circuit.gates[i];
        if (const auto* rot = std::get_if<RotationGate>(&g)) {
            const char axis = rot->axis == Axis::X ? 'x' : (rot->axis == Axis::Y ? 'y' : 'z');
            out << 'r' << axis << '(' << format_angle(rot->angle) << ") q[" << rot->qubit << "];";
        } else if (const auto* fixed = std::get_if<FixedGate>(&g)) {
            out << fixed_gate_name(fixed->kind) << " q[" << fixed->qubit << "];";
        } else {
            const auto& cx = std::get<CnotGate>(g);
            out << "cx q[" << cx.control << "],q[" << cx.target << "];";
        }
        if (labels && !(*labels)[i].empty()) out << " // " << (*labels)[i];
        out << '\n';
    }
    return out.str();
}

}  // namespace maopt
