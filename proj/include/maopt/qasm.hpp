#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "maopt/circuit.hpp"

namespace maopt {

struct SourceLocation {
    int line = 1;    // 1-based
    int column = 1;  // 1-based
};

enum class ParseErrorKind {
    SyntaxError,
    UnsupportedStatement,
    UnknownGate,
    QubitOutOfRange,
    BadAngleExpression,
};

/// Stable machine-readable code for each error kind.
const char* parse_error_code(ParseErrorKind kind);

class ParseError : public std::runtime_error {
  public:
    ParseError(SourceLocation loc, ParseErrorKind kind, const std::string& message);

    SourceLocation location() const { return loc_; }
    ParseErrorKind kind() const { return kind_; }
    const char* code() const { return parse_error_code(kind_); }

  private:
    SourceLocation loc_;
    ParseErrorKind kind_;
};

/// Parse a restricted OpenQASM 2.0 dialect into the circuit IR.
///
/// Accepted statements: optional `OPENQASM 2.0;` header, `include
/// "qelib1.inc";`, exactly one `qreg` declaration, `rx/ry/rz(expr)`, `cx`,
/// the fixed gates x y z h s sdg t tdg, and `barrier` (ignored). Everything
/// else — measure, creg, gate definitions, a second qreg — raises ParseError.
Circuit parse(const std::string& source);

/// Evaluate an angle expression: decimal/scientific literals, `pi`, unary
/// minus, binary + - * /, parentheses. Throws ParseError{BadAngleExpression}
/// on malformed input or division by zero.
double parse_angle_expr(const std::string& expr);

/// Deterministic serialization; angles printed with 17 significant digits so
/// parse(emit_qasm(c)) reproduces c gate for gate. `labels`, when given, must
/// parallel circuit.gates; non-empty entries are appended as `// <label>`
/// comments.
std::string emit_qasm(const Circuit& circuit, const std::vector<std::string>* labels = nullptr);

}  // namespace maopt
