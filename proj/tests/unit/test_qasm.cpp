#include <doctest.h>

#include "helpers.hpp"
#include "maopt/qasm.hpp"

using namespace maopt;

namespace {

ParseError capture(const std::string& src) {
    try {
        parse(src);
    } catch (const ParseError& err) {
        return err;
    }
    FAIL("expected ParseError");
    throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("parse maps statements to gates in order") {
    const Circuit c = parse("qreg q[1]; rx(pi/2) q[0];");
    REQUIRE(c.num_qubits == 1);
    REQUIRE(c.gates.size() == 1);
    const auto& rot = std::get<RotationGate>(c.gates[0]);
    CHECK(rot.qubit == 0);
    CHECK(rot.axis == Axis::X);
    CHECK(rot.angle == pi / 2);

    const Circuit c2 = parse("qreg q[2]; cx q[0],q[1];");
    REQUIRE(c2.gates.size() == 1);
    const auto& cx = std::get<CnotGate>(c2.gates[0]);
    CHECK(cx.control == 0);
    CHECK(cx.target == 1);

    const Circuit c3 = parse(
        "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg r[2];\n"
        "h r[0];\nbarrier r[0], r[1];\ncx r[0],r[1];\nrz(-0.25) r[1];\ntdg r[0];\n");
    REQUIRE(c3.gates.size() == 4);
    CHECK(std::get<FixedGate>(c3.gates[0]).kind == FixedGateKind::H);
    CHECK(std::holds_alternative<CnotGate>(c3.gates[1]));
    CHECK(std::get<RotationGate>(c3.gates[2]).angle == -0.25);
    CHECK(std::get<FixedGate>(c3.gates[3]).kind == FixedGateKind::Tdg);
}

TEST_CASE("rejected statements carry kind and location") {
    const ParseError measure = capture("qreg q[1]; measure q[0] -> c[0];");
    CHECK(measure.kind() == ParseErrorKind::UnsupportedStatement);
    CHECK(measure.location().line == 1);
    CHECK(measure.location().column == 12);
    CHECK(std::string(measure.code()) == "unsupported-statement");

    CHECK(capture("qreg q[1]; creg c[1];").kind() == ParseErrorKind::UnsupportedStatement);
    CHECK(capture("qreg q[1]; qreg p[2];").kind() == ParseErrorKind::UnsupportedStatement);
    CHECK(capture("OPENQASM 3.0; qreg q[1];").kind() == ParseErrorKind::UnsupportedStatement);
    CHECK(capture("qreg q[1]; gate foo a { x a; }").kind() ==
          ParseErrorKind::UnsupportedStatement);
    CHECK(capture("qreg q[1]; foo q[0];").kind() == ParseErrorKind::UnknownGate);
    CHECK(capture("qreg q[2]; rx(1) q[2];").kind() == ParseErrorKind::QubitOutOfRange);
    CHECK(capture("qreg q[2]; cx q[0],q[0];").kind() == ParseErrorKind::SyntaxError);
    CHECK(capture("qreg q[1]; rx(1) p[0];").kind() == ParseErrorKind::SyntaxError);

    const ParseError out_of_range = capture("qreg q[2];\nrx(1) q[5];");
    CHECK(out_of_range.location().line == 2);
    CHECK(out_of_range.location().column == 9);
}

TEST_CASE("angle expressions") {
    CHECK(parse_angle_expr("-pi/4") == -pi / 4);
    CHECK(parse_angle_expr("2*pi") == 2 * pi);
    CHECK(parse_angle_expr("1e-3") == 1e-3);
    CHECK(parse_angle_expr("(1+2)*0.5/4") == 0.375);
    CHECK(parse_angle_expr("--1.5") == 1.5);
    CHECK_THROWS_AS(parse_angle_expr("3**2"), ParseError);
    CHECK_THROWS_AS(parse_angle_expr("1/0"), ParseError);
    CHECK_THROWS_AS(parse_angle_expr("pi pi"), ParseError);
    CHECK_THROWS_AS(parse_angle_expr(""), ParseError);
    try {
        parse_angle_expr("3**2");
    } catch (const ParseError& err) {
        CHECK(err.kind() == ParseErrorKind::BadAngleExpression);
    }
}

TEST_CASE("emit_qasm formatting") {
    Circuit c;
    c.num_qubits = 1;
    c.gates.push_back(RotationGate{0, Axis::Z, 0.3});
    const std::string text = emit_qasm(c);
    CHECK(text.find("rz(0.29999999999999999) q[0];") != std::string::npos);

    Circuit empty;
    empty.num_qubits = 2;
    CHECK(emit_qasm(empty) == "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\n");

    std::vector<std::string> labels{"MA"};
    CHECK(emit_qasm(c, &labels).find("rz(0.29999999999999999) q[0]; // MA") != std::string::npos);
}

TEST_CASE("parse/emit round trip on random circuits") {
    for (int t = 0; t < 50; ++t) {
        SplitMix64 rng(20, t);
        const Circuit c = test::random_mixed_circuit(rng);
        const Circuit back = parse(emit_qasm(c));
        CHECK(back == c);
    }

    // degenerate sources round-trip too
    const Circuit none = parse("");
    CHECK(none.num_qubits == 0);
    CHECK(parse(emit_qasm(none)) == none);
    const Circuit bare = parse("OPENQASM 2.0;\ninclude \"qelib1.inc\";\n");
    CHECK(parse(emit_qasm(bare)) == bare);
}
