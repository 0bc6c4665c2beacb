#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zcl/ring.hpp"

namespace zcl {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line)
        : std::runtime_error(msg + " at line " + std::to_string(line)), line_(line) {}
    int line() const { return line_; }

private:
    int line_ = 0;
};

struct GenDecl {
    std::string label;
    unsigned degree = 0;
    int line = 0;
};

struct MulDecl {
    std::string a;
    std::string b;
    std::vector<std::string> rhs;
    int line = 0;
};

/// A ring presentation as read from the line-oriented text format:
///   gen <label> <degree>
///   mul <labelA> <labelB> = <labelC>[+<labelD>...]
/// The unit is implicit and labeled "1"; unlisted products are zero;
/// lines starting with '#' are comments.
struct StructureSpec {
    std::vector<GenDecl> gens;
    std::vector<MulDecl> muls;
};

/// Parses and resolves labels; throws ParseError with the offending line.
StructureSpec parse_structure_spec(std::string_view text);

/// Builds the ring and validates all ring laws (unit, commutativity,
/// associativity, degree homogeneity).
RingTable ring_from_spec(const StructureSpec& spec);

/// Inverse of parsing: a text presentation that re-parses to an identical ring.
std::string print_structure_spec(const RingTable& r);

}  // namespace zcl
