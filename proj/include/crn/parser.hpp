#ifndef CRN_PARSER_HPP
#define CRN_PARSER_HPP

#include "crn/network.hpp"

#include <stdexcept>
#include <string>

namespace crn {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

struct ParsedNetwork {
    Network network;
    RateAssignment rates;
};

/// Parses the plain-text reaction DSL. One statement per line:
///
///   side ARROW side [@ rate [, rate]]
///
/// where side is `term (+ term)*`, term is `[coefficient] species` with a
/// positive integer coefficient (default 1), species matches
/// [A-Za-z][A-Za-z0-9_]*, ARROW is `->` (one rate allowed) or `<->`
/// (two rates: forward then reverse), and rate is a decimal or a rational,
/// parsed exactly. Omitted rates default to 1. Blank lines and lines whose
/// first non-space character is '#' are ignored.
///
/// Species and complexes are indexed in first-appearance order. Throws
/// ParseError (with line number) on syntax errors, self-loops, nonpositive
/// rates, `<->` with exactly one rate, and duplicate directed edges.
ParsedNetwork parse_network(const std::string& text);

/// Renders a network back to the DSL, one `->` statement per directed edge
/// in stored order. Re-parsing reproduces the same network and rates.
std::string serialize_network(const Network& net, const RateAssignment& rates);

}  // namespace crn

#endif  // CRN_PARSER_HPP
