#include "crn/parser.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace crn {

namespace {

enum class TokenKind { Ident, Number, Plus, Comma, At, ArrowFwd, ArrowRev, End };

struct Token {
    TokenKind kind;
    std::string text;
};

class LineLexer {
public:
    LineLexer(const std::string& line, int line_no) : s_(line), line_no_(line_no) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(line_no_, message); }

    void advance() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ >= s_.size()) {
            current_ = {TokenKind::End, ""};
            return;
        }
        char c = s_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            current_ = {TokenKind::Ident, s_.substr(start, pos_ - start)};
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' ||
            (c == '-' && pos_ + 1 < s_.size() &&
             (std::isdigit(static_cast<unsigned char>(s_[pos_ + 1])) || s_[pos_ + 1] == '.'))) {
            size_t start = pos_;
            if (s_[pos_] == '-') ++pos_;
            auto digits = [&] {
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            };
            digits();
            if (pos_ < s_.size() && s_[pos_] == '.') {
                ++pos_;
                digits();
            } else if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                digits();
            }
            current_ = {TokenKind::Number, s_.substr(start, pos_ - start)};
            return;
        }
        switch (c) {
            case '+':
                ++pos_;
                current_ = {TokenKind::Plus, "+"};
                return;
            case ',':
                ++pos_;
                current_ = {TokenKind::Comma, ","};
                return;
            case '@':
                ++pos_;
                current_ = {TokenKind::At, "@"};
                return;
            case '-':
                if (pos_ + 1 < s_.size() && s_[pos_ + 1] == '>') {
                    pos_ += 2;
                    current_ = {TokenKind::ArrowFwd, "->"};
                    return;
                }
                fail("unexpected '-'");
            case '<':
                if (s_.compare(pos_, 3, "<->") == 0) {
                    pos_ += 3;
                    current_ = {TokenKind::ArrowRev, "<->"};
                    return;
                }
                fail("unexpected '<'");
            default:
                fail(std::string("unexpected character '") + c + "'");
        }
    }

    const std::string& s_;
    int line_no_;
    size_t pos_ = 0;
    Token current_;
};

// Exponent map: species index -> multiplicity.
using ComplexMap = std::map<int, long>;

class NetworkBuilder {
public:
    int species_index(const std::string& name) {
        auto it = species_ids_.find(name);
        if (it != species_ids_.end()) return it->second;
        int id = static_cast<int>(species_.size());
        species_.push_back(name);
        species_ids_.emplace(name, id);
        return id;
    }

    int complex_index(const ComplexMap& complex) {
        for (size_t i = 0; i < complexes_.size(); ++i)
            if (complexes_[i] == complex) return static_cast<int>(i);
        complexes_.push_back(complex);
        return static_cast<int>(complexes_.size()) - 1;
    }

    void add_edge(int from, int to, const Rational& rate, int line_no) {
        if (!edge_set_.insert({from, to}).second)
            throw ParseError(line_no, "duplicate reaction for the same directed edge");
        edges_.push_back({from, to});
        rates_.set({from, to}, rate);
    }

    ParsedNetwork build() const {
        Eigen::MatrixXi exponents(static_cast<int>(complexes_.size()), static_cast<int>(species_.size()));
        exponents.setZero();
        for (size_t i = 0; i < complexes_.size(); ++i)
            for (const auto& [sp, mult] : complexes_[i]) exponents(static_cast<int>(i), sp) = static_cast<int>(mult);
        return {Network(species_, exponents, edges_), rates_};
    }

private:
    std::vector<std::string> species_;
    std::map<std::string, int> species_ids_;
    std::vector<ComplexMap> complexes_;
    std::vector<Edge> edges_;
    std::set<Edge> edge_set_;
    RateAssignment rates_;
};

ComplexMap parse_side(LineLexer& lex, NetworkBuilder& builder, int line_no) {
    ComplexMap side;
    while (true) {
        long coefficient = 1;
        if (lex.peek().kind == TokenKind::Number) {
            std::string text = lex.take().text;
            if (text.find('.') != std::string::npos || text.find('/') != std::string::npos ||
                text.find('-') != std::string::npos)
                throw ParseError(line_no, "stoichiometric coefficient must be a positive integer: '" + text + "'");
            try {
                coefficient = std::stol(text);
            } catch (const std::exception&) {
                throw ParseError(line_no, "stoichiometric coefficient out of range: '" + text + "'");
            }
            if (coefficient <= 0)
                throw ParseError(line_no, "stoichiometric coefficient must be positive: '" + text + "'");
        }
        if (lex.peek().kind != TokenKind::Ident)
            throw ParseError(line_no, "expected a species name");
        side[builder.species_index(lex.take().text)] += coefficient;
        if (lex.peek().kind != TokenKind::Plus) break;
        lex.take();
    }
    return side;
}

Rational parse_rate(const Token& token, int line_no) {
    Rational rate;
    try {
        rate = Rational::parse(token.text);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, std::string("bad rate: ") + e.what());
    }
    if (rate.sign() <= 0) throw ParseError(line_no, "rate must be positive: '" + token.text + "'");
    return rate;
}

}  // namespace

ParsedNetwork parse_network(const std::string& text) {
    NetworkBuilder builder;
    std::istringstream input(text);
    std::string line;
    int line_no = 0;
    while (std::getline(input, line)) {
        ++line_no;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;

        LineLexer lex(line, line_no);
        ComplexMap reactant = parse_side(lex, builder, line_no);

        TokenKind arrow = lex.peek().kind;
        if (arrow != TokenKind::ArrowFwd && arrow != TokenKind::ArrowRev)
            throw ParseError(line_no, "expected '->' or '<->'");
        lex.take();
        bool reversible = arrow == TokenKind::ArrowRev;

        ComplexMap product = parse_side(lex, builder, line_no);
        if (reactant == product) throw ParseError(line_no, "reaction sides are identical (self-loop)");

        Rational forward(1), reverse(1);
        int rate_count = 0;
        if (lex.peek().kind == TokenKind::At) {
            lex.take();
            if (lex.peek().kind != TokenKind::Number) throw ParseError(line_no, "expected a rate after '@'");
            forward = parse_rate(lex.take(), line_no);
            rate_count = 1;
            if (lex.peek().kind == TokenKind::Comma) {
                lex.take();
                if (lex.peek().kind != TokenKind::Number)
                    throw ParseError(line_no, "expected a rate after ','");
                reverse = parse_rate(lex.take(), line_no);
                rate_count = 2;
            }
        }
        if (lex.peek().kind != TokenKind::End)
            throw ParseError(line_no, "unexpected trailing input: '" + lex.peek().text + "'");
        if (!reversible && rate_count > 1)
            throw ParseError(line_no, "'->' takes at most one rate");
        if (reversible && rate_count == 1)
            throw ParseError(line_no, "'<->' needs two rates (forward, reverse) or none");

        int from = builder.complex_index(reactant);
        int to = builder.complex_index(product);
        builder.add_edge(from, to, forward, line_no);
        if (reversible) builder.add_edge(to, from, reverse, line_no);
    }
    return builder.build();
}

std::string serialize_network(const Network& net, const RateAssignment& rates) {
    std::ostringstream os;
    const auto& y = net.exponent_matrix();
    auto side = [&](int index) {
        std::ostringstream expr;
        bool first = true;
        for (int j = 0; j < net.num_species(); ++j) {
            int e = y(index, j);
            if (e == 0) continue;
            if (!first) expr << " + ";
            if (e > 1) expr << e << " ";
            expr << net.species()[j];
            first = false;
        }
        return expr.str();
    };
    for (const Edge& e : net.edges())
        os << side(e.first) << " -> " << side(e.second) << " @ " << rates.get(e).str() << "\n";
    return os.str();
}

}  // namespace crn
