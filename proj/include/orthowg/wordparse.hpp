// Surface syntax for trace words. Whitespace-separated tokens, one word per
// trace, `;` between traces in a product:
//   o a1 o^-1 a2          Tr(O A1 O^-1 A2)
//   o2 a1^t I o2^-1 a1    a second independent Haar matrix, transpose, identity
//   a1 a2 ; o I o^-1 I    deterministic trace times a Haar trace
// Tokens `o`, `oN`, with optional `^-1` are Haar factors; everything else is a
// matrix symbol, with optional `^t`.
#pragma once

#include <orthowg/trace.hpp>

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace orthowg {

struct ParseError : std::runtime_error {
    ParseError(size_t position, const std::string& message)
        : std::runtime_error("parse error at position " + std::to_string(position) + ": " +
                             message),
          position(position) {}
    size_t position;
};

struct HaarFactor {
    int label = 1;
    bool inverse = false;
    friend bool operator==(const HaarFactor&, const HaarFactor&) = default;
};
struct SymFactor {
    std::string id;
    bool transpose = false;
    friend bool operator==(const SymFactor&, const SymFactor&) = default;
};
using Factor = std::variant<HaarFactor, SymFactor>;

struct WordAst {
    std::vector<std::vector<Factor>> traces;
    friend bool operator==(const WordAst&, const WordAst&) = default;
};

WordAst parse_word(const std::string& text);
std::string print_word(const WordAst& ast);

// Lowers the AST to the engine form: traces with Haar factors are rotated to
// start at a Haar factor and adjacent O's get an implicit identity slot;
// O-free traces become plain deterministic traces.
WordSpec to_word_spec(const WordAst& ast);

}  // namespace orthowg
