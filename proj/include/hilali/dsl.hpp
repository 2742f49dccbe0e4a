#ifndef HILALI_DSL_HPP
#define HILALI_DSL_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "hilali/model.hpp"

namespace hilali {

// Parse failure with position information. `semantic` distinguishes
// documents that are syntactically fine but violate a model rule
// (inhomogeneous differential, d^2 != 0) from plain syntax errors.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int column, bool semantic = false)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line(line),
          column(column),
          semantic(semantic) {}
    int line;
    int column;
    bool semantic;
};

struct ParsedModel {
    std::string name;
    SullivanModel model;
};

// Line-oriented model document:
//   model NAME
//   gen x 2
//   gen y 7
//   d x = 0
//   d y = x^4
// Polynomials: rational coefficients, '*', '^', '+', '-', parentheses.
// Every generator must be declared before use; degrees are >= 2; each
// differential must be homogeneous of degree deg(g)+1 and d^2 = 0 is
// checked before returning. Missing `d` lines default to zero.
ParsedModel parse_model(const std::string& text);

// Inverse of parse_model up to formatting: emits a document that parses
// back to an identical model.
std::string print_model(const SullivanModel& m, const std::string& name);

// Perturbation document for fibration building:
//   perturbation NAME
//   d f = -1*b
// Left sides must be fiber generators; right sides are polynomials over the
// combined (base then fiber) generator list. Returns one polynomial per
// fiber generator, over `shell`.
std::vector<Polynomial> parse_perturbation(const std::string& text, const SullivanModel& shell,
                                           std::size_t base_gen_count);

// Polynomial expression over an existing model (used by the tests and the
// perturbation parser).
Polynomial parse_polynomial(const std::string& text, const SullivanModel& m);

std::string print_polynomial(const Polynomial& p, const SullivanModel& m);

}  // namespace hilali

#endif
