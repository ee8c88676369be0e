#ifndef QX_PARSER_HPP
#define QX_PARSER_HPP

#include "qx/ncalg.hpp"

namespace qx {

/// Syntax error with 1-based line/column position.
class ParseError : public NcError {
public:
    ParseError(const std::string& what, int line, int col)
        : NcError(what + " at " + std::to_string(line) + ":" + std::to_string(col)),
          line_(line),
          col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_, col_;
};

/// Scalar expression: integer/rational literals, the variables of `vars`,
/// operators + - * / ^ (integer exponents, negative allowed), parentheses.
Scalar parse_scalar(const std::string& src, VarSetPtr vars);

/// Element expression over a presentation:
///   element := term (('+'|'-') term)*
///   term    := factor ('*' factor)*
///   factor  := gen ('^' nat)? | scalar-atom ('^' int)? | scalar-atom '/' ...
///   gen     := ('x'|'t'|'y'|'u'|'v') '[' nat (',' nat)? ']'
/// Generators are canonicalized on construction (x[2,1] in case O becomes
/// q^-1 x[1,2]); the result round-trips with Element::str().
Element parse_element(const std::string& src, const Presentation* p);

}  // namespace qx

#endif
