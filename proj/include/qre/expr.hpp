#pragma once

#include <string>
#include <vector>

#include "qre/ncpoly.hpp"

namespace qre {

// Parser for the expression grammar used by presentation files, R-matrix
// files, golden files and CLI flags:
//
//   expr    := term (('+'|'-') term)*
//   term    := unary (('*'|'/') unary)*
//   unary   := '-' unary | primary
//   primary := base ('^' integer)?
//   base    := integer | name | '(' expr ')'
//
// Names resolve to generators first, then to declared parameters. Division
// and negative powers require a scalar (degree-zero) operand.
NCPoly<QScalar> parse_ncpoly(const typename FieldOps<QScalar>::Context& ctx,
                             const std::vector<std::string>& generators,
                             const std::string& text, int line_offset = 1);

QScalar parse_scalar(const ParamSetPtr& ps, const std::string& text, int line_offset = 1);

} // namespace qre
