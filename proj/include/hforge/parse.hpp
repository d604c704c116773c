#ifndef HFORGE_PARSE_HPP
#define HFORGE_PARSE_HPP

#include "hforge/field.hpp"

namespace hforge {

// Parses the UTF-8 expression grammar (integers, rationals via '/',
// identifiers, + - * / ^, function application, parentheses, and the
// F_{(i,j)}(...) spelling of formal partials) and normalizes on the chart.
// Throws engine_error("parse", ...) with a character position on bad input.
FieldElement parse_expression(const ChartPtr& chart, const std::string& text);

}  // namespace hforge

#endif
