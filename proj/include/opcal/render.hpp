#ifndef OPCAL_RENDER_HPP
#define OPCAL_RENDER_HPP

#include <string>

#include "opcal/ncpolynomial.hpp"
#include "opcal/rational_function.hpp"

namespace opcal {

enum class Format { Text, Latex, Json };

Format parse_format(const std::string& name); // "text" | "latex" | "json"

std::string render(const Polynomial& p, Format f);
std::string render(const RationalFunction& r, Format f); // normalized for display
std::string render(const NCPolynomial& p, Format f);
std::string render(const NCSeries& s, Format f);

} // namespace opcal

#endif
