#ifndef AGC_IO_HPP
#define AGC_IO_HPP

#include <string>
#include <vector>

#include "agc/factor.hpp"
#include "agc/multipoly.hpp"

namespace agc {

/// Polynomial expression parser.  Grammar:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor (['*'] factor)*
///   factor := base ('^' uint)?
///   base   := IDENT | UINT | '(' expr ')'
/// Identifiers name either one of `vars` or a tower level generator (which
/// acts as a constant).  Errors carry line/column positions.
MultiPoly parse_poly(const std::string& text, const LevelPtr& level,
                     const std::vector<std::string>& vars, int line_offset = 0);

FieldElement parse_field_element(const std::string& text, const LevelPtr& level,
                                 int line_offset = 0);

/// Field description block:
///   p <prime>
///   ext <name> <monic poly in name over the previous levels>
/// Lines may be interleaved with blank lines and '#' comments.
/// Returns the tower; `consumed` (if given) is set to the number of lines read.
FieldTower parse_field_block(const std::vector<std::string>& lines, Rng& rng,
                             size_t* consumed = nullptr);

struct CurveFile {
    FieldTower tower;
    MultiPoly form; // homogeneous, in variables X, Y, Z
};

/// Field block followed by `curve <homogeneous polynomial in X,Y,Z>`.
CurveFile parse_curve_file(const std::string& text, Rng& rng);

/// Projective point "(a:b:c)" with field-element coordinate expressions.
std::vector<FieldElement> parse_point(const std::string& text, const LevelPtr& level);
std::string format_point(const std::vector<FieldElement>& coords);

std::vector<std::string> split_lines(const std::string& text);

} // namespace agc

#endif
