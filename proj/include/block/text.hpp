#pragma once

// Text form of elements and structure-constant export.
//
//   element := '0' | signed-term { ('+' | '-') term }
//   term    := [ coeff '*' ] basis
//   coeff   := int [ '/' posint ]
//   basis   := 'L[' int ',' nonnegint ']' | 'c'
//
// Whitespace between tokens is ignored. Under B(s,Z) the basis vector
// x^{a,i} is written L[a,i] as well.

#include "block/algebra.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace block {

enum class ParseErrorKind { Syntax, NegativeSecondIndex, CentralNotAllowed, ZeroDenominator };

class ParseError : public std::runtime_error {
  public:
    ParseError(ParseErrorKind kind, std::size_t offset, const std::string &what);
    [[nodiscard]] ParseErrorKind kind() const { return kind_; }
    // Byte offset into the input where the problem starts.
    [[nodiscard]] std::size_t offset() const { return offset_; }

  private:
    ParseErrorKind kind_;
    std::size_t offset_;
};

Element parse_element(std::string_view text, const AlgebraVariant &variant = AlgebraVariant::b());
std::string render_element(const Element &x);

enum class ExportFormat { Json, Csv };

struct BracketRecord {
    BasisIndex left;
    BasisIndex right;
    std::vector<std::pair<BasisIndex, Scalar>> terms;
    Scalar central;
    friend bool operator==(const BracketRecord &, const BracketRecord &) = default;
};

// One record per ordered pair of window basis vectors with a nonzero bracket,
// sorted by (left, right).
std::vector<BracketRecord> structure_constants(const AlgebraVariant &variant, const Window &window);

// Throws std::ios_base::failure when the stream goes bad.
void export_structure_constants(const AlgebraVariant &variant, const Window &window, ExportFormat format,
                                std::ostream &out);

// Readers for the two export formats, returning the records in file order.
std::vector<BracketRecord> read_structure_json(std::istream &in);
std::vector<BracketRecord> read_structure_csv(std::istream &in);

} // namespace block
