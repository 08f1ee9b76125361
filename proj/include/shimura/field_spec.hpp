#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "shimura/abfield.hpp"

namespace shimura::field_spec {

// Grammar (whitespace between tokens is ignored):
//   spec   := "Q" | quad | cycsub | comp
//   quad   := "Q(" sq { "," sq } ")"      sq := "sqrt(" int ")"
//   cycsub := "cycsub(" int ";" int { "," int } ")"
//   comp   := "comp(" spec "," spec ")"
struct FieldSpec {
  enum class Kind { kRationals, kQuadratic, kCyclotomicSubfield, kCompositum };

  Kind kind = Kind::kRationals;
  // kQuadratic: the radicands. kCyclotomicSubfield: modulus then generators.
  std::vector<std::int64_t> values;
  // kCompositum: exactly two operands.
  std::vector<FieldSpec> parts;

  bool operator==(const FieldSpec&) const = default;
};

/// Syntax only; throws ParseError carrying the offending offset.
FieldSpec parse(std::string_view text);

/// Canonical text: no whitespace, "Q(sqrt(a),sqrt(b))", "cycsub(m;g,h)",
/// "comp(x,y)".
std::string print(const FieldSpec& spec);

/// Builds the field; several radicands fold into iterated composita.
/// Semantic problems (non-squarefree radicand, generator sharing a factor
/// with the modulus, ...) throw InvalidArgument.
abfield::AbelianField build(const FieldSpec& spec);

inline abfield::AbelianField parse_field(std::string_view text) {
  return build(parse(text));
}

}  // namespace shimura::field_spec
