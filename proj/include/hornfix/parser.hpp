#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hornfix/ast.hpp"
#include "hornfix/structure.hpp"

namespace hornfix {

// Either a value or a non-empty diagnostic list.
template <typename T>
struct ParseResult {
  std::optional<T> value;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return value.has_value() && diagnostics.empty(); }
  explicit operator bool() const { return ok(); }
};

// program  := (decl | rule)*
// decl     := "const" name+ "." | "rel" (name "/" int)+ "."
// rule     := atom [":-" [lit ("," lit)*]] "."
// lit      := atom | "!" atom | term "=" term | term "!=" term
//           | "forall" var+ ":" atom
// Identifiers declared with `const` and integer literals are constants; all
// other term identifiers are variables. `%` starts a line comment.
ParseResult<Program> parse_program(std::string_view text);

// exists R/1 .. forall x y .. ( alpha & .. & beta -> head ; .. )
ParseResult<HornSentence> parse_horn(std::string_view text);

// exists u [lfp z1 z2, Z: exists w ( C1 | C2 )] (u,u)
ParseResult<LfpFormula> parse_lfp(std::string_view text);

// structure { size N  const s = 0  rel E/2 { (0,1) } }
ParseResult<Structure> parse_structure(std::string_view text);

std::string print(const Program& program);
std::string print(const HornSentence& sentence);
std::string print(const LfpFormula& formula);
std::string print(const SimLfpSystem& system);
std::string print(const Structure& structure);
std::string print(const Rule& rule);
std::string print(const Literal& literal);
std::string print(const Relation& relation);

}  // namespace hornfix
