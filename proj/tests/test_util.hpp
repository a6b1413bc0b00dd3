#pragma once

#include <gtest/gtest.h>

#include <optional>
#include <string>

#include "hornfix/error.hpp"
#include "hornfix/parser.hpp"

namespace hornfix::testing {

inline Program program(const std::string& text) {
  auto r = parse_program(text);
  if (!r.ok()) ADD_FAILURE() << format_diagnostic(r.diagnostics.front());
  return r.value.value_or(Program{});
}

inline Structure structure(const std::string& text) {
  auto r = parse_structure(text);
  if (!r.ok()) ADD_FAILURE() << format_diagnostic(r.diagnostics.front());
  return r.value.value_or(Structure{});
}

inline HornSentence horn(const std::string& text) {
  auto r = parse_horn(text);
  if (!r.ok()) ADD_FAILURE() << format_diagnostic(r.diagnostics.front());
  return r.value.value_or(HornSentence{});
}

inline LfpFormula lfp(const std::string& text) {
  auto r = parse_lfp(text);
  if (!r.ok()) ADD_FAILURE() << format_diagnostic(r.diagnostics.front());
  return r.value.value_or(LfpFormula{});
}

inline bool has_code(const std::vector<Diagnostic>& ds, DiagnosticCode code) {
  for (const auto& d : ds)
    if (d.code == code) return true;
  return false;
}

// The code of the Error thrown by f, if any.
template <typename F>
std::optional<ErrorCode> thrown(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace hornfix::testing
