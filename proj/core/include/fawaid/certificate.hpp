#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fawaid/expr.hpp"

namespace fawaid {

inline constexpr const char* kEngineVersion = "fawaid/0.1.0";
inline constexpr const char* kCertificateSchema = "fawaid.certificate/1";

/// Signed outcome of a decision or bounded search. The no-rational-solutions
/// outcome is reserved for the complete decision paths (rational-root and
/// exact k-th-root tests); bounded searches can only report none-below-bound.
struct Certificate {
  enum class Outcome { SolutionsFound, NoneBelowBound, NoRationalSolutionsProved };

  struct Bound {
    std::string kind;  // "integer-bound" | "height" | "denominator-bound" | "k-bound"
    Integer value;
    bool operator==(const Bound&) const = default;
  };

  struct Solution {
    Assignment values;
    bool degenerate = false;  // some unknown is zero
    bool operator==(const Solution&) const = default;
  };

  int problem_id = 0;
  std::string engine;
  std::string engine_version = kEngineVersion;
  std::string variant;  // catalog variant in force, empty for the default
  Assignment bindings;
  std::optional<Bound> bound;
  Outcome outcome = Outcome::NoneBelowBound;
  std::vector<Solution> solutions;  // canonically sorted
  std::vector<std::string> notes;
  /// Wall time; excluded from canonical serializations so identical inputs
  /// emit identical bytes.
  long elapsed_ms = 0;

  bool operator==(const Certificate& o) const;
};

std::string to_string(Certificate::Outcome o);
std::optional<Certificate::Outcome> outcome_from_string(std::string_view s);

enum class EmitFormat { Json, Markdown, Csv };
std::optional<EmitFormat> format_from_string(std::string_view s);

/// Canonical serialization; stable across runs for identical inputs.
/// Throws std::invalid_argument on an internally inconsistent certificate
/// (nonempty solutions with a none-below-bound outcome or vice versa).
std::string emit_certificate(const Certificate& c, EmitFormat format,
                             bool include_timing = false);

/// Inverse of the JSON emitter, used by round-trip checks and consumers.
Certificate parse_certificate_json(const std::string& text);

/// Sorts solutions by the tuple of unknown values (name-major) and removes
/// duplicates; every engine calls this before emitting.
void canonicalize_solutions(std::vector<Certificate::Solution>& sols);

}  // namespace fawaid
