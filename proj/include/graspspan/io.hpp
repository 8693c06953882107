#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "graspspan/model.hpp"

namespace graspspan {

inline constexpr std::string_view kSchemaVersion = "1.0";
inline constexpr std::size_t kMaxDocumentBytes = 10u * 1024u * 1024u;

enum class DocumentKind { Hand, Object, ObjectSet };

std::string_view to_string(DocumentKind k);

struct DocumentEnvelope {
  std::string schema_version{kSchemaVersion};
  DocumentKind kind = DocumentKind::Hand;
  std::variant<HandRecord, ObjectSpec, std::vector<ObjectSpec>> payload;

  bool operator==(const DocumentEnvelope&) const = default;
};

/// Non-fatal findings, e.g. unknown fields. `path` is a JSON pointer.
struct Warning {
  std::string path;
  std::string message;

  bool operator==(const Warning&) const = default;
};

struct ParsedDocument {
  DocumentEnvelope envelope;
  std::vector<Warning> warnings;
};

/// Parses and validates a document. Throws ParseError with code SyntaxError
/// (line/column set), SchemaError (path set), UnsupportedVersion or
/// DocumentTooLarge. Invariant violations become SchemaErrors at the path of
/// the first violation.
ParsedDocument parse_document(std::string_view text);

struct ParsedHandDraft {
  HandDraft draft;
  std::vector<Warning> warnings;
};

/// Structural parse of a hand document without running validate_hand, so
/// callers can report every violation instead of the first.
ParsedHandDraft parse_hand_draft(std::string_view text);

/// Deterministic serialization: fixed key order, two-space indent, numbers
/// rounded to 6 decimals, trailing newline.
std::string write_document(const DocumentEnvelope& env);

/// Rounds to the 6-decimal precision used on disk.
double quantize(double v);

/// Reads a whole file; throws std::runtime_error when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace graspspan
