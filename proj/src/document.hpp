#ifndef KRAW_DOCUMENT_HPP
#define KRAW_DOCUMENT_HPP

#include <string>

#include "verify.hpp"

namespace kraw {

enum class Format { json, csv, plain };

std::optional<Format> parse_format(std::string_view name);

std::optional<Method> parse_method(std::string_view name);

// Each renderer returns the complete machine-readable document, newline
// terminated. JSON carries the versioned envelope (schema_version, command,
// parameters, payload); CSV starts with a header row; plain is
// space-separated values. Rationals render as canonical "p/q" strings
// everywhere except the decimal display column of plain roots output.

// method may be "definition", "gf", "recurrence" or "all"
std::string render_coeffs(long n, long s, long m, const std::string& method, Format format);

std::string render_table(long n, long s, long m_max, Format format);

std::string render_roots(long n, long s, long m, const Rational& width, Format format);

std::string render_gram(long n, long s, Format format);

std::string render_verify(const VerifyOptions& options, Format format, bool& all_passed);

}  // namespace kraw

#endif
