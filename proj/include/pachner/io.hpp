#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "pachner/complex.hpp"

namespace pachner::io {

// Facet-list text: one facet per line as whitespace-separated labels, `#`
// comments, blank lines ignored. Dimension is inferred.
Complex parse_facet_list(std::string_view text);
std::string format_facet_list(const Complex& c);

// Structured document: {"dim": d, "facets": [[...], ...], "names": {...}}.
Complex parse_structured(std::string_view text);
std::string format_structured(const Complex& c);

// Dispatches on extension: `.json` is structured, anything else facet-list.
Complex load(const std::filesystem::path& path);
void save(const Complex& c, const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

// FNV-1a over the facet-list text; identifies a complex in trace files.
std::uint64_t digest(const Complex& c);
std::string digest_hex(const Complex& c);

}  // namespace pachner::io
