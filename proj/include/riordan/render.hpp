#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "riordan/triangle.hpp"

namespace riordan {

enum class Format { Table, Json, Csv };

Format parse_format(std::string_view name);

/// Rows of exact values; a sequence is rendered as a single row.
using Rows = std::vector<std::vector<Rational>>;

/// table: right-aligned grid, one row per line; json: array of rows of
/// decimal strings; csv: comma-separated, one row per line. Exact in every
/// format (non-integers appear as "p/q"). No trailing newline.
std::string render(const Rows& rows, Format format);
std::string render(const Triangle& t, Format format);

}  // namespace riordan
