#pragma once

#include <string>

#include "weylkit/normal_form.hpp"

namespace weylkit {

enum class RenderFormat { text, latex, json };

/// Deterministic rendering. Terms are ordered descending by (y, x); the
/// text form re-parses to the same normal form; the json form follows the
/// fixed schema byte-for-byte given canonical input.
std::string render(const NormalForm& form, RenderFormat format);

/// Inverse of render(..., json).
NormalForm normal_form_from_json(const std::string& text);

RenderFormat render_format_from_name(const std::string& name);

}  // namespace weylkit
