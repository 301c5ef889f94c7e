#pragma once

#include <string>
#include <string_view>

#include "longcycle/engine.hpp"

namespace longcycle {

enum class OutputFormat { KeyValue, Json };

// Key-value mode: one "key=value" line per field. Json mode: one object.
std::string format_certificate(const Certificate& cert, OutputFormat format);

// Accepts the output of format_certificate, and also a JSON document holding
// the certificate under a "certificate" key. Unknown keys are ignored.
// Throws SyntaxError on malformed or incomplete input.
Certificate parse_certificate(std::string_view text, OutputFormat format);

// "extend 10 11" or "replace C3a 11 14".
std::string format_step(const EngineStep& step);

}  // namespace longcycle
