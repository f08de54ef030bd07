#pragma once

// JSON serialisation with every number written to 17 significant digits, so
// doubles round-trip exactly and output is byte-identical across runs.

#include <complex>
#include <string>

#include <json.hpp>

namespace wsi::io {

using Json = nlohmann::ordered_json;

/// {"re": ..., "im": ...}
Json complex_json(std::complex<double> z);

/// Pretty-printed document (2-space indent) ending in a newline.
std::string dump(const Json& doc);

/// A double in the 17-significant-digit format used by every output.
std::string format_number(double x);

}  // namespace wsi::io
