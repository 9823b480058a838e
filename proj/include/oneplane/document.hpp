#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "oneplane/drawing.hpp"

namespace oneplane {

/// The text does not follow the drawing-document format (bad JSON, missing
/// or mistyped fields, unknown ids).
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses a `.opg.json` drawing document. Throws DocumentError for format
/// problems and DrawingError when the described drawing breaks an invariant.
OnePlaneDrawing parse_drawing(std::string_view document);

/// Serializes with stable field order and two-space indentation.
std::string serialize_drawing(const OnePlaneDrawing& d);

OnePlaneDrawing load_drawing(const std::filesystem::path& path);
void save_drawing(const OnePlaneDrawing& d, const std::filesystem::path& path);

/// Writes text to a file, creating parent directories.
void write_text(const std::filesystem::path& path, std::string_view text);
std::string read_text(const std::filesystem::path& path);

}  // namespace oneplane
