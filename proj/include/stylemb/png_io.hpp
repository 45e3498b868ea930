#pragma once

#include <string>

#include "stylemb/image.hpp"

namespace stylemb {

// 8-bit RGB PNG, no alpha. save/load round-trips every channel within 1/255.
// Throws IoError when the path is unusable and FormatError for anything that
// is not a well-formed 8-bit RGB PNG of at least 16x16.
void save_png(const Image& img, const std::string& path);
Image load_png(const std::string& path);

}  // namespace stylemb
