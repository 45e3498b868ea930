#include "stylemb/png_io.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <memory>
#include <vector>

#include "stylemb/errors.hpp"

namespace stylemb {

namespace {

struct FileCloser {
    void operator()(FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<FILE, FileCloser>;

void png_error_to_exception(png_structp png, png_const_charp msg) {
    (void)png;
    throw FormatError(std::string("png: ") + msg);
}

void png_warning_ignore(png_structp, png_const_charp) {}

}  // namespace

void save_png(const Image& img, const std::string& path) {
    validate_image(img, "save_png");
    FilePtr fp(std::fopen(path.c_str(), "wb"));
    if (!fp) throw IoError("save_png: cannot open for writing: " + path);

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr,
                                              png_error_to_exception, png_warning_ignore);
    if (!png) throw IoError("save_png: png_create_write_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw IoError("save_png: png_create_info_struct failed");
    }

    std::vector<png_byte> row(static_cast<size_t>(img.width) * 3);
    try {
        png_init_io(png, fp.get());
        png_set_IHDR(png, info, static_cast<png_uint_32>(img.width),
                     static_cast<png_uint_32>(img.height), 8, PNG_COLOR_TYPE_RGB,
                     PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
        png_write_info(png, info);
        for (int y = 0; y < img.height; ++y) {
            const float* src = img.pixel(0, y);
            for (size_t i = 0; i < row.size(); ++i) {
                row[i] = static_cast<png_byte>(std::lround(src[i] * 255.0f));
            }
            png_write_row(png, row.data());
        }
        png_write_end(png, nullptr);
    } catch (...) {
        png_destroy_write_struct(&png, &info);
        throw;
    }
    png_destroy_write_struct(&png, &info);
}

Image load_png(const std::string& path) {
    FilePtr fp(std::fopen(path.c_str(), "rb"));
    if (!fp) throw IoError("load_png: cannot open: " + path);

    unsigned char sig[8];
    if (std::fread(sig, 1, 8, fp.get()) != 8 || png_sig_cmp(sig, 0, 8) != 0) {
        throw FormatError("load_png: not a PNG file: " + path);
    }

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr,
                                             png_error_to_exception, png_warning_ignore);
    if (!png) throw IoError("load_png: png_create_read_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw IoError("load_png: png_create_info_struct failed");
    }

    Image img;
    try {
        png_init_io(png, fp.get());
        png_set_sig_bytes(png, 8);
        png_read_info(png, info);

        png_uint_32 w = png_get_image_width(png, info);
        png_uint_32 h = png_get_image_height(png, info);
        int depth = png_get_bit_depth(png, info);
        int color = png_get_color_type(png, info);
        if (depth != 8 || color != PNG_COLOR_TYPE_RGB) {
            throw FormatError("load_png: expected 8-bit RGB, got depth " + std::to_string(depth) +
                              " color type " + std::to_string(color) + ": " + path);
        }
        if (w < kMinImageSize || h < kMinImageSize) {
            throw FormatError("load_png: image smaller than 16x16: " + path);
        }

        img = Image(static_cast<int>(w), static_cast<int>(h));
        std::vector<png_byte> row(static_cast<size_t>(w) * 3);
        for (png_uint_32 y = 0; y < h; ++y) {
            png_read_row(png, row.data(), nullptr);
            float* dst = img.pixel(0, static_cast<int>(y));
            for (size_t i = 0; i < row.size(); ++i) {
                dst[i] = static_cast<float>(row[i]) / 255.0f;
            }
        }
        png_read_end(png, nullptr);
    } catch (const FormatError&) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw;
    } catch (...) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw;
    }
    png_destroy_read_struct(&png, &info, nullptr);
    return img;
}

}  // namespace stylemb
