#pragma once

#include <cctype>
#include <cstdio>
#include <fstream>
#include <png.h>
#include <string>
#include <vector>

#include "scmine/errors.hpp"
#include "scmine/frame.hpp"

namespace scmine {

namespace detail {

// Skips PNM whitespace and '#' comment lines, then reads one integer.
inline int pnm_int(std::istream& in, const std::string& path) {
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {}
        } else if (!std::isspace(c)) {
            in.unget();
            break;
        }
    }
    int value;
    if (!(in >> value))
        throw io_error("malformed PNM header: " + path);
    return value;
}

inline Raster load_ppm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open image: " + path);
    char magic[2];
    in.read(magic, 2);
    if (!in || magic[0] != 'P' || (magic[1] != '6' && magic[1] != '3'))
        throw io_error("not a P3/P6 PPM file: " + path);
    const bool binary = magic[1] == '6';

    Raster r;
    r.width = pnm_int(in, path);
    r.height = pnm_int(in, path);
    const int maxval = pnm_int(in, path);
    if (r.width <= 0 || r.height <= 0 || maxval <= 0 || maxval > 255)
        throw io_error("unsupported PPM geometry: " + path);
    r.rgb.resize(r.pixel_count() * 3);

    if (binary) {
        in.get(); // single whitespace after maxval
        in.read(reinterpret_cast<char*>(r.rgb.data()),
                static_cast<std::streamsize>(r.rgb.size()));
        if (static_cast<std::size_t>(in.gcount()) != r.rgb.size())
            throw io_error("truncated PPM data: " + path);
    } else {
        for (auto& byte : r.rgb) {
            int v;
            if (!(in >> v) || v < 0 || v > maxval)
                throw io_error("truncated PPM data: " + path);
            byte = static_cast<std::uint8_t>(v);
        }
    }
    return r;
}

inline Raster load_png(const std::string& path) {
    std::FILE* fp = std::fopen(path.c_str(), "rb");
    if (!fp) throw io_error("cannot open image: " + path);

    png_structp png =
        png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        if (png) png_destroy_read_struct(&png, &info, nullptr);
        std::fclose(fp);
        throw io_error("libpng init failed: " + path);
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        std::fclose(fp);
        throw io_error("invalid PNG data: " + path);
    }

    png_init_io(png, fp);
    png_read_info(png, info);

    // Normalize everything to 8-bit RGB.
    png_set_strip_16(png);
    png_set_palette_to_rgb(png);
    png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    png_set_gray_to_rgb(png);
    png_set_strip_alpha(png);
    png_read_update_info(png, info);

    Raster r;
    r.width = static_cast<int>(png_get_image_width(png, info));
    r.height = static_cast<int>(png_get_image_height(png, info));
    r.rgb.resize(r.pixel_count() * 3);

    std::vector<png_bytep> row_ptrs(r.height);
    for (int y = 0; y < r.height; ++y)
        row_ptrs[y] = r.rgb.data() + static_cast<std::size_t>(y) * r.width * 3;
    png_read_image(png, row_ptrs.data());

    png_destroy_read_struct(&png, &info, nullptr);
    std::fclose(fp);
    return r;
}

} // namespace detail

/// Loads a .ppm (P3/P6) or .png image as an 8-bit RGB raster.
inline Raster load_image(const std::string& path) {
    const auto dot = path.find_last_of('.');
    const std::string ext = dot == std::string::npos ? "" : path.substr(dot);
    if (ext == ".ppm") return detail::load_ppm(path);
    if (ext == ".png") return detail::load_png(path);
    throw io_error("unsupported image extension: " + path);
}

} // namespace scmine
