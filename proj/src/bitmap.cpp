#include "formgym/bitmap.hpp"

#include <png.h>

#include <algorithm>
#include <cstring>

#include "formgym/digest.hpp"
#include "formgym/error.hpp"

namespace formgym {

Bitmap::Bitmap(int width, int height, Rgb fill) : width_(width), height_(height) {
    if (width <= 0 || height <= 0) throw Error(ErrorCode::InvalidArgument, "bitmap dimensions must be positive");
    pixels_.resize(static_cast<std::size_t>(width) * static_cast<std::size_t>(height) * 3);
    for (std::size_t i = 0; i < pixels_.size(); i += 3) {
        pixels_[i] = fill.r;
        pixels_[i + 1] = fill.g;
        pixels_[i + 2] = fill.b;
    }
}

Rgb Bitmap::at(int x, int y) const {
    const std::size_t i = (static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x)) * 3;
    return {pixels_[i], pixels_[i + 1], pixels_[i + 2]};
}

void Bitmap::set(int x, int y, Rgb color) {
    if (x < 0 || y < 0 || x >= width_ || y >= height_) return;
    const std::size_t i = (static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x)) * 3;
    pixels_[i] = color.r;
    pixels_[i + 1] = color.g;
    pixels_[i + 2] = color.b;
}

void Bitmap::fill(const Rect& rect, Rgb color) { fill(rect, color, Rect{0, 0, width_, height_}); }

void Bitmap::fill(const Rect& rect, Rgb color, const Rect& clip) {
    const int x0 = std::max({rect.left, clip.left, 0});
    const int y0 = std::max({rect.top, clip.top, 0});
    const int x1 = std::min({rect.right(), clip.right(), width_});
    const int y1 = std::min({rect.bottom(), clip.bottom(), height_});
    for (int y = y0; y < y1; ++y) {
        std::uint8_t* row = pixels_.data() + (static_cast<std::size_t>(y) * static_cast<std::size_t>(width_)) * 3;
        for (int x = x0; x < x1; ++x) {
            row[3 * x] = color.r;
            row[3 * x + 1] = color.g;
            row[3 * x + 2] = color.b;
        }
    }
}

namespace {

struct PngWriteBuffer {
    std::vector<std::uint8_t> bytes;
};

void write_to_buffer(png_structp png, png_bytep data, png_size_t length) {
    auto* buffer = static_cast<PngWriteBuffer*>(png_get_io_ptr(png));
    buffer->bytes.insert(buffer->bytes.end(), data, data + length);
}

struct PngReadCursor {
    std::span<const std::uint8_t> bytes;
    std::size_t offset = 0;
};

void read_from_buffer(png_structp png, png_bytep out, png_size_t length) {
    auto* cursor = static_cast<PngReadCursor*>(png_get_io_ptr(png));
    if (cursor->offset + length > cursor->bytes.size()) png_error(png, "truncated PNG");
    std::memcpy(out, cursor->bytes.data() + cursor->offset, length);
    cursor->offset += length;
}

}  // namespace

std::vector<std::uint8_t> encode_png(const Bitmap& bitmap) {
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw Error(ErrorCode::Io, "png_create_write_struct failed");
    png_infop info = png_create_info_struct(png);
    PngWriteBuffer buffer;
    if (!info || setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw Error(ErrorCode::Io, "PNG encoding failed");
    }
    png_set_write_fn(png, &buffer, write_to_buffer, nullptr);
    png_set_IHDR(png, info, static_cast<png_uint_32>(bitmap.width()), static_cast<png_uint_32>(bitmap.height()), 8,
                 PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_set_compression_level(png, 6);
    png_set_filter(png, PNG_FILTER_TYPE_BASE, PNG_FILTER_SUB);
    png_write_info(png, info);
    const auto bytes = bitmap.bytes();
    const std::size_t stride = static_cast<std::size_t>(bitmap.width()) * 3;
    for (int y = 0; y < bitmap.height(); ++y) {
        png_write_row(png, const_cast<png_bytep>(bytes.data() + static_cast<std::size_t>(y) * stride));
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
    return std::move(buffer.bytes);
}

Bitmap decode_png(std::span<const std::uint8_t> data) {
    if (data.size() < 8 || png_sig_cmp(data.data(), 0, 8) != 0) {
        throw Error(ErrorCode::MalformedDocument, "not a PNG stream");
    }
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw Error(ErrorCode::Io, "png_create_read_struct failed");
    png_infop info = png_create_info_struct(png);
    PngReadCursor cursor{data, 0};
    Bitmap result;
    if (!info || setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw Error(ErrorCode::MalformedDocument, "PNG decoding failed");
    }
    png_set_read_fn(png, &cursor, read_from_buffer);
    png_read_info(png, info);
    const int width = static_cast<int>(png_get_image_width(png, info));
    const int height = static_cast<int>(png_get_image_height(png, info));
    png_set_strip_16(png);
    png_set_strip_alpha(png);
    png_set_expand(png);
    png_set_gray_to_rgb(png);
    png_read_update_info(png, info);
    std::vector<std::uint8_t> row(png_get_rowbytes(png, info));
    result = Bitmap(width, height);
    for (int y = 0; y < height; ++y) {
        png_read_row(png, row.data(), nullptr);
        for (int x = 0; x < width; ++x) {
            result.set(x, y, {row[3 * x], row[3 * x + 1], row[3 * x + 2]});
        }
    }
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    return result;
}

std::string bitmap_digest(const Bitmap& bitmap) {
    // Dimensions are part of the identity of a screenshot.
    const std::string header = std::to_string(bitmap.width()) + "x" + std::to_string(bitmap.height()) + ":";
    return sha256_hex({std::span(reinterpret_cast<const std::uint8_t*>(header.data()), header.size()), bitmap.bytes()});
}

}  // namespace formgym
