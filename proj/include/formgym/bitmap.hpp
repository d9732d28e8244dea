#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace formgym {

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    bool operator==(const Rgb&) const = default;
};

struct Rect {
    int left = 0;
    int top = 0;
    int width = 0;
    int height = 0;

    int right() const { return left + width; }
    int bottom() const { return top + height; }
    // Closed on left/top, open on right/bottom.
    bool contains(int x, int y) const { return x >= left && x < right() && y >= top && y < bottom(); }
    bool intersects(const Rect& other) const {
        return left < other.right() && other.left < right() && top < other.bottom() && other.top < bottom();
    }
    bool inside(const Rect& outer) const {
        return left >= outer.left && top >= outer.top && right() <= outer.right() && bottom() <= outer.bottom();
    }
    int center_x() const { return left + width / 2; }
    int center_y() const { return top + height / 2; }
    long long area() const { return static_cast<long long>(width) * height; }

    bool operator==(const Rect&) const = default;
};

/// Row-major opaque RGB image.
class Bitmap {
public:
    Bitmap() = default;
    Bitmap(int width, int height, Rgb fill = {255, 255, 255});

    int width() const { return width_; }
    int height() const { return height_; }
    std::span<const std::uint8_t> bytes() const { return pixels_; }

    Rgb at(int x, int y) const;
    void set(int x, int y, Rgb color);
    /// Fills the intersection of `rect` and `clip` (default: whole image).
    void fill(const Rect& rect, Rgb color);
    void fill(const Rect& rect, Rgb color, const Rect& clip);

    bool operator==(const Bitmap&) const = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> pixels_;
};

/// 8-bit RGB PNG, no alpha, fixed compression settings so output is byte-stable.
std::vector<std::uint8_t> encode_png(const Bitmap& bitmap);
Bitmap decode_png(std::span<const std::uint8_t> png);

std::string bitmap_digest(const Bitmap& bitmap);

}  // namespace formgym
