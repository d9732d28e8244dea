#!/usr/bin/env python3
"""Rasterize printable ASCII into the 1-bit glyph atlas compiled into the renderer.

The output is committed; rerun only when changing the font or cell size:

    python3 tools/gen_glyph_atlas.py > src/glyph_atlas.inc
"""
import argparse

from PIL import Image, ImageDraw, ImageFont

CELL_W = 8
CELL_H = 15


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--font", default="/usr/share/fonts/truetype/dejavu/DejaVuSansMono.ttf")
    parser.add_argument("--size", type=int, default=13)
    parser.add_argument("--threshold", type=int, default=110)
    args = parser.parse_args()

    font = ImageFont.truetype(args.font, args.size)
    ascent, _ = font.getmetrics()
    baseline = CELL_H - 3

    print("// Generated by tools/gen_glyph_atlas.py; do not edit.")
    print(f"// Font: {args.font.rsplit('/', 1)[-1]} at {args.size}px, threshold {args.threshold}.")
    print(f"constexpr int kAtlasCellWidth = {CELL_W};")
    print(f"constexpr int kAtlasCellHeight = {CELL_H};")
    print("constexpr char kAtlasFirstChar = 32;")
    print("constexpr char kAtlasLastChar = 126;")
    print(f"constexpr unsigned char kAtlasRows[95][{CELL_H}] = {{")
    for code in range(32, 127):
        img = Image.new("L", (CELL_W, CELL_H), 0)
        draw = ImageDraw.Draw(img)
        draw.text((0, baseline - ascent), chr(code), font=font, fill=255)
        rows = []
        for y in range(CELL_H):
            bits = 0
            for x in range(CELL_W):
                if img.getpixel((x, y)) >= args.threshold:
                    bits |= 0x80 >> x
            rows.append(f"0x{bits:02x}")
        label = chr(code).replace("\\", "backslash")
        print(f"    {{{', '.join(rows)}}},  // '{label}'")
    print("};")


if __name__ == "__main__":
    main()
