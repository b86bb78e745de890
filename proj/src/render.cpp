#include "simpend/render.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace simpend {

namespace {

// Top row at y=20, bottom row at y=120, point k at x=20k.
constexpr int kTopY = 20;
constexpr int kBottomY = 120;

int svg_x(int k) { return 20 * k; }

std::string num(int v) { return std::to_string(v); }

void svg_arc(std::string& out, int left, int right, int y, int sweep) {
    const int r = 10 * (right - left);
    out += "  <path d=\"M " + num(svg_x(left)) + " " + num(y) + " A " + num(r) + " " + num(r) +
           " 0 0 " + num(sweep) + " " + num(svg_x(right)) + " " + num(y) + "\"/>\n";
}

void svg_label(std::string& out, int x, int y, int value) {
    out += "  <text x=\"" + num(x) + "\" y=\"" + num(y) + "\">" + num(value) + "</text>\n";
}

}  // namespace

std::string render_svg(const Frieze& d, int w) {
    const std::vector<RenderItem> items = render_model(d, w);
    const int width = 20 * (w + 1);

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width) +
           "\" height=\"140\" viewBox=\"0 0 " + num(width) + " 140\">\n";
    out += " <g font-family=\"monospace\" font-size=\"10\" text-anchor=\"middle\" "
           "fill=\"black\">\n";
    for (int k = 1; k <= w; ++k) {
        svg_label(out, svg_x(k), kTopY - 8, k);
        svg_label(out, svg_x(k), kBottomY + 14, -k);
    }
    out += " </g>\n";
    out += " <g fill=\"black\">\n";
    for (int k = 1; k <= w; ++k) {
        out += "  <circle cx=\"" + num(svg_x(k)) + "\" cy=\"" + num(kTopY) + "\" r=\"2\"/>\n";
        out += "  <circle cx=\"" + num(svg_x(k)) + "\" cy=\"" + num(kBottomY) + "\" r=\"2\"/>\n";
    }
    out += " </g>\n";
    out += " <g stroke=\"black\" stroke-width=\"1.5\" fill=\"none\">\n";
    for (const RenderItem& it : items) {
        switch (it.kind) {
            case SegmentKind::cup:
                // Bows downward from the top row.
                svg_arc(out, it.a, it.b, kTopY, 1);
                break;
            case SegmentKind::cap:
                // Bows upward from the bottom row; a < b < 0.
                svg_arc(out, -it.b, -it.a, kBottomY, 0);
                break;
            case SegmentKind::transversal:
                out += "  <line x1=\"" + num(svg_x(it.b)) + "\" y1=\"" + num(kTopY) + "\" x2=\"" +
                       num(svg_x(-it.a)) + "\" y2=\"" + num(kBottomY) + "\"/>\n";
                break;
        }
    }
    out += " </g>\n";
    out += "</svg>\n";
    return out;
}

std::string render_ascii(const Frieze& d, int w) {
    const std::vector<RenderItem> items = render_model(d, w);

    // Rows: labels, seven rows of art, labels. Point k sits at column 4k-2.
    constexpr int kArtRows = 7;
    const int cols = 4 * w + 1;
    std::vector<std::string> grid(kArtRows + 2, std::string(static_cast<std::size_t>(cols), ' '));
    const auto col = [](int k) { return 4 * k - 2; };
    const auto put = [&](int row, int c, char ch) {
        grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] = ch;
    };
    // Right-aligned so the ones digit sits on the point column.
    const auto label = [&](int row, int k, int value) {
        const std::string s = std::to_string(value);
        for (std::size_t i = 0; i < s.size(); ++i)
            put(row, col(k) - static_cast<int>(s.size() - 1 - i), s[static_cast<std::size_t>(i)]);
    };

    for (int k = 1; k <= w; ++k) {
        label(0, k, k);
        label(kArtRows + 1, k, -k);
    }

    // Transversals first; cups and caps overwrite where they meet.
    for (const RenderItem& it : items) {
        if (it.kind != SegmentKind::transversal) continue;
        const int top = col(it.b);
        const int bottom = col(-it.a);
        const char ch = top == bottom ? '|' : (bottom > top ? '\\' : '/');
        for (int r = 1; r <= kArtRows; ++r) {
            const double t = static_cast<double>(r - 1) / (kArtRows - 1);
            put(r, static_cast<int>(std::lround(top + t * (bottom - top))), ch);
        }
    }
    for (const RenderItem& it : items) {
        if (it.kind == SegmentKind::cup) {
            put(1, col(it.a), '\\');
            put(1, col(it.b), '/');
            for (int c = col(it.a) + 1; c < col(it.b); ++c) put(1, c, '_');
        } else if (it.kind == SegmentKind::cap) {
            put(kArtRows, col(-it.b), '/');
            put(kArtRows, col(-it.a), '\\');
            for (int c = col(-it.b) + 1; c < col(-it.a); ++c) put(kArtRows, c, '-');
        }
    }

    std::string out;
    for (const std::string& row : grid) {
        const std::size_t end = row.find_last_not_of(' ');
        out.append(row, 0, end == std::string::npos ? 0 : end + 1);
        out += '\n';
    }
    return out;
}

}  // namespace simpend
