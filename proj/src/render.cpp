#include "arcdiag/render.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "arcdiag/error.hpp"

namespace arcdiag {

namespace {

bool is_hex_color(const std::string& c) {
    if (c.size() != 4 && c.size() != 7) return false;
    if (c[0] != '#') return false;
    return std::all_of(c.begin() + 1, c.end(), [](unsigned char ch) { return std::isxdigit(ch) != 0; });
}

// Doubled coordinates keep odd spans exact: print v/2.
std::string half_units(long long twice) {
    std::string s = std::to_string(twice / 2);
    if (twice % 2) s += ".5";
    return s;
}

}  // namespace

void check_style(const RenderStyle& s) {
    if (s.spacing <= 0) throw Error("render: spacing must be positive");
    if (s.arc_width <= 0 || s.spine_width <= 0) throw Error("render: stroke widths must be positive");
    for (const auto* c : {&s.mountain_color, &s.pocket_color, &s.biarc_color, &s.spine_color})
        if (!is_hex_color(*c)) throw Error("render: invalid color '" + *c + "'");
}

std::string to_svg(const ArcDiagram& d, const RenderStyle& s) {
    check_style(s);
    check_well_formed(d);
    const long long sp = s.spacing, margin = s.spacing;
    const long long items = static_cast<long long>(d.spine.size());
    auto hs = halfcircles(d);
    // halfcircle radius in doubled units is (b - a) * spacing
    long long up = 0, down = 0;
    for (const auto& h : hs) {
        long long r2 = (h.b - h.a) * sp;
        (h.page == Page::Above ? up : down) = std::max(h.page == Page::Above ? up : down, (r2 + 1) / 2);
    }
    const long long width = 2 * margin + std::max(0LL, items - 1) * sp;
    const long long y0 = margin + up;
    const long long height = y0 + down + margin;
    auto x = [&](int k) { return margin + k * sp; };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "<line x1=\"" << margin / 2 << "\" y1=\"" << y0 << "\" x2=\"" << width - margin / 2 << "\" y2=\"" << y0
       << "\" stroke=\"" << s.spine_color << "\" stroke-width=\"" << s.spine_width << "\"/>\n";

    std::vector<std::vector<const Halfcircle*>> by_arc(d.arcs.size());
    for (const auto& h : hs) by_arc[h.arc].push_back(&h);
    for (std::size_t a = 0; a < d.arcs.size(); ++a) {
        auto& parts = by_arc[a];
        std::sort(parts.begin(), parts.end(), [](auto* p, auto* q) { return p->a < q->a; });
        const Arc& arc = d.arcs[a];
        const std::string& color = is_biarc(arc.shape) ? s.biarc_color
                                   : arc.shape == Shape::Mountain ? s.mountain_color
                                                                  : s.pocket_color;
        os << "<path d=\"M " << x(parts.front()->a) << ' ' << y0;
        for (const auto* h : parts) {
            std::string r = half_units((h->b - h->a) * sp);
            // sweep 1 runs clockwise, which is over the top when going right
            os << " A " << r << ' ' << r << " 0 0 " << (h->page == Page::Above ? 1 : 0) << ' ' << x(h->b) << ' ' << y0;
        }
        os << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << s.arc_width << "\"/>\n";
    }
    const long long tick = std::max(2LL, sp / 8), dot = std::max(2LL, sp / 10);
    for (long long k = 0; k < items; ++k) {
        const auto& it = d.spine[k];
        if (it.kind == SpineItem::Crossing) {
            os << "<line x1=\"" << x(k) << "\" y1=\"" << y0 - tick << "\" x2=\"" << x(k) << "\" y2=\"" << y0 + tick
               << "\" stroke=\"" << s.spine_color << "\" stroke-width=\"" << s.spine_width << "\"/>\n";
        } else {
            os << "<circle cx=\"" << x(k) << "\" cy=\"" << y0 << "\" r=\"" << dot << "\" fill=\"" << s.spine_color
               << "\"/>\n";
            if (s.labels)
                os << "<text x=\"" << x(k) << "\" y=\"" << y0 + 4 * dot << "\" font-size=\"" << 3 * dot
                   << "\" text-anchor=\"middle\">" << it.id << "</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace arcdiag
