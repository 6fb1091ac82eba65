#pragma once

#include <string>

#include "arcdiag/diagram.hpp"

namespace arcdiag {

struct RenderStyle {
    int spacing = 40;  // user units between consecutive spine items
    int arc_width = 2;
    int spine_width = 1;
    std::string mountain_color = "#1f77b4";
    std::string pocket_color = "#2ca02c";
    std::string biarc_color = "#d62728";
    std::string spine_color = "#444444";
    bool labels = true;
};

// Throws Error for non-positive sizes or colors that are not #rgb/#rrggbb.
void check_style(const RenderStyle& s);

// SVG 1.1 document.  Spine item k sits at x = margin + k*spacing; every
// halfcircle is a single elliptical-arc path command.
std::string to_svg(const ArcDiagram& d, const RenderStyle& s = {});

}  // namespace arcdiag
