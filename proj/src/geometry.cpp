#include "listingforge/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "listingforge/errors.hpp"

namespace lf::geom {

Box union_bounds(std::span<const Box> boxes) {
  if (boxes.empty()) throw UsageError("union of no boxes");
  Box u = boxes[0];
  for (const Box& b : boxes.subspan(1)) {
    u.x0 = std::min(u.x0, b.x0);
    u.y0 = std::min(u.y0, b.y0);
    u.x1 = std::max(u.x1, b.x1);
    u.y1 = std::max(u.y1, b.y1);
  }
  return u;
}

bool mergeable(const Box& a, const Box& b, double gap_px) {
  const double g = gap_px / 2.0;
  return a.x0 - g <= b.x1 + g && b.x0 - g <= a.x1 + g &&
         a.y0 - g <= b.y1 + g && b.y0 - g <= a.y1 + g;
}

Box expand_box(const Box& b, double margin_frac, double image_w,
               double image_h) {
  if (!b.valid()) throw InputError("degenerate box");
  if (margin_frac < 0.0 || margin_frac > 1.0) {
    throw InputError("margin_frac outside [0,1]");
  }
  const double mx = margin_frac * b.width();
  const double my = margin_frac * b.height();
  Box out{b.x0 - mx, b.y0 - my, b.x1 + mx, b.y1 + my};
  out.x0 = std::clamp(out.x0, 0.0, image_w);
  out.x1 = std::clamp(out.x1, 0.0, image_w);
  out.y0 = std::clamp(out.y0, 0.0, image_h);
  out.y1 = std::clamp(out.y1, 0.0, image_h);
  return out;
}

std::vector<Box> merge_overlapping(std::vector<Box> boxes, double gap_px) {
  // Component merging can create unions that newly overlap, so iterate to a
  // fixpoint; each pass strictly reduces the box count or terminates.
  bool changed = true;
  while (changed && boxes.size() > 1) {
    changed = false;
    std::vector<Box> merged;
    std::vector<bool> used(boxes.size(), false);
    for (std::size_t i = 0; i < boxes.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      Box comp = boxes[i];
      // BFS over the mergeable graph from seed i.
      bool grew = true;
      while (grew) {
        grew = false;
        for (std::size_t j = 0; j < boxes.size(); ++j) {
          if (used[j]) continue;
          if (mergeable(comp, boxes[j], gap_px)) {
            used[j] = true;
            comp.x0 = std::min(comp.x0, boxes[j].x0);
            comp.y0 = std::min(comp.y0, boxes[j].y0);
            comp.x1 = std::max(comp.x1, boxes[j].x1);
            comp.y1 = std::max(comp.y1, boxes[j].y1);
            grew = true;
            changed = true;
          }
        }
      }
      merged.push_back(comp);
    }
    boxes = std::move(merged);
  }
  std::sort(boxes.begin(), boxes.end(), [](const Box& a, const Box& b) {
    return a.y0 != b.y0 ? a.y0 < b.y0 : a.x0 < b.x0;
  });
  return boxes;
}

Box enclosing_square(std::span<const Box> boxes, double image_w,
                     double image_h) {
  if (boxes.empty()) throw UsageError("enclosing_square of no boxes");
  const Box u = union_bounds(boxes);
  const double side = std::max(u.width(), u.height());
  if (side > std::min(image_w, image_h)) {
    return Box{0, 0, image_w, image_h};
  }
  const double cx = (u.x0 + u.x1) / 2.0;
  const double cy = (u.y0 + u.y1) / 2.0;
  const double x0 = std::clamp(cx - side / 2.0, 0.0, image_w - side);
  const double y0 = std::clamp(cy - side / 2.0, 0.0, image_h - side);
  return Box{x0, y0, x0 + side, y0 + side};
}

}  // namespace lf::geom
