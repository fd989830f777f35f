#pragma once

#include <span>
#include <vector>

namespace lf::geom {

// Axis-aligned box, origin top-left, half-open semantics are not implied:
// x1/y1 are the far edges. Valid boxes have strictly positive area.
struct Box {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;

  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  double area() const { return width() * height(); }
  bool valid() const { return x1 > x0 && y1 > y0; }

  bool contains(const Box& other) const {
    return x0 <= other.x0 && y0 <= other.y0 && x1 >= other.x1 &&
           y1 >= other.y1;
  }
  friend bool operator==(const Box&, const Box&) = default;
};

Box union_bounds(std::span<const Box> boxes);  // throws UsageError on empty

// True when the boxes, each inflated by gap_px/2 on every side, intersect
// (touching edges count).
bool mergeable(const Box& a, const Box& b, double gap_px);

// Grow each side outward by margin_frac of that dimension's extent, then
// clamp to [0,image_w] x [0,image_h]. Throws InputError for degenerate
// boxes or margin outside [0,1].
Box expand_box(const Box& b, double margin_frac, double image_w,
               double image_h);

// Replace connected components under `mergeable` by their bounding unions,
// repeated until the result is pairwise non-mergeable. Output sorted by
// (y0, x0). Empty input gives empty output.
std::vector<Box> merge_overlapping(std::vector<Box> boxes, double gap_px);

// Smallest square covering the union of `boxes`, centered on the union and
// shifted the minimal distance to fit the image. Falls back to the full
// image rect when the required side exceeds the short image dimension.
Box enclosing_square(std::span<const Box> boxes, double image_w,
                     double image_h);

}  // namespace lf::geom
