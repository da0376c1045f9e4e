#pragma once

#include <cmath>
#include <numbers>

namespace teamseq {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double k) const { return {x * k, y * k}; }
  Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
  bool operator==(const Vec2&) const = default;

  double norm() const { return std::hypot(x, y); }
  double dot(Vec2 o) const { return x * o.x + y * o.y; }
  double bearing() const { return std::atan2(y, x); }
};

inline double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }
inline Vec2 unit(double angle) { return {std::cos(angle), std::sin(angle)}; }

/// Wraps an angle to (-pi, pi].
inline double wrap_angle(double a) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  a = std::fmod(a, two_pi);
  if (a <= -std::numbers::pi) a += two_pi;
  if (a > std::numbers::pi) a -= two_pi;
  return a;
}

/// Expresses `world` in the frame of an observer at `origin` facing `heading`
/// (x forward, y to the observer's left).
inline Vec2 to_egocentric(Vec2 origin, double heading, Vec2 world) {
  const Vec2 d = world - origin;
  const double c = std::cos(heading), s = std::sin(heading);
  return {c * d.x + s * d.y, -s * d.x + c * d.y};
}

struct Rect {
  double x_min = 0.0, x_max = 0.0, y_min = 0.0, y_max = 0.0;

  bool contains(Vec2 p) const {
    return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
  }
  /// Strict interior; points on the border are outside.
  bool interior(Vec2 p) const {
    return p.x > x_min && p.x < x_max && p.y > y_min && p.y < y_max;
  }
  Vec2 center() const { return {(x_min + x_max) / 2.0, (y_min + y_max) / 2.0}; }
  Vec2 clamp(Vec2 p) const {
    return {std::fmin(std::fmax(p.x, x_min), x_max), std::fmin(std::fmax(p.y, y_min), y_max)};
  }
  double distance_to(Vec2 p) const { return distance(p, clamp(p)); }
};

/// How the ball left the field between two consecutive positions.
enum class BallExit {
  none,
  goal,       ///< crossed the attacked goal line between the posts
  near_post,  ///< crossed the attacked goal line within the near-post window
  out,        ///< any other exit
};

/// Soccer field centred on the origin. The attacking team plays towards +x;
/// the goal and penalty box at +x belong to the defending team.
struct FieldModel {
  double length = 6.0;
  double width = 4.0;
  double goal_half_width = 0.75;
  Rect penalty_box{2.0, 3.0, -1.0, 1.0};
  int region_cols = 6;  // along x
  int region_rows = 4;  // along y

  Rect bounds() const { return {-length / 2, length / 2, -width / 2, width / 2}; }
  bool inside(Vec2 p) const { return bounds().contains(p); }
  Vec2 attacked_goal_center() const { return {length / 2, 0.0}; }
  Vec2 own_goal_center() const { return {-length / 2, 0.0}; }
  int region_count() const { return region_cols * region_rows; }

  /// Row-major region id (row 0 at y_min, column 0 at x_min), -1 outside.
  int region_of(Vec2 p) const {
    if (!inside(p)) return -1;
    const double cw = length / region_cols, rh = width / region_rows;
    int col = static_cast<int>((p.x + length / 2) / cw);
    int row = static_cast<int>((p.y + width / 2) / rh);
    if (col >= region_cols) col = region_cols - 1;
    if (row >= region_rows) row = region_rows - 1;
    return row * region_cols + col;
  }

  Rect region_rect(int id) const {
    const double cw = length / region_cols, rh = width / region_rows;
    const int row = id / region_cols, col = id % region_cols;
    const double x0 = -length / 2 + col * cw, y0 = -width / 2 + row * rh;
    return {x0, x0 + cw, y0, y0 + rh};
  }

  /// Reflection y -> -y.
  int mirror_region_long_axis(int id) const {
    const int row = id / region_cols, col = id % region_cols;
    return (region_rows - 1 - row) * region_cols + col;
  }
  /// Reflection x -> -x.
  int mirror_region_midfield(int id) const {
    const int row = id / region_cols, col = id % region_cols;
    return row * region_cols + (region_cols - 1 - col);
  }

  /// Classifies the segment prev -> curr, where curr may be outside.
  BallExit classify_exit(Vec2 prev, Vec2 curr, double near_post_width) const {
    if (inside(curr)) return BallExit::none;
    const double end_x = length / 2;
    if (curr.x > end_x && prev.x <= end_x) {
      const double dx = curr.x - prev.x;
      const double f = dx > 0.0 ? (end_x - prev.x) / dx : 0.0;
      const double y_cross = prev.y + f * (curr.y - prev.y);
      if (std::fabs(y_cross) <= width / 2) {
        if (std::fabs(y_cross) <= goal_half_width) return BallExit::goal;
        if (std::fabs(y_cross) <= goal_half_width + near_post_width) return BallExit::near_post;
      }
    }
    return BallExit::out;
  }
};

}  // namespace teamseq
