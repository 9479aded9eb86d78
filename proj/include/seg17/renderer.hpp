#pragma once

#include <seg17/segment.hpp>

#include <array>
#include <span>
#include <string>
#include <vector>

namespace seg17
{

struct point
{
  double x = 0.0;
  double y = 0.0;

  friend bool operator==( point const&, point const& ) = default;
};

/// Normalized layout of one digit cell: width 1.0, height 2.0, y grows
/// downward. Every segment is an open polyline.
struct geometry_spec
{
  std::array<std::vector<point>, segment_count> shapes;
  double stroke_width = 0.08; ///< fraction of cell width
  double digit_gap = 0.25;    ///< fraction of cell width

  std::vector<point> const& shape( segment s ) const noexcept { return shapes[segment_index( s )]; }
};

/// The built-in 17-segment layout. `p` is a left-half horizontal at
/// y = 1.5, between the middle bar and the bottom edge.
geometry_spec const& geometry();

struct render_style
{
  std::string on_color = "#ff3b1f";
  std::string off_color = "#3a1712";
  std::string background = "#101010";
  double scale = 40.0; ///< pixels per cell width, must be > 0
  bool show_off_segments = false;
};

/// SVG 1.1 document. Lit segments carry class="on", ghosted ones
/// class="off". Throws empty_input for an empty sequence and config for a
/// non-positive scale.
std::string render_svg( std::span<segment_set const> sets, render_style const& style = {} );

inline constexpr int terminal_cell_width = 9;
inline constexpr int terminal_cell_height = 9;

/// 9x9 character cell per digit, one blank column between digits, rows
/// joined by '\n' with a trailing newline. Empty input gives "".
std::string render_terminal( std::span<segment_set const> sets );

} // namespace seg17
