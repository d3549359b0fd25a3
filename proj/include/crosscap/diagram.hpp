#pragma once

// Planar link diagrams given as PD-style crossing lists.
//
// Each crossing lists its four incident edge labels counterclockwise. With
// the default over = 1 the under strand sits at positions 0 and 2 and enters
// at 0; with over = 0 it sits at 1 and 3 and enters at 1. Every edge label
// must occur exactly twice. A component keeps the direction of its under
// strands unless the orientation flag for it is -1.
//
// Corner p of a crossing is the angle between positions p and p+1 (mod 4).

#include "crosscap/linalg.hpp"
#include "crosscap/scalar.hpp"

#include <array>
#include <optional>
#include <vector>

namespace crosscap {

struct Crossing {
  std::array<long, 4> edges{};
  int over = 1;             ///< over strand occupies positions over, over+2
  std::optional<int> sign;  ///< optional declared sign, checked on load
};

struct Corner {
  int crossing = 0;
  int position = 0;
  friend bool operator==(const Corner&, const Corner&) = default;
};

class LinkDiagram {
 public:
  /// Validates the crossing list, traces faces and fixes orientations.
  /// `components` is only consulted for a crossingless diagram.
  LinkDiagram(std::vector<Crossing> crossings, std::vector<int> orientation = {},
              std::optional<Corner> outer_corner = std::nullopt, int components = 1);

  /// The round circle.
  static LinkDiagram unknot() { return LinkDiagram({}, {}, std::nullopt, 1); }

  LinkDiagram with_orientation(std::vector<int> orientation) const;

  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  int component_count() const noexcept { return components_; }
  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  const std::vector<int>& orientation() const noexcept { return orientation_; }
  const std::optional<Corner>& outer_corner() const noexcept { return outer_corner_; }

  /// Component (0-based) of the strand at a crossing position.
  int component_at(int crossing, int position) const { return component_[slot(crossing, position)]; }
  /// Whether the oriented strand enters the crossing at this position.
  bool incoming(int crossing, int position) const { return incoming_[slot(crossing, position)]; }
  int crossing_sign(int crossing) const { return sign_[static_cast<std::size_t>(crossing)]; }
  bool under_is_component(int crossing, int component) const;

  int face_count() const noexcept { return static_cast<int>(faces_.size()); }
  const std::vector<std::vector<Corner>>& faces() const noexcept { return faces_; }
  int face_of(int crossing, int position) const { return face_of_corner_[slot(crossing, position)]; }

 private:
  static std::size_t slot(int crossing, int position) {
    return static_cast<std::size_t>(4 * crossing + ((position % 4) + 4) % 4);
  }

  void trace_components();
  void apply_orientation();
  void trace_faces();

  std::vector<Crossing> crossings_;
  std::vector<int> orientation_;
  std::optional<Corner> outer_corner_;
  int components_ = 1;

  std::vector<int> partner_;  ///< slot of the other end of each edge
  std::vector<int> component_;
  std::vector<bool> base_incoming_;
  std::vector<bool> incoming_;
  std::vector<int> sign_;
  std::vector<std::vector<Corner>> faces_;
  std::vector<int> face_of_corner_;
};

enum class Color { White, Black };

inline Color opposite(Color c) { return c == Color::White ? Color::Black : Color::White; }

struct CrossingIncidence {
  std::array<int, 2> white_faces{};  ///< faces at the two white corners
  std::array<int, 2> black_faces{};
  int eta_black = 0;  ///< type sign relative to the black surface; the white one is its negative
  bool type_ii_black = false;
  bool type_ii_white = false;

  int eta(Color surface) const { return surface == Color::Black ? eta_black : -eta_black; }
  bool type_ii(Color surface) const { return surface == Color::Black ? type_ii_black : type_ii_white; }
};

struct Checkerboard {
  std::vector<Color> face_color;
  int outer_face = 0;
  std::vector<int> white_regions;  ///< face ids, outer face first
  std::vector<int> black_regions;
  std::vector<CrossingIncidence> crossings;

  const std::vector<int>& regions(Color c) const { return c == Color::White ? white_regions : black_regions; }
};

/// Two-colouring of the faces with the unbounded face white. The outer face
/// is the one holding the diagram's outer corner if given, else the face with
/// the most corners (first such face on ties).
Checkerboard checkerboard(const LinkDiagram& d);

/// Goeritz matrix of the checkerboard surface made of `surface` regions,
/// indexed by the regions of the other colour with the first one deleted.
SymIntMatrix goeritz_from_diagram(const LinkDiagram& d, const Checkerboard& cb, Color surface = Color::Black);

/// Modified normal Euler number of a checkerboard surface for the
/// diagram's current orientation: -2 times the sum of eta over type II
/// crossings.
Integer euler_number(const LinkDiagram& d, const Checkerboard& cb, Color surface = Color::Black);

/// signature(G) + euler/2 for the chosen checkerboard surface.
int gordon_litherland_signature(const LinkDiagram& d, const Checkerboard& cb, Color surface);

int linking_number(const LinkDiagram& d);

struct CrossingStats {
  int n = 0;
  int n_black = 0;
  int n_white = 0;
  friend bool operator==(const CrossingStats&, const CrossingStats&) = default;
};

CrossingStats crossing_stats(const LinkDiagram& d);

struct Band {
  bool orientable = false;
  Integer self_delta;
};

struct BandSurface {
  std::vector<Band> bands;
  IntMatrix cross_delta;   ///< symmetric, may be empty
  IntMatrix core_linking;  ///< symmetric linking numbers of core cycles, may be empty

  void validate() const;
};

SymIntMatrix goeritz_from_bands(const BandSurface& s);

}  // namespace crosscap
