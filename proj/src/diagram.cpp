#include "crosscap/diagram.hpp"

#include "crosscap/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <string>

namespace crosscap {
namespace {

int under_entry(const Crossing& c) { return c.over == 1 ? 0 : 1; }

std::string where(int crossing, int position) {
  return "crossing " + std::to_string(crossing) + " position " + std::to_string(position);
}

}  // namespace

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings, std::vector<int> orientation,
                         std::optional<Corner> outer_corner, int components)
    : crossings_(std::move(crossings)), orientation_(std::move(orientation)), outer_corner_(outer_corner) {
  const int n = crossing_count();
  if (n == 0) {
    if (components != 1)
      throw Error(ErrorCode::InvalidInput, "a crossingless diagram must be a single circle");
    components_ = 1;
    if (orientation_.empty()) orientation_ = {1};
    if (outer_corner_) throw Error(ErrorCode::InvalidInput, "outer corner given for a crossingless diagram");
    return;
  }

  std::map<long, std::vector<int>> ends;
  for (int c = 0; c < n; ++c) {
    const Crossing& x = crossings_[static_cast<std::size_t>(c)];
    if (x.over != 0 && x.over != 1)
      throw Error(ErrorCode::InvalidInput, "crossing " + std::to_string(c) + ": over must be 0 or 1");
    for (int p = 0; p < 4; ++p) ends[x.edges[static_cast<std::size_t>(p)]].push_back(4 * c + p);
  }
  partner_.assign(static_cast<std::size_t>(4 * n), -1);
  for (const auto& [label, slots] : ends) {
    if (slots.size() != 2)
      throw Error(ErrorCode::InvalidInput, "edge " + std::to_string(label) + " appears " +
                                               std::to_string(slots.size()) + " times; expected exactly 2");
    partner_[static_cast<std::size_t>(slots[0])] = slots[1];
    partner_[static_cast<std::size_t>(slots[1])] = slots[0];
  }

  trace_components();
  if (orientation_.empty()) orientation_.assign(static_cast<std::size_t>(components_), 1);
  apply_orientation();
  trace_faces();
}

LinkDiagram LinkDiagram::with_orientation(std::vector<int> orientation) const {
  LinkDiagram copy = *this;
  copy.orientation_ = std::move(orientation);
  if (crossing_count() > 0) copy.apply_orientation();
  return copy;
}

bool LinkDiagram::under_is_component(int crossing, int component) const {
  return component_at(crossing, under_entry(crossings_[static_cast<std::size_t>(crossing)])) == component;
}

void LinkDiagram::trace_components() {
  const int n = crossing_count();
  const auto slots = static_cast<std::size_t>(4 * n);
  component_.assign(slots, -1);
  base_incoming_.assign(slots, false);

  // Strands are the position pairs {p, p+2}; edges join them across crossings.
  std::vector<int> parent(slots);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
  for (int c = 0; c < n; ++c) {
    unite(4 * c, 4 * c + 2);
    unite(4 * c + 1, 4 * c + 3);
  }
  for (std::size_t s = 0; s < slots; ++s) unite(static_cast<int>(s), partner_[s]);

  // Number components by their smallest edge label.
  std::map<int, long> smallest;
  for (std::size_t s = 0; s < slots; ++s) {
    const long label = crossings_[s / 4].edges[s % 4];
    auto [it, fresh] = smallest.emplace(find(static_cast<int>(s)), label);
    if (!fresh) it->second = std::min(it->second, label);
  }
  std::vector<std::pair<long, int>> order;
  for (const auto& [root, label] : smallest) order.emplace_back(label, root);
  std::sort(order.begin(), order.end());
  if (order.size() > 2) throw Error(ErrorCode::InvalidInput, "diagrams with more than two components are not supported");
  components_ = static_cast<int>(order.size());
  std::map<int, int> index;
  for (std::size_t k = 0; k < order.size(); ++k) index[order[k].second] = static_cast<int>(k);
  for (std::size_t s = 0; s < slots; ++s) component_[s] = index[find(static_cast<int>(s))];

  // Walk each component from one of its under-strand entries.
  std::vector<bool> seen(slots, false);
  for (int k = 0; k < components_; ++k) {
    int start = -1;
    for (int c = 0; c < n && start < 0; ++c) {
      const int s = 4 * c + under_entry(crossings_[static_cast<std::size_t>(c)]);
      if (component_[static_cast<std::size_t>(s)] == k) start = s;
    }
    if (start < 0)
      throw Error(ErrorCode::InvalidInput,
                  "component " + std::to_string(k + 1) + " never passes under; its direction is ambiguous");
    int in = start;
    do {
      const int c = in / 4;
      const int out = 4 * c + (in % 4 + 2) % 4;
      base_incoming_[static_cast<std::size_t>(in)] = true;
      seen[static_cast<std::size_t>(in)] = seen[static_cast<std::size_t>(out)] = true;
      in = partner_[static_cast<std::size_t>(out)];
      if (seen[static_cast<std::size_t>(in)] && in != start)
        throw Error(ErrorCode::InvalidInput, "strand traversal revisits " + where(in / 4, in % 4));
    } while (in != start);
  }
  for (int c = 0; c < n; ++c) {
    const int s = 4 * c + under_entry(crossings_[static_cast<std::size_t>(c)]);
    if (!base_incoming_[static_cast<std::size_t>(s)])
      throw Error(ErrorCode::InvalidInput,
                  "crossing " + std::to_string(c) + ": under strand runs against its component's direction");
  }
}

void LinkDiagram::apply_orientation() {
  if (static_cast<int>(orientation_.size()) != components_)
    throw Error(ErrorCode::InvalidInput, "orientation needs one flag per component (" + std::to_string(components_) + ")");
  for (int f : orientation_)
    if (f != 1 && f != -1) throw Error(ErrorCode::InvalidInput, "orientation flags must be +1 or -1");

  const int n = crossing_count();
  incoming_.assign(static_cast<std::size_t>(4 * n), false);
  for (std::size_t s = 0; s < incoming_.size(); ++s) {
    const bool keep = orientation_[static_cast<std::size_t>(component_[s])] == 1;
    incoming_[s] = keep ? base_incoming_[s] : !base_incoming_[s];
  }
  sign_.assign(static_cast<std::size_t>(n), 0);
  for (int c = 0; c < n; ++c) {
    const Crossing& x = crossings_[static_cast<std::size_t>(c)];
    const int u = under_entry(x);
    const int under_out = incoming(c, u) ? (u + 2) % 4 : u;
    const int over_out = incoming(c, x.over) ? (x.over + 2) % 4 : x.over;
    sign_[static_cast<std::size_t>(c)] = under_out == (over_out + 1) % 4 ? 1 : -1;
    if (x.sign && *x.sign != sign_[static_cast<std::size_t>(c)] && orientation_ == std::vector<int>(orientation_.size(), 1))
      throw Error(ErrorCode::InvalidInput, "crossing " + std::to_string(c) + ": declared sign " +
                                               std::to_string(*x.sign) + " disagrees with the orientation");
  }
}

void LinkDiagram::trace_faces() {
  const int n = crossing_count();
  const auto slots = static_cast<std::size_t>(4 * n);

  // Connectivity of the underlying 4-valent graph.
  std::vector<bool> reached(static_cast<std::size_t>(n), false);
  std::deque<int> queue{0};
  reached[0] = true;
  while (!queue.empty()) {
    const int c = queue.front();
    queue.pop_front();
    for (int p = 0; p < 4; ++p) {
      const int other = partner_[static_cast<std::size_t>(4 * c + p)] / 4;
      if (!reached[static_cast<std::size_t>(other)]) {
        reached[static_cast<std::size_t>(other)] = true;
        queue.push_back(other);
      }
    }
  }
  if (std::find(reached.begin(), reached.end(), false) != reached.end())
    throw Error(ErrorCode::Splittable, "diagram is disconnected; split diagrams have no single checkerboard surface");

  // From corner (c,p) leave along position p+1; arriving at (c',p') puts
  // us in corner (c',p').
  face_of_corner_.assign(slots, -1);
  faces_.clear();
  for (std::size_t start = 0; start < slots; ++start) {
    if (face_of_corner_[start] >= 0) continue;
    const int id = static_cast<int>(faces_.size());
    faces_.emplace_back();
    std::size_t cur = start;
    do {
      face_of_corner_[cur] = id;
      faces_.back().push_back({static_cast<int>(cur / 4), static_cast<int>(cur % 4)});
      const std::size_t leave = 4 * (cur / 4) + (cur % 4 + 1) % 4;
      cur = static_cast<std::size_t>(partner_[leave]);
      if (face_of_corner_[cur] >= 0 && cur != start)
        throw Error(ErrorCode::NonPlanar, "face tracing revisits a corner");
    } while (cur != start);
  }
  if (face_count() != n + 2)
    throw Error(ErrorCode::NonPlanar, "found " + std::to_string(face_count()) + " faces, Euler's formula needs " +
                                          std::to_string(n + 2));
  if (outer_corner_) {
    const auto& oc = *outer_corner_;
    if (oc.crossing < 0 || oc.crossing >= n || oc.position < 0 || oc.position > 3)
      throw Error(ErrorCode::InvalidInput, "outer corner out of range");
  }
}

Checkerboard checkerboard(const LinkDiagram& d) {
  Checkerboard cb;
  const int n = d.crossing_count();
  if (n == 0) {
    cb.face_color = {Color::White, Color::Black};
    cb.outer_face = 0;
    cb.white_regions = {0};
    cb.black_regions = {1};
    return cb;
  }
  const int f = d.face_count();
  if (d.outer_corner()) {
    cb.outer_face = d.face_of(d.outer_corner()->crossing, d.outer_corner()->position);
  } else {
    std::size_t best = 0;
    for (int i = 0; i < f; ++i)
      if (d.faces()[static_cast<std::size_t>(i)].size() > best) {
        best = d.faces()[static_cast<std::size_t>(i)].size();
        cb.outer_face = i;
      }
  }

  // Neighbouring corners at a crossing are separated by a strand.
  std::vector<std::vector<int>> adjacent(static_cast<std::size_t>(f));
  for (int c = 0; c < n; ++c)
    for (int p = 0; p < 4; ++p) {
      const int a = d.face_of(c, p), b = d.face_of(c, p + 1);
      adjacent[static_cast<std::size_t>(a)].push_back(b);
      adjacent[static_cast<std::size_t>(b)].push_back(a);
    }
  std::vector<int> color(static_cast<std::size_t>(f), -1);
  color[static_cast<std::size_t>(cb.outer_face)] = 0;
  std::deque<int> queue{cb.outer_face};
  while (!queue.empty()) {
    const int a = queue.front();
    queue.pop_front();
    for (int b : adjacent[static_cast<std::size_t>(a)]) {
      if (color[static_cast<std::size_t>(b)] < 0) {
        color[static_cast<std::size_t>(b)] = 1 - color[static_cast<std::size_t>(a)];
        queue.push_back(b);
      } else if (color[static_cast<std::size_t>(b)] == color[static_cast<std::size_t>(a)]) {
        throw Error(ErrorCode::NonPlanar, "faces do not admit a checkerboard colouring");
      }
    }
  }
  cb.face_color.resize(static_cast<std::size_t>(f));
  for (int i = 0; i < f; ++i) cb.face_color[static_cast<std::size_t>(i)] = color[static_cast<std::size_t>(i)] == 0 ? Color::White : Color::Black;

  cb.white_regions.push_back(cb.outer_face);
  for (int i = 0; i < f; ++i) {
    if (i == cb.outer_face) continue;
    (cb.face_color[static_cast<std::size_t>(i)] == Color::White ? cb.white_regions : cb.black_regions).push_back(i);
  }

  auto corner_color = [&](int c, int p) { return cb.face_color[static_cast<std::size_t>(d.face_of(c, p))]; };
  for (int c = 0; c < n; ++c) {
    const Crossing& x = d.crossings()[static_cast<std::size_t>(c)];
    CrossingIncidence inc;
    const int white_corner = corner_color(c, x.over) == Color::White ? x.over : x.over + 1;
    const int black_corner = white_corner + 1;
    inc.white_faces = {d.face_of(c, white_corner), d.face_of(c, white_corner + 2)};
    inc.black_faces = {d.face_of(c, black_corner), d.face_of(c, black_corner + 2)};
    inc.eta_black = corner_color(c, x.over) == Color::Black ? 1 : -1;
    // A corner bounded by two incoming (or two outgoing) ends marks type II.
    inc.type_ii_white = d.incoming(c, white_corner) == d.incoming(c, white_corner + 1);
    inc.type_ii_black = d.incoming(c, black_corner) == d.incoming(c, black_corner + 1);
    cb.crossings.push_back(inc);
  }
  return cb;
}

SymIntMatrix goeritz_from_diagram(const LinkDiagram& d, const Checkerboard& cb, Color surface) {
  const Color index_color = opposite(surface);
  const std::vector<int>& regions = cb.regions(index_color);
  if (regions.size() < 2)
    throw Error(ErrorCode::TooFewRegions, "Goeritz matrix needs at least two regions of the indexing colour");
  std::map<int, Eigen::Index> position;
  for (std::size_t i = 0; i < regions.size(); ++i) position[regions[i]] = static_cast<Eigen::Index>(i);

  const auto k = static_cast<Eigen::Index>(regions.size());
  IntMatrix g = IntMatrix::Zero(k, k);
  for (int c = 0; c < d.crossing_count(); ++c) {
    const CrossingIncidence& inc = cb.crossings[static_cast<std::size_t>(c)];
    const auto& faces = index_color == Color::White ? inc.white_faces : inc.black_faces;
    const Eigen::Index i = position.at(faces[0]), j = position.at(faces[1]);
    if (i == j) continue;
    const Integer eta(inc.eta(surface));
    g(i, j) -= eta;
    g(j, i) -= eta;
  }
  for (Eigen::Index i = 0; i < k; ++i) {
    Integer off(0);
    for (Eigen::Index j = 0; j < k; ++j)
      if (j != i) off += g(i, j);
    g(i, i) = -off;
  }
  return SymIntMatrix(IntMatrix(g.bottomRightCorner(k - 1, k - 1)));
}

Integer euler_number(const LinkDiagram& d, const Checkerboard& cb, Color surface) {
  Integer sum(0);
  for (int c = 0; c < d.crossing_count(); ++c) {
    const CrossingIncidence& inc = cb.crossings[static_cast<std::size_t>(c)];
    if (inc.type_ii(surface)) sum += inc.eta(surface);
  }
  return -2 * sum;
}

int gordon_litherland_signature(const LinkDiagram& d, const Checkerboard& cb, Color surface) {
  const Integer e = euler_number(d, cb, surface);
  const SymIntMatrix g = goeritz_from_diagram(d, cb, surface);
  return signature(g) + static_cast<int>(to_int64(e / 2));
}

int linking_number(const LinkDiagram& d) {
  if (d.component_count() != 2)
    throw Error(ErrorCode::NotTwoComponents,
                "linking number needs a 2-component diagram, got " + std::to_string(d.component_count()));
  int sum = 0;
  for (int c = 0; c < d.crossing_count(); ++c) {
    const Crossing& x = d.crossings()[static_cast<std::size_t>(c)];
    if (d.component_at(c, x.over) != d.component_at(c, x.over + 1)) sum += d.crossing_sign(c);
  }
  if (sum % 2 != 0) throw Error(ErrorCode::InvariantViolation, "odd number of signed inter-component crossings");
  return sum / 2;
}

CrossingStats crossing_stats(const LinkDiagram& d) {
  const Checkerboard cb = checkerboard(d);
  return {d.crossing_count(), static_cast<int>(cb.black_regions.size()), static_cast<int>(cb.white_regions.size())};
}

void BandSurface::validate() const {
  const auto k = static_cast<Eigen::Index>(bands.size());
  if (k == 0) throw Error(ErrorCode::InvalidInput, "band surface has no bands");
  for (const IntMatrix* m : {&cross_delta, &core_linking}) {
    if (m->size() == 0) continue;
    if (m->rows() != k || m->cols() != k)
      throw Error(ErrorCode::InvalidInput, "band data matrices must be " + std::to_string(k) + "x" + std::to_string(k));
    for (Eigen::Index i = 0; i < k; ++i)
      for (Eigen::Index j = i + 1; j < k; ++j)
        if ((*m)(i, j) != (*m)(j, i)) throw Error(ErrorCode::NotSymmetric, "band data must be symmetric");
  }
}

SymIntMatrix goeritz_from_bands(const BandSurface& s) {
  s.validate();
  const auto k = static_cast<Eigen::Index>(s.bands.size());
  IntMatrix g = IntMatrix::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    const Band& b = s.bands[static_cast<std::size_t>(i)];
    g(i, i) = 2 * b.self_delta + (b.orientable ? 0 : 1);
    if (s.core_linking.size() == 0) continue;
    for (Eigen::Index j = 0; j < k; ++j)
      if (j != i) g(i, j) = 2 * s.core_linking(i, j);
  }
  return SymIntMatrix(std::move(g));
}

}  // namespace crosscap
