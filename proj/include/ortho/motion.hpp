#ifndef ORTHO_MOTION_HPP
#define ORTHO_MOTION_HPP

#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "ortho/report.hpp"
#include "ortho/rng.hpp"
#include "ortho/telegraph.hpp"

namespace ortho {

/// The planar motion: Poisson switching at intensity lambda, quarter turns
/// chosen with probability p depending on the current orientation, speed c.
struct ModelParams {
  double lambda;
  double p;
  double c;
};

inline void validate(const ModelParams& m) {
  if (!(m.lambda > 0.0) || !std::isfinite(m.lambda) || !(m.p > 0.0) ||
      !(m.p < 1.0) || !(m.c > 0.0) || !std::isfinite(m.c)) {
    throw std::domain_error("ModelParams: need lambda > 0, 0 < p < 1, c > 0");
  }
}

/// One of the four axis directions d_j = (cos(pi j/2), sin(pi j/2)).
struct Direction {
  int j = 0;  // 0..3; even = horizontal

  bool horizontal() const { return (j & 1) == 0; }
  double ux() const {
    static constexpr double kx[4] = {1.0, 0.0, -1.0, 0.0};
    return kx[j];
  }
  double uy() const {
    static constexpr double ky[4] = {0.0, 1.0, 0.0, -1.0};
    return ky[j];
  }
  friend bool operator==(Direction a, Direction b) { return a.j == b.j; }
};

struct PlanarPoint {
  double x;
  double y;
};

/// Trajectory on [0, horizon]: ordered switch times with the direction taken
/// after each switch. Consecutive directions always differ by a quarter turn.
struct PathSample {
  double horizon = 0.0;
  Direction initial_direction;
  std::vector<double> switch_times;
  std::vector<Direction> directions_after;
};

/// Switching rule: from a horizontal direction the turn is counterclockwise
/// with probability p, from a vertical direction clockwise with probability p.
inline Direction next_direction(Direction current, double u, double p) {
  const bool ccw = current.horizontal() ? (u < p) : !(u < p);
  return Direction{(current.j + (ccw ? 1 : 3)) & 3};
}

inline void sample_path_into(const ModelParams& m, double t, RngStream& rng,
                             PathSample& out) {
  validate(m);
  if (!(t > 0.0)) throw std::domain_error("sample_path: t must be > 0");
  out.horizon = t;
  out.switch_times.clear();
  out.directions_after.clear();
  Direction d{static_cast<int>(rng.next_double() * 4.0) & 3};
  out.initial_direction = d;
  double now = 0.0;
  for (;;) {
    now += rng.next_exponential(m.lambda);
    if (!(now < t)) break;
    d = next_direction(d, rng.next_double(), m.p);
    out.switch_times.push_back(now);
    out.directions_after.push_back(d);
  }
}

inline PathSample sample_path(const ModelParams& m, double t, RngStream& rng) {
  PathSample p;
  sample_path_into(m, t, rng, p);
  return p;
}

/// Position at time tau by piecewise-linear integration of c*d_j.
inline PlanarPoint position_at(const PathSample& path, const ModelParams& m,
                               double tau) {
  if (!(tau >= 0.0 && tau <= path.horizon)) {
    throw std::domain_error("position_at: tau outside [0, horizon]");
  }
  double x = 0.0, y = 0.0;
  double prev = 0.0;
  Direction d = path.initial_direction;
  for (std::size_t i = 0; i < path.switch_times.size(); ++i) {
    if (path.switch_times[i] >= tau) break;
    const double seg = path.switch_times[i] - prev;
    x += m.c * seg * d.ux();
    y += m.c * seg * d.uy();
    prev = path.switch_times[i];
    d = path.directions_after[i];
  }
  const double seg = tau - prev;
  x += m.c * seg * d.ux();
  y += m.c * seg * d.uy();
  return {x, y};
}

inline PlanarPoint sample_planar_direct(const ModelParams& m, double t,
                                        RngStream& rng) {
  const PathSample path = sample_path(m, t, rng);
  return position_at(path, m, t);
}

/// Decomposition sampler: X = U+V, Y = U-V with independent telegraph
/// processes U (rate lambda(1-p)) and V (rate lambda p), both at speed c/2.
inline PlanarPoint sample_planar_decomposed(const ModelParams& m, double t,
                                            RngStream& rng) {
  validate(m);
  const TelegraphParams pu{m.lambda * (1.0 - m.p), 0.5 * m.c};
  const TelegraphParams pv{m.lambda * m.p, 0.5 * m.c};
  const TelegraphSample u = sample_telegraph(pu, t, rng);
  const TelegraphSample v = sample_telegraph(pv, t, rng);
  return {u.position + v.position, u.position - v.position};
}

/// Total time spent moving vertically (directions d1, d3) up to the horizon.
inline double occupation_vertical(const PathSample& path) {
  double total = 0.0;
  double prev = 0.0;
  Direction d = path.initial_direction;
  for (std::size_t i = 0; i < path.switch_times.size(); ++i) {
    if (!d.horizontal()) total += path.switch_times[i] - prev;
    prev = path.switch_times[i];
    d = path.directions_after[i];
  }
  if (!d.horizontal()) total += path.horizon - prev;
  return total;
}

struct BoundaryClass {
  enum Kind { interior, side, vertex } kind = interior;
  int index = 0;  // side k (pair {d_k, d_{k+1}}) or vertex k (direction d_k)

  friend bool operator==(const BoundaryClass& a, const BoundaryClass& b) {
    return a.kind == b.kind && a.index == b.index;
  }
};

/// A path with no switches sits on a vertex; a path that used exactly the two
/// contiguous directions {d_k, d_{k+1}} (with at least one switch) sits on
/// side k; anything else is interior. Side 0 is the top-right edge x+y = ct.
inline BoundaryClass classify_boundary(const PathSample& path) {
  if (path.switch_times.empty()) {
    return {BoundaryClass::vertex, path.initial_direction.j};
  }
  bool used[4] = {false, false, false, false};
  used[path.initial_direction.j] = true;
  for (const Direction& d : path.directions_after) used[d.j] = true;
  const int count = used[0] + used[1] + used[2] + used[3];
  if (count != 2) return {BoundaryClass::interior, 0};
  for (int k = 0; k < 4; ++k) {
    if (used[k] && used[(k + 1) & 3]) return {BoundaryClass::side, k};
  }
  return {BoundaryClass::interior, 0};  // opposite pair; unreachable under
                                        // the quarter-turn rule
}

/// Path export used by the CLI: header `path_id,event_index,time,direction`,
/// event 0 carrying the initial direction at time 0.
inline void write_path_csv_header(std::ostream& os) {
  os << "path_id,event_index,time,direction\n";
}

inline void append_path_csv(std::ostream& os, const PathSample& path,
                            std::uint64_t path_id) {
  os << path_id << ",0,0," << path.initial_direction.j << "\n";
  for (std::size_t i = 0; i < path.switch_times.size(); ++i) {
    os << path_id << ',' << (i + 1) << ',' << format_g17(path.switch_times[i])
       << ',' << path.directions_after[i].j << "\n";
  }
}

}  // namespace ortho

#endif  // ORTHO_MOTION_HPP
