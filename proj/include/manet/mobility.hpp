#pragma once

#include "manet/rng.hpp"

namespace manet {

struct Position {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Position&, const Position&) = default;
};

double distance(Position a, Position b);

struct Area {
  double width = 500.0;
  double height = 500.0;

  bool contains(Position p) const {
    return p.x >= 0.0 && p.x <= width && p.y >= 0.0 && p.y <= height;
  }
  Position random_point(Rng& rng) const { return {rng.uniform(0.0, width), rng.uniform(0.0, height)}; }

  friend bool operator==(const Area&, const Area&) = default;
};

struct SpeedRange {
  double min = 1.0;
  double max = 10.0;

  friend bool operator==(const SpeedRange&, const SpeedRange&) = default;
};

/// Random-waypoint state of one node. distance_traveled and elapsed only ever
/// grow; their ratio is the node's mobility M_v.
struct Kinematics {
  Position position;
  Position waypoint;
  double speed = 0.0;            // m/s on the current leg
  double pause_remaining = 0.0;  // s, counted down once the waypoint is reached
  double distance_traveled = 0.0;
  double elapsed = 0.0;

  bool at_waypoint() const { return position == waypoint; }
};

/// Fresh node at `start`, heading to a uniformly drawn waypoint at a uniformly
/// drawn speed.
Kinematics rwp_init(Position start, const Area& area, SpeedRange speeds, Rng& rng);

/// Advances one node by dt seconds of random-waypoint motion.
///
/// Time left over after reaching a waypoint is spent pausing and then on the
/// next leg, so a node never idles for part of a tick unless it is paused.
/// Throws std::invalid_argument for dt <= 0 or speeds.min <= 0.
Kinematics rwp_step(Kinematics k, double dt, const Area& area, SpeedRange speeds, double pause,
                    Rng& rng);

/// Average speed since the start of the run; 0 before any time has elapsed.
double mean_speed(const Kinematics& k);

}  // namespace manet
