#include "manet/mobility.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace manet {

double distance(Position a, Position b) { return std::hypot(a.x - b.x, a.y - b.y); }

namespace {

void validate_speeds(SpeedRange speeds) {
  if (!(speeds.min > 0.0)) throw std::invalid_argument("rwp: speed_min must be > 0");
  if (speeds.max < speeds.min) throw std::invalid_argument("rwp: speed_max < speed_min");
}

void new_leg(Kinematics& k, const Area& area, SpeedRange speeds, Rng& rng) {
  k.waypoint = area.random_point(rng);
  k.speed = rng.uniform(speeds.min, speeds.max);
}

}  // namespace

Kinematics rwp_init(Position start, const Area& area, SpeedRange speeds, Rng& rng) {
  validate_speeds(speeds);
  Kinematics k;
  k.position = start;
  new_leg(k, area, speeds, rng);
  return k;
}

Kinematics rwp_step(Kinematics k, double dt, const Area& area, SpeedRange speeds, double pause,
                    Rng& rng) {
  if (!(dt > 0.0)) throw std::invalid_argument("rwp_step: dt must be > 0");
  validate_speeds(speeds);

  double budget = dt;
  // Bounded so a pathological stream of zero-length legs cannot spin forever.
  for (int legs = 0; budget > 0.0 && legs < 64; ++legs) {
    if (k.at_waypoint()) {
      if (k.pause_remaining > 0.0) {
        const double wait = std::min(k.pause_remaining, budget);
        k.pause_remaining -= wait;
        budget -= wait;
        continue;
      }
      new_leg(k, area, speeds, rng);
      continue;
    }
    const double remaining = distance(k.position, k.waypoint);
    const double reach = k.speed * budget;
    if (reach >= remaining) {
      k.distance_traveled += remaining;
      budget -= remaining / k.speed;
      k.position = k.waypoint;
      k.pause_remaining = pause;
    } else {
      const double f = reach / remaining;
      k.position.x += (k.waypoint.x - k.position.x) * f;
      k.position.y += (k.waypoint.y - k.position.y) * f;
      k.position.x = std::clamp(k.position.x, 0.0, area.width);
      k.position.y = std::clamp(k.position.y, 0.0, area.height);
      k.distance_traveled += reach;
      budget = 0.0;
    }
  }
  k.elapsed += dt;
  return k;
}

double mean_speed(const Kinematics& k) {
  if (k.elapsed <= 0.0) return 0.0;
  return k.distance_traveled / k.elapsed;
}

}  // namespace manet
