#pragma once

#include "teamseq/field.hpp"

namespace teamseq::abstraction {

struct AbstractionConfig {
  FieldModel field;
  double t_free = 1.0;            ///< s without an owner before a gain counts as getball
  double d_drib = 0.5;            ///< m moved during a challenge for dribbling
  double d_prog = 0.5;            ///< m closer to the penalty box per progress action
  double challenge_radius = 0.4;  ///< m between an opponent and the ball
  double eps_same = 0.1;          ///< m dead zone for the "same" relation value
  double w_near = 0.3;            ///< m outside a post that still counts as to_goal
  double kick_speed = 0.6;        ///< m/s ball speed at release that marks a kick
};

}  // namespace teamseq::abstraction
