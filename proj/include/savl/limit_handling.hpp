#pragma once

#include <span>

#include "savl/core.hpp"
#include "savl/vl_strategy.hpp"

namespace savl {

/// Repairs dimensions with |v[d]| > VL^d in place. With f >= 0.5 the value is
/// clamped to the nearest limit; otherwise it is redrawn as Rand*2VL^d - VL^d.
/// Uniforms are consumed only for violating dimensions, in dimension order.
void handle_velocity(std::span<double> v, const VelocityLimit& vl, double f, RngStream& rng);

/// Redraws out-of-bounds coordinates as Rand*(upper-lower)+lower, in dimension
/// order. In-bounds coordinates (bounds inclusive) are untouched.
void handle_position(std::span<double> x, const Bounds& bounds, RngStream& rng);

/// Nearest-limit clamps; no randomness.
void clamp_velocity(std::span<double> v, const VelocityLimit& vl) noexcept;
void clamp_position(std::span<double> x, const Bounds& bounds) noexcept;

}  // namespace savl
