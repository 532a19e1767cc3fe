#pragma once

#include "preacq/types.hpp"

#include <iosfwd>
#include <string>

namespace preacq {

// Binary trajectory store. Little-endian; header = magic "PREAQ1", dim,
// n_points per axis, length per axis, dt_frame, n_frames, channels (each
// header entry 64-bit), followed by frame-major raw values. Within a frame,
// channels are contiguous and points are flattened x-fastest.

void write_trajectory(std::ostream& out, const Trajectory& traj);
void write_trajectory(const std::string& path, const Trajectory& traj);

Trajectory read_trajectory(std::istream& in);
Trajectory read_trajectory(const std::string& path);

} // namespace preacq
