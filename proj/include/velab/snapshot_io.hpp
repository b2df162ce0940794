/// @file snapshot_io.hpp
/// @brief Fixed little-endian binary snapshot format.
///
/// Layout:
///   offset  0  "VELS"
///   offset  4  u32 version (1)
///   offset  8  u32 nx, u32 ny
///   offset 16  f64 lx, ly, gamma, mu, lambda, eps, t
///   offset 72  7 row-major f64 arrays: rho, u, v, f1, f2, f3, f4
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "velab/state.hpp"

namespace velab {

inline constexpr std::uint32_t kSnapshotVersion = 1;
inline constexpr std::size_t kSnapshotHeaderBytes = 72;

struct LoadedSnapshot {
    StateSnapshot state;
    PhysParams params;  ///< eps, gamma, mu, lambda from the header; other fields default
    double lx = 0.0, ly = 0.0;
};

std::vector<unsigned char> encode_snapshot(const StateSnapshot& s, const PhysParams& params, double lx, double ly);
LoadedSnapshot decode_snapshot(const std::vector<unsigned char>& bytes);

/// Throws IoError when the file cannot be written.
void persist_snapshot(const StateSnapshot& s, const PhysParams& params, double lx, double ly, const std::string& path);
/// Throws IoError when the file cannot be read and ValidationError for a bad
/// magic, version, header or body length ("truncated body").
LoadedSnapshot load_snapshot(const std::string& path);

}  // namespace velab
