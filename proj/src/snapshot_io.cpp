#include "velab/snapshot_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>

#include "velab/error.hpp"

namespace velab {

namespace {

void put_u32(std::vector<unsigned char>& b, std::uint32_t v) {
    for (int k = 0; k < 4; ++k) b.push_back(static_cast<unsigned char>(v >> (8 * k)));
}

void put_f64(std::vector<unsigned char>& b, double v) {
    const auto u = std::bit_cast<std::uint64_t>(v);
    for (int k = 0; k < 8; ++k) b.push_back(static_cast<unsigned char>(u >> (8 * k)));
}

std::uint32_t get_u32(const unsigned char* p) {
    std::uint32_t v = 0;
    for (int k = 0; k < 4; ++k) v |= static_cast<std::uint32_t>(p[k]) << (8 * k);
    return v;
}

double get_f64(const unsigned char* p) {
    std::uint64_t v = 0;
    for (int k = 0; k < 8; ++k) v |= static_cast<std::uint64_t>(p[k]) << (8 * k);
    return std::bit_cast<double>(v);
}

}  // namespace

std::vector<unsigned char> encode_snapshot(const StateSnapshot& s, const PhysParams& params, double lx, double ly) {
    const std::size_t n = static_cast<std::size_t>(s.nx()) * static_cast<std::size_t>(s.ny());
    std::vector<unsigned char> b;
    b.reserve(kSnapshotHeaderBytes + 7 * n * 8);
    b.insert(b.end(), {'V', 'E', 'L', 'S'});
    put_u32(b, kSnapshotVersion);
    put_u32(b, static_cast<std::uint32_t>(s.nx()));
    put_u32(b, static_cast<std::uint32_t>(s.ny()));
    for (double v : {lx, ly, params.gamma, params.mu, params.lambda, params.eps, s.t}) put_f64(b, v);
    for (const Field2D& f : s.fields) {
        if (f.size() != n) throw ValidationError("snapshot: fields differ in shape");
        for (double v : f.values()) put_f64(b, v);
    }
    return b;
}

LoadedSnapshot decode_snapshot(const std::vector<unsigned char>& b) {
    if (b.size() < kSnapshotHeaderBytes) throw ValidationError("snapshot: corrupt header (file too short)");
    if (std::memcmp(b.data(), "VELS", 4) != 0) throw ValidationError("snapshot: bad magic");
    const std::uint32_t version = get_u32(b.data() + 4);
    if (version != kSnapshotVersion)
        throw ValidationError("snapshot: unsupported version " + std::to_string(version));
    const std::uint32_t nx = get_u32(b.data() + 8), ny = get_u32(b.data() + 12);
    if (nx < 4 || ny < 4 || nx > (1u << 16) || ny > (1u << 16))
        throw ValidationError("snapshot: corrupt header (grid " + std::to_string(nx) + "x" + std::to_string(ny) + ")");
    const std::size_t n = static_cast<std::size_t>(nx) * ny;
    const std::size_t expect = kSnapshotHeaderBytes + 7 * n * 8;
    if (b.size() < expect) throw ValidationError("snapshot: truncated body");
    if (b.size() > expect) throw ValidationError("snapshot: trailing bytes after body");

    LoadedSnapshot out;
    const unsigned char* h = b.data() + 16;
    out.lx = get_f64(h);
    out.ly = get_f64(h + 8);
    out.params.gamma = get_f64(h + 16);
    out.params.mu = get_f64(h + 24);
    out.params.lambda = get_f64(h + 32);
    out.params.eps = get_f64(h + 40);
    out.state.t = get_f64(h + 48);
    const unsigned char* p = b.data() + kSnapshotHeaderBytes;
    for (Field2D& f : out.state.fields) {
        f = Field2D(static_cast<int>(nx), static_cast<int>(ny));
        for (std::size_t k = 0; k < n; ++k, p += 8) f[k] = get_f64(p);
    }
    return out;
}

void persist_snapshot(const StateSnapshot& s, const PhysParams& params, double lx, double ly, const std::string& path) {
    const auto bytes = encode_snapshot(s, params, lx, ly);
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!f) throw IoError("write failed for '" + path + "'");
}

LoadedSnapshot load_snapshot(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path + "'");
    std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    try {
        return decode_snapshot(bytes);
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

}  // namespace velab
