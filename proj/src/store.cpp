#include "preacq/store.hpp"

#include "preacq/errors.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

namespace preacq {

namespace {

constexpr char kMagic[6] = {'P', 'R', 'E', 'A', 'Q', '1'};

void put_u64(std::ostream& out, std::uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(b, 8);
}

void put_f64(std::ostream& out, double v) {
    put_u64(out, std::bit_cast<std::uint64_t>(v));
}

std::uint64_t get_u64(std::istream& in) {
    unsigned char b[8];
    in.read(reinterpret_cast<char*>(b), 8);
    if (!in) throw ConfigError("trajectory store: truncated header");
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return v;
}

double get_f64(std::istream& in) { return std::bit_cast<double>(get_u64(in)); }

void put_values(std::ostream& out, const double* v, long n) {
    if constexpr (std::endian::native == std::endian::little) {
        out.write(reinterpret_cast<const char*>(v), n * 8);
    } else {
        for (long i = 0; i < n; ++i) put_f64(out, v[i]);
    }
}

void get_values(std::istream& in, double* v, long n) {
    if constexpr (std::endian::native == std::endian::little) {
        in.read(reinterpret_cast<char*>(v), n * 8);
        if (!in) throw ConfigError("trajectory store: truncated values");
    } else {
        for (long i = 0; i < n; ++i) v[i] = get_f64(in);
    }
}

} // namespace

void write_trajectory(std::ostream& out, const Trajectory& traj) {
    const Grid& g = traj.grid;
    out.write(kMagic, sizeof(kMagic));
    put_u64(out, static_cast<std::uint64_t>(g.dim));
    for (int a = 0; a < g.dim; ++a) put_u64(out, static_cast<std::uint64_t>(g.n_points[a]));
    for (int a = 0; a < g.dim; ++a) put_f64(out, g.length[a]);
    put_f64(out, g.dt_frame);
    put_u64(out, static_cast<std::uint64_t>(traj.n_frames()));
    put_u64(out, static_cast<std::uint64_t>(traj.channels()));
    for (const Field& f : traj.frames) {
        put_values(out, f.values.data(), f.values.size());
    }
    if (!out) throw ConfigError("trajectory store: write failed");
}

void write_trajectory(const std::string& path, const Trajectory& traj) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("trajectory store: cannot open " + path + " for writing");
    write_trajectory(out, traj);
}

Trajectory read_trajectory(std::istream& in) {
    char magic[6];
    in.read(magic, sizeof(magic));
    if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
        throw ConfigError("trajectory store: bad magic");
    }
    const int dim = static_cast<int>(get_u64(in));
    if (dim != 1 && dim != 2) throw ConfigError("trajectory store: bad dim");
    std::array<std::uint64_t, 2> np{0, 0};
    for (int a = 0; a < dim; ++a) np[static_cast<std::size_t>(a)] = get_u64(in);
    std::array<double, 2> length{0.0, 0.0};
    for (int a = 0; a < dim; ++a) length[static_cast<std::size_t>(a)] = get_f64(in);
    const double dt_frame = get_f64(in);
    const long n_frames = static_cast<long>(get_u64(in));
    const long channels = static_cast<long>(get_u64(in));
    if (np[0] == 0 || (dim == 2 && np[1] != np[0])) {
        throw ConfigError("trajectory store: unsupported grid shape");
    }
    if (n_frames < 3 || channels <= 0) {
        throw ConfigError("trajectory store: bad frame or channel count");
    }

    Grid g = make_grid(dim, static_cast<int>(np[0]), length[0], dt_frame,
                       static_cast<int>(n_frames));
    Trajectory traj;
    traj.grid = g;
    traj.frames.reserve(static_cast<std::size_t>(n_frames));
    for (long n = 0; n < n_frames; ++n) {
        Field f = Field::zeros(g, static_cast<int>(channels));
        get_values(in, f.values.data(), f.values.size());
        traj.frames.push_back(std::move(f));
    }
    return traj;
}

Trajectory read_trajectory(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("trajectory store: cannot open " + path);
    return read_trajectory(in);
}

} // namespace preacq
