#include "monostat/stl_io.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <unordered_map>

#include "monostat/errors.hpp"

namespace monostat {

namespace {

constexpr char kMagic[] = "monostat-stl 1.0;";

struct FloatTriple {
    float v[3];
    bool operator==(const FloatTriple& o) const {
        return std::memcmp(v, o.v, sizeof(v)) == 0;
    }
};

struct FloatTripleHash {
    std::size_t operator()(const FloatTriple& t) const {
        std::uint32_t bits[3];
        std::memcpy(bits, t.v, sizeof(bits));
        std::size_t h = 1469598103934665603ull;
        for (std::uint32_t b : bits) {
            h ^= b;
            h *= 1099511628211ull;
        }
        return h;
    }
};

void put_float(std::ofstream& out, float f) {
    out.write(reinterpret_cast<const char*>(&f), 4);
}

} // namespace

void write_stl(const TriMesh& mesh, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("write_stl: cannot open " + path);

    char header[80] = {};
    std::string text = std::string(kMagic) + mesh.comment;
    std::memcpy(header, text.data(), std::min<std::size_t>(text.size(), sizeof(header)));
    out.write(header, sizeof(header));

    std::uint32_t count = static_cast<std::uint32_t>(mesh.triangles.size());
    out.write(reinterpret_cast<const char*>(&count), 4);

    for (const auto& t : mesh.triangles) {
        Vec3 n = triangle_normal(mesh, t);
        put_float(out, static_cast<float>(n.x));
        put_float(out, static_cast<float>(n.y));
        put_float(out, static_cast<float>(n.z));
        for (int i = 0; i < 3; ++i) {
            const Vec3& v = mesh.vertices[t[i]];
            put_float(out, static_cast<float>(v.x));
            put_float(out, static_cast<float>(v.y));
            put_float(out, static_cast<float>(v.z));
        }
        std::uint16_t attr = 0;
        out.write(reinterpret_cast<const char*>(&attr), 2);
    }
    if (!out) throw IoError("write_stl: write failed for " + path);
}

TriMesh read_stl(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("read_stl: cannot open " + path);

    char header[80];
    in.read(header, sizeof(header));
    if (in.gcount() != sizeof(header)) throw IoError("read_stl: truncated header");

    std::uint32_t count = 0;
    in.read(reinterpret_cast<char*>(&count), 4);
    if (in.gcount() != 4) throw IoError("read_stl: truncated triangle count");

    TriMesh mesh;
    std::string text(header, header + sizeof(header));
    std::size_t end = text.find('\0');
    if (end != std::string::npos) text.resize(end);
    if (text.rfind(kMagic, 0) == 0) mesh.comment = text.substr(std::strlen(kMagic));

    std::unordered_map<FloatTriple, std::uint32_t, FloatTripleHash> weld;
    weld.reserve(count);
    mesh.triangles.reserve(count);
    for (std::uint32_t ti = 0; ti < count; ++ti) {
        float data[12];
        in.read(reinterpret_cast<char*>(data), sizeof(data));
        std::uint16_t attr = 0;
        in.read(reinterpret_cast<char*>(&attr), 2);
        if (!in) throw IoError("read_stl: truncated at triangle " + std::to_string(ti));

        Triangle tri;
        for (int v = 0; v < 3; ++v) {
            FloatTriple key{{data[3 + 3 * v], data[4 + 3 * v], data[5 + 3 * v]}};
            auto [it, fresh] = weld.try_emplace(
                key, static_cast<std::uint32_t>(mesh.vertices.size()));
            if (fresh)
                mesh.vertices.push_back({static_cast<double>(key.v[0]),
                                         static_cast<double>(key.v[1]),
                                         static_cast<double>(key.v[2])});
            tri[v] = it->second;
        }
        mesh.triangles.push_back(tri);
    }
    return mesh;
}

} // namespace monostat
