#pragma once

#include <string>

#include "monostat/trimesh.hpp"

namespace monostat {

// Binary STL. Header carries "monostat-stl 1.0;" plus the mesh comment so a
// write-read-write cycle is byte-identical; normals are recomputed from the
// winding on every write. Vertices are stored as 32-bit floats.
void write_stl(const TriMesh& mesh, const std::string& path);

// Reads a binary STL and welds bit-identical vertices back into a shared
// vertex list. Throws IoError on malformed headers or truncation.
TriMesh read_stl(const std::string& path);

} // namespace monostat
