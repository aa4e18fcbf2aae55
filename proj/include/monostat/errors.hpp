#pragma once

#include <stdexcept>
#include <string>

namespace monostat {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// r^4 expression non-positive somewhere on the sampled domain: the surface
// spec does not describe a valid star-shaped body.
struct NonPositiveRadiusError : Error {
    explicit NonPositiveRadiusError(const std::string& msg) : Error(msg) {}
};

// Mesh failed the closed-manifold edge check.
struct OpenMeshError : Error {
    explicit OpenMeshError(const std::string& msg) : Error(msg) {}
};

// Signed volume came out negative: inverted orientation.
struct NegativeVolumeError : Error {
    explicit NegativeVolumeError(const std::string& msg) : Error(msg) {}
};

// Hull input collinear/coplanar.
struct DegenerateInputError : Error {
    explicit DegenerateInputError(const std::string& msg) : Error(msg) {}
};

// Height landscape is constant to machine precision; basin labeling is
// meaningless. Callers report ECS = 1 with a degeneracy flag.
struct DegenerateFlatError : Error {
    explicit DegenerateFlatError(const std::string& msg) : Error(msg) {}
};

struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(msg) {}
};

} // namespace monostat
