#include "galmann/spaces.hpp"

#include <cmath>

#include "galmann/errors.hpp"

namespace galmann {

Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }

Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }

Vec3 operator*(double c, Vec3 v) { return {c * v.x, c * v.y, c * v.z}; }

std::string to_string(VectorClass c) {
    switch (c) {
    case VectorClass::NonIsotropic: return "NonIsotropic";
    case VectorClass::SpacelikeIsotropic: return "SpacelikeIsotropic";
    case VectorClass::TimelikeIsotropic: return "TimelikeIsotropic";
    case VectorClass::Lightlike: return "Lightlike";
    case VectorClass::Zero: return "Zero";
    }
    return {};
}

double galilean_distance(Vec3 p1, Vec3 p2) {
    if (p1.x != p2.x) return std::abs(p2.x - p1.x);
    return std::hypot(p2.y - p1.y, p2.z - p1.z);
}

double pg_scalar_product(Vec3 v1, Vec3 v2) {
    if (v1.x != 0.0 || v2.x != 0.0) return v1.x * v2.x;
    return v1.y * v2.y - v1.z * v2.z;
}

double pg_norm(Vec3 v) {
    if (v.x != 0.0) return v.x;
    return std::sqrt(std::abs(v.y * v.y - v.z * v.z));
}

VectorClass classify_vector(Vec3 v, double tol) {
    if (std::abs(v.x) > tol) return VectorClass::NonIsotropic;
    if (std::abs(v.y) <= tol && std::abs(v.z) <= tol) return VectorClass::Zero;
    const double q = v.y * v.y - v.z * v.z;
    if (std::abs(q) <= tol * (v.y * v.y + v.z * v.z)) return VectorClass::Lightlike;
    return q > 0.0 ? VectorClass::SpacelikeIsotropic : VectorClass::TimelikeIsotropic;
}

double iso_inner_g3(Vec3 v1, Vec3 v2, double tol) {
    if (std::abs(v1.x) > tol || std::abs(v2.x) > tol)
        throw InputError("iso_inner_g3 requires isotropic vectors (x = 0)");
    return v1.y * v2.y + v1.z * v2.z;
}

double parallel_residual(Vec3 v1, Vec3 v2, double tol) {
    const double n1 = std::hypot(v1.y, v1.z);
    const double n2 = std::hypot(v2.y, v2.z);
    if (n1 < tol || n2 < tol)
        throw DomainError("parallel_residual of a vector with vanishing isotropic part");
    return std::abs(v1.y * v2.z - v1.z * v2.y) / (n1 * n2);
}

} // namespace galmann
