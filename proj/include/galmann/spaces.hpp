#ifndef GALMANN_SPACES_HPP
#define GALMANN_SPACES_HPP

#include <string>

namespace galmann {

/// Shared absolute tolerance for the isotropy and degeneracy tests below.
inline constexpr double kSpaceTol = 1e-9;

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

Vec3 operator+(Vec3 a, Vec3 b);
Vec3 operator-(Vec3 a, Vec3 b);
Vec3 operator*(double c, Vec3 v);

/// Classification of a vector of the pseudo-Galilean 3-space.
/// A vector with vanishing first component is isotropic; isotropic vectors
/// split by the sign of y^2 - z^2 into spacelike, timelike and lightlike.
enum class VectorClass {
    NonIsotropic,
    SpacelikeIsotropic,
    TimelikeIsotropic,
    Lightlike,
    Zero,
};

std::string to_string(VectorClass c);

/// Galilean distance: |x2 - x1| when the first components differ,
/// otherwise the Euclidean distance in the (y, z) plane.
double galilean_distance(Vec3 p1, Vec3 p2);

/// Pseudo-Galilean scalar product: x1*x2 unless both first components
/// vanish, in which case y1*y2 - z1*z2.
double pg_scalar_product(Vec3 v1, Vec3 v2);

/// Pseudo-Galilean norm: x (signed, verbatim) for non-isotropic vectors,
/// sqrt(|y^2 - z^2|) for isotropic ones.
double pg_norm(Vec3 v);

/// Tags v by |x| > tol first, then Zero / Lightlike / sign of y^2 - z^2.
/// The lightlike test is relative: |y^2 - z^2| <= tol * (y^2 + z^2).
VectorClass classify_vector(Vec3 v, double tol = kSpaceTol);

/// Euclidean inner product y1*y2 + z1*z2 for isotropic vectors of the
/// Galilean space; raises InputError if either |x| exceeds tol.
double iso_inner_g3(Vec3 v1, Vec3 v2, double tol = kSpaceTol);

/// |y1*z2 - z1*y2| normalized by the Euclidean lengths of the (y, z)
/// parts: 0 exactly when the isotropic parts are parallel.  Raises
/// DegenerateError when either length is below tol.
double parallel_residual(Vec3 v1, Vec3 v2, double tol = kSpaceTol);

} // namespace galmann

#endif
