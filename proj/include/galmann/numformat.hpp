#ifndef GALMANN_NUMFORMAT_HPP
#define GALMANN_NUMFORMAT_HPP

#include <string>

namespace galmann {

/// Shortest decimal string that round-trips to the same double (never more
/// than 17 significant digits).  Every float the library or CLI prints
/// goes through here so output is reproducible byte for byte.
std::string format_double(double v);

} // namespace galmann

#endif
