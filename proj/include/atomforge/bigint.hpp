#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace atomforge {

using Int = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::powm;

inline Int int_from_string(const std::string& s) { return Int(s); }
inline std::string int_to_string(const Int& v) { return v.str(); }

inline bool fits_u64(const Int& v) {
    return v >= 0 && v <= Int(std::numeric_limits<std::uint64_t>::max());
}

} // namespace atomforge
