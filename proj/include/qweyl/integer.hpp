#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace qweyl {

/// Arbitrary-precision coefficient type used by every ring in the library.
using Integer = boost::multiprecision::cpp_int;

inline std::string toString(const Integer& x) { return x.str(); }

inline Integer parseInteger(const std::string& s) { return Integer(s); }

}  // namespace qweyl
