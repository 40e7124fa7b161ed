#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace unimod {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace unimod
