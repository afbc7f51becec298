#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace grouppart {

using Bigint = boost::multiprecision::cpp_int;

} // namespace grouppart
