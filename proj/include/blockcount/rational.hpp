#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <string>

namespace blockcount
{

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string rat_str(const Rat &r)
{
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1)
        os << "/" << denominator(r);
    return os.str();
}

inline bool is_integer(const Rat &r) { return denominator(r) == 1; }

} // namespace blockcount
