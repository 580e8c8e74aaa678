#pragma once

#include <string>

#include <boost/rational.hpp>

#include "chroma2/errors.hpp"

namespace chroma2 {

using Rat = boost::rational<long long>;

inline std::string rat_string(const Rat& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline Rat parse_rat(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(std::stoll(text), 1);
        return Rat(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw Error(ErrorKind::format, "bad rational: " + text);
    }
}

} // namespace chroma2
