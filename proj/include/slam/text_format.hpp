#ifndef SLAM_TEXT_FORMAT_HPP_
#define SLAM_TEXT_FORMAT_HPP_

#include <cstdio>
#include <string>

namespace slam {

/// "%.<significant>g" rendering, used wherever output must be diffable.
inline std::string format_general(double v, int significant = 12) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant, v);
    return buf;
}

inline std::string format_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

}  // namespace slam

#endif  // SLAM_TEXT_FORMAT_HPP_
