#ifndef BUCHSTAR_VERSION_HPP
#define BUCHSTAR_VERSION_HPP

namespace buchstar {

inline constexpr const char* version_string = "0.1.0";

}

#endif
