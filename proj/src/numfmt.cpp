#include "ascheck/numfmt.hpp"

#include <charconv>
#include <cstdio>

namespace ascheck::numfmt {

std::string shortest(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string digits17(double v) {
    char buf[64];
    int n = std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf, buf + n);
}

bool try_parse(std::string_view token, double& out) {
    if (token.empty()) return false;
    const char* first = token.data();
    const char* last = first + token.size();
    auto res = std::from_chars(first, last, out);
    return res.ec == std::errc() && res.ptr == last;
}

}  // namespace ascheck::numfmt
