#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dvbp/error.hpp"

namespace dvbp::detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    size_t start = 0;
    for (;;) {
        size_t pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

// Calls fn(lineno, line) for every non-blank line, 1-based numbering.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    size_t lineno = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++lineno;
        auto line = trim(text.substr(start, end - start));
        if (!line.empty()) fn(lineno, line);
        start = end + 1;
    }
}

inline std::int64_t parse_int64(std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) fail(ErrorCode::Parse, "invalid integer '" + std::string(s) + "'");
    return v;
}

inline std::uint64_t parse_uint64(std::string_view s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) fail(ErrorCode::Parse, "invalid integer '" + std::string(s) + "'");
    return v;
}

}  // namespace dvbp::detail
