#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace eboca::util {

// Percent-encodes every byte outside the RFC 3986 unreserved set
// (ALPHA / DIGIT / "-" / "." / "_" / "~"). Hex digits are upper case.
std::string percent_encode(std::string_view raw);

// 64-bit FNV-1a. Stable across platforms and runs, used for content-derived ids.
std::uint64_t fnv1a64(std::string_view data) noexcept;
std::string hex64(std::uint64_t value);

// Caller guarantees cp is a Unicode scalar value.
void append_utf8(std::string& out, char32_t cp);

std::string_view trim(std::string_view s) noexcept;
std::vector<std::string_view> split_ws(std::string_view s);

// Shortest decimal that round-trips to the same double.
std::string shortest_double(double value);

// Strict parse of a whole string as a finite double; false on any trailing junk.
bool parse_double(std::string_view text, double& out) noexcept;

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace eboca::util
