#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace picomt {

// Error taxonomy used across the library. The CLI maps these to exit codes:
// IoError -> 2, ConfigError -> 3, TrainError -> 4.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TrainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- UTF-8 ----

// Splits a UTF-8 string into codepoint-sized chunks. Strict validation:
// malformed bytes (bad continuation, overlong form, surrogate, > U+10FFFF)
// raise IoError naming the byte offset.
std::vector<std::string> utf8_chars(std::string_view s);

// Number of codepoints in a valid UTF-8 string.
std::size_t utf8_length(std::string_view s);

// Decodes one codepoint starting at byte offset i; advances i past it.
char32_t utf8_decode(std::string_view s, std::size_t& i);

void utf8_append(std::string& out, char32_t cp);

// ---- strings ----

std::string trim(std::string_view s);

// Trim ends and collapse internal runs of spaces/tabs to a single space.
std::string normalize_ws(std::string_view s);

std::vector<std::string> split_ws(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

bool starts_with(std::string_view s, std::string_view prefix);
bool ends_with(std::string_view s, std::string_view suffix);

// ---- files ----

bool file_exists(const std::string& path);

std::string read_file(const std::string& path);

// Reads UTF-8 text lines; LF separated, a trailing CR per line is stripped.
// Validates UTF-8 and reports the byte offset of the first invalid byte.
std::vector<std::string> read_lines(const std::string& path);

void write_file(const std::string& path, std::string_view bytes);

// Write to "<path>.tmp" then rename: readers never observe partial content.
void write_file_atomic(const std::string& path, std::string_view bytes);

void make_dirs(const std::string& path);

// ---- hashing ----

// FNV-1a, 64 bit. Stable across platforms; used for config hashes and for
// deriving named RNG streams.
std::uint64_t fnv1a64(std::string_view bytes);

std::string hex64(std::uint64_t v);

}  // namespace picomt
