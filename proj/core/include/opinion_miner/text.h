#ifndef OPINION_MINER_TEXT_H_
#define OPINION_MINER_TEXT_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace opinion_miner {

// ASCII case folding; bytes >= 0x80 pass through untouched so UTF-8 input
// survives.
std::string to_lower(std::string_view s);

std::string_view trim(std::string_view s);

// Splits on runs of ASCII whitespace; empty fields are dropped.
std::vector<std::string_view> split_whitespace(std::string_view s);

// Splits on a single delimiter; empty fields are kept.
std::vector<std::string_view> split(std::string_view s, char delim);

bool is_punctuation_char(char c);

// True when the token has at least one letter, digit or non-ASCII byte.
bool is_word_token(std::string_view token);

// Whitespace tokenization with leading and trailing punctuation runs split
// off into their own tokens: "($4.99)." -> "(", "$", "4.99", ").".
// Internal punctuation stays ("isn't", "4.99", "e-mail").
std::vector<std::string> tokenize(std::string_view text);

// Replaces each '<...>' tag with one space so adjacent words stay apart.
// Not an HTML parser.
std::string strip_markup(std::string_view text);

std::string read_file(const std::filesystem::path &path);
void write_file(const std::filesystem::path &path, std::string_view content);

// Reads a list file: one entry per line, '#' starts a comment, blank lines
// skipped, surrounding whitespace trimmed.
std::vector<std::string> read_list_file(const std::filesystem::path &path);

// Shortest decimal representation that round-trips to the same double.
std::string format_double(double value);

// Fixed-point formatting, used by reports.
std::string format_fixed(double value, int digits);

// Strict parse of the whole field after trimming surrounding whitespace;
// throws InvalidArgument.
double parse_double(std::string_view field);
long long parse_int(std::string_view field);

// 64-bit FNV-1a, used for content hashes in run manifests.
std::uint64_t fnv1a64(std::string_view data);
std::string hex64(std::uint64_t value);

}  // namespace opinion_miner

#endif  // OPINION_MINER_TEXT_H_
