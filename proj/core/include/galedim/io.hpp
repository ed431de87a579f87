#pragma once

#include <string>
#include <vector>

#include "galedim/bits.hpp"

namespace galedim {

// Sequence files. ".bits" holds ASCII '0'/'1' (whitespace ignored); ".bin"
// holds a little-endian u64 bit count followed by the bits packed MSB-first
// per byte. The extension picks the format.
void write_bits_file(const std::string& path, const Bits& bits);
Bits read_bits_file(const std::string& path);

bool is_packed_extension(const std::string& path);

// Minimal CSV: fields containing commas, quotes, or newlines are quoted.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);
std::string csv_line(const std::vector<std::string>& fields);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace galedim
