#include "galedim/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "galedim/errors.hpp"

namespace galedim {

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

bool is_packed_extension(const std::string& path) {
    if (ends_with(path, ".bin")) return true;
    if (ends_with(path, ".bits")) return false;
    throw IoError("unknown sequence file extension (want .bits or .bin): " + path);
}

void write_bits_file(const std::string& path, const Bits& bits) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    if (is_packed_extension(path)) {
        uint64_t n = bits.size();
        char header[8];
        for (int i = 0; i < 8; ++i) header[i] = static_cast<char>((n >> (8 * i)) & 0xff);
        out.write(header, 8);
        std::string packed((bits.size() + 7) / 8, '\0');
        for (std::size_t i = 0; i < bits.size(); ++i)
            if (bits[i]) packed[i / 8] |= static_cast<char>(0x80 >> (i % 8));
        out.write(packed.data(), static_cast<std::streamsize>(packed.size()));
    } else {
        std::string text;
        text.reserve(bits.size() + 1);
        for (uint8_t b : bits) text.push_back(b ? '1' : '0');
        text.push_back('\n');
        out.write(text.data(), static_cast<std::streamsize>(text.size()));
    }
    if (!out) throw IoError("write failed: " + path);
}

Bits read_bits_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path);
    if (is_packed_extension(path)) {
        char header[8];
        if (!in.read(header, 8)) throw IoError("truncated header: " + path);
        uint64_t n = 0;
        for (int i = 0; i < 8; ++i)
            n |= static_cast<uint64_t>(static_cast<unsigned char>(header[i])) << (8 * i);
        std::string packed((n + 7) / 8, '\0');
        if (!in.read(packed.data(), static_cast<std::streamsize>(packed.size())))
            throw IoError("truncated payload: " + path);
        Bits bits(n);
        for (uint64_t i = 0; i < n; ++i)
            bits[i] = (static_cast<unsigned char>(packed[i / 8]) >> (7 - i % 8)) & 1;
        return bits;
    }
    Bits bits;
    char c;
    while (in.get(c)) {
        if (c == '0')
            bits.push_back(0);
        else if (c == '1')
            bits.push_back(1);
        else if (c == '\n' || c == '\r' || c == ' ' || c == '\t')
            continue;
        else
            throw IoError(std::string("unexpected character '") + c + "' in " + path);
    }
    return bits;
}

std::string csv_line(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) line.push_back(',');
        const std::string& f = fields[i];
        if (f.find_first_of(",\"\n") != std::string::npos) {
            line.push_back('"');
            for (char c : f) {
                if (c == '"') line.push_back('"');
                line.push_back(c);
            }
            line.push_back('"');
        } else {
            line += f;
        }
    }
    return line;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << csv_line(header) << '\n';
    for (const auto& row : rows) out << csv_line(row) << '\n';
    if (!out) throw IoError("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace galedim
