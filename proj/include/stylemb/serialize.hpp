#pragma once

#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "stylemb/errors.hpp"

namespace stylemb {

// Little-endian primitive I/O for the checkpoint and embedding-store formats.
// Written byte by byte so files are identical regardless of host endianness.

inline void write_u8(std::ostream& os, uint8_t v) {
    os.put(static_cast<char>(v));
}

inline void write_u32(std::ostream& os, uint32_t v) {
    for (int i = 0; i < 4; ++i) os.put(static_cast<char>((v >> (8 * i)) & 0xff));
}

inline void write_u64(std::ostream& os, uint64_t v) {
    for (int i = 0; i < 8; ++i) os.put(static_cast<char>((v >> (8 * i)) & 0xff));
}

inline void write_f32(std::ostream& os, float v) {
    uint32_t bits;
    std::memcpy(&bits, &v, 4);
    write_u32(os, bits);
}

inline void write_bytes(std::ostream& os, const void* data, size_t n) {
    os.write(static_cast<const char*>(data), static_cast<std::streamsize>(n));
}

inline void write_string(std::ostream& os, const std::string& s) {
    write_u32(os, static_cast<uint32_t>(s.size()));
    write_bytes(os, s.data(), s.size());
}

inline uint8_t read_u8(std::istream& is) {
    int c = is.get();
    if (c == EOF) throw FormatError("unexpected end of file");
    return static_cast<uint8_t>(c);
}

inline uint32_t read_u32(std::istream& is) {
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(read_u8(is)) << (8 * i);
    return v;
}

inline uint64_t read_u64(std::istream& is) {
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(read_u8(is)) << (8 * i);
    return v;
}

inline float read_f32(std::istream& is) {
    uint32_t bits = read_u32(is);
    float v;
    std::memcpy(&v, &bits, 4);
    return v;
}

inline std::string read_string(std::istream& is, uint32_t max_len = 1u << 24) {
    uint32_t n = read_u32(is);
    if (n > max_len) throw FormatError("string length out of range");
    std::string s(n, '\0');
    is.read(s.data(), n);
    if (static_cast<uint32_t>(is.gcount()) != n) throw FormatError("unexpected end of file");
    return s;
}

inline void write_f32_array(std::ostream& os, const float* data, size_t n) {
    for (size_t i = 0; i < n; ++i) write_f32(os, data[i]);
}

inline void read_f32_array(std::istream& is, float* data, size_t n) {
    for (size_t i = 0; i < n; ++i) data[i] = read_f32(is);
}

}  // namespace stylemb
