#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace hhlab {

/// FNV-1a 64-bit accumulator used to fingerprint the inputs of a check so
/// reports can be matched to the exact matrices/function/parameters they
/// were produced from.
class Fnv1a {
public:
  void add_bytes(const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      hash_ ^= static_cast<std::uint64_t>(p[i]);
      hash_ *= 0x100000001b3ULL;
    }
  }
  void add(double x) { add_bytes(&x, sizeof x); }
  void add(std::uint64_t x) { add_bytes(&x, sizeof x); }
  void add(int x) {
    const auto v = static_cast<std::int64_t>(x);
    add_bytes(&v, sizeof v);
  }
  void add(std::string_view s) {
    add_bytes(s.data(), s.size());
    add_bytes("\0", 1);  // separator so "ab","c" != "a","bc"
  }
  void add(std::span<const double> xs) {
    for (double x : xs) add(x);
  }

  std::uint64_t value() const { return hash_; }

  std::string hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    std::uint64_t v = hash_;
    for (int i = 15; i >= 0; --i) {
      out[static_cast<std::size_t>(i)] = digits[v & 0xf];
      v >>= 4;
    }
    return out;
  }

private:
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

}  // namespace hhlab
