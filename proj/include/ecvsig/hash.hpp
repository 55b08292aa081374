#pragma once

/// @file hash.hpp
/// Thin wrapper over OpenSSL's EVP digests. SHA-256 is the default
/// everywhere; SHA-1 stays selectable for compatibility demonstrations only
/// (its collision resistance is broken).

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <openssl/evp.h>

#include "ecvsig/modmath.hpp"

namespace ecvsig {

enum class HashAlgo { sha256, sha1 };

inline const char* hash_name(HashAlgo algo) {
  return algo == HashAlgo::sha256 ? "sha256" : "sha1";
}

inline std::vector<std::uint8_t> hash_bytes(HashAlgo algo,
                                            std::span<const std::uint8_t> data) {
  const EVP_MD* md = algo == HashAlgo::sha256 ? EVP_sha256() : EVP_sha1();
  std::vector<std::uint8_t> out(EVP_MAX_MD_SIZE);
  unsigned out_len = 0;
  static const std::uint8_t empty = 0;
  const std::uint8_t* ptr = data.empty() ? &empty : data.data();
  if (EVP_Digest(ptr, data.size(), out.data(), &out_len, md, nullptr) != 1)
    throw Error("hash_bytes: digest computation failed");
  out.resize(out_len);
  return out;
}

/// Interpret bytes as a big-endian unsigned integer.
inline Natural bytes_to_natural(std::span<const std::uint8_t> bytes) {
  Natural value = 0;
  for (std::uint8_t byte : bytes) value = (value << 8) | byte;
  return value;
}

}  // namespace ecvsig
