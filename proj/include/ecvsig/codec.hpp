#pragma once

/**
 * @file codec.hpp
 * @brief Bit-exact text serialization of keys and signatures.
 *
 * A block is a header tag on the first line followed by `label=hexvalue`
 * lines, newline-terminated, with no trailing whitespace. Values are
 * lowercase big-endian hex with no leading zero digits (zero itself is
 * "0"), so encoding is canonical: re-encoding a decoded block reproduces it
 * byte for byte. Parsing is strict and rejects anything non-canonical.
 *
 * Formats:
 *   ECVSIG-PUB-1   p, a, b, Gx, Gy, q, Bx, By
 *   ECVSIG-SIG-1   Rx, Ry, Sx, Sy, t
 *   ECVSIG-PRIV-1  warning banner line, then the PUB fields plus alpha
 *
 * Decoding a public or private key re-validates it (curve parameters,
 * points on curve, prime q, q*G = infinity). Decoding a signature is purely
 * syntactic; range and curve membership are the verifier's job.
 */

#include <array>
#include <cctype>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ecvsig/ec_scheme.hpp"

namespace ecvsig {

class CodecError : public Error {
 public:
  using Error::Error;
};

class InvalidKeyError : public CodecError {
 public:
  using CodecError::CodecError;
};

inline constexpr std::string_view kPublicKeyHeader = "ECVSIG-PUB-1";
inline constexpr std::string_view kSignatureHeader = "ECVSIG-SIG-1";
inline constexpr std::string_view kPrivateKeyHeader = "ECVSIG-PRIV-1";
inline constexpr std::string_view kPrivateKeyBanner =
    "# WARNING: private key material - keep secret, never transmit";

/// Canonical lowercase hex, no leading zeros; 0 encodes as "0".
inline std::string to_hex(const Natural& value) {
  if (value < 0) throw CodecError("to_hex: negative value");
  std::ostringstream out;
  out << std::hex << value;
  std::string text = out.str();
  for (char& c : text) c = static_cast<char>(std::tolower(
      static_cast<unsigned char>(c)));
  return text;
}

/// Strict inverse of to_hex: rejects empty strings, non-hex digits,
/// uppercase, and leading zeros.
inline Natural from_hex(std::string_view text) {
  if (text.empty()) throw CodecError("from_hex: empty value");
  if (text.size() > 1 && text.front() == '0')
    throw CodecError("from_hex: leading zero digits are not canonical");
  for (char c : text) {
    bool ok = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
    if (!ok) throw CodecError("from_hex: malformed hex digit");
  }
  return Natural("0x" + std::string(text));
}

struct EncodedBlock {
  std::string header;
  std::string banner;  // optional '#' line right after the header
  std::vector<std::pair<std::string, std::string>> fields;

  std::string to_text() const {
    std::string out;
    out += header;
    out += '\n';
    if (!banner.empty()) {
      out += banner;
      out += '\n';
    }
    for (const auto& [label, value] : fields) {
      out += label;
      out += '=';
      out += value;
      out += '\n';
    }
    return out;
  }

  static EncodedBlock parse(std::string_view text) {
    if (text.empty() || text.back() != '\n')
      throw CodecError("block: missing final newline");
    EncodedBlock block;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start < text.size()) {
      std::size_t end = text.find('\n', start);
      std::string_view line = text.substr(start, end - start);
      start = end + 1;
      if (line_no == 0) {
        if (line.empty()) throw CodecError("block: empty header line");
        block.header = std::string(line);
      } else if (line_no == 1 && !line.empty() && line.front() == '#') {
        block.banner = std::string(line);
      } else {
        std::size_t eq = line.find('=');
        if (eq == std::string_view::npos || eq == 0)
          throw CodecError("block: expected label=value line");
        std::string_view label = line.substr(0, eq);
        std::string_view value = line.substr(eq + 1);
        for (char c : label) {
          bool ok = std::isalnum(static_cast<unsigned char>(c)) != 0;
          if (!ok) throw CodecError("block: malformed field label");
        }
        if (value.empty()) throw CodecError("block: empty field value");
        block.fields.emplace_back(std::string(label), std::string(value));
      }
      ++line_no;
    }
    return block;
  }
};

namespace detail {

inline void require_header(const EncodedBlock& block, std::string_view header,
                           bool banner_expected) {
  if (block.header != header)
    throw CodecError("block: header mismatch, expected " +
                     std::string(header));
  if (banner_expected && block.banner.empty())
    throw CodecError("block: missing private-key warning banner");
  if (!banner_expected && !block.banner.empty())
    throw CodecError("block: unexpected banner line");
}

inline std::vector<Natural> decode_fields(
    const EncodedBlock& block, std::span<const std::string_view> labels) {
  if (block.fields.empty()) throw CodecError("block: empty body");
  if (block.fields.size() != labels.size())
    throw CodecError("block: wrong field count");
  std::vector<Natural> values;
  values.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (block.fields[i].first != labels[i])
      throw CodecError("block: field '" + block.fields[i].first +
                       "' out of order, expected '" + std::string(labels[i]) +
                       "'");
    values.push_back(from_hex(block.fields[i].second));
  }
  return values;
}

inline void append_point(EncodedBlock& block, std::string_view x_label,
                         std::string_view y_label, const Point& point) {
  block.fields.emplace_back(std::string(x_label), to_hex(point.x()));
  block.fields.emplace_back(std::string(y_label), to_hex(point.y()));
}

inline void validate_public_key(const EcPublicKey& pub) {
  try {
    validate_params(pub.params);
  } catch (const Error& e) {
    throw InvalidKeyError(std::string("public key: ") + e.what());
  }
  if (pub.generator.is_infinity() || !is_on_curve(pub.params, pub.generator))
    throw InvalidKeyError("public key: generator is not on the curve");
  if (pub.public_point.is_infinity() ||
      !is_on_curve(pub.params, pub.public_point))
    throw InvalidKeyError("public key: public point is not on the curve");
  if (pub.subgroup_order < 2 || !is_probable_prime(pub.subgroup_order, 40))
    throw InvalidKeyError("public key: subgroup order is not prime");
  if (!scalar_mul(pub.params, pub.subgroup_order, pub.generator).is_infinity())
    throw InvalidKeyError("public key: q * G is not the identity");
}

}  // namespace detail

inline EncodedBlock encode_public_key(const EcPublicKey& pub) {
  EncodedBlock block;
  block.header = std::string(kPublicKeyHeader);
  block.fields.emplace_back("p", to_hex(pub.params.p));
  block.fields.emplace_back("a", to_hex(pub.params.a));
  block.fields.emplace_back("b", to_hex(pub.params.b));
  detail::append_point(block, "Gx", "Gy", pub.generator);
  block.fields.emplace_back("q", to_hex(pub.subgroup_order));
  detail::append_point(block, "Bx", "By", pub.public_point);
  return block;
}

inline EcPublicKey decode_public_key(const EncodedBlock& block) {
  detail::require_header(block, kPublicKeyHeader, false);
  static constexpr std::array<std::string_view, 8> labels = {
      "p", "a", "b", "Gx", "Gy", "q", "Bx", "By"};
  std::vector<Natural> v = detail::decode_fields(block, labels);
  EcPublicKey pub{{v[0], v[1], v[2]},
                  Point::affine(v[3], v[4]),
                  v[5],
                  Point::affine(v[6], v[7])};
  detail::validate_public_key(pub);
  return pub;
}

inline EncodedBlock encode_signature(const EcSignature& sig) {
  EncodedBlock block;
  block.header = std::string(kSignatureHeader);
  detail::append_point(block, "Rx", "Ry", sig.r_point);
  detail::append_point(block, "Sx", "Sy", sig.s_point);
  block.fields.emplace_back("t", to_hex(sig.t_scalar));
  return block;
}

inline EcSignature decode_signature(const EncodedBlock& block) {
  detail::require_header(block, kSignatureHeader, false);
  static constexpr std::array<std::string_view, 5> labels = {"Rx", "Ry", "Sx",
                                                             "Sy", "t"};
  std::vector<Natural> v = detail::decode_fields(block, labels);
  return {Point::affine(v[0], v[1]), Point::affine(v[2], v[3]), v[4]};
}

/// Private keys carry the full signing context (curve, generator, public
/// point) plus the secret scalar, behind a mandatory warning banner.
inline EncodedBlock encode_private_key(const EcKeyPair& keypair) {
  EncodedBlock block = encode_public_key(keypair.pub);
  block.header = std::string(kPrivateKeyHeader);
  block.banner = std::string(kPrivateKeyBanner);
  block.fields.emplace_back("alpha", to_hex(keypair.priv.secret_scalar));
  return block;
}

inline EcKeyPair decode_private_key(const EncodedBlock& block) {
  detail::require_header(block, kPrivateKeyHeader, true);
  static constexpr std::array<std::string_view, 9> labels = {
      "p", "a", "b", "Gx", "Gy", "q", "Bx", "By", "alpha"};
  std::vector<Natural> v = detail::decode_fields(block, labels);
  EcPublicKey pub{{v[0], v[1], v[2]},
                  Point::affine(v[3], v[4]),
                  v[5],
                  Point::affine(v[6], v[7])};
  detail::validate_public_key(pub);
  const Natural& secret = v[8];
  if (secret < 1 || secret >= pub.subgroup_order)
    throw InvalidKeyError("private key: secret scalar out of range");
  if (scalar_mul(pub.params, secret, pub.generator) != pub.public_point)
    throw InvalidKeyError(
        "private key: secret scalar does not match the public point");
  return {std::move(pub), {secret}};
}

/**
 * Idealized signing payload in bits: the 12 field-sized integers
 * (p, a, b, Gx, Gy, Bx, By, Rx, Ry, Sx, Sy, t) at bit_length(p) bits each.
 * The subgroup order q that the encoded key also carries is metadata and is
 * excluded from this figure.
 */
inline Natural transmission_size_bits(const Natural& p) {
  return Natural(12) * bit_length(p);
}

inline Natural transmission_size_bits(const EcPublicKey& pub,
                                      const EcSignature&) {
  return transmission_size_bits(pub.params.p);
}

}  // namespace ecvsig
