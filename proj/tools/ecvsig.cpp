// ecvsig command-line tool: key generation, signing, verification, built-in
// worked-example reproduction, attack demos and operation-count benchmarks.
//
// Exit codes: 0 success/accept, 1 operational failure/reject, 2 malformed
// input (bad flags, unreadable or unparsable files).

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ecvsig/ecvsig.hpp"

namespace {

using namespace ecvsig;

class UsageError : public Error {
 public:
  using Error::Error;
};

class FileError : public Error {
 public:
  using Error::Error;
};

// Worked-example constants used by demo-paper, attack and bench defaults.
const CurveParams kDemoCurve{757, 6, 2};
const Point kDemoG = Point::affine(529, 566);
const Natural kDemoQ = 113;
const Natural kDemoAlpha = 78;

const Natural kDemoDlP = 509;
const Natural kDemoDlAlpha = 2;
const Natural kDemoDlX = 281;

Natural parse_natural(const std::string& text) {
  std::string body = text;
  bool hex = false;
  if (body.rfind("0x", 0) == 0 || body.rfind("0X", 0) == 0) {
    hex = true;
    body = body.substr(2);
  }
  if (body.empty()) throw UsageError("malformed number: '" + text + "'");
  for (char c : body) {
    bool digit = c >= '0' && c <= '9';
    bool hex_digit = (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
    if (!(digit || (hex && hex_digit)))
      throw UsageError("malformed number: '" + text + "'");
  }
  return hex ? Natural("0x" + body) : Natural(body);
}

std::vector<Natural> parse_natural_list(const std::string& text,
                                        std::size_t expected,
                                        const std::string& what) {
  std::vector<Natural> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) values.push_back(parse_natural(item));
  if (values.size() != expected)
    throw UsageError(what + ": expected " + std::to_string(expected) +
                     " comma-separated numbers");
  return values;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot read file: " + path);
  std::ostringstream content;
  content << in.rdbuf();
  return content.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError("cannot write file: " + path);
  out << content;
  if (!out) throw FileError("write failed: " + path);
}

std::vector<std::uint8_t> file_bytes(const std::string& path) {
  std::string raw = read_file(path);
  return {raw.begin(), raw.end()};
}

EcPublicKey load_public_key(const std::string& path) {
  return decode_public_key(EncodedBlock::parse(read_file(path)));
}

EcKeyPair load_private_key(const std::string& path) {
  return decode_private_key(EncodedBlock::parse(read_file(path)));
}

std::string point_str(const Point& point) {
  if (point.is_infinity()) return "infinity";
  std::ostringstream out;
  out << "(" << point.x() << ", " << point.y() << ")";
  return out.str();
}

HashAlgo parse_hash(const std::string& name) {
  if (name == "sha256") return HashAlgo::sha256;
  if (name == "sha1") return HashAlgo::sha1;
  throw UsageError("unknown hash: " + name + " (sha256 or sha1)");
}

std::uint64_t pick_seed(const std::optional<std::uint64_t>& seed) {
  if (seed) return *seed;
  std::random_device device;
  return (static_cast<std::uint64_t>(device()) << 32) ^ device();
}

void warn_test_mode() {
  std::cerr << "warning: test mode active; nonce and digest overrides are "
               "for reproducing fixed vectors only.\n"
            << "warning: reusing a nonce pair across two messages reveals "
               "the private key.\n";
}

struct CommonOpts {
  std::optional<std::uint64_t> seed;
  bool test_mode = false;
  std::string scheme = "ec";
  std::string hash_name = "sha256";
};

void require_ec_scheme(const CommonOpts& opts, const std::string& command) {
  if (opts.scheme != "ec")
    throw UsageError(command +
                     ": key-file workflows support --scheme ec only; use "
                     "'bench' or 'attack nonce-reuse' for the other schemes");
}

// ---------------------------------------------------------------------------
// keygen
// ---------------------------------------------------------------------------

int run_keygen(const CommonOpts& common, const std::string& curve_spec,
               unsigned bits, const std::string& out_prefix) {
  require_ec_scheme(common, "keygen");
  Rng rng(pick_seed(common.seed));

  CurveParams params;
  Point generator;
  Natural order;
  Natural cofactor;

  if (!curve_spec.empty()) {
    std::vector<Natural> v = parse_natural_list(curve_spec, 3, "--curve");
    params = {v[0], v[1], v[2]};
    validate_params(params);
    SubgroupInfo info = find_prime_order_generator(params, rng);
    generator = info.generator;
    order = info.order;
    cofactor = info.cofactor;
  } else if (bits >= 16) {
    if (bits <= 20) {
      for (;;) {
        Natural p = gen_prime(bits, rng);
        CurveParams candidate{p, rng.below(p), rng.below(p)};
        try {
          validate_params(candidate);
          SubgroupInfo info = find_prime_order_generator(candidate, rng, 5);
          params = candidate;
          generator = info.generator;
          order = info.order;
          cofactor = info.cofactor;
          break;
        } catch (const Error&) {
        }
      }
    } else {
      GroupSearchResult group = find_group_without_counting(bits, rng);
      params = group.params;
      generator = group.generator;
      order = group.order;
      cofactor = group.cofactor;
    }
  } else {
    throw UsageError("keygen: pass --curve p,a,b or --bits N (N >= 16)");
  }

  EcKeyPair keys = ec_keygen(params, generator, order, rng);
  std::string pub_path = out_prefix + ".pub";
  std::string priv_path = out_prefix + ".priv";
  write_file(pub_path, encode_public_key(keys.pub).to_text());
  write_file(priv_path, encode_private_key(keys).to_text());

  std::cout << "curve: p=" << params.p << " a=" << params.a
            << " b=" << params.b << "\n"
            << "generator: " << point_str(generator) << "\n"
            << "q = " << order << "\n"
            << "cofactor = " << cofactor << "\n"
            << "wrote " << pub_path << "\n"
            << "wrote " << priv_path << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// sign / verify
// ---------------------------------------------------------------------------

int run_sign(const CommonOpts& common, const std::string& key_path,
             const std::string& message_path, std::string out_path,
             const std::string& nonce_spec, const std::string& raw_digest) {
  require_ec_scheme(common, "sign");
  if ((!nonce_spec.empty() || !raw_digest.empty()) && !common.test_mode)
    throw UsageError("sign: --nonce and --digest-raw require --test-mode");
  if (common.test_mode) warn_test_mode();

  EcKeyPair keys = load_private_key(key_path);
  const Natural& q = keys.pub.subgroup_order;

  MessageDigest digest =
      raw_digest.empty()
          ? digest_message(file_bytes(message_path), q,
                           parse_hash(common.hash_name))
          : digest_raw(parse_natural(raw_digest), q);

  EcSignature sig;
  if (!nonce_spec.empty()) {
    std::vector<Natural> kl = parse_natural_list(nonce_spec, 2, "--nonce");
    // override mode: a degenerate pair is reported, not resampled
    sig = ec_sign(digest, keys, {kl[0], kl[1]});
  } else {
    Rng rng(pick_seed(common.seed));
    sig = ec_sign_random(digest, keys, rng);
  }

  if (out_path.empty()) out_path = message_path + ".sig";
  write_file(out_path, encode_signature(sig).to_text());
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

int run_verify(const CommonOpts& common, const std::string& pub_path,
               const std::string& message_path, const std::string& sig_path,
               const std::string& raw_digest) {
  require_ec_scheme(common, "verify");
  if (!raw_digest.empty() && !common.test_mode)
    throw UsageError("verify: --digest-raw requires --test-mode");

  EcPublicKey pub = load_public_key(pub_path);
  EcSignature sig = decode_signature(EncodedBlock::parse(read_file(sig_path)));
  MessageDigest digest =
      raw_digest.empty()
          ? digest_message(file_bytes(message_path), pub.subgroup_order,
                           parse_hash(common.hash_name))
          : digest_raw(parse_natural(raw_digest), pub.subgroup_order);

  if (ec_verify(digest, sig, pub)) {
    std::cout << "accept\n";
    return 0;
  }
  std::cout << "reject\n";
  return 1;
}

// ---------------------------------------------------------------------------
// demo-paper
// ---------------------------------------------------------------------------

class DemoReport {
 public:
  void check(const std::string& name, const Natural& computed,
             const Natural& expected) {
    line(name, computed.str(), expected.str());
  }

  void check(const std::string& name, const Point& computed,
             const Point& expected) {
    line(name, point_str(computed), point_str(expected));
  }

  void check_true(const std::string& name, bool value) {
    line(name, value ? "yes" : "no", "yes");
  }

  bool all_ok() const { return all_ok_; }

 private:
  void line(const std::string& name, const std::string& computed,
            const std::string& expected) {
    bool ok = computed == expected;
    all_ok_ = all_ok_ && ok;
    std::cout << "  " << name << " = " << computed << "  (expected "
              << expected << ")  " << (ok ? "ok" : "MISMATCH") << "\n";
  }

  bool all_ok_ = true;
};

int run_demo_paper() {
  DemoReport report;

  std::cout << "modular variant scheme, p = 509\n";
  DlKeyPair dl_keys = dl_key_from_private(kDemoDlP, kDemoDlAlpha, kDemoDlX);
  report.check("y", dl_keys.pub.y, 482);
  VariantSignature variant =
      variant_sign(432, dl_keys.priv, dl_keys.pub, {208, 386});
  report.check("r", variant.r, 332);
  report.check("s", variant.s, 39);
  report.check("t", variant.t, 440);
  VariantCheck sides = variant_verify_detail(432, variant, dl_keys.pub);
  report.check("alpha^t mod p", sides.lhs, 436);
  report.check("y^r * r^s * s^m mod p", sides.rhs, 436);
  report.check_true("verify", sides.accepted);

  std::cout << "elliptic-curve scheme, y^2 = x^3 + 6x + 2 mod 757\n";
  validate_params(kDemoCurve);
  report.check("curve order", count_points(kDemoCurve), 791);
  report.check("order of G", point_order(kDemoCurve, kDemoG, 791), kDemoQ);
  EcKeyPair keys = ec_key_from_private(kDemoCurve, kDemoG, kDemoQ, kDemoAlpha);
  report.check("B", keys.pub.public_point, Point::affine(319, 629));
  EcSignature sig = ec_sign({56}, keys, {81, 63});
  report.check("R", sig.r_point, Point::affine(248, 195));
  report.check("S", sig.s_point, Point::affine(157, 326));
  report.check("t", sig.t_scalar, 52);
  EcVerifyDetail detail = ec_verify_detail({56}, sig, keys.pub);
  report.check("tG", detail.t_g, Point::affine(555, 156));
  report.check("sR", detail.s_r, Point::affine(555, 601));
  report.check("rS", detail.r_s, Point::affine(292, 266));
  report.check("mB", detail.m_b, Point::affine(26, 319));
  report.check_true("verify", detail.accepted);

  std::cout << (report.all_ok() ? "all values match\n"
                                : "MISMATCHES FOUND\n");
  return report.all_ok() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// attack
// ---------------------------------------------------------------------------

int run_attack_nonce_reuse(const CommonOpts& common) {
  if (common.scheme == "variant") {
    DlKeyPair keys = dl_key_from_private(kDemoDlP, kDemoDlAlpha, kDemoDlX);
    NoncePair shared{208, 386};
    Natural m1 = 432, m2 = 100;
    VariantSignature sig1 = variant_sign(m1, keys.priv, keys.pub, shared);
    VariantSignature sig2 = variant_sign(m2, keys.priv, keys.pub, shared);
    std::cout << "signed m1=" << m1 << " and m2=" << m2
              << " with one nonce pair; t1=" << sig1.t << " t2=" << sig2.t
              << "\n";
    std::vector<Natural> candidates =
        variant_nonce_reuse_recover_l(sig1, m1, sig2, m2, keys.pub.p);
    std::cout << "candidates for nonce component l (true value "
              << shared.l << "):";
    for (const Natural& c : candidates) std::cout << " " << c;
    std::cout << "\n"
              << "x and k stay underdetermined: one equation cannot pin the "
                 "remaining two secrets\n";
    return 0;
  }
  if (common.scheme != "ec")
    throw UsageError("attack nonce-reuse: --scheme must be ec or variant");

  EcKeyPair keys = ec_key_from_private(kDemoCurve, kDemoG, kDemoQ, kDemoAlpha);
  NoncePair shared{81, 63};
  MessageDigest m1{56}, m2{10};
  EcSignature sig1 = ec_sign(m1, keys, shared);
  EcSignature sig2 = ec_sign(m2, keys, shared);
  std::cout << "signed m1=" << m1.value << " and m2=" << m2.value
            << " with one nonce pair; t1=" << sig1.t_scalar
            << " t2=" << sig2.t_scalar << "\n";
  Natural alpha = nonce_reuse_recover_alpha(sig1, m1, sig2, m2, kDemoQ);
  std::cout << "recovered alpha = " << alpha << "\n";
  bool confirmed =
      scalar_mul(kDemoCurve, alpha, kDemoG) == keys.pub.public_point;
  std::cout << (confirmed ? "confirmed: alpha * G = B\n"
                          : "recovery failed to confirm\n");
  return confirmed ? 0 : 1;
}

int run_attack_dlog(const std::string& pub_path, const std::string& curve_spec,
                    const std::string& base_spec, const std::string& target_spec,
                    const std::string& order_spec) {
  CurveParams params = kDemoCurve;
  Point base = kDemoG;
  Point target = scalar_mul(kDemoCurve, kDemoAlpha, kDemoG);
  Natural order = kDemoQ;

  if (!pub_path.empty()) {
    EcPublicKey pub = load_public_key(pub_path);
    params = pub.params;
    base = pub.generator;
    target = pub.public_point;
    order = pub.subgroup_order;
  }
  if (!curve_spec.empty()) {
    std::vector<Natural> v = parse_natural_list(curve_spec, 3, "--curve");
    params = {v[0], v[1], v[2]};
  }
  if (!base_spec.empty()) {
    std::vector<Natural> v = parse_natural_list(base_spec, 2, "--base");
    base = Point::affine(v[0], v[1]);
  }
  if (!target_spec.empty()) {
    std::vector<Natural> v = parse_natural_list(target_spec, 2, "--target");
    target = Point::affine(v[0], v[1]);
  }
  if (!order_spec.empty()) order = parse_natural(order_spec);

  std::cout << "solving n * " << point_str(base) << " = " << point_str(target)
            << " over subgroup order " << order << "\n";
  std::optional<Natural> result = bsgs_ecdlp({params, base, target, order});
  if (!result) {
    std::cout << "not found: target is outside the subgroup\n";
    return 1;
  }
  std::cout << "dlog = " << *result << "\n";
  return 0;
}

int run_attack_rank(const CommonOpts& common, unsigned z) {
  if (z < 1) throw UsageError("attack rank: --z must be >= 1");
  Rng rng(pick_seed(common.seed));
  EcKeyPair keys = ec_key_from_private(kDemoCurve, kDemoG, kDemoQ, kDemoAlpha);

  std::vector<std::pair<EcSignature, MessageDigest>> batch;
  while (batch.size() < z) {
    MessageDigest digest{rng.below(kDemoQ)};
    EcSignature sig = ec_sign_random(digest, keys, rng);
    bool repeat = false;
    for (const auto& [existing, _] : batch)
      repeat = repeat || (existing.r_point == sig.r_point &&
                          existing.s_point == sig.s_point);
    if (!repeat) batch.emplace_back(sig, digest);
  }

  SystemShapeReport report = attack_system_rank(batch, kDemoQ);
  std::cout << report.equations << " equations, " << report.unknowns
            << " unknowns\n"
            << "rank = " << report.rank << "\n"
            << "solution space dimension = " << report.solution_space_dim
            << "\n"
            << (report.underdetermined
                    ? "system is underdetermined: the private key hides among "
                      "many consistent solutions\n"
                    : "system is determined\n");
  return 0;
}

// ---------------------------------------------------------------------------
// curve-info
// ---------------------------------------------------------------------------

int run_curve_info(const CommonOpts& common, const std::string& curve_spec) {
  if (curve_spec.empty()) throw UsageError("curve-info: pass --curve p,a,b");
  std::vector<Natural> v = parse_natural_list(curve_spec, 3, "--curve");
  CurveParams params{v[0], v[1], v[2]};
  validate_params(params);
  std::cout << "curve y^2 = x^3 + " << params.a << "x + " << params.b
            << " mod " << params.p << " is nonsingular\n";

  Natural order = count_points(params);
  std::cout << "group order = " << order << "\n";
  Factorization factorization = factor_trial_division(order);
  std::cout << "factorization:";
  for (const auto& [prime, exponent] : factorization.factors) {
    std::cout << " " << prime;
    if (exponent > 1) std::cout << "^" << exponent;
  }
  if (!factorization.complete())
    std::cout << " * " << factorization.cofactor << " (unfactored)";
  std::cout << "\n";

  Rng rng(pick_seed(common.seed));
  SubgroupInfo info = find_prime_order_generator(params, rng);
  std::cout << "largest prime-order subgroup: q = " << info.order
            << ", cofactor = " << info.cofactor << "\n"
            << "sample generator: " << point_str(info.generator) << "\n"
            << "q * G is the identity: "
            << (scalar_mul(params, info.order, info.generator).is_infinity()
                    ? "yes"
                    : "no")
            << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// bench
// ---------------------------------------------------------------------------

template <typename F>
double time_microseconds(int iterations, F&& fn) {
  auto begin = std::chrono::steady_clock::now();
  for (int i = 0; i < iterations; ++i) fn();
  auto end = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::micro>(end - begin).count() /
         iterations;
}

void print_ops(const std::string& label, const OpCountReport& ops) {
  std::cout << label << ": ec_scalar_mults=" << ops.ec_scalar_mults
            << " modular_mults=" << ops.modular_mults
            << " hash_calls=" << ops.hash_calls
            << " modular_inversions=" << ops.modular_inversions << "\n";
}

int run_bench(const CommonOpts& common, const std::string& curve_spec,
              unsigned bits) {
  Rng rng(pick_seed(common.seed));
  const int iterations = 50;
  std::vector<std::uint8_t> message = {'b', 'e', 'n', 'c', 'h'};

  if (common.scheme == "elgamal" || common.scheme == "variant") {
    DlKeyPair keys = dl_key_from_private(kDemoDlP, kDemoDlAlpha, kDemoDlX);
    std::cout << "scheme: " << common.scheme << " over p = " << keys.pub.p
              << " (counters cover scheme-level multiplications and "
                 "inversions)\n";
    if (common.scheme == "elgamal") {
      Natural k = 0;
      do {
        k = rng.in_range(1, keys.pub.p - 1);
      } while (boost::multiprecision::gcd(k, keys.pub.p - 1) != 1);
      Natural m = rng.below(keys.pub.p - 1);
      OpCountReport sign_ops = measure_ops(
          [&] { classic_sign(m, keys.priv, keys.pub, k); });
      print_ops("sign ops", sign_ops);
      double us = time_microseconds(iterations, [&] {
        classic_sign(m, keys.priv, keys.pub, k);
      });
      std::cout << "sign time: " << us << " us\n";
    } else {
      Natural m = rng.below(keys.pub.p - 1);
      NoncePair nonces{rng.in_range(1, keys.pub.p - 1),
                       rng.in_range(1, keys.pub.p - 1)};
      OpCountReport sign_ops = measure_ops(
          [&] { variant_sign(m, keys.priv, keys.pub, nonces); });
      print_ops("sign ops", sign_ops);
      double us = time_microseconds(iterations, [&] {
        variant_sign(m, keys.priv, keys.pub, nonces);
      });
      std::cout << "sign time: " << us << " us\n";
    }
    return 0;
  }
  if (common.scheme != "ec")
    throw UsageError("bench: --scheme must be ec, elgamal or variant");

  EcKeyPair keys;
  if (!curve_spec.empty()) {
    std::vector<Natural> v = parse_natural_list(curve_spec, 3, "--curve");
    CurveParams params{v[0], v[1], v[2]};
    validate_params(params);
    SubgroupInfo info = find_prime_order_generator(params, rng);
    keys = ec_keygen(params, info.generator, info.order, rng);
  } else if (bits >= 16) {
    GroupSearchResult group = find_group_without_counting(bits, rng);
    keys = ec_keygen(group.params, group.generator, group.order, rng);
  } else {
    keys = ec_keygen(kDemoCurve, kDemoG, kDemoQ, rng);
  }
  const CurveParams& params = keys.pub.params;
  HashAlgo algo = parse_hash(common.hash_name);

  std::cout << "scheme: ec over p = " << params.p
            << " (q = " << keys.pub.subgroup_order << ")\n";

  EcSignature sig;
  OpCountReport sign_ops =
      measure_ops([&] { sig = sign_message(message, keys, rng, algo); });
  print_ops("sign ops", sign_ops);
  std::cout << "sign cost: " << sign_ops.ec_scalar_mults
            << " scalar multiples + " << sign_ops.modular_mults
            << " modular mults + " << sign_ops.hash_calls << " hash = "
            << 240 * sign_ops.ec_scalar_mults + sign_ops.modular_mults
            << " modular-mult units + " << sign_ops.hash_calls
            << " hash (240 per scalar multiple)\n";

  OpCountReport verify_ops = measure_ops(
      [&] { verify_message(message, sig, keys.pub, algo); });
  print_ops("verify ops", verify_ops);
  std::cout << "verify cost: " << verify_ops.ec_scalar_mults
            << " scalar multiples + " << verify_ops.hash_calls << " hash = "
            << 240 * verify_ops.ec_scalar_mults + verify_ops.modular_mults
            << " modular-mult units + " << verify_ops.hash_calls << " hash\n";

  std::cout << "communication: " << transmission_size_bits(params.p)
            << " bits (12 field elements of " << bit_length(params.p)
            << " bits)\n";

  double sign_us = time_microseconds(
      iterations, [&] { sign_message(message, keys, rng, algo); });
  double verify_us = time_microseconds(
      iterations, [&] { verify_message(message, sig, keys.pub, algo); });
  std::cout << "sign time: " << sign_us << " us\n"
            << "verify time: " << verify_us << " us\n";
  return 0;
}

int guarded(const std::function<int()>& fn) {
  try {
    return fn();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const FileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CodecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "ecvsig: elliptic-curve signature toolkit with nonce-reuse attack "
      "demos and operation-count instrumentation"};
  app.require_subcommand(1);

  CommonOpts common;
  std::string curve_spec, keygen_out, sign_out, key_path, pub_path;
  std::string nonce_spec, raw_digest;
  unsigned bits = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", common.seed, "deterministic rng seed");
    cmd->add_option("--scheme", common.scheme, "ec | elgamal | variant")
        ->default_val("ec");
    cmd->add_flag("--test-mode", common.test_mode,
                  "enable nonce/digest overrides (unsafe outside tests)");
    cmd->add_option("--hash", common.hash_name, "sha256 | sha1")
        ->default_val("sha256");
  };

  CLI::App* keygen = app.add_subcommand("keygen", "generate a key pair");
  add_common(keygen);
  keygen->add_option("--curve", curve_spec, "curve as p,a,b");
  keygen->add_option("--bits", bits, "search a curve at this modulus size");
  keygen->add_option("--out", keygen_out, "output path prefix")
      ->default_val("ecvsig-key");

  CLI::App* sign = app.add_subcommand("sign", "sign a message file");
  add_common(sign);
  std::string message_path;
  sign->add_option("--key", key_path, "private key file")->required();
  sign->add_option("message", message_path, "message file")->required();
  sign->add_option("--out", sign_out, "signature output path");
  sign->add_option("--nonce", nonce_spec, "override nonces as k,l");
  sign->add_option("--digest-raw", raw_digest, "override the digest value");

  CLI::App* verify = app.add_subcommand("verify", "verify a signature file");
  add_common(verify);
  std::string sig_path;
  verify->add_option("--pub", pub_path, "public key file")->required();
  verify->add_option("message", message_path, "message file")->required();
  verify->add_option("signature", sig_path, "signature file")->required();
  verify->add_option("--digest-raw", raw_digest, "override the digest value");

  CLI::App* demo =
      app.add_subcommand("demo-paper", "reproduce the built-in worked "
                                       "examples and check every value");

  CLI::App* attack = app.add_subcommand("attack", "attack demonstrations");
  attack->require_subcommand(1);
  CLI::App* reuse = attack->add_subcommand(
      "nonce-reuse", "recover the private key from a reused nonce pair");
  add_common(reuse);
  CLI::App* dlog = attack->add_subcommand(
      "dlog", "baby-step giant-step discrete-log oracle");
  std::string base_spec, target_spec, order_spec;
  dlog->add_option("--pub", pub_path, "public key file: solve G -> B");
  dlog->add_option("--curve", curve_spec, "curve as p,a,b");
  dlog->add_option("--base", base_spec, "base point as x,y");
  dlog->add_option("--target", target_spec, "target point as x,y");
  dlog->add_option("--order", order_spec, "subgroup order");
  CLI::App* rank = attack->add_subcommand(
      "rank", "shape of the signature equation system");
  add_common(rank);
  unsigned z = 3;
  rank->add_option("--z", z, "number of distinct-nonce signatures");

  CLI::App* curve_info =
      app.add_subcommand("curve-info", "count points, factor the order, "
                                       "find a prime-order generator");
  add_common(curve_info);
  curve_info->add_option("--curve", curve_spec, "curve as p,a,b");

  CLI::App* bench = app.add_subcommand(
      "bench", "operation counts, cost model and wall-clock timings");
  add_common(bench);
  bench->add_option("--curve", curve_spec, "curve as p,a,b");
  bench->add_option("--bits", bits, "bench on a curve of this size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*keygen)
    return guarded(
        [&] { return run_keygen(common, curve_spec, bits, keygen_out); });
  if (*sign)
    return guarded([&] {
      return run_sign(common, key_path, message_path, sign_out, nonce_spec,
                      raw_digest);
    });
  if (*verify)
    return guarded([&] {
      return run_verify(common, pub_path, message_path, sig_path, raw_digest);
    });
  if (*demo) return guarded([&] { return run_demo_paper(); });
  if (*attack) {
    if (*reuse) return guarded([&] { return run_attack_nonce_reuse(common); });
    if (*dlog)
      return guarded([&] {
        return run_attack_dlog(pub_path, curve_spec, base_spec, target_spec,
                               order_spec);
      });
    if (*rank) return guarded([&] { return run_attack_rank(common, z); });
  }
  if (*curve_info)
    return guarded([&] { return run_curve_info(common, curve_spec); });
  if (*bench)
    return guarded([&] { return run_bench(common, curve_spec, bits); });
  return 2;
}
