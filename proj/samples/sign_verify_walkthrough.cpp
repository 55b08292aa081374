// Minimal end-to-end walkthrough: build a key pair on a small curve, sign a
// message, verify it, and show what the serialized artifacts look like.

#include <iostream>
#include <string>
#include <vector>

#include "ecvsig/ecvsig.hpp"

int main() {
  using namespace ecvsig;
  Rng rng(2024);

  // A desk-scale curve: y^2 = x^3 + 6x + 2 over F_757.
  // find_prime_order_generator counts the group exhaustively (791 points)
  // and projects a random point into the largest prime-order subgroup.
  CurveParams curve{757, 6, 2};
  validate_params(curve);
  SubgroupInfo subgroup = find_prime_order_generator(curve, rng);
  std::cout << "subgroup order q = " << subgroup.order << ", cofactor "
            << subgroup.cofactor << "\n";

  EcKeyPair keys = ec_keygen(curve, subgroup.generator, subgroup.order, rng);

  std::string text = "meet me at the usual place";
  std::vector<std::uint8_t> message(text.begin(), text.end());
  EcSignature sig = sign_message(message, keys, rng);

  std::cout << "signature verifies: "
            << (verify_message(message, sig, keys.pub) ? "yes" : "no") << "\n";

  message[0] ^= 1;
  std::cout << "tampered message verifies: "
            << (verify_message(message, sig, keys.pub) ? "yes" : "no") << "\n";

  std::cout << "\npublic key block:\n"
            << encode_public_key(keys.pub).to_text() << "\nsignature block:\n"
            << encode_signature(sig).to_text();
  return 0;
}
