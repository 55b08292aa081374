// Why nonce pairs are one-shot secrets: signing two different digests with
// the same (k, l) hands the private key to anyone holding both signatures.

#include <iostream>

#include "ecvsig/ecvsig.hpp"

int main() {
  using namespace ecvsig;
  Rng rng(7);

  CurveParams curve{757, 6, 2};
  SubgroupInfo subgroup = find_prime_order_generator(curve, rng);
  EcKeyPair keys = ec_keygen(curve, subgroup.generator, subgroup.order, rng);
  const Natural& q = keys.pub.subgroup_order;
  std::cout << "private key alpha = " << keys.priv.secret_scalar << "\n";

  // One careless signer, two messages, one nonce pair.
  NoncePair reused{rng.in_range(1, q - 1), rng.in_range(1, q - 1)};
  MessageDigest m1{digest_raw(41, q)};
  MessageDigest m2{digest_raw(17, q)};
  EcSignature sig1 = ec_sign(m1, keys, reused);
  EcSignature sig2 = ec_sign(m2, keys, reused);

  // The attacker sees only public data: both signatures and both digests.
  // Identical commitment points betray the reuse, and the signing equation
  // collapses to (t1 - t2) = (m1 - m2) * alpha mod q.
  Natural stolen = nonce_reuse_recover_alpha(sig1, m1, sig2, m2, q);
  std::cout << "attacker recovers alpha = " << stolen << "\n";
  std::cout << "matches the private key: "
            << (stolen == keys.priv.secret_scalar ? "yes" : "no") << "\n";
  return 0;
}
