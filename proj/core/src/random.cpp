#include "signdet/random.hpp"

#include <set>
#include <stdexcept>

namespace signdet {

Poly random_poly(Rng& rng, int degree, long bound) {
  std::uniform_int_distribution<long> coeff(-bound, bound);
  std::vector<Rat> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = coeff(rng);
  return Poly(std::move(c));
}

Poly random_nonzero_poly(Rng& rng, int degree, long bound) {
  if (bound <= 0) return Poly{1};
  for (;;) {
    Poly p = random_poly(rng, degree, bound);
    if (!p.is_zero()) return p;
  }
}

RandomInstance random_instance(Rng& rng, int degree, std::size_t num_polys, long bound) {
  RandomInstance inst;
  inst.p0 = random_nonzero_poly(rng, degree, bound);
  for (std::size_t i = 0; i < num_polys; ++i) inst.polys.push_back(random_poly(rng, degree, bound));
  return inst;
}

RandomInstance random_rooted_instance(Rng& rng, int degree, std::size_t num_polys, long bound) {
  if (degree < 1) return random_instance(rng, degree, num_polys, bound);
  std::uniform_int_distribution<int> num_roots(1, degree);
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 2);
  const int k = num_roots(rng);
  std::vector<Rat> roots;
  Poly p0{1};
  for (int j = 0; j < k; ++j) {
    Rat a(num(rng), den(rng));
    a.canonicalize();
    roots.push_back(a);
    p0 = p0 * Poly{-a, 1};
  }
  p0 = p0 * random_nonzero_poly(rng, degree - k, std::max(1L, bound / 4));

  RandomInstance inst;
  inst.p0 = std::move(p0);
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<std::size_t> pick(0, roots.size() - 1);
  for (std::size_t i = 0; i < num_polys; ++i) {
    switch (kind(rng)) {
      case 0: {
        // vanishes at one of P0's roots
        const Rat& a = roots[pick(rng)];
        inst.polys.push_back(Poly{-a, 1} * random_poly(rng, degree - 1, std::max(1L, bound / 4)));
        break;
      }
      case 1:
        inst.polys.push_back(random_poly(rng, 1, bound));
        break;
      default:
        inst.polys.push_back(random_poly(rng, degree, bound));
    }
  }
  return inst;
}

SignList random_sign_list(Rng& rng, std::size_t length, std::size_t size) {
  std::size_t capacity = 1;
  for (std::size_t k = 0; k < length; ++k) capacity *= 3;
  if (size == 0 || size > capacity) throw std::invalid_argument("random_sign_list: size out of range");
  std::uniform_int_distribution<int> sign(-1, 1);
  std::set<SignCond> picked;
  while (picked.size() < size) {
    std::vector<Sign> v(length);
    for (auto& s : v) s = sign_of(sign(rng));
    picked.insert(SignCond(std::move(v)));
  }
  return SignList(std::vector<SignCond>(picked.begin(), picked.end()));
}

}  // namespace signdet
