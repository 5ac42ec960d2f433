#include "hasse/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hasse/error.hpp"
#include "hasse/number.hpp"

namespace hasse {

namespace {

void check_size(std::size_t n, std::size_t cap, const std::string& what) {
  if (n > cap)
    throw Error(ErrorKind::GroupTooLarge, what + " has order " + std::to_string(n) +
                                              " above the construction cap of " +
                                              std::to_string(cap));
}

template <typename Mul>
FiniteGroup tabulate(std::size_t n, std::string name, Mul&& mul) {
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Element>(mul(a, b));
  return FiniteGroup::from_flat_table(n, std::move(table), std::move(name));
}

std::string abelian_name(const std::vector<std::size_t>& factors) {
  if (factors.empty()) return "C1";
  std::map<std::size_t, std::size_t> counts;
  for (auto f : factors) ++counts[f];
  std::string out;
  for (const auto& [f, k] : counts) {
    if (!out.empty()) out += "x";
    out += "C" + std::to_string(f);
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace

FiniteGroup cyclic(std::size_t n, std::size_t cap) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "cyclic group needs n >= 1");
  check_size(n, cap, "C" + std::to_string(n));
  return tabulate(n, "C" + std::to_string(n), [n](std::size_t a, std::size_t b) { return (a + b) % n; });
}

FiniteGroup abelian(const std::vector<std::size_t>& factors, std::size_t cap) {
  std::size_t n = 1;
  for (auto f : factors) {
    if (f < 2) throw Error(ErrorKind::InvalidArgument, "abelian factors must be >= 2");
    n *= f;
    check_size(n, cap, abelian_name(factors));
  }
  return tabulate(n, abelian_name(factors), [&](std::size_t a, std::size_t b) {
    std::size_t out = 0, place = 1;
    for (auto f : factors) {
      out += ((a % f + b % f) % f) * place;
      a /= f;
      b /= f;
      place *= f;
    }
    return out;
  });
}

FiniteGroup elementary_abelian(std::size_t p, std::size_t k, std::size_t cap) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  return abelian(std::vector<std::size_t>(k, p), cap);
}

FiniteGroup dihedral(std::size_t m, std::size_t cap) {
  if (m == 0) throw Error(ErrorKind::InvalidArgument, "dihedral group needs m >= 1");
  check_size(2 * m, cap, "D" + std::to_string(2 * m));
  return tabulate(2 * m, "D" + std::to_string(2 * m), [m](std::size_t a, std::size_t b) {
    const std::size_t i = a % m, e = a / m, j = b % m, f = b / m;
    const std::size_t k = e ? (i + m - j) % m : (i + j) % m;
    return k + m * ((e + f) % 2);
  });
}

FiniteGroup generalized_dihedral(const FiniteGroup& a, std::size_t cap) {
  if (!is_abelian(a)) throw Error(ErrorKind::NotAbelian, a.name() + " is not abelian");
  const std::size_t n = a.order();
  check_size(2 * n, cap, "D(" + a.name() + ")");
  return tabulate(2 * n, "D(" + a.name() + ")", [&](std::size_t x, std::size_t y) {
    const auto ax = static_cast<Element>(x % n), ay = static_cast<Element>(y % n);
    const std::size_t e = x / n, f = y / n;
    const Element prod = e ? a.mul(ax, a.inv(ay)) : a.mul(ax, ay);
    return prod + n * ((e + f) % 2);
  });
}

FiniteGroup dicyclic(std::size_t m, std::size_t cap) {
  if (m == 0) throw Error(ErrorKind::InvalidArgument, "dicyclic group needs m >= 1");
  const std::size_t n = 4 * m, c = 2 * m;
  const std::string name = m == 2 ? "Q8" : "Dic" + std::to_string(n);
  check_size(n, cap, name);
  // a^i x^e with x a x^-1 = a^-1 and x^2 = a^m.
  return tabulate(n, name, [=](std::size_t u, std::size_t v) {
    const std::size_t i = u % c, e = u / c, j = v % c, f = v / c;
    if (!e) return (i + j) % c + c * f;
    if (!f) return (i + c - j) % c + c;
    return (i + c - j + m) % c;
  });
}

FiniteGroup symmetric(std::size_t n, std::size_t cap) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "symmetric group needs n >= 1");
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::vector<std::uint32_t> cycle(n);
    std::iota(cycle.begin(), cycle.end(), 0u);
    gens.push_back(permutation_from_cycles(n, {cycle}));
    gens.push_back(permutation_from_cycles(n, {{0, 1}}));
  }
  return from_permutation_generators(n, gens, "S" + std::to_string(n), cap);
}

FiniteGroup alternating(std::size_t n, std::size_t cap) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "alternating group needs n >= 1");
  std::vector<Permutation> gens;
  for (std::uint32_t k = 2; k < n; ++k) gens.push_back(permutation_from_cycles(n, {{0, 1, k}}));
  return from_permutation_generators(n, gens, "A" + std::to_string(n), cap);
}

FiniteGroup heisenberg(std::size_t p, std::size_t cap) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  const std::size_t n = p * p * p;
  const std::string name = "He" + std::to_string(p);
  check_size(n, cap, name);
  // (a, b, c)(a', b', c') = (a + a', b + b', c + c' + a b')
  return tabulate(n, name, [p](std::size_t u, std::size_t v) {
    const std::size_t a = u % p, b = (u / p) % p, c = u / (p * p);
    const std::size_t a2 = v % p, b2 = (v / p) % p, c2 = v / (p * p);
    return (a + a2) % p + p * ((b + b2) % p) + p * p * ((c + c2 + a * b2) % p);
  });
}

FiniteGroup wall_H(std::size_t r, std::size_t cap) {
  if (r == 0) throw Error(ErrorKind::InvalidArgument, "H(r) needs r >= 1");
  const std::size_t dim = 2 * r;
  if (dim + 1 >= 63) throw Error(ErrorKind::GroupTooLarge, "H(r) parameter too large");
  const std::size_t v = std::size_t{1} << dim;
  check_size(2 * v, cap, "H(" + std::to_string(r) + ")");
  std::uint64_t x_mask = 0;
  for (std::size_t i = 0; i < r; ++i) x_mask |= std::uint64_t{1} << (2 * i);
  return tabulate(2 * v, "H(" + std::to_string(r) + ")", [=](std::size_t a, std::size_t b) {
    const std::uint64_t va = a % v, vb = b % v;
    const std::uint64_t ea = a / v, eb = b / v;
    const std::uint64_t form = std::popcount((va & x_mask) & ((vb >> 1) & x_mask)) & 1u;
    return (va ^ vb) + v * (ea ^ eb ^ form);
  });
}

namespace {

// Applies a per-coordinate-pair linear map to a bit vector of r pairs
// (x_i at bit 2i, y_i at bit 2i+1); f maps (x, y) bits to new (x, y) bits.
template <typename F>
Automorphism pairwise_action(const FiniteGroup& base, std::size_t r, F&& f) {
  Automorphism act(base.order());
  for (std::size_t w = 0; w < base.order(); ++w) {
    std::size_t out = 0;
    for (std::size_t i = 0; i < r; ++i) {
      const unsigned x = (w >> (2 * i)) & 1u, y = (w >> (2 * i + 1)) & 1u;
      const auto [nx, ny] = f(x, y);
      out |= (std::size_t{nx} << (2 * i)) | (std::size_t{ny} << (2 * i + 1));
    }
    act[w] = static_cast<Element>(out);
  }
  return act;
}

}  // namespace

FiniteGroup wall_S(std::size_t r, std::size_t cap) {
  if (r == 0) throw Error(ErrorKind::InvalidArgument, "S(r) needs r >= 1");
  check_size((std::size_t{1} << (2 * r)) * 2, cap, "S(" + std::to_string(r) + ")");
  const FiniteGroup base = elementary_abelian(2, 2 * r, cap);
  // x -> x + y, y -> y: an involution.
  const auto act = pairwise_action(base, r, [](unsigned x, unsigned y) {
    return std::pair<unsigned, unsigned>{x, x ^ y};
  });
  return semidirect(base, act, 2, cap).renamed("S(" + std::to_string(r) + ")");
}

FiniteGroup wall_T(std::size_t r, std::size_t cap) {
  if (r == 0) throw Error(ErrorKind::InvalidArgument, "T(r) needs r >= 1");
  check_size((std::size_t{1} << (2 * r)) * 3, cap, "T(" + std::to_string(r) + ")");
  const FiniteGroup base = elementary_abelian(2, 2 * r, cap);
  // z a z^-1 = act(a) with act(x) = x + y, act(y) = x, so z^-1 x z = y and
  // z^-1 y z = x + y, which gives [z, x] = x y and [z, y] = x.
  const auto act = pairwise_action(base, r, [](unsigned x, unsigned y) {
    // coefficient form: a x + b y -> a (x + y) + b x = (a + b) x + a y
    return std::pair<unsigned, unsigned>{x ^ y, x};
  });
  return semidirect(base, act, 3, cap).renamed("T(" + std::to_string(r) + ")");
}

void check_automorphism(const FiniteGroup& a, std::span<const Element> action) {
  const std::size_t n = a.order();
  if (action.size() != n)
    throw Error(ErrorKind::NotAutomorphism, "action has the wrong length");
  ElementSet hit(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (action[x] >= n || !hit.add(action[x]))
      throw Error(ErrorKind::NotAutomorphism, "action is not a bijection at " + std::to_string(x));
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (action[a.mul(static_cast<Element>(x), static_cast<Element>(y))] !=
          a.mul(action[x], action[y]))
        throw Error(ErrorKind::NotAutomorphism, "action is not multiplicative at (" +
                                                    std::to_string(x) + ", " + std::to_string(y) + ")");
}

Automorphism inversion_automorphism(const FiniteGroup& a) {
  if (!is_abelian(a)) throw Error(ErrorKind::NotAbelian, a.name() + " is not abelian");
  Automorphism act(a.order());
  for (std::size_t x = 0; x < a.order(); ++x) act[x] = a.inv(static_cast<Element>(x));
  return act;
}

Automorphism power_automorphism(const FiniteGroup& a, std::int64_t k) {
  Automorphism act(a.order());
  for (std::size_t x = 0; x < a.order(); ++x) act[x] = a.pow(static_cast<Element>(x), k);
  check_automorphism(a, act);
  return act;
}

Automorphism automorphism_from_images(const FiniteGroup& a, std::span<const Element> gens,
                                      std::span<const Element> images) {
  if (gens.size() != images.size())
    throw Error(ErrorKind::InvalidArgument, "generator and image lists differ in length");
  constexpr auto kUnset = static_cast<Element>(-1);
  Automorphism act(a.order(), kUnset);
  act[kIdentity] = kIdentity;
  std::vector<Element> queue{kIdentity};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const Element y = a.mul(queue[i], gens[j]);
      const Element im = a.mul(act[queue[i]], images[j]);
      if (act[y] == kUnset) {
        act[y] = im;
        queue.push_back(y);
      } else if (act[y] != im) {
        throw Error(ErrorKind::NotAutomorphism, "generator images do not define a homomorphism");
      }
    }
  }
  if (queue.size() != a.order())
    throw Error(ErrorKind::InvalidArgument, "listed elements do not generate the group");
  check_automorphism(a, act);
  return act;
}

FiniteGroup semidirect(const FiniteGroup& a, std::span<const Element> action, std::size_t m,
                       std::size_t cap) {
  if (m == 0) throw Error(ErrorKind::InvalidArgument, "semidirect product needs m >= 1");
  check_automorphism(a, action);
  const std::size_t n = a.order();
  check_size(n * m, cap, a.name() + ":C" + std::to_string(m));
  // powers[i][x] = action^i(x)
  std::vector<std::vector<Element>> powers(m + 1, std::vector<Element>(n));
  std::iota(powers[0].begin(), powers[0].end(), Element{0});
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t x = 0; x < n; ++x) powers[i][x] = action[powers[i - 1][x]];
  if (powers[m] != powers[0])
    throw Error(ErrorKind::ActionOrderMismatch,
                "action^" + std::to_string(m) + " is not the identity");
  return tabulate(n * m, a.name() + ":C" + std::to_string(m), [&](std::size_t u, std::size_t v) {
    const auto x = static_cast<Element>(u % n), y = static_cast<Element>(v % n);
    const std::size_t i = u / n, j = v / n;
    return a.mul(x, powers[i][y]) + n * ((i + j) % m);
  });
}

FiniteGroup semidirect_C2(const FiniteGroup& a, std::span<const Element> action, std::size_t cap) {
  return semidirect(a, action, 2, cap);
}

FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2, std::size_t cap) {
  const std::size_t n1 = g1.order(), n2 = g2.order();
  check_size(n1 * n2, cap, g1.name() + "x" + g2.name());
  return tabulate(n1 * n2, g1.name() + "x" + g2.name(), [&](std::size_t u, std::size_t v) {
    return g1.mul(static_cast<Element>(u / n2), static_cast<Element>(v / n2)) * n2 +
           g2.mul(static_cast<Element>(u % n2), static_cast<Element>(v % n2));
  });
}

FiniteGroup central_product(const FiniteGroup& g1, const FiniteGroup& g2, Element z1, Element z2,
                            std::size_t cap) {
  auto check = [](const FiniteGroup& g, Element z) {
    if (z >= g.order() || g.element_order(z) != 2 || !center(g).contains(z))
      throw Error(ErrorKind::NotCentralInvolution,
                  "element " + std::to_string(z) + " is not a central involution of " + g.name());
  };
  check(g1, z1);
  check(g2, z2);
  const FiniteGroup prod = direct_product(g1, g2, std::max(cap, g1.order() * g2.order()));
  const Element zz = static_cast<Element>(z1 * g2.order() + z2);
  const Element pair[] = {zz};
  return quotient_group(prod, closure(prod, std::span<const Element>(pair)))
      .renamed(g1.name() + "o" + g2.name());
}

}  // namespace hasse
