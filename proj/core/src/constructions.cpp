#include "nrack/constructions.hpp"

#include <numeric>
#include <string>

#include "nrack/error.hpp"

namespace nrack {

namespace {

FiniteNRack require_arity_two(FiniteNRack r) {
  if (r.arity() != 2) throw InvalidArgument("a rack table must have arity 2");
  return r;
}

long long mod(long long a, long long m) {
  const auto r = a % m;
  return r < 0 ? r + m : r;
}

// Table of x -> (coeff_prefix * (x_1 + ... + x_{n-1}) + coeff_last * x_n) mod m.
FiniteNRack affine_nrack(int arity, int m, long long coeff_prefix, long long coeff_last) {
  std::vector<Element> table(checked_pow(m, arity));
  Tuple xs(arity, 0);
  std::size_t i = 0;
  do {
    const long long prefix_sum = std::accumulate(xs.begin(), xs.end() - 1, 0LL);
    table[i++] = static_cast<Element>(mod(coeff_prefix * prefix_sum + coeff_last * xs.back(), m));
  } while (next_tuple(xs, static_cast<Element>(m)));
  return FiniteNRack(arity, m, std::move(table));
}

}  // namespace

FiniteRack::FiniteRack(int size, std::vector<Element> table, std::optional<Element> basepoint)
    : nrack_(2, size, std::move(table), basepoint) {}

FiniteRack::FiniteRack(FiniteNRack r) : nrack_(require_arity_two(std::move(r))) {}

bool is_rack(const FiniteRack& q) {
  const auto c = classify(q.as_nrack());
  return c.is_nrack && c.is_pointed.value_or(true);
}

FiniteNRack build_z4_module_nrack(int arity, int modulus) {
  if (arity < 2) throw InvalidArgument("arity must be at least 2");
  if (modulus < 1 || 4 % modulus != 0) {
    throw InvalidArgument("Z/" + std::to_string(modulus) +
                          " is not a Z/4-module: the modulus must divide 4");
  }
  return affine_nrack(arity, modulus, 2, 1);
}

FiniteNRack build_gamma_module_nrack(int arity, int modulus, int t, int s) {
  if (arity < 2) throw InvalidArgument("arity must be at least 2");
  if (modulus < 1) throw InvalidArgument("modulus must be positive");
  const long long m = modulus;
  if (std::gcd(mod(t, m), m) != 1) {
    throw InvalidArgument("t = " + std::to_string(t) + " is not a unit mod " + std::to_string(m));
  }
  const long long ss = mod(static_cast<long long>(s) * s, m);
  if (mod(ss + static_cast<long long>(t) * s - s, m) != 0) {
    throw InvalidArgument("relation s^2 + t*s = s fails mod " + std::to_string(m) + " for t = " +
                          std::to_string(t) + ", s = " + std::to_string(s));
  }
  if (mod((arity - 2) * ss, m) != 0) {
    throw InvalidArgument("relation (n-2)*s^2 = 0 fails mod " + std::to_string(m) + " for n = " +
                          std::to_string(arity) + ", s = " + std::to_string(s) +
                          " (left distributivity needs it for n > 2)");
  }
  return affine_nrack(arity, modulus, s, t);
}

FiniteNRack build_conjugation_nrack(const FiniteGroup& g, int arity) {
  if (arity < 2) throw InvalidArgument("arity must be at least 2");
  const auto k = static_cast<Element>(g.size());
  std::vector<Element> table(checked_pow(k, arity));
  Tuple xs(arity, 0);
  std::size_t i = 0;
  do {
    Element conjugator = g.identity();
    for (auto it = xs.begin(); it != xs.end() - 1; ++it) conjugator = g.mul(conjugator, *it);
    table[i++] = g.mul(g.mul(conjugator, xs.back()), g.inv(conjugator));
  } while (next_tuple(xs, k));
  return FiniteNRack(arity, g.size(), std::move(table), g.identity());
}

FiniteNRack lift_rack_to_nrack(const FiniteRack& q, int arity) {
  if (arity < 2) throw InvalidArgument("arity must be at least 2");
  const auto m = static_cast<Element>(q.size());
  std::vector<Element> table(checked_pow(m, arity));
  Tuple xs(arity, 0);
  std::size_t i = 0;
  do {
    Element acc = xs.back();
    for (std::size_t j = xs.size() - 1; j-- > 0;) acc = q.op(xs[j], acc);
    table[i++] = acc;
  } while (next_tuple(xs, m));
  return FiniteNRack(arity, q.size(), std::move(table), q.basepoint());
}

std::size_t tuple_to_index(std::span<const Element> t, std::size_t m) {
  std::size_t idx = 0;
  for (auto v : t) idx = idx * m + v;
  return idx;
}

Tuple index_to_tuple(std::size_t index, std::size_t m, std::size_t length) {
  Tuple t(length);
  for (std::size_t i = length; i-- > 0;) {
    t[i] = static_cast<Element>(index % m);
    index /= m;
  }
  return t;
}

FiniteRack reduce_nrack_to_rack(const FiniteNRack& r) {
  const auto m = static_cast<std::size_t>(r.size());
  const auto len = static_cast<std::size_t>(r.arity() - 1);
  const auto q = checked_pow(m, len);
  if (q > 65536) throw InvalidArgument("reduction carrier too large");
  std::vector<Element> table(checked_pow(q, 2));
  for (std::size_t x = 0; x < q; ++x) {
    // x doubles as the prefix index of (x_1..x_{n-1}) in r.
    for (std::size_t y = 0; y < q; ++y) {
      const auto ys = index_to_tuple(y, m, len);
      std::size_t out = 0;
      for (auto yi : ys) out = out * m + r.translate(x, yi);
      table[x * q + y] = static_cast<Element>(out);
    }
  }
  std::optional<Element> base;
  if (r.basepoint()) base = static_cast<Element>(tuple_to_index(Tuple(len, *r.basepoint()), m));
  return FiniteRack(static_cast<int>(q), std::move(table), base);
}

Verdict check_bracket_antisymmetric(const FiniteGroup& h, int arity, std::span<const Element> bracket) {
  const auto k = static_cast<Element>(h.size());
  if (bracket.size() != checked_pow(k, arity)) throw InvalidArgument("bracket table has wrong size");
  Tuple xs(arity, 0);
  do {
    const auto v = bracket[tuple_to_index(xs, k)];
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      Tuple swapped = xs;
      std::swap(swapped[i], swapped[i + 1]);
      if (bracket[tuple_to_index(swapped, k)] != h.inv(v)) return {false, xs};
    }
  } while (next_tuple(xs, k));
  return {};
}

ModuleGroupResult build_module_group_nrack(const ModuleGroupData& d) {
  const auto& h = d.h;
  const auto& v = d.v;
  const int n = d.arity;
  if (n < 2) throw InvalidArgument("arity must be at least 2");
  const auto hk = static_cast<Element>(h.size());
  const auto vk = static_cast<Element>(v.size());
  if (!v.is_abelian()) throw InvalidArgument("module V must be an abelian group");
  if (d.bracket.size() != checked_pow(hk, n)) throw InvalidArgument("bracket table has wrong size");
  for (auto b : d.bracket) {
    if (b >= hk) throw InvalidArgument("bracket value outside H");
  }
  if (d.action.size() != static_cast<std::size_t>(hk) * vk) {
    throw InvalidArgument("action table must have |H|*|V| entries");
  }
  auto act = [&](Element a, Element u) { return d.action[a * vk + u]; };
  for (Element a = 0; a < hk; ++a) {
    std::vector<Element> image(vk);
    for (Element u = 0; u < vk; ++u) {
      if (act(a, u) >= vk) throw InvalidArgument("action value outside V");
      image[u] = act(a, u);
    }
    if (!is_permutation(image)) {
      throw InvalidArgument("action of " + std::to_string(a) + " is not a bijection of V");
    }
    for (Element u = 0; u < vk; ++u)
      for (Element w = 0; w < vk; ++w)
        if (act(a, v.mul(u, w)) != v.mul(act(a, u), act(a, w))) {
          throw InvalidArgument("action of " + std::to_string(a) + " is not an automorphism of V");
        }
  }
  for (Element u = 0; u < vk; ++u) {
    if (act(h.identity(), u) != u) throw InvalidArgument("identity of H does not act trivially");
    for (Element a = 0; a < hk; ++a)
      for (Element b = 0; b < hk; ++b)
        if (act(h.mul(a, b), u) != act(a, act(b, u))) {
          throw InvalidArgument("action is not compatible with the product of H");
        }
  }
  const auto anti = check_bracket_antisymmetric(h, n, d.bracket);
  if (!anti) throw InvalidArgument("bracket is not antisymmetric under adjacent swaps");

  const auto size = static_cast<std::size_t>(hk) * vk;
  if (size > 4096) throw InvalidArgument("V x H carrier too large");
  std::vector<Element> table(checked_pow(size, n));
  Tuple xs(n, 0);
  Tuple as(n);
  std::size_t i = 0;
  do {
    for (int j = 0; j < n; ++j) as[j] = xs[j] % hk;
    const Element u_last = xs.back() / hk;
    const Element first = act(d.bracket[tuple_to_index(as, hk)], u_last);
    Element conjugator = h.identity();
    for (int j = 0; j + 1 < n; ++j) conjugator = h.mul(conjugator, as[j]);
    const Element second = h.mul(h.mul(conjugator, as.back()), h.inv(conjugator));
    table[i++] = first * hk + second;
  } while (next_tuple(xs, static_cast<Element>(size)));

  FiniteNRack rack(n, static_cast<int>(size), std::move(table), v.identity() * hk + h.identity());
  ModuleGroupResult result{rack, classify(rack), check_left_distributive(rack),
                           check_translation_bijective(rack)};
  return result;
}

}  // namespace nrack
