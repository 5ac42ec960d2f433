#include "hasse/bounds.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "hasse/error.hpp"
#include "hasse/number.hpp"

namespace hasse {

namespace {

using Int = std::int64_t;

void require_solvable(const FiniteGroup& g) {
  if (!is_solvable(g)) throw Error(ErrorKind::NotSolvable, g.name() + " is not solvable");
}

void require_nontrivial(const FiniteGroup& g) {
  if (g.order() == 1) throw Error(ErrorKind::TrivialGroup, "bound needs a nontrivial group");
}

void require_group(const SubgroupLattice& lat) {
  require_nontrivial(lat.group());
  require_solvable(lat.group());
}

BoundReport make(BoundName name, std::string subject, std::string context, Int computed,
                 Rational limit) {
  BoundReport r;
  r.bound = name;
  r.subject = std::move(subject);
  r.context = std::move(context);
  r.computed = computed;
  r.limit = limit;
  r.holds = Rational(computed) <= limit;
  r.equality = Rational(computed) == limit;
  return r;
}

// (p^e - 1)/(p - 1) = 1 + p + ... + p^(e-1)
Int geometric(Int p, unsigned e) {
  Int sum = 0;
  Int term = 1;
  for (unsigned i = 0; i < e; ++i) {
    sum += term;
    term *= p;
  }
  return sum;
}

// (p^(e+1) - p)/(p - 1) = p + ... + p^e
Int shifted_geometric(Int p, unsigned e) { return geometric(p, e + 1) - 1; }

Int max_count(const SubgroupLattice& lat) {
  return static_cast<Int>(lat.lower_covers(lat.top_index()).size());
}

}  // namespace

std::string to_string(BoundName name) {
  switch (name) {
    case BoundName::VertexDegree: return "vertex_degree";
    case BoundName::MaxCount: return "max_count";
    case BoundName::MaxCountMinPrime: return "max_count_min_prime";
    case BoundName::MaxCountFrattini: return "max_count_frattini";
    case BoundName::MaxPCount: return "max_p_count";
    case BoundName::MaxPCountSharp: return "max_p_count_sharp";
    case BoundName::MaxPCountUniform: return "max_p_count_uniform";
    case BoundName::MaxCountPrimePowers: return "max_count_prime_powers";
    case BoundName::PrimePowerSum: return "prime_power_sum";
    case BoundName::EdgeCount: return "edge_count";
  }
  return "unknown";
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_json(const BoundReport& report) {
  nlohmann::ordered_json j;
  j["bound"] = to_string(report.bound);
  j["subject"] = report.subject;
  j["context"] = report.context;
  j["computed"] = report.computed;
  if (report.limit.denominator() == 1)
    j["limit"] = report.limit.numerator();
  else
    j["limit"] = to_string(report.limit);
  Rational slack = report.limit - Rational(report.computed);
  if (slack.denominator() == 1)
    j["slack"] = slack.numerator();
  else
    j["slack"] = to_string(slack);
  j["holds"] = report.holds;
  j["equality"] = report.equality;
  if (report.equality_condition)
    j["equality_condition"] = *report.equality_condition;
  else
    j["equality_condition"] = nullptr;
  return j.dump();
}

namespace {

BoundReport vertex_degree_unchecked(const SubgroupLattice& lat, std::size_t index) {
  const FiniteGroup& g = lat.group();
  const Subgroup& h = lat.subgroup(index);
  Int n = static_cast<Int>(g.order());
  Int d = static_cast<Int>(h.order());
  BoundReport r = make(BoundName::VertexDegree, g.name(),
                       "subgroup #" + std::to_string(index) + " order " + std::to_string(d),
                       static_cast<Int>(degree(lat, index)), Rational(d + n / d - 2));
  bool condition = lat.is_normal(index) && is_elementary_abelian_2(g, h) &&
                   quotient_is_elementary_abelian_2(g, h);
  r.equality_condition = condition;
  return r;
}

}  // namespace

BoundReport vertex_degree_bound(const SubgroupLattice& lattice, const Subgroup& sub) {
  require_solvable(lattice.group());
  auto index = lattice.index_of(sub);
  if (!index) throw Error(ErrorKind::InvalidArgument, "subgroup is not in the lattice");
  return vertex_degree_unchecked(lattice, *index);
}

std::vector<BoundReport> vertex_degree_bounds(const SubgroupLattice& lattice) {
  require_solvable(lattice.group());
  std::vector<BoundReport> out;
  out.reserve(lattice.size());
  for (std::size_t i = 0; i < lattice.size(); ++i) out.push_back(vertex_degree_unchecked(lattice, i));
  return out;
}

BoundReport max_count_bound(const SubgroupLattice& lattice) {
  require_group(lattice);
  const FiniteGroup& g = lattice.group();
  return make(BoundName::MaxCount, g.name(), "", max_count(lattice),
              Rational(static_cast<Int>(g.order()) - 1));
}

BoundReport max_count_min_prime_bound(const SubgroupLattice& lattice) {
  require_group(lattice);
  const FiniteGroup& g = lattice.group();
  Int p = static_cast<Int>(prime_divisors(g.order()).front());
  BoundReport r = make(BoundName::MaxCountMinPrime, g.name(), "p=" + std::to_string(p),
                       max_count(lattice), Rational(static_cast<Int>(g.order()) - 1, p - 1));
  r.equality_condition = is_elementary_abelian(g, static_cast<std::uint64_t>(p));
  return r;
}

BoundReport max_count_frattini_bound(const SubgroupLattice& lattice) {
  require_group(lattice);
  const FiniteGroup& g = lattice.group();
  auto primes = prime_divisors(g.order());
  Int p = static_cast<Int>(primes.front());
  Int q = static_cast<Int>(primes.back());
  Int quotient = static_cast<Int>(g.order() / frattini(lattice).order());
  return make(BoundName::MaxCountFrattini, g.name(),
              "p=" + std::to_string(p) + " q=" + std::to_string(q) + " |G/Phi|=" +
                  std::to_string(quotient),
              max_count(lattice), Rational(q * quotient - p, p * (q - 1)));
}

std::vector<BoundReport> max_p_count_bounds(const SubgroupLattice& lattice, std::uint64_t p) {
  require_group(lattice);
  const FiniteGroup& g = lattice.group();
  if (!is_prime(p) || g.order() % p != 0)
    throw Error(ErrorKind::InvalidArgument,
                std::to_string(p) + " is not a prime divisor of " + std::to_string(g.order()));
  unsigned k = valuation(g.order(), p);
  Subgroup op = o_p(lattice, p);
  unsigned r = valuation(g.order() / op.order(), p);
  Int pp = static_cast<Int>(p);
  Int count = static_cast<Int>(max_p(lattice, p).size());
  std::string ctx = "p=" + std::to_string(p) + " k=" + std::to_string(k) + " r=" + std::to_string(r);

  std::vector<BoundReport> out;
  out.push_back(make(BoundName::MaxPCount, g.name(), ctx, count,
                     Rational(geometric(pp, r) + shifted_geometric(pp, k - r))));
  if (op.order() < g.order())
    out.push_back(make(BoundName::MaxPCountSharp, g.name(), ctx, count, Rational(geometric(pp, k))));
  out.push_back(make(BoundName::MaxPCountUniform, g.name(), ctx, count,
                     Rational(shifted_geometric(pp, k))));
  return out;
}

BoundReport max_count_prime_power_bound(const SubgroupLattice& lattice) {
  require_group(lattice);
  const FiniteGroup& g = lattice.group();
  auto parts = factorize(g.order());
  auto smallest = std::min_element(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
    return ipow(static_cast<Int>(a.first), a.second) < ipow(static_cast<Int>(b.first), b.second);
  });
  Int limit = 0;
  for (auto it = parts.begin(); it != parts.end(); ++it) {
    Int p = static_cast<Int>(it->first);
    limit += it == smallest ? geometric(p, it->second) : shifted_geometric(p, it->second);
  }
  std::string ctx = "p1^n1=" + std::to_string(ipow(static_cast<Int>(smallest->first), smallest->second));
  return make(BoundName::MaxCountPrimePowers, g.name(), ctx, max_count(lattice), Rational(limit));
}

BoundReport edge_count_bound(const SubgroupLattice& lattice) {
  require_solvable(lattice.group());
  const FiniteGroup& g = lattice.group();
  Int v = static_cast<Int>(lattice.size());
  return make(BoundName::EdgeCount, g.name(), "vertices=" + std::to_string(v),
              static_cast<Int>(lattice.edge_count()),
              Rational(v * (static_cast<Int>(g.order()) - 1), 2));
}

std::vector<BoundReport> group_bounds(const SubgroupLattice& lattice) {
  std::vector<BoundReport> out;
  out.push_back(max_count_bound(lattice));
  out.push_back(max_count_min_prime_bound(lattice));
  out.push_back(max_count_frattini_bound(lattice));
  for (auto p : prime_divisors(lattice.group().order())) {
    auto reports = max_p_count_bounds(lattice, p);
    out.insert(out.end(), reports.begin(), reports.end());
  }
  out.push_back(max_count_prime_power_bound(lattice));
  out.push_back(edge_count_bound(lattice));
  return out;
}

BoundReport prime_power_sum_check(std::uint64_t p1, std::uint64_t p2, std::uint64_t p3,
                                  unsigned n1, unsigned n2, unsigned n3) {
  for (auto p : {p1, p2, p3})
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (p1 == p2 || p1 == p3 || p2 == p3)
    throw Error(ErrorKind::PrimesNotDistinct, "primes " + std::to_string(p1) + ", " +
                                                  std::to_string(p2) + ", " + std::to_string(p3));
  if (n1 == 0 || n2 == 0 || n3 == 0)
    throw Error(ErrorKind::InvalidArgument, "exponents must be at least 1");
  const std::uint64_t ps[] = {p1, p2, p3};
  const unsigned ns[] = {n1, n2, n3};
  Int lhs = 0;
  Int product = 1;
  std::string subject = "(";
  for (int i = 0; i < 3; ++i) {
    Int p = static_cast<Int>(ps[i]);
    lhs += shifted_geometric(p, ns[i]);
    product *= ipow(p, ns[i]);
    subject += std::to_string(p) + "^" + std::to_string(ns[i]) + (i < 2 ? "," : ")");
  }
  return make(BoundName::PrimePowerSum, subject, "", lhs, Rational(product, 2));
}

std::vector<BoundReport> prime_power_sum_scan(std::uint64_t prime_bound, unsigned exp_bound) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p <= prime_bound; ++p)
    if (is_prime(p)) primes.push_back(p);
  std::vector<BoundReport> out;
  for (std::size_t a = 0; a < primes.size(); ++a)
    for (std::size_t b = a + 1; b < primes.size(); ++b)
      for (std::size_t c = b + 1; c < primes.size(); ++c)
        for (unsigned x = 1; x <= exp_bound; ++x)
          for (unsigned y = 1; y <= exp_bound; ++y)
            for (unsigned z = 1; z <= exp_bound; ++z)
              out.push_back(prime_power_sum_check(primes[a], primes[b], primes[c], x, y, z));
  return out;
}

CandidateOrders candidate_orders(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "order must be positive");
  CandidateOrders out;
  out.n = n;
  Int m = static_cast<Int>(n);
  out.discriminant = m * m - 12 * m + 4;
  if (out.discriminant < 0) {
    out.small_case = true;
    return out;
  }
  for (auto d : divisors(n)) {
    Int dd = static_cast<Int>(d);
    if (2 * dd * dd - (m + 2) * dd + 2 * m > 0) {
      out.divisors.push_back(d);
      bool expected = d == 1 || d == 2 || d == n || 2 * d == n;
      out.within_expected = out.within_expected && expected;
    }
  }
  return out;
}

}  // namespace hasse
