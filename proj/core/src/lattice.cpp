#include "hasse/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "hasse/error.hpp"
#include "hasse/number.hpp"

namespace hasse {

namespace {

struct Found {
  Subgroup sub;
  std::vector<Element> gens;
};

// One representative per cyclic subgroup.
std::vector<Element> cyclic_representatives(const FiniteGroup& g) {
  const std::size_t n = g.order();
  ElementSet seen(n);
  std::vector<Element> reps;
  for (std::size_t x = 1; x < n; ++x) {
    if (seen.contains(x)) continue;
    const auto ex = static_cast<Element>(x);
    reps.push_back(ex);
    const std::uint32_t ord = g.element_order(ex);
    Element power = ex;
    for (std::uint32_t k = 1; k < ord; ++k) {
      if (std::gcd(k, ord) == 1) seen.insert(power);
      power = g.mul(power, ex);
    }
  }
  return reps;
}

ElementSet generate(const FiniteGroup& g, const std::vector<Element>& gens) {
  ElementSet seen(g.order());
  seen.insert(kIdentity);
  std::vector<Element> queue{kIdentity};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Element s : gens) {
      const Element y = g.mul(queue[i], s);
      if (seen.add(y)) queue.push_back(y);
    }
  }
  return seen;
}

}  // namespace

SubgroupLattice all_subgroups(const FiniteGroup& group, std::size_t cap) {
  const std::size_t n = group.order();
  if (n > cap)
    throw Error(ErrorKind::GroupTooLarge, "lattice enumeration above cap of " + std::to_string(cap) +
                                              " (order " + std::to_string(n) + ")");
  const auto reps = cyclic_representatives(group);

  std::vector<Found> found;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
  found.push_back({trivial_subgroup(group), {}});
  index.emplace(found[0].sub.members(), 0);

  for (std::size_t i = 0; i < found.size(); ++i) {
    // <H, c> depends only on the double coset H c H.
    ElementSet done = found[i].sub.members();
    const std::vector<Element> members = found[i].sub.elements();
    for (Element c : reps) {
      if (done.contains(c)) continue;
      for (Element h1 : members) {
        const Element h1c = group.mul(h1, c);
        for (Element h2 : members) done.insert(group.mul(h1c, h2));
      }
      std::vector<Element> gens = found[i].gens;
      gens.push_back(c);
      ElementSet k = generate(group, gens);
      if (index.contains(k)) continue;
      index.emplace(k, found.size());
      found.push_back({Subgroup(std::move(k)), std::move(gens)});
    }
  }

  SubgroupLattice lat(group);
  std::vector<std::size_t> order(found.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return found[a].sub < found[b].sub; });
  lat.subgroups_.reserve(found.size());
  for (std::size_t i : order) lat.subgroups_.push_back(std::move(found[i].sub));

  const std::size_t s = lat.subgroups_.size();
  lat.above_.assign(s, ElementSet(s));
  for (std::size_t i = 0; i < s; ++i) {
    const Subgroup& hi = lat.subgroups_[i];
    for (std::size_t j = i + 1; j < s; ++j) {
      const Subgroup& hj = lat.subgroups_[j];
      if (hj.order() > hi.order() && hj.order() % hi.order() == 0 &&
          hi.members().is_subset_of(hj.members()))
        lat.above_[i].insert(j);
    }
  }

  // Scanning strict supergroups by increasing order, j covers i exactly when
  // no previously found cover lies below it.
  lat.up_.assign(s, {});
  lat.down_.assign(s, {});
  for (std::size_t i = 0; i < s; ++i) {
    ElementSet dominated(s);
    lat.above_[i].for_each([&](std::size_t j) {
      if (dominated.contains(j)) return;
      lat.up_[i].push_back(j);
      dominated |= lat.above_[j];
    });
    for (std::size_t j : lat.up_[i]) {
      lat.covers_.emplace_back(i, j);
      lat.down_[j].push_back(i);
    }
  }
  std::sort(lat.covers_.begin(), lat.covers_.end());

  lat.normal_.resize(s);
  for (std::size_t i = 0; i < s; ++i) lat.normal_[i] = is_normal(group, lat.subgroups_[i]);
  return lat;
}

std::optional<std::size_t> SubgroupLattice::index_of(const Subgroup& sub) const {
  auto it = std::lower_bound(subgroups_.begin(), subgroups_.end(), sub);
  if (it == subgroups_.end() || !(*it == sub)) return std::nullopt;
  return static_cast<std::size_t>(it - subgroups_.begin());
}

namespace {

std::size_t require_index(const SubgroupLattice& lattice, const Subgroup& sub) {
  if (sub.members().universe() != lattice.group().order())
    throw Error(ErrorKind::InvalidArgument, "subgroup belongs to a group of another order");
  auto idx = lattice.index_of(sub);
  if (!idx) throw Error(ErrorKind::InvalidArgument, "not a subgroup of " + lattice.group().name());
  return *idx;
}

void require_prime_divisor(const SubgroupLattice& lattice, std::uint64_t p) {
  if (!is_prime(p) || lattice.group().order() % p != 0)
    throw Error(ErrorKind::InvalidArgument,
                std::to_string(p) + " is not a prime divisor of |" + lattice.group().name() + "|");
}

std::vector<Subgroup> pick(const SubgroupLattice& lattice, const std::vector<std::size_t>& idx) {
  std::vector<Subgroup> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(lattice.subgroup(i));
  return out;
}

}  // namespace

std::size_t degree(const SubgroupLattice& lattice, std::size_t index) {
  return lattice.upper_covers(index).size() + lattice.lower_covers(index).size();
}

std::size_t degree(const SubgroupLattice& lattice, const Subgroup& sub) {
  return degree(lattice, require_index(lattice, sub));
}

std::vector<DegreeEntry> degree_profile(const SubgroupLattice& lattice) {
  std::vector<DegreeEntry> out(lattice.size());
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    out[i].down = lattice.lower_covers(i).size();
    out[i].up = lattice.upper_covers(i).size();
    out[i].degree = out[i].down + out[i].up;
  }
  return out;
}

std::pair<Subgroup, std::size_t> max_degree(const SubgroupLattice& lattice) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < lattice.size(); ++i)
    if (degree(lattice, i) > degree(lattice, best)) best = i;
  return {lattice.subgroup(best), degree(lattice, best)};
}

std::vector<Subgroup> atoms(const SubgroupLattice& lattice) {
  return pick(lattice, lattice.upper_covers(lattice.trivial_index()));
}

std::vector<Subgroup> maximal_subgroups(const SubgroupLattice& lattice) {
  return pick(lattice, lattice.lower_covers(lattice.top_index()));
}

std::vector<Subgroup> max_p(const SubgroupLattice& lattice, std::uint64_t p) {
  require_prime_divisor(lattice, p);
  std::vector<Subgroup> out;
  const std::size_t n = lattice.group().order();
  for (const auto& m : maximal_subgroups(lattice))
    if (is_power_of(n / m.order(), p)) out.push_back(m);
  return out;
}

std::vector<Subgroup> interval_atoms(const SubgroupLattice& lattice, const Subgroup& sub) {
  return pick(lattice, lattice.upper_covers(require_index(lattice, sub)));
}

Subgroup frattini(const SubgroupLattice& lattice) {
  ElementSet acc = ElementSet::full(lattice.group().order());
  for (std::size_t i : lattice.lower_covers(lattice.top_index())) acc &= lattice.subgroup(i).members();
  return Subgroup(std::move(acc));
}

Subgroup o_p(const SubgroupLattice& lattice, std::uint64_t p) {
  require_prime_divisor(lattice, p);
  const std::size_t n = lattice.group().order();
  ElementSet acc = ElementSet::full(n);
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const Subgroup& h = lattice.subgroup(i);
    if (lattice.is_normal(i) && is_power_of(n / h.order(), p)) acc &= h.members();
  }
  Subgroup result(std::move(acc));
  if (!is_power_of(n / result.order(), p))
    throw std::logic_error("intersection of normal p-power-index subgroups is not of p-power index");
  return result;
}

std::string export_dot(const SubgroupLattice& lattice) {
  std::string name;
  for (char ch : lattice.group().name()) {
    if (ch == '"' || ch == '\\') name += '\\';
    name += ch;
  }
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=ellipse];\n";
  for (std::size_t i = 0; i < lattice.size(); ++i)
    os << "  s" << i << " [label=\"" << lattice.subgroup(i).order() << "\"];\n";
  for (const auto& [a, b] : lattice.covers()) os << "  s" << a << " -> s" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string lattice_report_json(const SubgroupLattice& lattice) {
  std::vector<std::size_t> degrees;
  for (std::size_t i = 0; i < lattice.size(); ++i) degrees.push_back(degree(lattice, i));
  std::sort(degrees.begin(), degrees.end());
  const auto [top, top_degree] = max_degree(lattice);
  nlohmann::ordered_json j;
  j["group"] = lattice.group().name();
  j["order"] = lattice.group().order();
  j["subgroups"] = lattice.size();
  j["edges"] = lattice.edge_count();
  j["delta"] = delta(lattice.group());
  j["max_degree"] = top_degree;
  j["max_degree_vertex_order"] = top.order();
  j["degree_sequence"] = degrees;
  return j.dump() + "\n";
}

std::string degrees_report_json(const SubgroupLattice& lattice) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  const auto profile = degree_profile(lattice);
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    nlohmann::ordered_json v;
    v["index"] = i;
    v["order"] = lattice.subgroup(i).order();
    v["degree"] = profile[i].degree;
    v["down"] = profile[i].down;
    v["up"] = profile[i].up;
    v["normal"] = lattice.is_normal(i);
    arr.push_back(std::move(v));
  }
  nlohmann::ordered_json j;
  j["group"] = lattice.group().name();
  j["order"] = lattice.group().order();
  j["vertices"] = std::move(arr);
  return j.dump() + "\n";
}

}  // namespace hasse
