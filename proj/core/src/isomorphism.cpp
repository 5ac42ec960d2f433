#include "hasse/isomorphism.hpp"

#include <algorithm>

#include "hasse/error.hpp"

namespace hasse {

namespace {

using Signature = std::array<std::uint32_t, 3>;

std::vector<Signature> element_signatures(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Signature> sig(n);
  std::vector<std::uint32_t> roots(n, 0);
  for (std::size_t y = 0; y < n; ++y) ++roots[g.mul(static_cast<Element>(y), static_cast<Element>(y))];
  for (std::size_t x = 0; x < n; ++x) {
    std::uint32_t centralizer = 0;
    const auto ex = static_cast<Element>(x);
    for (std::size_t y = 0; y < n; ++y) {
      const auto ey = static_cast<Element>(y);
      centralizer += g.mul(ex, ey) == g.mul(ey, ex);
    }
    sig[x] = {g.element_order(ex), centralizer, roots[x]};
  }
  return sig;
}

class Search {
 public:
  Search(const FiniteGroup& source, const FiniteGroup& target, std::vector<Signature> src_sig,
         std::vector<Signature> tgt_sig)
      : src_(source),
        tgt_(target),
        src_sig_(std::move(src_sig)),
        tgt_sig_(std::move(tgt_sig)),
        gens_(source.generators()),
        map_(source.order(), kUnset),
        used_(target.order()),
        images_(gens_.size(), kUnset) {
    for (Element g : gens_) {
      std::vector<Element> cands;
      for (std::size_t y = 0; y < tgt_.order(); ++y)
        if (tgt_sig_[y] == src_sig_[g]) cands.push_back(static_cast<Element>(y));
      candidates_.push_back(std::move(cands));
    }
    map_[kIdentity] = kIdentity;
    used_.insert(kIdentity);
    mapped_.push_back(kIdentity);
  }

  std::optional<Isomorphism> run() {
    if (!extend(0)) return std::nullopt;
    return Isomorphism{map_};
  }

 private:
  static constexpr Element kUnset = static_cast<Element>(-1);

  bool extend(std::size_t level) {
    if (level == gens_.size()) return mapped_.size() == src_.order();
    for (Element c : candidates_[level]) {
      if (used_.contains(c)) continue;
      const std::size_t mark = mapped_.size();
      images_[level] = c;
      if (propagate(level, mark) && extend(level + 1)) return true;
      undo(mark);
    }
    return false;
  }

  // Extends the partial map to the subgroup generated by gens_[0..level],
  // checking every product x * gens_[j] that became newly reachable.
  bool propagate(std::size_t level, std::size_t old_count) {
    for (std::size_t i = 0; i < mapped_.size(); ++i) {
      const Element x = mapped_[i];
      const std::size_t first = i < old_count ? level : 0;
      for (std::size_t j = first; j <= level; ++j) {
        const Element y = src_.mul(x, gens_[j]);
        const Element im = tgt_.mul(map_[x], images_[j]);
        if (map_[y] == kUnset) {
          if (used_.contains(im) || src_sig_[y] != tgt_sig_[im]) return false;
          map_[y] = im;
          used_.insert(im);
          mapped_.push_back(y);
        } else if (map_[y] != im) {
          return false;
        }
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (mapped_.size() > mark) {
      const Element x = mapped_.back();
      used_.erase(map_[x]);
      map_[x] = kUnset;
      mapped_.pop_back();
    }
  }

  const FiniteGroup& src_;
  const FiniteGroup& tgt_;
  std::vector<Signature> src_sig_;
  std::vector<Signature> tgt_sig_;
  std::vector<Element> gens_;
  std::vector<std::vector<Element>> candidates_;
  std::vector<Element> map_;
  ElementSet used_;
  std::vector<Element> mapped_;
  std::vector<Element> images_;
};

}  // namespace

GroupInvariants invariants(const FiniteGroup& group) {
  GroupInvariants inv;
  inv.order = group.order();
  inv.center_order = center(group).order();
  inv.derived_order = derived_subgroup(group).order();
  inv.abelian = is_abelian(group);
  inv.signatures = element_signatures(group);
  std::sort(inv.signatures.begin(), inv.signatures.end());
  return inv;
}

std::optional<Isomorphism> is_isomorphic(const FiniteGroup& source, const FiniteGroup& target,
                                         std::size_t cap) {
  if (source.order() != target.order()) return std::nullopt;
  if (source.order() > cap)
    throw Error(ErrorKind::GroupTooLarge, "isomorphism test above cap of " + std::to_string(cap) +
                                              " (order " + std::to_string(source.order()) + ")");
  if (is_abelian(source) != is_abelian(target)) return std::nullopt;
  if (center(source).order() != center(target).order()) return std::nullopt;
  if (derived_subgroup(source).order() != derived_subgroup(target).order()) return std::nullopt;

  auto src_sig = element_signatures(source);
  auto tgt_sig = element_signatures(target);
  auto a = src_sig, b = tgt_sig;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return std::nullopt;

  return Search(source, target, std::move(src_sig), std::move(tgt_sig)).run();
}

bool is_isomorphism(const FiniteGroup& source, const FiniteGroup& target,
                    std::span<const Element> map) {
  const std::size_t n = source.order();
  if (target.order() != n || map.size() != n) return false;
  ElementSet hit(n);
  for (Element y : map) {
    if (y >= n || !hit.add(y)) return false;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (map[source.mul(static_cast<Element>(a), static_cast<Element>(b))] !=
          target.mul(map[a], map[b]))
        return false;
  return true;
}

}  // namespace hasse
